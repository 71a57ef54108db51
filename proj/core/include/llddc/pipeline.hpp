#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "llddc/filters.hpp"
#include "llddc/signal.hpp"

namespace llddc {

enum class StageOrder {
  FilterThenDecimate,  ///< F_LP at rate 1/h, then keep every D-th sample
  DecimateThenFilter,  ///< keep every D-th sample, then F_LP rebuilt for period D*h
};

/// Downconversion chain:
///   [pre-mixer] -> mixer 2e^{-i*Delta*k} -> H -> {F_LP, decimate} in `order`.
///
/// The low-pass stage is described by its bandwidth so the chain can build it
/// for whichever rate it runs at (a = exp(-omega_lp * h) or exp(-omega_lp * D * h)).
struct DdcChain {
  CarrierConfig carrier;
  ComplexFilter ddc_filter;                  // H, baseband
  std::optional<ComplexFilter> pre_mixer{};  // real-coefficient passband filter
  std::optional<double> lowpass_omega{};     // rad/s
  int decimation = 1;
  int decimation_phase = 0;
  StageOrder order = StageOrder::FilterThenDecimate;
  /// Divide the mixer output by G_pre(e^{i*Delta}) so the pre-mixer stage has
  /// unity gain at zero baseband frequency.
  bool normalize_pre_mixer = true;

  /// Throws UsageError describing the first violated invariant.
  void validate() const;

  /// Low-pass stage at the rate it runs; nullopt when absent.
  std::optional<ComplexFilter> lowpass() const;
  /// Baseband equivalent of the pre-mixer stage including normalization.
  std::optional<ComplexFilter> baseband_pre_mixer() const;
  /// Complex gain applied after the mixer (1 unless normalizing a pre-mixer).
  cplx pre_mixer_correction() const;
};

struct ChainOutput {
  ComplexSeq samples;
  double sample_period = 0.0;         // h or D*h, seconds
  double group_delay = 0.0;           // sum of stage delays at zero frequency, seconds
  double hold_delay = 0.0;            // h_reg / 2 with h_reg = D*h, seconds
  std::int64_t first_input_index = 0; // absolute input index of samples[0]
  int stride = 1;                     // input samples per output sample

  double total_delay() const noexcept { return group_delay + hold_delay; }
  std::int64_t input_index(std::size_t j) const noexcept {
    return first_input_index + static_cast<std::int64_t>(j) * stride;
  }
};

/// out[k] = 2 e^{-i*Delta*k} y[k] for absolute k. For y[k] = Re{b e^{i*Delta*k}}
/// this equals b + conj(b) e^{-2i*Delta*k}.
ComplexSeq mix_down(const RealSeq& y, const CarrierConfig& carrier);

/// Runs the chain on y. Decimation keeps absolute indices k with
/// (k - decimation_phase) divisible by D, so split runs stay aligned.
/// Throws UsageError for an invalid chain or an input shorter than
/// transient_length(chain).
ChainOutput run(const DdcChain& chain, const RealSeq& y);

/// Input samples affected by zero initial conditions: sum of (L - 1) over
/// all stages plus ceil(ln(1e-12)/ln|p|) per pole, low-rate poles scaled by D.
std::size_t transient_length(const DdcChain& chain);

/// Per-stage group delays at zero frequency, in seconds (no hold delay).
double chain_group_delay(const DdcChain& chain);

}  // namespace llddc
