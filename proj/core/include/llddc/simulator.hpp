#pragma once

#include <cstdint>
#include <random>
#include <variant>
#include <vector>

#include "llddc/analysis.hpp"
#include "llddc/pipeline.hpp"

namespace llddc {

struct ConstantEnvelope {
  cplx value{1.0};
};

/// `before` for k < step_index, `after` from step_index on.
struct StepEnvelope {
  cplx before{};
  cplx after{1.0};
  std::int64_t step_index = 0;
};

/// initial * e^{i*rate*k}; rate in rad/sample.
struct RampPhaseEnvelope {
  cplx initial{1.0};
  double rate = 0.0;
};

/// Explicit trajectory starting at k = 0; the last sample is held afterwards
/// and the first one before.
struct SampledEnvelope {
  std::vector<cplx> samples;
};

using Envelope = std::variant<ConstantEnvelope, StepEnvelope, RampPhaseEnvelope, SampledEnvelope>;

cplx envelope_at(const Envelope& envelope, std::int64_t k);

/// Additive carrier harmonic Re{amplitude * e^{i*order*Delta*k}}.
struct Harmonic {
  int order = 2;
  cplx amplitude{};
};

/// Synthetic ADC stream:
///   y[k] = Re{b[k] e^{i*Delta*k}} + sum_m Re{a_m e^{i*m*Delta*k}} + n0 + w[k],
/// with w white Gaussian of standard deviation noise_sigma.
struct SignalSpec {
  Envelope envelope = ConstantEnvelope{};
  double noise_sigma = 0.0;
  double dc_offset = 0.0;
  std::vector<Harmonic> harmonics;
  std::uint64_t seed = 1;

  void validate() const;
};

/// Portable standard-normal source: std::mt19937_64 (fully specified by the
/// standard) feeding a Box-Muller transform on 53-bit uniforms. Unlike
/// std::normal_distribution the output sequence is identical across
/// standard libraries.
class GaussianSource {
 public:
  explicit GaussianSource(std::uint64_t seed) : engine_(seed) {}
  double next();

 private:
  double uniform();

  std::mt19937_64 engine_;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

/// Throws UsageError when k == 0 or the spec is invalid.
RealSeq synthesize(const SignalSpec& spec, const CarrierConfig& carrier, std::size_t k,
                   std::int64_t start = 0);

struct ExperimentReport {
  double rms_envelope_error = 0.0;  // noise-free run, after the transient
  cplx mean_envelope_error{};       // constant bias over whole carrier blocks
  double spur_magnitude = 0.0;      // largest coherent residual tone
  double spur_theta = 0.0;          // its frequency at the output rate
  double spur_level_db = 0.0;       // 20 log10(spur / rms|b|), floored at -400
  double noise_gain_empirical = 0.0;  // output variance / (4 sigma^2)
  double noise_gain_stderr = 0.0;     // batch-means standard error
  NormReport noise_gain_analytic;
  std::size_t settling_samples = 0;
  std::size_t output_samples = 0;   // samples past the transient
};

/// Output variance gain for white real ADC noise of variance sigma^2, in
/// units of 4 sigma^2: ||chain||_2^2, single- or multirate per the ordering.
NormReport analytic_noise_gain(const DdcChain& chain);

/// Runs the chain on the synthesized stream and compares against the known
/// envelope. Requires k >= 10 * transient_length(chain).
ExperimentReport run_experiment(const SignalSpec& spec, const DdcChain& chain, std::size_t k);

/// Steady-state mean of (estimate - envelope) for a constant envelope
/// contaminated by one harmonic, with the chain {H} at the given carrier.
cplx harmonic_bias(const CarrierConfig& carrier, const ComplexFilter& h, int order, cplx amplitude,
                   std::size_t k, cplx envelope = cplx{1.0});

/// harmonic_bias for the IQ chain (1 + z^-1)/2 and a third harmonic.
/// Throws UsageError for a carrier other than M/N = 1/4.
cplx iq_harmonic_bias(double a3, std::size_t k, const CarrierConfig& carrier = CarrierConfig(1, 4));

}  // namespace llddc
