#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "llddc/signal.hpp"

namespace llddc {

/// Filters applied one after another at the same rate; response is the product.
using Cascade = std::vector<ComplexFilter>;

/// Strictly increasing normalized angular frequencies in (-pi, pi].
class FreqGrid {
 public:
  /// Throws UsageError when empty, out of range or not increasing.
  explicit FreqGrid(std::vector<double> thetas, std::optional<double> fs = std::nullopt);

  /// n points -pi + 2*pi*(j+1)/n, j = 0..n-1. Contains 0 for even n and always pi.
  static FreqGrid symmetric(std::size_t n, std::optional<double> fs = std::nullopt);

  const std::vector<double>& thetas() const noexcept { return thetas_; }
  std::size_t size() const noexcept { return thetas_.size(); }
  double operator[](std::size_t i) const { return thetas_[i]; }
  std::optional<double> fs() const noexcept { return fs_; }
  /// theta * fs / (2*pi); requires fs.
  double hz(std::size_t i) const;

 private:
  std::vector<double> thetas_;
  std::optional<double> fs_;
};

struct NormReport {
  enum class Method { ClosedForm, ImpulseSum, MonteCarlo };

  double value = 0.0;       // squared H2 norm
  Method method = Method::ClosedForm;
  double tail_bound = 0.0;  // ImpulseSum: energy estimate beyond truncation
  double std_error = 0.0;   // MonteCarlo

  double db() const;
  /// ImpulseSum whose tail estimate is not below 1e-10 * value.
  bool degraded() const noexcept;
  std::string method_name() const;
};

std::vector<cplx> freq_response(const Cascade& cascade, const FreqGrid& grid);
std::vector<cplx> freq_response(const ComplexFilter& filter, const FreqGrid& grid);
cplx cascade_response(const Cascade& cascade, double theta);

/// Squared H2 norm sum_k |g_k|^2 of the cascade. Exact (ClosedForm) for
/// FIR cascades and cascades with one first-order pole; otherwise
/// falls back to impulse_sum_norm_sq.
NormReport h2_norm_sq(const Cascade& cascade);
NormReport h2_norm_sq(const ComplexFilter& filter);

/// Streams a unit impulse through the cascade and sums |g_k|^2 until the
/// geometric tail estimate drops below rel_tol of the accumulated energy.
NormReport impulse_sum_norm_sq(const Cascade& cascade, double rel_tol = 1e-14);

/// ||F~(z^N) H(z)||_2^2: output variance gain of H at rate 1/h followed by
/// decimation by N and F~ at rate 1/(N h), via the noble identities.
NormReport multirate_norm_sq(const Cascade& h, const ComplexFilter& f_tilde, int n);

struct TuneResult {
  double omega_lp = 0.0;    // rad/s
  double omega_lp_h = 0.0;  // normalized, rad/sample
  NormReport achieved;
  int iterations = 0;
};

/// Bandwidth omega_lp of F_LP such that ||H F_LP||^2 hits target_db,
/// by bisection on omega_lp*h in [1e-9, 50]. Throws DomainError with the
/// achievable range when the target is out of reach.
TuneResult tune_lp_bandwidth(const Cascade& h, double target_db, double sample_period);

struct PhaseMetrics {
  double phase = 0.0;        // rad, unwrapped continuously from theta = 0
  double group_delay = 0.0;  // s
};

/// Phase of G(e^{i*omega*h}) and its finite-difference group delay
/// (central difference, step 1e-6/h). Throws DomainError when |G| < 1e-9.
PhaseMetrics phase_metrics(const Cascade& cascade, double omega, double sample_period);

/// Baseband grid bins k in (-N/2, N/2] (theta = 2*pi*k/N) where the m-th
/// harmonic of the carrier lands after sampling and mixing: (+-m - 1)*Delta.
std::vector<std::int64_t> alias_bins(int harmonic_order, const CarrierConfig& carrier);

/// Same as alias_bins, as normalized frequencies in (-pi, pi], sorted.
std::vector<double> alias_map(int harmonic_order, const CarrierConfig& carrier);

}  // namespace llddc
