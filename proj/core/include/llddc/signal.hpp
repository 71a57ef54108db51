#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "llddc/errors.hpp"

namespace llddc {

using cplx = std::complex<double>;

/// e^{2*pi*i*num/den}, with exact results on quarter turns.
cplx unit_phasor(std::int64_t num, std::int64_t den);

/// Non-IQ sampling configuration: N samples span M carrier periods.
///
/// Delta = 2*pi*M/N is derived from the integer ratio, and every phasor
/// e^{i*Delta*k} is evaluated from (M*k mod N) so that the mixer phase is
/// exactly periodic and filter zeros land on the harmonic grid.
class CarrierConfig {
 public:
  /// Throws UsageError unless 0 < M/N < 1/2 and fs > 0.
  CarrierConfig(int m, int n, double fs = 1.0);

  int m() const noexcept { return m_; }
  int n() const noexcept { return n_; }
  double fs() const noexcept { return fs_; }
  double h() const noexcept { return 1.0 / fs_; }
  double fc() const noexcept { return fs_ * m_ / n_; }
  double delta() const noexcept;

  /// gcd(M, N) == 1. Harmonic-rejection properties of MA(N) rely on it.
  bool coprime() const noexcept { return coprime_; }

  /// e^{i*Delta*k*multiple}.
  cplx phasor(std::int64_t k, std::int64_t multiple = 1) const;

  /// 4*M == N, i.e. fc = fs/4.
  bool is_iq() const noexcept { return 4 * m_ == n_; }

  bool operator==(const CarrierConfig&) const = default;

 private:
  int m_;
  int n_;
  double fs_;
  bool coprime_;
};

/// Finite-valued sample sequence with an absolute start index.
template <typename T>
class Sequence {
 public:
  Sequence() = default;
  /// Throws UsageError if any value is NaN or infinite.
  explicit Sequence(std::vector<T> values, std::int64_t start = 0);

  std::span<const T> values() const noexcept { return values_; }
  const std::vector<T>& data() const noexcept { return values_; }
  std::int64_t start() const noexcept { return start_; }
  std::size_t size() const noexcept { return values_.size(); }
  bool empty() const noexcept { return values_.empty(); }
  const T& operator[](std::size_t i) const { return values_[i]; }
  auto begin() const noexcept { return values_.begin(); }
  auto end() const noexcept { return values_.end(); }

  bool operator==(const Sequence&) const = default;

 private:
  std::vector<T> values_;
  std::int64_t start_ = 0;
};

using ComplexSeq = Sequence<cplx>;
using RealSeq = Sequence<double>;

extern template class Sequence<cplx>;
extern template class Sequence<double>;

enum class FilterKind { Fir, FirstOrderIir };

/// Whether a filter acts on the real carrier stream (before the mixer) or
/// on the complex envelope (after it).
enum class Band { Passband, Baseband };

/// Causal filter with complex coefficients:
///   G(z) = (b_0 + b_1 z^-1 + ... + b_{L-1} z^{-(L-1)}) / (1 - p z^-1)
/// FIR filters have no pole. Immutable.
class ComplexFilter {
 public:
  /// Throws UsageError when taps is empty or holds non-finite values.
  static ComplexFilter fir(std::vector<cplx> taps, Band band = Band::Baseband);
  /// Throws UsageError unless |pole| < 1.
  static ComplexFilter first_order_iir(std::vector<cplx> numerator, cplx pole,
                                       Band band = Band::Baseband);

  FilterKind kind() const noexcept { return kind_; }
  Band band() const noexcept { return band_; }
  std::span<const cplx> taps() const noexcept { return taps_; }
  std::size_t length() const noexcept { return taps_.size(); }
  /// Zero for FIR filters.
  cplx pole() const noexcept { return pole_; }
  bool is_fir() const noexcept { return kind_ == FilterKind::Fir; }
  bool has_real_coefficients() const noexcept;

  /// G(e^{i*theta}).
  cplx response(double theta) const;
  /// G(e^{2*pi*i*num/den}), phasors taken from the integer ratio.
  cplx response_rational(std::int64_t num, std::int64_t den) const;
  /// -d arg G / d theta in samples, analytic.
  double group_delay(double theta) const;

  ComplexFilter scaled(cplx gain) const;
  ComplexFilter with_band(Band band) const;

  bool operator==(const ComplexFilter&) const = default;

 private:
  ComplexFilter(FilterKind kind, std::vector<cplx> taps, cplx pole, Band band);

  FilterKind kind_;
  std::vector<cplx> taps_;
  cplx pole_;
  Band band_;
};

/// Streaming evaluation state for one filter. Single owner; not thread-safe.
class FilterState {
 public:
  explicit FilterState(ComplexFilter filter);

  const ComplexFilter& filter() const noexcept { return filter_; }
  void reset();
  cplx step(cplx x);
  ComplexSeq process(const ComplexSeq& x);

 private:
  ComplexFilter filter_;
  std::vector<cplx> history_;  // ring buffer of the last L-1 inputs
  std::size_t head_ = 0;
  cplx feedback_{};
};

/// Direct-form evaluation of `filter` continuing from `state`.
/// Throws UsageError if the state was built for a different filter.
ComplexSeq filter_stream(const ComplexFilter& filter, FilterState& state, const ComplexSeq& x);

/// output[j] = x[phase + j*factor]. The start index of the result is the
/// low-rate tick floor((x.start + phase) / factor).
ComplexSeq decimate(const ComplexSeq& x, int factor, int phase = 0);

struct CanonicalFilter {
  ComplexFilter filter;
  std::size_t delay = 0;  // samples of pure delay removed from the front
};

/// Strips leading and trailing exact-zero FIR taps. IIR filters pass through.
CanonicalFilter canonicalize(const ComplexFilter& filter);

}  // namespace llddc
