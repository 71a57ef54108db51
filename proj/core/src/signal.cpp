#include "llddc/signal.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <string>

namespace llddc {

namespace {

std::int64_t floor_mod(std::int64_t a, std::int64_t m) {
  const std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

std::int64_t floor_div(std::int64_t a, std::int64_t m) {
  return (a - floor_mod(a, m)) / m;
}

bool finite(double v) { return std::isfinite(v); }
bool finite(const cplx& v) { return std::isfinite(v.real()) && std::isfinite(v.imag()); }

}  // namespace

cplx unit_phasor(std::int64_t num, std::int64_t den) {
  if (den <= 0) throw UsageError("unit_phasor: denominator must be positive");
  std::int64_t r = floor_mod(num, den);
  if ((4 * r) % den == 0) {
    switch ((4 * r) / den) {
      case 0: return {1.0, 0.0};
      case 1: return {0.0, 1.0};
      case 2: return {-1.0, 0.0};
      default: return {0.0, -1.0};
    }
  }
  if (2 * r > den) r -= den;
  return std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(r) / static_cast<double>(den));
}

CarrierConfig::CarrierConfig(int m, int n, double fs) : m_(m), n_(n), fs_(fs), coprime_(false) {
  if (m <= 0 || n <= 0) {
    throw UsageError("carrier: M and N must be positive (got " + std::to_string(m) + "/" +
                     std::to_string(n) + ")");
  }
  if (2 * static_cast<std::int64_t>(m) >= n) {
    throw UsageError("carrier: M/N must be below 1/2 (got " + std::to_string(m) + "/" +
                     std::to_string(n) + ")");
  }
  if (!(fs > 0.0) || !std::isfinite(fs)) {
    throw UsageError("carrier: sample frequency must be positive and finite");
  }
  coprime_ = std::gcd(m, n) == 1;
}

double CarrierConfig::delta() const noexcept {
  return 2.0 * std::numbers::pi * static_cast<double>(m_) / static_cast<double>(n_);
}

cplx CarrierConfig::phasor(std::int64_t k, std::int64_t multiple) const {
  const std::int64_t kk = floor_mod(k, n_);
  const std::int64_t mm = floor_mod(static_cast<std::int64_t>(m_) * floor_mod(multiple, n_), n_);
  return unit_phasor(kk * mm, n_);
}

template <typename T>
Sequence<T>::Sequence(std::vector<T> values, std::int64_t start)
    : values_(std::move(values)), start_(start) {
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (!finite(values_[i])) {
      throw UsageError("sequence: non-finite sample at position " + std::to_string(i));
    }
  }
}

template class Sequence<cplx>;
template class Sequence<double>;

ComplexFilter::ComplexFilter(FilterKind kind, std::vector<cplx> taps, cplx pole, Band band)
    : kind_(kind), taps_(std::move(taps)), pole_(pole), band_(band) {
  if (taps_.empty()) throw UsageError("filter: at least one tap is required");
  for (const auto& t : taps_) {
    if (!finite(t)) throw UsageError("filter: non-finite coefficient");
  }
  if (!finite(pole_)) throw UsageError("filter: non-finite pole");
  if (kind_ == FilterKind::FirstOrderIir && !(std::abs(pole_) < 1.0)) {
    throw UsageError("filter: pole must lie strictly inside the unit circle (|p| = " +
                     std::to_string(std::abs(pole_)) + ")");
  }
}

ComplexFilter ComplexFilter::fir(std::vector<cplx> taps, Band band) {
  return ComplexFilter(FilterKind::Fir, std::move(taps), cplx{}, band);
}

ComplexFilter ComplexFilter::first_order_iir(std::vector<cplx> numerator, cplx pole, Band band) {
  return ComplexFilter(FilterKind::FirstOrderIir, std::move(numerator), pole, band);
}

bool ComplexFilter::has_real_coefficients() const noexcept {
  if (pole_.imag() != 0.0) return false;
  for (const auto& t : taps_) {
    if (t.imag() != 0.0) return false;
  }
  return true;
}

cplx ComplexFilter::response(double theta) const {
  cplx num{};
  for (std::size_t m = 0; m < taps_.size(); ++m) {
    num += taps_[m] * std::polar(1.0, -theta * static_cast<double>(m));
  }
  if (is_fir()) return num;
  return num / (1.0 - pole_ * std::polar(1.0, -theta));
}

cplx ComplexFilter::response_rational(std::int64_t num, std::int64_t den) const {
  cplx acc{};
  for (std::size_t m = 0; m < taps_.size(); ++m) {
    acc += taps_[m] * unit_phasor(-num * static_cast<std::int64_t>(m), den);
  }
  if (is_fir()) return acc;
  return acc / (1.0 - pole_ * unit_phasor(-num, den));
}

double ComplexFilter::group_delay(double theta) const {
  cplx b{};
  cplx mb{};
  for (std::size_t m = 0; m < taps_.size(); ++m) {
    const cplx term = taps_[m] * std::polar(1.0, -theta * static_cast<double>(m));
    b += term;
    mb += static_cast<double>(m) * term;
  }
  if (b == cplx{}) throw DomainError("group delay undefined at a response zero");
  double tau = (mb / b).real();
  if (!is_fir()) {
    const cplx pz = pole_ * std::polar(1.0, -theta);
    tau += (pz / (1.0 - pz)).real();
  }
  return tau;
}

ComplexFilter ComplexFilter::scaled(cplx gain) const {
  std::vector<cplx> taps = taps_;
  for (auto& t : taps) t *= gain;
  return ComplexFilter(kind_, std::move(taps), pole_, band_);
}

ComplexFilter ComplexFilter::with_band(Band band) const {
  return ComplexFilter(kind_, taps_, pole_, band);
}

FilterState::FilterState(ComplexFilter filter)
    : filter_(std::move(filter)), history_(filter_.length() - 1) {}

void FilterState::reset() {
  std::fill(history_.begin(), history_.end(), cplx{});
  head_ = 0;
  feedback_ = {};
}

cplx FilterState::step(cplx x) {
  const auto taps = filter_.taps();
  cplx acc = taps[0] * x;
  const std::size_t depth = history_.size();
  // history_[head_] is x[k-1], history_[head_+1] is x[k-2], ...
  for (std::size_t m = 1; m <= depth; ++m) {
    std::size_t idx = head_ + m - 1;
    if (idx >= depth) idx -= depth;
    acc += taps[m] * history_[idx];
  }
  if (depth > 0) {
    head_ = head_ == 0 ? depth - 1 : head_ - 1;
    history_[head_] = x;
  }
  if (filter_.is_fir()) return acc;
  feedback_ = filter_.pole() * feedback_ + acc;
  return feedback_;
}

ComplexSeq FilterState::process(const ComplexSeq& x) {
  std::vector<cplx> out;
  out.reserve(x.size());
  for (const auto& v : x) out.push_back(step(v));
  return ComplexSeq(std::move(out), x.start());
}

ComplexSeq filter_stream(const ComplexFilter& filter, FilterState& state, const ComplexSeq& x) {
  if (!(state.filter() == filter)) {
    throw UsageError("filter_stream: state belongs to a different filter");
  }
  return state.process(x);
}

ComplexSeq decimate(const ComplexSeq& x, int factor, int phase) {
  if (factor < 1) throw UsageError("decimate: factor must be at least 1");
  if (phase < 0 || phase >= factor) {
    throw UsageError("decimate: phase " + std::to_string(phase) + " outside [0, " +
                     std::to_string(factor) + ")");
  }
  std::vector<cplx> out;
  for (std::size_t i = static_cast<std::size_t>(phase); i < x.size(); i += static_cast<std::size_t>(factor)) {
    out.push_back(x[i]);
  }
  return ComplexSeq(std::move(out), floor_div(x.start() + phase, factor));
}

CanonicalFilter canonicalize(const ComplexFilter& filter) {
  if (!filter.is_fir()) return {filter, 0};
  const auto taps = filter.taps();
  std::size_t first = 0;
  while (first < taps.size() && taps[first] == cplx{}) ++first;
  if (first == taps.size()) {
    return {ComplexFilter::fir({cplx{}}, filter.band()), 0};
  }
  std::size_t last = taps.size();
  while (taps[last - 1] == cplx{}) --last;
  std::vector<cplx> kept(taps.begin() + static_cast<std::ptrdiff_t>(first),
                         taps.begin() + static_cast<std::ptrdiff_t>(last));
  return {ComplexFilter::fir(std::move(kept), filter.band()), first};
}

}  // namespace llddc
