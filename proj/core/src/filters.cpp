#include "llddc/filters.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace llddc {

namespace {

constexpr double kSingularSin = 1e-9;

// e^{i*Delta} / (2i sin Delta) = (1 - i cot Delta) / 2
cplx reconstruction_gain(const CarrierConfig& carrier) {
  const cplx e = carrier.phasor(1);
  if (std::abs(e.imag()) < kSingularSin) {
    throw SingularityError("reconstruction singular: |sin Delta| < 1e-9 for M/N = " +
                           std::to_string(carrier.m()) + "/" + std::to_string(carrier.n()));
  }
  return {0.5, -0.5 * e.real() / e.imag()};
}

}  // namespace

ComplexFilter make_ma(int n) {
  if (n < 1) throw UsageError("make_ma: length must be at least 1");
  return ComplexFilter::fir(std::vector<cplx>(static_cast<std::size_t>(n), cplx{1.0 / n, 0.0}));
}

ComplexFilter make_2sr(const CarrierConfig& carrier, TwoSamplePhase phase) {
  cplx b0 = reconstruction_gain(carrier);
  if (phase == TwoSamplePhase::DropPhaseFactor) b0 = 1.0 / (2.0 * carrier.phasor(1).imag());
  const cplx b1 = -carrier.phasor(1, -2) * b0;
  return ComplexFilter::fir({b0, b1});
}

ComplexFilter make_dcr(const CarrierConfig& carrier) {
  const cplx c = reconstruction_gain(carrier);
  return ComplexFilter::fir({c, cplx{}, -carrier.phasor(1, -2) * c});
}

ComplexFilter make_dcr_passband() {
  return ComplexFilter::fir({0.5, 0.0, -0.5}, Band::Passband);
}

ComplexFilter make_iq(const CarrierConfig& carrier) {
  if (!carrier.is_iq()) {
    throw UsageError("make_iq: IQ sampling requires M/N = 1/4 (got " + std::to_string(carrier.m()) +
                     "/" + std::to_string(carrier.n()) + ")");
  }
  return ComplexFilter::fir({0.5, 0.5});
}

ComplexFilter make_lp(double omega_lp, double h) {
  if (!(omega_lp > 0.0) || !std::isfinite(omega_lp)) {
    throw UsageError("make_lp: bandwidth must be positive and finite");
  }
  if (!(h > 0.0) || !std::isfinite(h)) throw UsageError("make_lp: sample period must be positive");
  const double x = omega_lp * h;
  return ComplexFilter::first_order_iir({-std::expm1(-x)}, std::exp(-x));
}

ComplexFilter make_dc_reject_passband(double p) {
  if (!(p > 0.0 && p < 1.0)) {
    throw UsageError("make_dc_reject_passband: pole must lie in (0, 1), got " + std::to_string(p));
  }
  return ComplexFilter::first_order_iir({1.0, -1.0}, p, Band::Passband);
}

ComplexFilter to_baseband(const ComplexFilter& filter, const CarrierConfig& carrier) {
  if (filter.band() != Band::Passband) {
    throw UsageError("to_baseband: filter is already a baseband filter");
  }
  std::vector<cplx> taps(filter.taps().begin(), filter.taps().end());
  for (std::size_t m = 0; m < taps.size(); ++m) {
    taps[m] *= carrier.phasor(static_cast<std::int64_t>(m), -1);
  }
  if (filter.is_fir()) return ComplexFilter::fir(std::move(taps), Band::Baseband);
  return ComplexFilter::first_order_iir(std::move(taps), filter.pole() * carrier.phasor(1, -1),
                                        Band::Baseband);
}

ComplexFilter normalize_dc_gain(const ComplexFilter& filter) {
  const cplx g = filter.response(0.0);
  if (g == cplx{}) throw DomainError("normalize_dc_gain: filter has a zero at DC");
  return filter.scaled(1.0 / g);
}

ComplexFilter convolve(const ComplexFilter& a, const ComplexFilter& b) {
  if (!a.is_fir() || !b.is_fir()) throw UsageError("convolve: both filters must be FIR");
  if (a.band() != b.band()) throw UsageError("convolve: filters live on different bands");
  std::vector<cplx> out(a.length() + b.length() - 1);
  for (std::size_t i = 0; i < a.length(); ++i) {
    for (std::size_t j = 0; j < b.length(); ++j) out[i + j] += a.taps()[i] * b.taps()[j];
  }
  return ComplexFilter::fir(std::move(out), a.band());
}

bool amplifies_noise(const CarrierConfig& carrier) {
  return std::abs(carrier.phasor(1).imag()) < 1.0 / std::numbers::sqrt2;
}

}  // namespace llddc
