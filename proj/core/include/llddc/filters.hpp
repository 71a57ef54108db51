#pragma once

#include "llddc/signal.hpp"

namespace llddc {

/// N-sample moving average, taps 1/N. Zeros at 2*pi*k/N for k != 0 mod N.
ComplexFilter make_ma(int n);

enum class TwoSamplePhase {
  UnitDc,        ///< keeps e^{i*Delta}/i so that H(1) == 1
  DropPhaseFactor,
};

/// Two-sample reconstruction filter
///   H(z) = e^{i*Delta} / (2i sin Delta) * (1 - e^{-2i*Delta} z^-1).
/// The zero at e^{-2i*Delta} removes the double-frequency image.
/// Throws SingularityError when |sin Delta| < 1e-9.
ComplexFilter make_2sr(const CarrierConfig& carrier, TwoSamplePhase phase = TwoSamplePhase::UnitDc);

/// Baseband DC-spur rejection filter (1 - e^{-2i*Delta} z^-2) / (1 - e^{-2i*Delta}),
/// stored as three taps with a structural zero in the middle.
ComplexFilter make_dcr(const CarrierConfig& carrier);

/// Unnormalized passband form (1 - z^-2)/2, meant to run before the mixer.
ComplexFilter make_dcr_passband();

/// IQ-sampling filter (1 + z^-1)/2. Requires fc = fs/4.
ComplexFilter make_iq(const CarrierConfig& carrier);

/// First-order low-pass (1 - a)/(1 - a z^-1) with a = exp(-omega_lp * h).
ComplexFilter make_lp(double omega_lp, double h);

/// Passband high-pass (1 - z^-1)/(1 - p z^-1), 0 < p < 1.
ComplexFilter make_dc_reject_passband(double p);

/// Maps a passband filter to its baseband equivalent: z -> e^{i*Delta} z.
/// Taps b_m become b_m e^{-i*Delta*m}; the pole p becomes p e^{-i*Delta}.
ComplexFilter to_baseband(const ComplexFilter& filter, const CarrierConfig& carrier);

/// Scales the filter so that G(1) == 1. Throws DomainError if G(1) == 0.
ComplexFilter normalize_dc_gain(const ComplexFilter& filter);

/// FIR product by tap convolution. Both operands must be FIR on the same band.
ComplexFilter convolve(const ComplexFilter& a, const ComplexFilter& b);

/// |sin Delta| < 1/sqrt(2): the 2SR and DCR filters have H2 norm above one
/// and amplify white measurement noise.
bool amplifies_noise(const CarrierConfig& carrier);

}  // namespace llddc
