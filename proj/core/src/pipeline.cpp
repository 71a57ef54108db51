#include "llddc/pipeline.hpp"

#include <cmath>
#include <string>

namespace llddc {

namespace {

constexpr double kSettleEpsilon = 1e-12;

std::size_t settling_horizon(cplx pole) {
  const double r = std::abs(pole);
  if (r == 0.0) return 0;
  return static_cast<std::size_t>(std::ceil(std::log(kSettleEpsilon) / std::log(r)));
}

std::size_t stage_transient(const ComplexFilter& f) {
  std::size_t n = f.length() - 1;
  if (!f.is_fir()) n += settling_horizon(f.pole());
  return n;
}

std::int64_t floor_mod(std::int64_t a, std::int64_t m) {
  const std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

}  // namespace

void DdcChain::validate() const {
  if (ddc_filter.band() != Band::Baseband) {
    throw UsageError("chain: DDC filter H must be a baseband filter");
  }
  if (pre_mixer) {
    if (pre_mixer->band() != Band::Passband) {
      throw UsageError("chain: pre-mixer filter must be a passband filter");
    }
    if (!pre_mixer->has_real_coefficients()) {
      throw UsageError("chain: pre-mixer filter acts on the real ADC stream and needs real coefficients");
    }
    if (normalize_pre_mixer && pre_mixer->response_rational(carrier.m(), carrier.n()) == cplx{}) {
      throw UsageError("chain: pre-mixer filter has a zero at the carrier");
    }
  }
  if (decimation < 1) throw UsageError("chain: decimation factor must be at least 1");
  if (decimation_phase < 0 || decimation_phase >= decimation) {
    throw UsageError("chain: decimation phase " + std::to_string(decimation_phase) +
                     " outside [0, " + std::to_string(decimation) + ")");
  }
  if (lowpass_omega && (!(*lowpass_omega > 0.0) || !std::isfinite(*lowpass_omega))) {
    throw UsageError("chain: low-pass bandwidth must be positive and finite");
  }
  if (order == StageOrder::DecimateThenFilter && !lowpass_omega) {
    throw UsageError("chain: decimate-then-filter ordering requires a low-pass stage");
  }
}

std::optional<ComplexFilter> DdcChain::lowpass() const {
  if (!lowpass_omega) return std::nullopt;
  const double period = order == StageOrder::DecimateThenFilter ? decimation * carrier.h() : carrier.h();
  return make_lp(*lowpass_omega, period);
}

cplx DdcChain::pre_mixer_correction() const {
  if (!pre_mixer || !normalize_pre_mixer) return 1.0;
  return 1.0 / pre_mixer->response_rational(carrier.m(), carrier.n());
}

std::optional<ComplexFilter> DdcChain::baseband_pre_mixer() const {
  if (!pre_mixer) return std::nullopt;
  return to_baseband(*pre_mixer, carrier).scaled(pre_mixer_correction());
}

ComplexSeq mix_down(const RealSeq& y, const CarrierConfig& carrier) {
  std::vector<cplx> out;
  out.reserve(y.size());
  for (std::size_t i = 0; i < y.size(); ++i) {
    const std::int64_t k = y.start() + static_cast<std::int64_t>(i);
    out.push_back(2.0 * y[i] * carrier.phasor(k, -1));
  }
  return ComplexSeq(std::move(out), y.start());
}

std::size_t transient_length(const DdcChain& chain) {
  std::size_t n = stage_transient(chain.ddc_filter);
  if (chain.pre_mixer) n += stage_transient(*chain.pre_mixer);
  if (auto lp = chain.lowpass()) {
    const std::size_t scale =
        chain.order == StageOrder::DecimateThenFilter ? static_cast<std::size_t>(chain.decimation) : 1;
    n += stage_transient(*lp) * scale;
  }
  return n;
}

double chain_group_delay(const DdcChain& chain) {
  const double h = chain.carrier.h();
  double delay = chain.ddc_filter.group_delay(0.0) * h;
  if (auto pre = chain.baseband_pre_mixer()) delay += pre->group_delay(0.0) * h;
  if (auto lp = chain.lowpass()) {
    const double period = chain.order == StageOrder::DecimateThenFilter ? chain.decimation * h : h;
    delay += lp->group_delay(0.0) * period;
  }
  return delay;
}

ChainOutput run(const DdcChain& chain, const RealSeq& y) {
  chain.validate();
  const std::size_t transient = transient_length(chain);
  if (y.size() < transient) {
    throw UsageError("run: input has " + std::to_string(y.size()) +
                     " samples, chain transient is " + std::to_string(transient));
  }

  RealSeq adc = y;
  if (chain.pre_mixer) {
    FilterState pre(*chain.pre_mixer);
    std::vector<double> filtered;
    filtered.reserve(y.size());
    for (double v : y) filtered.push_back(pre.step(v).real());
    adc = RealSeq(std::move(filtered), y.start());
  }

  ComplexSeq x = mix_down(adc, chain.carrier);
  const cplx correction = chain.pre_mixer_correction();
  if (correction != cplx{1.0}) {
    std::vector<cplx> scaled(x.begin(), x.end());
    for (auto& v : scaled) v *= correction;
    x = ComplexSeq(std::move(scaled), x.start());
  }

  FilterState h_state(chain.ddc_filter);
  x = h_state.process(x);

  const int d = chain.decimation;
  const int rel_phase = static_cast<int>(floor_mod(chain.decimation_phase - y.start(), d));
  const auto lp = chain.lowpass();

  if (chain.order == StageOrder::FilterThenDecimate) {
    if (lp) {
      FilterState lp_state(*lp);
      x = lp_state.process(x);
    }
    x = decimate(x, d, rel_phase);
  } else {
    x = decimate(x, d, rel_phase);
    FilterState lp_state(*lp);
    x = lp_state.process(x);
  }

  ChainOutput out;
  out.samples = std::move(x);
  out.sample_period = d * chain.carrier.h();
  out.group_delay = chain_group_delay(chain);
  out.hold_delay = out.sample_period / 2.0;
  out.first_input_index = y.start() + rel_phase;
  out.stride = d;
  return out;
}

}  // namespace llddc
