#include "llddc/simulator.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>
#include <string>

namespace llddc {

namespace {

constexpr double kSpurFloorDb = -400.0;
constexpr std::size_t kBatches = 20;

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

std::int64_t floor_mod(std::int64_t a, std::int64_t m) {
  const std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

}  // namespace

cplx envelope_at(const Envelope& envelope, std::int64_t k) {
  return std::visit(overloaded{
                        [](const ConstantEnvelope& e) { return e.value; },
                        [k](const StepEnvelope& e) { return k < e.step_index ? e.before : e.after; },
                        [k](const RampPhaseEnvelope& e) {
                          return e.initial * std::polar(1.0, e.rate * static_cast<double>(k));
                        },
                        [k](const SampledEnvelope& e) {
                          if (e.samples.empty()) return cplx{};
                          const auto last = static_cast<std::int64_t>(e.samples.size()) - 1;
                          return e.samples[static_cast<std::size_t>(std::clamp<std::int64_t>(k, 0, last))];
                        },
                    },
                    envelope);
}

void SignalSpec::validate() const {
  if (!(noise_sigma >= 0.0) || !std::isfinite(noise_sigma)) {
    throw UsageError("signal: noise standard deviation must be finite and non-negative");
  }
  if (!std::isfinite(dc_offset)) throw UsageError("signal: DC offset must be finite");
  std::set<int> orders;
  for (const auto& h : harmonics) {
    if (h.order < 2) throw UsageError("signal: harmonic order must be at least 2");
    if (!orders.insert(h.order).second) {
      throw UsageError("signal: harmonic order " + std::to_string(h.order) + " listed twice");
    }
  }
}

double GaussianSource::uniform() {
  return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

double GaussianSource::next() {
  if (has_spare_) {
    has_spare_ = false;
    return spare_;
  }
  const double u1 = 1.0 - uniform();  // (0, 1]
  const double u2 = uniform();
  const double r = std::sqrt(-2.0 * std::log(u1));
  const double phi = 2.0 * std::numbers::pi * u2;
  spare_ = r * std::sin(phi);
  has_spare_ = true;
  return r * std::cos(phi);
}

RealSeq synthesize(const SignalSpec& spec, const CarrierConfig& carrier, std::size_t k,
                   std::int64_t start) {
  spec.validate();
  if (k == 0) throw UsageError("synthesize: sample count must be positive");
  GaussianSource noise(spec.seed);
  std::vector<double> y(k);
  for (std::size_t i = 0; i < k; ++i) {
    const std::int64_t idx = start + static_cast<std::int64_t>(i);
    double v = (envelope_at(spec.envelope, idx) * carrier.phasor(idx)).real();
    for (const auto& h : spec.harmonics) v += (h.amplitude * carrier.phasor(idx, h.order)).real();
    v += spec.dc_offset;
    if (spec.noise_sigma > 0.0) v += spec.noise_sigma * noise.next();
    y[i] = v;
  }
  return RealSeq(std::move(y), start);
}

NormReport analytic_noise_gain(const DdcChain& chain) {
  chain.validate();
  Cascade cascade;
  if (auto pre = chain.baseband_pre_mixer()) cascade.push_back(*pre);
  cascade.push_back(chain.ddc_filter);
  const auto lp = chain.lowpass();
  if (chain.order == StageOrder::DecimateThenFilter) {
    return multirate_norm_sq(cascade, *lp, chain.decimation);
  }
  if (lp) cascade.push_back(*lp);
  return h2_norm_sq(cascade);
}

ExperimentReport run_experiment(const SignalSpec& spec, const DdcChain& chain, std::size_t k) {
  spec.validate();
  chain.validate();
  const std::size_t transient = transient_length(chain);
  if (k == 0 || k < 10 * transient) {
    throw UsageError("experiment: " + std::to_string(k) + " samples is shorter than 10x the chain transient (" +
                     std::to_string(transient) + ")");
  }
  const CarrierConfig& carrier = chain.carrier;

  SignalSpec clean_spec = spec;
  clean_spec.noise_sigma = 0.0;
  const ChainOutput clean = run(chain, synthesize(clean_spec, carrier, k));

  std::size_t first = 0;
  while (first < clean.samples.size() &&
         clean.input_index(first) < static_cast<std::int64_t>(transient)) {
    ++first;
  }
  const std::size_t count = clean.samples.size() - first;
  if (count == 0) throw UsageError("experiment: no output samples past the transient");

  ExperimentReport report;
  report.settling_samples = transient;
  report.output_samples = count;

  std::vector<cplx> err(count);
  double err_energy = 0.0;
  double env_energy = 0.0;
  for (std::size_t j = 0; j < count; ++j) {
    const cplx b = envelope_at(spec.envelope, clean.input_index(first + j));
    err[j] = clean.samples[first + j] - b;
    err_energy += std::norm(err[j]);
    env_energy += std::norm(b);
  }
  report.rms_envelope_error = std::sqrt(err_energy / static_cast<double>(count));
  const double ref = env_energy > 0.0 ? std::sqrt(env_energy / static_cast<double>(count)) : 1.0;

  // Residual tones sit on the grid 2*pi*b/N at the input rate and therefore
  // at the output rate as well, so whole multiples of N samples are coherent.
  const std::int64_t n = carrier.n();
  const std::size_t window = count >= static_cast<std::size_t>(n) ? count / n * n : count;
  cplx mean{};
  for (std::size_t j = 0; j < window; ++j) mean += err[j];
  report.mean_envelope_error = mean / static_cast<double>(window);

  std::set<std::int64_t> bins = {floor_mod(-carrier.m(), n), floor_mod(-2 * carrier.m(), n)};
  for (const auto& h : spec.harmonics) {
    for (std::int64_t b : alias_bins(h.order, carrier)) bins.insert(floor_mod(b, n));
  }
  report.spur_magnitude = 0.0;
  for (std::int64_t b_in : bins) {
    const std::int64_t b_out = floor_mod(b_in * chain.decimation, n);
    if (b_out == 0) continue;
    cplx acc{};
    for (std::size_t j = 0; j < window; ++j) {
      acc += err[j] * unit_phasor(-b_out * static_cast<std::int64_t>(j), n);
    }
    const double amp = std::abs(acc) / static_cast<double>(window);
    if (amp >= report.spur_magnitude) {
      report.spur_magnitude = amp;
      std::int64_t signed_bin = b_out;
      if (2 * signed_bin > n) signed_bin -= n;
      report.spur_theta = 2.0 * std::numbers::pi * static_cast<double>(signed_bin) / static_cast<double>(n);
    }
  }
  report.spur_level_db = report.spur_magnitude > 0.0
                             ? std::max(kSpurFloorDb, 20.0 * std::log10(report.spur_magnitude / ref))
                             : kSpurFloorDb;

  report.noise_gain_analytic = analytic_noise_gain(chain);
  if (spec.noise_sigma > 0.0) {
    const ChainOutput noisy = run(chain, synthesize(spec, carrier, k));
    const double scale = 4.0 * spec.noise_sigma * spec.noise_sigma;
    const std::size_t batches = std::min(kBatches, std::max<std::size_t>(1, count / 2));
    const std::size_t per_batch = count / batches;
    std::vector<double> batch_mean(batches, 0.0);
    double total = 0.0;
    for (std::size_t j = 0; j < count; ++j) {
      const double p = std::norm(noisy.samples[first + j] - clean.samples[first + j]) / scale;
      total += p;
      const std::size_t b = j / per_batch;
      if (b < batches) batch_mean[b] += p / static_cast<double>(per_batch);
    }
    report.noise_gain_empirical = total / static_cast<double>(count);
    if (batches > 1) {
      double mu = 0.0;
      for (double v : batch_mean) mu += v;
      mu /= static_cast<double>(batches);
      double var = 0.0;
      for (double v : batch_mean) var += (v - mu) * (v - mu);
      var /= static_cast<double>(batches - 1);
      report.noise_gain_stderr = std::sqrt(var / static_cast<double>(batches));
    }
  }
  return report;
}

cplx harmonic_bias(const CarrierConfig& carrier, const ComplexFilter& h, int order, cplx amplitude,
                   std::size_t k, cplx envelope) {
  SignalSpec spec;
  spec.envelope = ConstantEnvelope{envelope};
  if (amplitude != cplx{}) spec.harmonics.push_back({order, amplitude});
  const DdcChain chain{.carrier = carrier, .ddc_filter = h};
  return run_experiment(spec, chain, k).mean_envelope_error;
}

cplx iq_harmonic_bias(double a3, std::size_t k, const CarrierConfig& carrier) {
  if (!carrier.is_iq()) {
    throw UsageError("iq_harmonic_bias: requires the IQ carrier M/N = 1/4 (got " +
                     std::to_string(carrier.m()) + "/" + std::to_string(carrier.n()) + ")");
  }
  return harmonic_bias(carrier, make_iq(carrier), 3, a3, k);
}

}  // namespace llddc
