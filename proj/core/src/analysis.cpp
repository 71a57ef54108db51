#include "llddc/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "llddc/filters.hpp"

namespace llddc {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr std::size_t kMaxImpulseSamples = 50'000'000;

struct Collapsed {
  std::vector<cplx> numerator;
  std::vector<cplx> poles;
};

std::vector<cplx> conv(const std::vector<cplx>& a, std::span<const cplx> b) {
  std::vector<cplx> out(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

Collapsed collapse(const Cascade& cascade) {
  Collapsed c{{cplx{1.0}}, {}};
  for (const auto& f : cascade) {
    c.numerator = conv(c.numerator, f.taps());
    if (!f.is_fir()) c.poles.push_back(f.pole());
  }
  return c;
}

void require_stable(const Cascade& cascade) {
  for (const auto& f : cascade) {
    if (!f.is_fir() && !(std::abs(f.pole()) < 1.0)) {
      throw DomainError("H2 norm: unstable stage with |p| = " + std::to_string(std::abs(f.pole())));
    }
  }
}

double energy(const std::vector<cplx>& c) {
  double e = 0.0;
  for (const auto& v : c) e += std::norm(v);
  return e;
}

// Energy of C(z) / (1 - p z^{-lag}):
//   (R(0) + 2 Re sum_{j>=1} conj(p)^j R(j*lag)) / (1 - |p|^2),
// with R(d) = sum_m c_{m+d} conj(c_m).
double pole_energy(const std::vector<cplx>& c, cplx p, std::size_t lag) {
  double total = energy(c);
  cplx pj{1.0};
  for (std::size_t d = lag; d < c.size(); d += lag) {
    pj *= std::conj(p);
    cplx r{};
    for (std::size_t m = 0; m + d < c.size(); ++m) r += c[m + d] * std::conj(c[m]);
    total += 2.0 * (pj * r).real();
  }
  return total / (1.0 - std::norm(p));
}

struct Impulse {
  std::vector<cplx> samples;
  double energy = 0.0;
  double tail = 0.0;
};

Impulse impulse_response(const Cascade& cascade, double rel_tol) {
  std::vector<FilterState> states;
  states.reserve(cascade.size());
  std::size_t span = 1;
  double rho = 0.0;
  std::size_t n_poles = 0;
  for (const auto& f : cascade) {
    states.emplace_back(f);
    span += f.length() - 1;
    if (!f.is_fir()) {
      rho = std::max(rho, std::abs(f.pole()));
      ++n_poles;
    }
  }
  const std::size_t window = std::max<std::size_t>(span, 16);

  Impulse out;
  double window_energy = 0.0;
  for (std::size_t k = 0; k < kMaxImpulseSamples; ++k) {
    cplx v = k == 0 ? cplx{1.0} : cplx{};
    for (auto& s : states) v = s.step(v);
    out.samples.push_back(v);
    out.energy += std::norm(v);
    window_energy += std::norm(v);
    if (k >= window) window_energy -= std::norm(out.samples[k - window]);

    if (k + 1 < span) continue;
    if (n_poles == 0) {
      out.tail = 0.0;
      return out;
    }
    if (k + 1 < span + window) continue;
    // Window energy decays at least like rho^{2W} per window; the factor
    // n_poles^2 covers the polynomial growth of repeated poles.
    const double decay = std::pow(rho, 2.0 * static_cast<double>(window));
    out.tail = static_cast<double>(n_poles * n_poles) * window_energy * decay / (1.0 - decay);
    if (out.tail <= rel_tol * out.energy) return out;
  }
  return out;
}

}  // namespace

FreqGrid::FreqGrid(std::vector<double> thetas, std::optional<double> fs)
    : thetas_(std::move(thetas)), fs_(fs) {
  if (thetas_.empty()) throw UsageError("frequency grid must not be empty");
  for (std::size_t i = 0; i < thetas_.size(); ++i) {
    const double t = thetas_[i];
    if (!(t > -kPi && t <= kPi)) throw UsageError("frequency grid point outside (-pi, pi]");
    if (i > 0 && !(t > thetas_[i - 1])) throw UsageError("frequency grid must be strictly increasing");
  }
  if (fs_ && !(*fs_ > 0.0)) throw UsageError("frequency grid: fs must be positive");
}

FreqGrid FreqGrid::symmetric(std::size_t n, std::optional<double> fs) {
  if (n == 0) throw UsageError("frequency grid must not be empty");
  std::vector<double> t(n);
  for (std::size_t j = 0; j < n; ++j) {
    t[j] = -kPi + 2.0 * kPi * static_cast<double>(j + 1) / static_cast<double>(n);
  }
  t.back() = kPi;
  if (n % 2 == 0) t[n / 2 - 1] = 0.0;
  return FreqGrid(std::move(t), fs);
}

double FreqGrid::hz(std::size_t i) const {
  if (!fs_) throw UsageError("frequency grid has no sample frequency");
  return thetas_[i] * *fs_ / (2.0 * kPi);
}

double NormReport::db() const { return 10.0 * std::log10(value); }

bool NormReport::degraded() const noexcept {
  return method == Method::ImpulseSum && !(tail_bound < 1e-10 * value);
}

std::string NormReport::method_name() const {
  switch (method) {
    case Method::ClosedForm: return "closed-form";
    case Method::ImpulseSum: {
      std::ostringstream os;
      os.imbue(std::locale::classic());
      os << "impulse-sum(tail<=" << tail_bound << ")";
      return os.str();
    }
    case Method::MonteCarlo: {
      std::ostringstream os;
      os.imbue(std::locale::classic());
      os << "monte-carlo(se=" << std_error << ")";
      return os.str();
    }
  }
  return "unknown";
}

cplx cascade_response(const Cascade& cascade, double theta) {
  cplx g{1.0};
  for (const auto& f : cascade) g *= f.response(theta);
  return g;
}

std::vector<cplx> freq_response(const Cascade& cascade, const FreqGrid& grid) {
  std::vector<cplx> out;
  out.reserve(grid.size());
  for (double t : grid.thetas()) out.push_back(cascade_response(cascade, t));
  return out;
}

std::vector<cplx> freq_response(const ComplexFilter& filter, const FreqGrid& grid) {
  return freq_response(Cascade{filter}, grid);
}

NormReport impulse_sum_norm_sq(const Cascade& cascade, double rel_tol) {
  require_stable(cascade);
  const Impulse imp = impulse_response(cascade, rel_tol);
  return {imp.energy, NormReport::Method::ImpulseSum, imp.tail, 0.0};
}

NormReport h2_norm_sq(const Cascade& cascade) {
  require_stable(cascade);
  const Collapsed c = collapse(cascade);
  if (c.poles.empty()) return {energy(c.numerator), NormReport::Method::ClosedForm, 0.0, 0.0};
  if (c.poles.size() == 1) {
    return {pole_energy(c.numerator, c.poles.front(), 1), NormReport::Method::ClosedForm, 0.0, 0.0};
  }
  return impulse_sum_norm_sq(cascade);
}

NormReport h2_norm_sq(const ComplexFilter& filter) { return h2_norm_sq(Cascade{filter}); }

NormReport multirate_norm_sq(const Cascade& h, const ComplexFilter& f_tilde, int n) {
  if (n < 1) throw UsageError("multirate norm: decimation factor must be at least 1");
  require_stable(h);
  require_stable(Cascade{f_tilde});
  const auto un = static_cast<std::size_t>(n);

  const bool h_is_fir = std::all_of(h.begin(), h.end(), [](const ComplexFilter& f) { return f.is_fir(); });
  if (h_is_fir) {
    std::vector<cplx> up((f_tilde.length() - 1) * un + 1);
    for (std::size_t m = 0; m < f_tilde.length(); ++m) up[m * un] = f_tilde.taps()[m];
    const std::vector<cplx> c = conv(collapse(h).numerator, up);
    const double value = f_tilde.is_fir() ? energy(c) : pole_energy(c, f_tilde.pole(), un);
    return {value, NormReport::Method::ClosedForm, 0.0, 0.0};
  }

  // Sparse convolution of the truncated impulse responses of H and F~(z^N).
  const Impulse gh = impulse_response(h, 1e-15);
  const Impulse gf = impulse_response(Cascade{f_tilde}, 1e-15);
  std::vector<cplx> g(gh.samples.size() + (gf.samples.size() - 1) * un);
  for (std::size_t j = 0; j < gf.samples.size(); ++j) {
    const cplx fj = gf.samples[j];
    if (fj == cplx{}) continue;
    for (std::size_t i = 0; i < gh.samples.size(); ++i) g[i + j * un] += fj * gh.samples[i];
  }
  const double value = energy(g);
  const double tail = value * (gh.tail / gh.energy + gf.tail / gf.energy);
  return {value, NormReport::Method::ImpulseSum, tail, 0.0};
}

TuneResult tune_lp_bandwidth(const Cascade& h, double target_db, double sample_period) {
  if (!(sample_period > 0.0)) throw UsageError("tune: sample period must be positive");
  if (!std::isfinite(target_db)) throw UsageError("tune: target must be finite");
  const double target = std::pow(10.0, target_db / 10.0);

  auto norm_at = [&](double x) {
    Cascade c = h;
    c.push_back(make_lp(x, 1.0));
    return h2_norm_sq(c);
  };

  double lo = 1e-9;
  double hi = 50.0;
  const double n_lo = norm_at(lo).value;
  const double n_hi = norm_at(hi).value;
  if (!(target > n_lo && target < n_hi)) {
    std::ostringstream os;
    os.imbue(std::locale::classic());
    os.precision(4);
    os << std::fixed << "unachievable noise-rejection target " << target_db
       << " dB; achievable range is (" << 10.0 * std::log10(n_lo) << " dB, "
       << 10.0 * std::log10(n_hi) << " dB)";
    throw DomainError(os.str());
  }

  TuneResult result;
  for (int it = 1; it <= 200; ++it) {
    const double mid = std::sqrt(lo * hi);
    const NormReport r = norm_at(mid);
    result.omega_lp_h = mid;
    result.achieved = r;
    result.iterations = it;
    if (std::abs(r.value - target) <= 1e-10 * target || hi / lo - 1.0 < 1e-15) break;
    (r.value < target ? lo : hi) = mid;
  }
  result.omega_lp = result.omega_lp_h / sample_period;
  return result;
}

PhaseMetrics phase_metrics(const Cascade& cascade, double omega, double sample_period) {
  if (!(sample_period > 0.0)) throw UsageError("phase metrics: sample period must be positive");
  const double theta = omega * sample_period;
  const cplx g = cascade_response(cascade, theta);
  if (std::abs(g) < 1e-9) {
    throw DomainError("phase metrics: response vanishes at the requested frequency");
  }

  const auto steps = std::max<std::size_t>(1, static_cast<std::size_t>(std::ceil(std::abs(theta) / 1e-3)));
  cplx prev = cascade_response(cascade, 0.0);
  double phase = std::arg(prev);
  for (std::size_t i = 1; i <= steps; ++i) {
    const cplx cur = cascade_response(cascade, theta * static_cast<double>(i) / static_cast<double>(steps));
    phase += std::arg(cur / prev);
    prev = cur;
  }

  constexpr double kStep = 1e-6;
  const cplx up = cascade_response(cascade, theta + kStep);
  const cplx down = cascade_response(cascade, theta - kStep);
  const double gd_samples = -std::arg(up / down) / (2.0 * kStep);
  return {phase, gd_samples * sample_period};
}

std::vector<std::int64_t> alias_bins(int harmonic_order, const CarrierConfig& carrier) {
  if (harmonic_order < 1) throw UsageError("alias map: harmonic order must be at least 1");
  const std::int64_t n = carrier.n();
  std::vector<std::int64_t> bins;
  for (std::int64_t s : {std::int64_t{harmonic_order}, -std::int64_t{harmonic_order}}) {
    std::int64_t j = ((s - 1) * carrier.m()) % n;
    if (j < 0) j += n;
    if (2 * j > n) j -= n;
    bins.push_back(j);
  }
  std::sort(bins.begin(), bins.end());
  bins.erase(std::unique(bins.begin(), bins.end()), bins.end());
  return bins;
}

std::vector<double> alias_map(int harmonic_order, const CarrierConfig& carrier) {
  std::vector<double> out;
  for (std::int64_t j : alias_bins(harmonic_order, carrier)) {
    out.push_back(2.0 * kPi * static_cast<double>(j) / static_cast<double>(carrier.n()));
  }
  return out;
}

}  // namespace llddc
