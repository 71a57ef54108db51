#include "commands.hpp"

#include <CLI11.hpp>
#include <fmt/format.h>
#include <fmt/ostream.h>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <future>
#include <memory>
#include <numbers>
#include <optional>

#include "filter_spec.hpp"
#include "llddc/llddc.hpp"
#include "presets.hpp"

namespace ddc_cli {

using llddc::UsageError;

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kMagFloorDb = -400.0;

struct CommonOptions {
  std::string filter;
  std::string carrier;
  std::string preset;
  std::string preset_file;
  std::optional<double> fs;
  std::string out_path;

  std::vector<Preset> extra_presets() const {
    if (preset_file.empty()) return {};
    return {load_preset_file(preset_file)};
  }

  std::optional<Preset> resolve_preset() const {
    if (preset.empty()) return std::nullopt;
    return find_preset(preset, extra_presets());
  }

  std::optional<llddc::CarrierConfig> resolve_carrier(const std::optional<Preset>& p) const {
    if (!carrier.empty()) {
      const auto [m, n] = parse_ratio(carrier);
      return llddc::CarrierConfig(m, n, fs.value_or(p ? p->fs : 1.0));
    }
    if (p) return llddc::CarrierConfig(p->m, p->n, fs.value_or(p->fs));
    return std::nullopt;
  }

  std::optional<double> sample_rate(const std::optional<Preset>& p) const {
    if (fs) return fs;
    if (p) return p->fs;
    return std::nullopt;
  }

  FilterSpec resolve_filter(const std::optional<Preset>& p) const {
    if (!filter.empty()) return parse_filter_spec(filter);
    if (p) return parse_filter_spec(p->filter);
    throw UsageError("no filter given: use --filter SPEC or --preset NAME");
  }
};

void add_common(CLI::App* sub, CommonOptions& o, bool with_out) {
  sub->add_option("--filter", o.filter, "Filter spec: ma:N, 2sr, dcr, iq, lp:<w/ws>, hp:<p>, joined by '+'");
  sub->add_option("--carrier", o.carrier, "Non-IQ ratio M/N");
  sub->add_option("--fs", o.fs, "Sample frequency in Hz");
  sub->add_option("--preset", o.preset, "Built-in or file preset name (lcls2, ess)");
  sub->add_option("--preset-file", o.preset_file, "key=value preset file");
  if (with_out) sub->add_option("--out", o.out_path, "Write CSV to FILE instead of standard output");
}

/// Output stream honoring --out.
class Sink {
 public:
  Sink(const std::string& path, std::ostream& fallback) {
    if (!path.empty()) {
      file_ = std::make_unique<std::ofstream>(path);
      if (!*file_) throw UsageError("cannot open output file '" + path + "'");
    }
    stream_ = file_ ? file_.get() : &fallback;
  }
  std::ostream& get() { return *stream_; }

 private:
  std::unique_ptr<std::ofstream> file_;
  std::ostream* stream_;
};

std::string norm_value(double v) {
  return v >= 1e-4 ? fmt::format("{:.6f}", v) : fmt::format("{:.6e}", v);
}

std::string complex_str(llddc::cplx z) {
  return fmt::format("{:.6g}{:+.6g}i", z.real(), z.imag());
}

// ---------------------------------------------------------------- freq-response

struct FreqResponseOptions {
  CommonOptions common;
  std::size_t points = 4096;
};

int cmd_freq_response(const FreqResponseOptions& o, std::ostream& out) {
  const auto preset = o.common.resolve_preset();
  const auto carrier = o.common.resolve_carrier(preset);
  const auto fs = o.common.sample_rate(preset);
  const auto spec = o.common.resolve_filter(preset);
  const llddc::Cascade cascade = baseband_cascade(spec, carrier);
  if (o.points == 0) throw UsageError("--points must be positive");

  // Grid points of the carrier (2*pi*k/N) are merged in so that notches on
  // the harmonic grid show up at their exact location.
  std::vector<double> thetas = llddc::FreqGrid::symmetric(o.points).thetas();
  if (carrier) {
    const int n = carrier->n();
    for (int k = -(n - 1) / 2; k <= n / 2; ++k) thetas.push_back(2.0 * kPi * k / n);
  }
  std::sort(thetas.begin(), thetas.end());
  thetas.erase(std::unique(thetas.begin(), thetas.end(),
                           [](double a, double b) { return std::abs(a - b) < 1e-12; }),
               thetas.end());
  const llddc::FreqGrid grid(std::move(thetas), fs);
  const auto response = llddc::freq_response(cascade, grid);

  Sink sink(o.common.out_path, out);
  std::ostream& os = sink.get();
  fmt::print(os, fs ? "theta_rad,freq_hz,mag_db,phase_deg\n" : "theta_rad,mag_db,phase_deg\n");
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const double mag = std::abs(response[i]);
    const double db = mag > 0.0 ? std::max(kMagFloorDb, 20.0 * std::log10(mag)) : kMagFloorDb;
    const double phase = std::arg(response[i]) * 180.0 / kPi;
    if (fs) {
      fmt::print(os, "{:.12g},{:.12g},{:.10g},{:.10g}\n", grid[i], grid.hz(i), db, phase);
    } else {
      fmt::print(os, "{:.12g},{:.10g},{:.10g}\n", grid[i], db, phase);
    }
  }
  return kExitOk;
}

// ------------------------------------------------------------------------- norm

struct NormOptions {
  CommonOptions common;
  std::optional<double> lp;
  int decimate = 1;
  bool lp_after_decimation = false;
};

int cmd_norm(const NormOptions& o, std::ostream& out) {
  const auto preset = o.common.resolve_preset();
  const auto carrier = o.common.resolve_carrier(preset);
  llddc::Cascade cascade = baseband_cascade(o.common.resolve_filter(preset), carrier);
  if (o.lp && !(*o.lp > 0.0)) throw UsageError("--lp must be a positive omega_lp/omega_s ratio");
  if (o.decimate < 1) throw UsageError("--decimate must be at least 1");

  llddc::NormReport r;
  if (o.lp_after_decimation) {
    if (!o.lp) throw UsageError("--lp-after-decimation requires --lp");
    const auto f_tilde = llddc::make_lp(2.0 * kPi * *o.lp * o.decimate, 1.0);
    r = llddc::multirate_norm_sq(cascade, f_tilde, o.decimate);
  } else {
    if (o.lp) cascade.push_back(llddc::make_lp(2.0 * kPi * *o.lp, 1.0));
    r = llddc::h2_norm_sq(cascade);
  }
  fmt::print(out, "{} ({:.2f} dB) {}\n", norm_value(r.value), r.db(), r.method_name());
  return kExitOk;
}

// ------------------------------------------------------------------------- tune

struct TuneOptions {
  CommonOptions common;
  double target_db = 0.0;
};

int cmd_tune(const TuneOptions& o, std::ostream& out) {
  const auto preset = o.common.resolve_preset();
  const auto carrier = o.common.resolve_carrier(preset);
  const auto fs = o.common.sample_rate(preset);
  const llddc::Cascade cascade = baseband_cascade(o.common.resolve_filter(preset), carrier);
  const double h = fs ? 1.0 / *fs : 1.0;
  const auto r = llddc::tune_lp_bandwidth(cascade, o.target_db, h);
  fmt::print(out, "omega_lp_h = {:.8g}\n", r.omega_lp_h);
  fmt::print(out, "omega_lp_over_omega_s = {:.8g}\n", r.omega_lp_h / (2.0 * kPi));
  if (fs) {
    fmt::print(out, "omega_lp_rad_s = {:.8g}\n", r.omega_lp);
    fmt::print(out, "f_lp_hz = {:.8g}\n", r.omega_lp / (2.0 * kPi));
  }
  fmt::print(out, "norm = {} ({:.6f} dB) {}\n", norm_value(r.achieved.value), r.achieved.db(),
             r.achieved.method_name());
  fmt::print(out, "iterations = {}\n", r.iterations);
  return kExitOk;
}

// ---------------------------------------------------------------- compare-order

struct CompareOrderOptions {
  CommonOptions common;
  int decimate = 0;
  std::size_t points = 31;
  double min_ratio = 1e-4;
  double max_ratio = 1e-1;
};

int cmd_compare_order(const CompareOrderOptions& o, std::ostream& out) {
  const auto preset = o.common.resolve_preset();
  const auto carrier = o.common.resolve_carrier(preset);
  const auto spec = o.common.resolve_filter(preset);
  for (const auto& t : spec.tokens) {
    if (t.kind == FilterToken::Kind::LowPass) {
      throw UsageError("compare-order sweeps the low-pass itself; remove '" + t.text + "'");
    }
  }
  const int d = o.decimate > 0 ? o.decimate : (preset ? preset->decimation : 0);
  if (d < 1) throw UsageError("--decimate N is required");
  if (o.points < 2) throw UsageError("--points must be at least 2");
  if (!(o.min_ratio > 0.0 && o.max_ratio > o.min_ratio)) {
    throw UsageError("sweep needs 0 < --min < --max");
  }
  const llddc::Cascade h = baseband_cascade(spec, carrier);

  Sink sink(o.common.out_path, out);
  std::ostream& os = sink.get();
  fmt::print(os, "omega_lp_over_omega_s,rejection_after_db,rejection_before_db\n");
  const double step = std::log(o.max_ratio / o.min_ratio) / static_cast<double>(o.points - 1);
  for (std::size_t i = 0; i < o.points; ++i) {
    const double ratio = i + 1 == o.points ? o.max_ratio : o.min_ratio * std::exp(step * static_cast<double>(i));
    const double x = 2.0 * kPi * ratio;
    const auto f = llddc::make_lp(x, 1.0);
    const double ref = llddc::h2_norm_sq(f).value;
    llddc::Cascade after = h;
    after.push_back(f);
    const double n_after = llddc::h2_norm_sq(after).value;
    const double n_before = llddc::multirate_norm_sq(h, llddc::make_lp(x * d, 1.0), d).value;
    fmt::print(os, "{:.10g},{:.10g},{:.10g}\n", ratio, 10.0 * std::log10(n_after / ref),
               10.0 * std::log10(n_before / ref));
  }
  return kExitOk;
}

// --------------------------------------------------------------------- simulate

struct SimulateOptions {
  CommonOptions common;
  std::string envelope = "const:1";
  double noise = 0.0;
  double dc_offset = 0.0;
  bool dcr = false;
  std::optional<double> hp;
  std::vector<std::string> harmonics;
  std::size_t samples = 100000;
  std::uint64_t seed = 1;
  std::size_t seeds = 1;
  std::optional<int> decimate;
  std::optional<double> lp;
  std::optional<double> lp_hz;
  bool preset_lp = false;
  std::string order;
  std::string trace_path;
};

llddc::Envelope parse_envelope(const std::string& text) {
  const auto colon = text.find(':');
  const std::string kind = text.substr(0, colon);
  const std::string arg = colon == std::string::npos ? std::string{} : text.substr(colon + 1);
  std::vector<std::string> parts;
  for (std::size_t pos = 0; pos <= arg.size();) {
    const auto comma = arg.find(',', pos);
    parts.push_back(arg.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos));
    pos = comma == std::string::npos ? arg.size() + 1 : comma + 1;
  }
  if (kind == "const" && parts.size() == 1) return llddc::ConstantEnvelope{parse_complex(parts[0])};
  if (kind == "step" && parts.size() == 3) {
    return llddc::StepEnvelope{parse_complex(parts[0]), parse_complex(parts[1]),
                               static_cast<std::int64_t>(std::stoll(parts[2]))};
  }
  if (kind == "ramp" && parts.size() == 2) {
    return llddc::RampPhaseEnvelope{parse_complex(parts[0]), std::stod(parts[1])};
  }
  throw UsageError("invalid envelope '" + text + "' (const:B | step:B1,B2,K | ramp:B,RATE)");
}

llddc::Harmonic parse_harmonic(const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) throw UsageError("invalid harmonic '" + text + "' (expected ORDER:AMPLITUDE)");
  int order = 0;
  try {
    order = std::stoi(text.substr(0, colon));
  } catch (const std::exception&) {
    throw UsageError("invalid harmonic order in '" + text + "'");
  }
  return {order, parse_complex(text.substr(colon + 1))};
}

int cmd_simulate(const SimulateOptions& o, std::ostream& out) {
  const auto preset = o.common.resolve_preset();
  const auto carrier = o.common.resolve_carrier(preset);
  if (!carrier) throw UsageError("simulate needs --carrier M/N or --preset NAME");
  const auto fs = carrier->fs();
  const auto spec = o.common.resolve_filter(preset);
  ChainParts parts = chain_parts(spec, carrier);
  if (o.dcr) parts.ddc_filter = llddc::convolve(parts.ddc_filter, llddc::make_dcr(*carrier));
  if (o.hp) parts.pre_mixer = llddc::make_dc_reject_passband(*o.hp);

  llddc::DdcChain chain{.carrier = *carrier, .ddc_filter = parts.ddc_filter, .pre_mixer = parts.pre_mixer};
  if (o.lp) {
    chain.lowpass_omega = 2.0 * kPi * *o.lp * fs;
  } else if (o.lp_hz) {
    chain.lowpass_omega = 2.0 * kPi * *o.lp_hz;
  } else if (o.preset_lp) {
    if (!preset || !preset->lp_hz) throw UsageError("--preset-lp needs a preset with a low-pass bandwidth");
    chain.lowpass_omega = 2.0 * kPi * *preset->lp_hz;
  } else if (parts.lp_ratio) {
    chain.lowpass_omega = 2.0 * kPi * *parts.lp_ratio * fs;
  }
  chain.decimation = o.decimate.value_or(preset ? preset->decimation : 1);
  if (o.order.empty()) {
    chain.order = preset ? preset->order : llddc::StageOrder::FilterThenDecimate;
  } else if (o.order == "after") {
    chain.order = llddc::StageOrder::FilterThenDecimate;
  } else if (o.order == "before") {
    chain.order = llddc::StageOrder::DecimateThenFilter;
  } else {
    throw UsageError("--order must be 'after' or 'before'");
  }
  if (chain.order == llddc::StageOrder::DecimateThenFilter && !chain.lowpass_omega) {
    chain.order = llddc::StageOrder::FilterThenDecimate;  // nothing to reorder
  }
  chain.validate();

  llddc::SignalSpec signal;
  signal.envelope = parse_envelope(o.envelope);
  signal.noise_sigma = o.noise;
  signal.dc_offset = o.dc_offset;
  for (const auto& h : o.harmonics) signal.harmonics.push_back(parse_harmonic(h));
  signal.seed = o.seed;
  signal.validate();
  if (o.seeds < 1) throw UsageError("--seeds must be at least 1");

  std::vector<std::future<llddc::ExperimentReport>> jobs;
  for (std::size_t i = 0; i < o.seeds; ++i) {
    llddc::SignalSpec s = signal;
    s.seed = o.seed + i;
    jobs.push_back(std::async(o.seeds > 1 ? std::launch::async : std::launch::deferred,
                              [s, &chain, k = o.samples] { return llddc::run_experiment(s, chain, k); }));
  }
  std::vector<llddc::ExperimentReport> reports;
  for (auto& j : jobs) reports.push_back(j.get());
  const auto& first = reports.front();

  fmt::print(out, "carrier: M/N = {}/{}, fs = {:.8g} Hz, fc = {:.8g} Hz, Delta = {:.6f} rad\n", carrier->m(),
             carrier->n(), fs, carrier->fc(), carrier->delta());
  fmt::print(out, "chain: pre-mixer {} | H {} taps | low-pass {} | decimate {} ({} low-pass)\n",
             chain.pre_mixer ? fmt::format("hp p={:.6g}", chain.pre_mixer->pole().real()) : "none",
             chain.ddc_filter.length(),
             chain.lowpass_omega ? fmt::format("{:.6g} Hz", *chain.lowpass_omega / (2.0 * kPi)) : "none",
             chain.decimation,
             chain.order == llddc::StageOrder::FilterThenDecimate ? "after" : "before");
  fmt::print(out, "samples: {}, settling: {}, output samples: {}\n", o.samples, first.settling_samples,
             first.output_samples);
  fmt::print(out, "group_delay_s: {:.6g}, hold_delay_s: {:.6g}\n", llddc::chain_group_delay(chain),
             chain.decimation * carrier->h() / 2.0);
  fmt::print(out, "rms_envelope_error: {:.6g}\n", first.rms_envelope_error);
  fmt::print(out, "mean_envelope_error: {}\n", complex_str(first.mean_envelope_error));
  fmt::print(out, "spur_level_db: {:.2f} (magnitude {:.6g} at theta {:.6f} rad)\n", first.spur_level_db,
             first.spur_magnitude, first.spur_theta);
  const auto& analytic = first.noise_gain_analytic;
  fmt::print(out, "noise_gain_analytic: {} ({:.2f} dB) {}\n", norm_value(analytic.value), analytic.db(),
             analytic.method_name());
  if (signal.noise_sigma > 0.0) {
    if (reports.size() == 1) {
      fmt::print(out, "noise_gain_empirical: {} (se {:.3g})\n", norm_value(first.noise_gain_empirical),
                 first.noise_gain_stderr);
    } else {
      double mean = 0.0;
      for (const auto& r : reports) mean += r.noise_gain_empirical;
      mean /= static_cast<double>(reports.size());
      double var = 0.0;
      for (const auto& r : reports) var += (r.noise_gain_empirical - mean) * (r.noise_gain_empirical - mean);
      var /= static_cast<double>(reports.size() - 1);
      const double se = std::sqrt(var / static_cast<double>(reports.size()));
      const double z = se > 0.0 ? (mean - analytic.value) / se : 0.0;
      fmt::print(out, "noise_gain_empirical: {} (se {:.3g} over {} seeds)\n", norm_value(mean), se,
                 reports.size());
      fmt::print(out, "deviation: {:.2f} standard errors ({})\n", z,
                 std::abs(z) <= 3.0 ? "within 3 SE" : "outside 3 SE");
    }
  } else {
    fmt::print(out, "noise_gain_empirical: n/a (no noise)\n");
  }

  if (!o.trace_path.empty()) {
    const auto y = llddc::synthesize(signal, *carrier, o.samples);
    const auto result = llddc::run(chain, y);
    Sink sink(o.trace_path, out);
    std::ostream& os = sink.get();
    fmt::print(os, "output_index,input_index,estimate_re,estimate_im,envelope_re,envelope_im\n");
    for (std::size_t j = 0; j < result.samples.size(); ++j) {
      const auto k = result.input_index(j);
      const auto b = llddc::envelope_at(signal.envelope, k);
      fmt::print(os, "{},{},{:.12g},{:.12g},{:.12g},{:.12g}\n", j, k, result.samples[j].real(),
                 result.samples[j].imag(), b.real(), b.imag());
    }
  }
  return kExitOk;
}

// ----------------------------------------------------------------------- preset

struct PresetOptions {
  std::string name;
  std::string preset_file;
};

int cmd_preset_show(const PresetOptions& o, std::ostream& out) {
  std::vector<Preset> extra;
  if (!o.preset_file.empty()) extra.push_back(load_preset_file(o.preset_file));
  fmt::print(out, "{}", describe(find_preset(o.name, extra)));
  return kExitOk;
}

int cmd_preset_list(std::ostream& out) {
  for (const auto& p : builtin_presets()) fmt::print(out, "{}\n", p.name);
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Low-latency digital downconversion: filters, norms, tuning and simulation", "ddc"};
  app.require_subcommand(1);

  FreqResponseOptions fr;
  auto* fr_cmd = app.add_subcommand("freq-response", "Baseband frequency response as CSV");
  add_common(fr_cmd, fr.common, true);
  fr_cmd->add_option("--points", fr.points, "Grid size over (-pi, pi]")->capture_default_str();

  NormOptions nm;
  auto* nm_cmd = app.add_subcommand("norm", "Squared H2 norm (noise rejection)");
  add_common(nm_cmd, nm.common, false);
  nm_cmd->add_option("--lp", nm.lp, "Additional first-order low-pass, omega_lp/omega_s");
  nm_cmd->add_option("--decimate", nm.decimate, "Decimation factor")->capture_default_str();
  nm_cmd->add_flag("--lp-after-decimation", nm.lp_after_decimation,
                   "Run the low-pass at the decimated rate (multirate norm)");

  TuneOptions tn;
  auto* tn_cmd = app.add_subcommand("tune", "Tune the low-pass bandwidth for a noise-rejection target");
  add_common(tn_cmd, tn.common, false);
  tn_cmd->add_option("--target-db", tn.target_db, "Target ||H F_LP||^2 in dB")->required();

  CompareOrderOptions co;
  auto* co_cmd = app.add_subcommand("compare-order", "Low-pass before vs after decimation sweep as CSV");
  add_common(co_cmd, co.common, true);
  co_cmd->add_option("--decimate", co.decimate, "Decimation factor");
  co_cmd->add_option("--points", co.points, "Sweep points")->capture_default_str();
  co_cmd->add_option("--min", co.min_ratio, "Smallest omega_lp/omega_s")->capture_default_str();
  co_cmd->add_option("--max", co.max_ratio, "Largest omega_lp/omega_s")->capture_default_str();

  SimulateOptions sm;
  auto* sm_cmd = app.add_subcommand("simulate", "Run a synthetic ADC stream through a chain");
  add_common(sm_cmd, sm.common, false);
  sm_cmd->add_option("--envelope", sm.envelope, "const:B | step:B1,B2,K | ramp:B,RATE")->capture_default_str();
  sm_cmd->add_option("--noise", sm.noise, "White ADC noise standard deviation");
  sm_cmd->add_option("--dc-offset", sm.dc_offset, "ADC offset n0");
  sm_cmd->add_flag("--dcr", sm.dcr, "Cascade the DC-spur rejection filter after H");
  sm_cmd->add_option("--hp", sm.hp, "Pre-mixer high-pass (z-1)/(z-p) with pole P");
  sm_cmd->add_option("--harmonic", sm.harmonics, "Carrier harmonic ORDER:AMPLITUDE (repeatable)");
  sm_cmd->add_option("--samples", sm.samples, "Samples per run")->capture_default_str();
  sm_cmd->add_option("--seed", sm.seed, "Noise seed")->capture_default_str();
  sm_cmd->add_option("--seeds", sm.seeds, "Number of seeds (seed, seed+1, ...)")->capture_default_str();
  sm_cmd->add_option("--decimate", sm.decimate, "Decimation factor (overrides preset)");
  sm_cmd->add_option("--lp", sm.lp, "Low-pass bandwidth omega_lp/omega_s");
  sm_cmd->add_option("--lp-hz", sm.lp_hz, "Low-pass bandwidth in Hz");
  sm_cmd->add_flag("--preset-lp", sm.preset_lp, "Use the preset's default low-pass bandwidth");
  sm_cmd->add_option("--order", sm.order, "Decimation 'after' or 'before' the low-pass");
  sm_cmd->add_option("--trace", sm.trace_path, "Write the estimate trace of the first seed as CSV");

  PresetOptions ps;
  auto* ps_cmd = app.add_subcommand("preset", "Inspect machine presets");
  ps_cmd->require_subcommand(1);
  auto* ps_show = ps_cmd->add_subcommand("show", "Print a preset as key=value");
  ps_show->add_option("name", ps.name, "Preset name")->required();
  ps_show->add_option("--preset-file", ps.preset_file, "key=value preset file");
  auto* ps_list = ps_cmd->add_subcommand("list", "List built-in presets");

  std::vector<std::string> argv_storage;
  argv_storage.reserve(args.size() + 1);
  argv_storage.emplace_back("ddc");
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_storage) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (*fr_cmd) return cmd_freq_response(fr, out);
    if (*nm_cmd) return cmd_norm(nm, out);
    if (*tn_cmd) return cmd_tune(tn, out);
    if (*co_cmd) return cmd_compare_order(co, out);
    if (*sm_cmd) return cmd_simulate(sm, out);
    if (*ps_show) return cmd_preset_show(ps, out);
    if (*ps_list) return cmd_preset_list(out);
  } catch (const llddc::UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const llddc::DomainError& e) {
    err << "error: " << e.what() << "\n";
    return kExitDomain;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitDomain;
  }
  return kExitUsage;
}

}  // namespace ddc_cli
