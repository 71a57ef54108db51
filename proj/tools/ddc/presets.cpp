#include "presets.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <charconv>
#include <fstream>
#include <map>

#include "filter_spec.hpp"
#include "llddc/errors.hpp"

namespace ddc_cli {

using llddc::UsageError;

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

double number(const std::string& s, int line) {
  double v = 0.0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty()) {
    throw UsageError(fmt::format("preset line {}: invalid number '{}'", line, s));
  }
  return v;
}

}  // namespace

const std::vector<Preset>& builtin_presets() {
  static const std::vector<Preset> presets = {
      Preset{.name = "lcls2",
             .m = 7,
             .n = 33,
             .fs = 94.29e6,
             .fc_nominal = 20e6,
             .filter = "2sr",
             .lp_hz = 100e3,
             .lp_range_hz = std::pair{50e3, 200e3},
             .decimation = 1,
             .order = llddc::StageOrder::FilterThenDecimate},
      Preset{.name = "ess",
             .m = 3,
             .n = 14,
             .fs = 117.40e6,
             .fc_nominal = 25.16e6,
             .filter = "ma:14",
             .lp_hz = std::nullopt,
             .lp_range_hz = std::nullopt,
             .decimation = 14,
             .order = llddc::StageOrder::FilterThenDecimate},
  };
  return presets;
}

Preset parse_preset(std::istream& in) {
  std::map<std::string, std::pair<std::string, int>> kv;
  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    const auto hash = raw.find('#');
    const std::string s = trim(raw.substr(0, hash));
    if (s.empty()) continue;
    const auto eq = s.find('=');
    if (eq == std::string::npos) throw UsageError(fmt::format("preset line {}: expected key = value", line));
    const std::string key = trim(s.substr(0, eq));
    const std::string value = trim(s.substr(eq + 1));
    if (key.empty() || value.empty()) throw UsageError(fmt::format("preset line {}: empty key or value", line));
    if (!kv.emplace(key, std::pair{value, line}).second) {
      throw UsageError(fmt::format("preset line {}: duplicate key '{}'", line, key));
    }
  }

  auto take = [&](const std::string& key) -> std::optional<std::pair<std::string, int>> {
    auto it = kv.find(key);
    if (it == kv.end()) return std::nullopt;
    auto v = it->second;
    kv.erase(it);
    return v;
  };
  auto required = [&](const std::string& key) {
    auto v = take(key);
    if (!v) throw UsageError("preset: missing required key '" + key + "'");
    return *v;
  };

  Preset p;
  p.name = required("name").first;
  const auto carrier = required("carrier");
  std::tie(p.m, p.n) = parse_ratio(carrier.first);
  const auto fs = required("fs");
  p.fs = number(fs.first, fs.second);
  if (auto v = take("fc")) p.fc_nominal = number(v->first, v->second);
  p.filter = required("filter").first;
  parse_filter_spec(p.filter);
  if (auto v = take("lp_hz")) p.lp_hz = number(v->first, v->second);
  if (auto v = take("lp_range_hz")) {
    const auto comma = v->first.find(',');
    if (comma == std::string::npos) {
      throw UsageError(fmt::format("preset line {}: lp_range_hz expects LOW,HIGH", v->second));
    }
    p.lp_range_hz = std::pair{number(trim(v->first.substr(0, comma)), v->second),
                              number(trim(v->first.substr(comma + 1)), v->second)};
  }
  if (auto v = take("decimate")) p.decimation = static_cast<int>(number(v->first, v->second));
  if (auto v = take("order")) {
    if (v->first == "after") {
      p.order = llddc::StageOrder::FilterThenDecimate;
    } else if (v->first == "before") {
      p.order = llddc::StageOrder::DecimateThenFilter;
    } else {
      throw UsageError(fmt::format("preset line {}: order must be 'after' or 'before'", v->second));
    }
  }
  if (!kv.empty()) {
    const auto& [key, where] = *kv.begin();
    throw UsageError(fmt::format("preset line {}: unknown key '{}'", where.second, key));
  }
  p.carrier();  // validates M/N and fs
  if (p.decimation < 1) throw UsageError("preset: decimate must be at least 1");
  return p;
}

Preset load_preset_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open preset file '" + path + "'");
  return parse_preset(in);
}

const Preset& find_preset(const std::string& name, const std::vector<Preset>& extra) {
  for (const auto& p : builtin_presets()) {
    if (p.name == name) return p;
  }
  for (const auto& p : extra) {
    if (p.name == name) return p;
  }
  throw UsageError("unknown preset '" + name + "'");
}

std::string describe(const Preset& p) {
  std::string s;
  s += fmt::format("name = {}\n", p.name);
  s += fmt::format("carrier = {}/{}\n", p.m, p.n);
  s += fmt::format("fs = {:.10g}\n", p.fs);
  if (p.fc_nominal) s += fmt::format("fc = {:.10g}\n", *p.fc_nominal);
  s += fmt::format("# derived fc = fs*M/N = {:.10g} Hz, Delta = 2*pi*{}/{} rad\n", p.fs * p.m / p.n, p.m, p.n);
  s += fmt::format("filter = {}\n", p.filter);
  if (p.lp_hz) s += fmt::format("lp_hz = {:.10g}\n", *p.lp_hz);
  if (p.lp_range_hz) s += fmt::format("lp_range_hz = {:.10g},{:.10g}\n", p.lp_range_hz->first, p.lp_range_hz->second);
  s += fmt::format("decimate = {}\n", p.decimation);
  s += fmt::format("order = {}\n", p.order == llddc::StageOrder::FilterThenDecimate ? "after" : "before");
  return s;
}

}  // namespace ddc_cli
