#pragma once

#include <istream>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "llddc/pipeline.hpp"

namespace ddc_cli {

/// Named machine configuration: carrier plus a default chain description.
struct Preset {
  std::string name;
  int m = 0;
  int n = 0;
  double fs = 0.0;                 // Hz
  std::optional<double> fc_nominal;  // Hz, as quoted for the machine
  std::string filter;              // filter spec
  std::optional<double> lp_hz;     // default F_LP bandwidth
  std::optional<std::pair<double, double>> lp_range_hz;
  int decimation = 1;
  llddc::StageOrder order = llddc::StageOrder::FilterThenDecimate;

  llddc::CarrierConfig carrier() const { return llddc::CarrierConfig(m, n, fs); }
};

/// lcls2 and ess.
const std::vector<Preset>& builtin_presets();

/// Plain key=value text, one preset per file:
///
///   # comment
///   name     = mymachine
///   carrier  = 7/33
///   fs       = 94.29e6
///   fc       = 20e6          (optional, nominal)
///   filter   = 2sr
///   lp_hz    = 100e3         (optional)
///   lp_range_hz = 50e3,200e3 (optional)
///   decimate = 1
///   order    = after | before   (decimation after / before the low-pass)
///
/// Throws llddc::UsageError with the line number on malformed input.
Preset parse_preset(std::istream& in);
Preset load_preset_file(const std::string& path);

/// Builtins first, then `extra`. Throws llddc::UsageError if unknown.
const Preset& find_preset(const std::string& name, const std::vector<Preset>& extra = {});

/// key=value rendering, parseable by parse_preset.
std::string describe(const Preset& preset);

}  // namespace ddc_cli
