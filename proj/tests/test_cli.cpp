#include <gtest/gtest.h>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <locale>
#include <numbers>
#include <sstream>

#include "commands.hpp"
#include "filter_spec.hpp"
#include "presets.hpp"
#include "llddc/errors.hpp"

using namespace ddc_cli;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::vector<std::string>> csv(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    std::vector<std::string> cells;
    std::istringstream ls(line);
    std::string cell;
    while (std::getline(ls, cell, ',')) cells.push_back(cell);
    rows.push_back(cells);
  }
  return rows;
}

std::string field(const std::string& text, const std::string& key) {
  const auto pos = text.find(key);
  if (pos == std::string::npos) return {};
  const auto start = pos + key.size();
  return text.substr(start, text.find('\n', start) - start);
}

}  // namespace

TEST(FilterSpecParse, Tokens) {
  const auto s = parse_filter_spec("2sr+dcr+lp:1e-3+hp:0.9375");
  ASSERT_EQ(s.tokens.size(), 4u);
  EXPECT_EQ(s.tokens[0].kind, FilterToken::Kind::TwoSample);
  EXPECT_EQ(s.tokens[1].kind, FilterToken::Kind::DcReject);
  EXPECT_EQ(s.tokens[2].kind, FilterToken::Kind::LowPass);
  EXPECT_DOUBLE_EQ(s.tokens[2].value, 1e-3);
  EXPECT_DOUBLE_EQ(s.tokens[3].value, 0.9375);
  EXPECT_TRUE(s.needs_carrier());
  EXPECT_FALSE(parse_filter_spec("ma:11+lp:1e+0").needs_carrier());
  EXPECT_DOUBLE_EQ(parse_filter_spec("lp:1e+0").tokens[0].value, 1.0);
}

TEST(FilterSpecParse, Errors) {
  for (const char* bad : {"", "ma", "ma:0", "ma:x", "2sr:3", "lp:0", "lp:-1", "hp:1", "hp:0", "fir", "ma:3+"}) {
    EXPECT_THROW(parse_filter_spec(bad), llddc::UsageError) << bad;
  }
  try {
    parse_filter_spec("2sr+bogus");
  } catch (const llddc::UsageError& e) {
    EXPECT_NE(std::string(e.what()).find("bogus"), std::string::npos);
  }
}

TEST(FilterSpecParse, RatioAndComplex) {
  EXPECT_EQ(parse_ratio("7/33"), (std::pair{7, 33}));
  EXPECT_THROW(parse_ratio("7:33"), llddc::UsageError);
  EXPECT_EQ(parse_complex("1+2i"), llddc::cplx(1, 2));
  EXPECT_EQ(parse_complex("2i"), llddc::cplx(0, 2));
  EXPECT_EQ(parse_complex("-0.5"), llddc::cplx(-0.5, 0));
  EXPECT_EQ(parse_complex("1e-3-2e-2i"), llddc::cplx(1e-3, -2e-2));
  EXPECT_EQ(parse_complex("-i"), llddc::cplx(0, -1));
  EXPECT_THROW(parse_complex("abc"), llddc::UsageError);
}

TEST(Presets, Builtins) {
  const auto& l = find_preset("lcls2");
  EXPECT_EQ(l.m, 7);
  EXPECT_EQ(l.n, 33);
  EXPECT_DOUBLE_EQ(l.fs, 94.29e6);
  EXPECT_DOUBLE_EQ(*l.fc_nominal, 20e6);
  EXPECT_EQ(l.filter, "2sr");
  EXPECT_DOUBLE_EQ(l.lp_range_hz->first, 50e3);
  EXPECT_DOUBLE_EQ(l.lp_range_hz->second, 200e3);
  const auto& e = find_preset("ess");
  EXPECT_EQ(e.m, 3);
  EXPECT_EQ(e.n, 14);
  EXPECT_DOUBLE_EQ(e.fs, 117.40e6);
  EXPECT_DOUBLE_EQ(*e.fc_nominal, 25.16e6);
  EXPECT_EQ(e.filter, "ma:14");
  EXPECT_EQ(e.decimation, 14);
  EXPECT_EQ(builtin_presets().size(), 2u);
  EXPECT_THROW(find_preset("nope"), llddc::UsageError);
}

TEST(Presets, DescribeRoundTrips) {
  for (const auto& p : builtin_presets()) {
    std::istringstream in(describe(p));
    const auto q = parse_preset(in);
    EXPECT_EQ(q.name, p.name);
    EXPECT_EQ(q.m, p.m);
    EXPECT_EQ(q.n, p.n);
    EXPECT_EQ(q.fs, p.fs);
    EXPECT_EQ(q.filter, p.filter);
    EXPECT_EQ(q.lp_hz, p.lp_hz);
    EXPECT_EQ(q.decimation, p.decimation);
    EXPECT_EQ(q.order, p.order);
  }
}

TEST(Presets, FileErrorsNameTheLine) {
  std::istringstream dup("name = a\ncarrier = 1/5\nfs = 1\nfilter = 2sr\nfs = 2\n");
  try {
    parse_preset(dup);
    FAIL();
  } catch (const llddc::UsageError& e) {
    EXPECT_NE(std::string(e.what()).find("line 5"), std::string::npos);
  }
  std::istringstream unknown("name = a\ncarrier = 1/5\nfs = 1\nfilter = 2sr\ncolour = red\n");
  EXPECT_THROW(parse_preset(unknown), llddc::UsageError);
  std::istringstream missing("name = a\nfs = 1\nfilter = 2sr\n");
  EXPECT_THROW(parse_preset(missing), llddc::UsageError);
  std::istringstream bad_carrier("name = a\ncarrier = 3/5\nfs = 1\nfilter = 2sr\n");
  EXPECT_THROW(parse_preset(bad_carrier), llddc::UsageError);
}

TEST(Cli, FreqResponseMovingAverage) {
  const auto r = cli({"freq-response", "--filter", "ma:11", "--points", "8"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const auto rows = csv(r.out);
  ASSERT_EQ(rows.size(), 9u);
  EXPECT_EQ(rows[0], (std::vector<std::string>{"theta_rad", "mag_db", "phase_deg"}));
  bool saw_zero = false;
  for (std::size_t i = 1; i < rows.size(); ++i) {
    if (std::stod(rows[i][0]) == 0.0) {
      saw_zero = true;
      EXPECT_NEAR(std::stod(rows[i][1]), 0.0, 1e-12);
    }
  }
  EXPECT_TRUE(saw_zero);
}

TEST(Cli, FreqResponseNotches) {
  const auto r = cli({"freq-response", "--filter", "2sr", "--carrier", "2/17", "--points", "256"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const double target = -2 * 2 * std::numbers::pi * 2 / 17;
  double best = 1e9;
  double at = 0.0;
  for (const auto& row : csv(r.out)) {
    if (row[0] == "theta_rad") continue;
    const double db = std::stod(row[1]);
    if (db < best) {
      best = db;
      at = std::stod(row[0]);
    }
  }
  EXPECT_LT(best, -200.0);
  EXPECT_NEAR(at, target, 1e-9);

  const auto d = cli({"freq-response", "--filter", "2sr+dcr", "--carrier", "4/17", "--fs", "1e6", "--points", "64"});
  ASSERT_EQ(d.code, kExitOk);
  const auto rows = csv(d.out);
  EXPECT_EQ(rows[0].size(), 4u);
  EXPECT_EQ(rows[0][1], "freq_hz");
  const double minus_delta = -2 * std::numbers::pi * 4 / 17;
  bool found = false;
  for (const auto& row : rows) {
    if (row[0] != "theta_rad" && std::abs(std::stod(row[0]) - minus_delta) < 1e-9) {
      found = true;
      EXPECT_LT(std::stod(row[2]), -200.0);
    }
  }
  EXPECT_TRUE(found);
}

TEST(Cli, FreqResponseToFile) {
  const auto path = std::filesystem::temp_directory_path() / "llddc_cli_fr.csv";
  const auto r = cli({"freq-response", "--filter", "ma:4", "--points", "4", "--out", path.string()});
  ASSERT_EQ(r.code, kExitOk);
  EXPECT_TRUE(r.out.empty());
  std::ifstream in(path);
  std::string header;
  std::getline(in, header);
  EXPECT_EQ(header, "theta_rad,mag_db,phase_deg");
  std::filesystem::remove(path);
}

TEST(Cli, Norm) {
  auto r = cli({"norm", "--filter", "ma:11"});
  ASSERT_EQ(r.code, kExitOk);
  EXPECT_EQ(r.out, "0.090909 (-10.41 dB) closed-form\n");
  r = cli({"norm", "--filter", "2sr", "--carrier", "1/4"});
  EXPECT_EQ(r.out.substr(0, 9), "0.500000 ");
  r = cli({"norm", "--filter", "ma:4", "--lp", "0"});
  EXPECT_EQ(r.code, kExitUsage);
  r = cli({"norm", "--filter", "ma:4", "--decimate", "4", "--lp", "1e-2", "--lp-after-decimation"});
  EXPECT_EQ(r.code, kExitOk);
  r = cli({"norm", "--filter", "2sr"});
  EXPECT_EQ(r.code, kExitUsage);
  EXPECT_NE(r.err.find("--carrier"), std::string::npos);
}

TEST(Cli, Tune) {
  auto r = cli({"tune", "--filter", "2sr", "--carrier", "7/33", "--target-db", "-15.2"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const double ratio = std::stod(field(r.out, "omega_lp_over_omega_s = "));
  EXPECT_NEAR(ratio, 0.01, 0.003);

  r = cli({"tune", "--filter", "ma:11", "--target-db", "-20"});
  ASSERT_EQ(r.code, kExitOk);
  const auto norm = field(r.out, "norm = ");
  EXPECT_NEAR(std::stod(norm), 0.01, 1e-8);

  r = cli({"tune", "--filter", "ma:11", "--target-db", "-5"});
  EXPECT_EQ(r.code, kExitDomain);
  EXPECT_NE(r.err.find("unachievable"), std::string::npos);
  EXPECT_NE(r.err.find("-10.41"), std::string::npos);

  r = cli({"tune", "--preset", "lcls2", "--target-db", "-20"});
  ASSERT_EQ(r.code, kExitOk);
  EXPECT_FALSE(field(r.out, "f_lp_hz = ").empty());
}

TEST(Cli, CompareOrder) {
  auto r = cli({"compare-order", "--filter", "ma:14", "--decimate", "14", "--points", "13"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const auto rows = csv(r.out);
  ASSERT_EQ(rows.size(), 14u);
  EXPECT_EQ(rows[0], (std::vector<std::string>{"omega_lp_over_omega_s", "rejection_after_db", "rejection_before_db"}));
  EXPECT_DOUBLE_EQ(std::stod(rows[1][0]), 1e-4);
  EXPECT_DOUBLE_EQ(std::stod(rows.back()[0]), 1e-1);
  for (std::size_t i = 1; i < rows.size(); ++i) {
    if (std::stod(rows[i][0]) <= 1e-3 * (1 + 1e-12)) {
      EXPECT_LT(std::abs(std::stod(rows[i][1]) - std::stod(rows[i][2])), 0.5);
    }
  }
  r = cli({"compare-order", "--filter", "2sr", "--carrier", "7/33", "--decimate", "2"});
  ASSERT_EQ(r.code, kExitOk);
  for (const auto& row : csv(r.out)) {
    if (row[0] == "omega_lp_over_omega_s") continue;
    EXPECT_LT(std::abs(std::stod(row[1]) - std::stod(row[2])), 1.0);
  }
  EXPECT_EQ(cli({"compare-order", "--filter", "ma:14+lp:1e-3", "--decimate", "14"}).code, kExitUsage);
  EXPECT_EQ(cli({"compare-order", "--filter", "ma:14"}).code, kExitUsage);
}

TEST(Cli, CompareOrderIdentityLimit) {
  // At a very wide bandwidth both orderings reduce to ||H||^2 / ||F_LP||^2.
  const auto r = cli({"compare-order", "--filter", "ma:4", "--decimate", "4", "--points", "2", "--min", "1", "--max", "8"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const auto rows = csv(r.out);
  const double x = 2 * std::numbers::pi * 8;
  const double a = std::exp(-x);
  const double want = 10 * std::log10(0.25 / ((1 - a) / (1 + a)));
  EXPECT_NEAR(std::stod(rows[2][1]), want, 1e-6);
  EXPECT_NEAR(std::stod(rows[2][2]), want, 1e-6);
}

TEST(Cli, SimulateExamples) {
  auto r = cli({"simulate", "--preset", "lcls2", "--envelope", "const:1+2i", "--noise", "0", "--samples", "1000"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_LT(std::stod(field(r.out, "rms_envelope_error: ")), 1e-12);

  r = cli({"simulate", "--preset", "lcls2", "--dc-offset", "0.012", "--dcr"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_LT(std::stod(field(r.out, "spur_level_db: ")), -200.0);

  r = cli({"simulate", "--preset", "ess", "--noise", "1", "--seeds", "20"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_NE(r.out.find("within 3 SE"), std::string::npos) << r.out;
}

TEST(Cli, SimulateIsDeterministic) {
  const std::vector<std::string> args{"simulate", "--carrier", "7/33", "--filter", "2sr", "--noise", "0.1",
                                      "--lp", "1e-2", "--seed", "9", "--samples", "20000"};
  EXPECT_EQ(cli(args).out, cli(args).out);
}

TEST(Cli, SimulateTrace) {
  const auto path = std::filesystem::temp_directory_path() / "llddc_cli_trace.csv";
  const auto r = cli({"simulate", "--preset", "ess", "--samples", "1400", "--envelope", "step:0,1,700", "--trace",
                      path.string()});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  std::ifstream in(path);
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line, "output_index,input_index,estimate_re,estimate_im,envelope_re,envelope_im");
  int rows = 0;
  while (std::getline(in, line)) ++rows;
  EXPECT_EQ(rows, 100);
  std::filesystem::remove(path);
}

TEST(Cli, SimulateErrors) {
  EXPECT_EQ(cli({"simulate", "--filter", "2sr"}).code, kExitUsage);
  EXPECT_EQ(cli({"simulate", "--preset", "lcls2", "--envelope", "wobble"}).code, kExitUsage);
  EXPECT_EQ(cli({"simulate", "--preset", "lcls2", "--harmonic", "1:0.1"}).code, kExitUsage);
  EXPECT_EQ(cli({"simulate", "--preset", "lcls2", "--order", "sideways"}).code, kExitUsage);
  EXPECT_EQ(cli({"simulate", "--preset", "ess", "--samples", "10"}).code, kExitUsage);
}

TEST(Cli, PresetShowAndList) {
  auto r = cli({"preset", "show", "lcls2"});
  ASSERT_EQ(r.code, kExitOk);
  EXPECT_NE(r.out.find("carrier = 7/33"), std::string::npos);
  EXPECT_NE(r.out.find("fs = 94290000"), std::string::npos);
  EXPECT_NE(r.out.find("lp_range_hz = 50000,200000"), std::string::npos);
  r = cli({"preset", "show", "ess"});
  EXPECT_NE(r.out.find("carrier = 3/14"), std::string::npos);
  EXPECT_NE(r.out.find("fs = 117400000"), std::string::npos);
  EXPECT_NE(r.out.find("decimate = 14"), std::string::npos);
  EXPECT_NE(r.out.find("filter = ma:14"), std::string::npos);
  r = cli({"preset", "list"});
  EXPECT_EQ(r.out, "lcls2\ness\n");
  EXPECT_EQ(cli({"preset", "show", "nope"}).code, kExitUsage);
}

TEST(Cli, PresetFile) {
  const auto path = std::filesystem::temp_directory_path() / "llddc_cli_preset.txt";
  {
    std::ofstream f(path);
    f << "# test machine\nname = bench\ncarrier = 2/9\nfs = 1e6\nfilter = ma:9\ndecimate = 9\n";
  }
  auto r = cli({"norm", "--preset", "bench", "--preset-file", path.string()});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_EQ(r.out.substr(0, 8), "0.111111");
  r = cli({"preset", "show", "bench", "--preset-file", path.string()});
  EXPECT_NE(r.out.find("carrier = 2/9"), std::string::npos);
  std::filesystem::remove(path);
  EXPECT_EQ(cli({"norm", "--preset", "bench", "--preset-file", path.string()}).code, kExitUsage);
}

TEST(Cli, UsageAndHelp) {
  EXPECT_EQ(cli({}).code, kExitUsage);
  EXPECT_EQ(cli({"frobnicate"}).code, kExitUsage);
  EXPECT_EQ(cli({"norm", "--filter"}).code, kExitUsage);
  EXPECT_EQ(cli({"norm", "--filter", "ma:3", "--fs", "abc"}).code, kExitUsage);
  const auto h = cli({"--help"});
  EXPECT_EQ(h.code, kExitOk);
  EXPECT_NE(h.out.find("freq-response"), std::string::npos);
  EXPECT_EQ(cli({"norm", "--help"}).code, kExitOk);
  EXPECT_EQ(cli({"norm", "--filter", "ma:3", "--carrier", "3/5"}).code, kExitUsage);
}

TEST(Cli, CsvIsLocaleIndependent) {
  struct CommaDecimal : std::numpunct<char> {
    char do_decimal_point() const override { return ','; }
    char do_thousands_sep() const override { return '.'; }
    std::string do_grouping() const override { return "\3"; }
  };
  std::locale::global(std::locale(std::locale::classic(), new CommaDecimal));
  const auto r = cli({"freq-response", "--filter", "ma:2", "--fs", "1234567", "--points", "4"});
  std::locale::global(std::locale::classic());
  for (const auto& row : csv(r.out)) EXPECT_EQ(row.size(), 4u);
}
