#include <benchmark/benchmark.h>

#include "llddc/llddc.hpp"

using namespace llddc;

namespace {

RealSeq noisy_carrier(const CarrierConfig& c, std::size_t k) {
  SignalSpec s;
  s.envelope = ConstantEnvelope{cplx(0.6, -0.2)};
  s.noise_sigma = 0.01;
  s.dc_offset = 0.005;
  return synthesize(s, c, k);
}

void BM_FilterStream(benchmark::State& state) {
  const auto f = make_ma(static_cast<int>(state.range(0)));
  std::vector<cplx> x(1 << 16);
  for (std::size_t k = 0; k < x.size(); ++k) x[k] = cplx(static_cast<double>(k % 7), 1.0);
  const ComplexSeq xs(x);
  FilterState s(f);
  for (auto _ : state) benchmark::DoNotOptimize(filter_stream(f, s, xs));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(x.size()));
}
BENCHMARK(BM_FilterStream)->Arg(2)->Arg(14)->Arg(33);

void BM_FilterStreamIir(benchmark::State& state) {
  const auto f = make_lp(0.01, 1.0);
  const ComplexSeq xs(std::vector<cplx>(1 << 16, cplx(1.0, 0.5)));
  FilterState s(f);
  for (auto _ : state) benchmark::DoNotOptimize(filter_stream(f, s, xs));
  state.SetItemsProcessed(state.iterations() * (1 << 16));
}
BENCHMARK(BM_FilterStreamIir);

void BM_MixDown(benchmark::State& state) {
  const CarrierConfig c(7, 33);
  const auto y = noisy_carrier(c, 1 << 16);
  for (auto _ : state) benchmark::DoNotOptimize(mix_down(y, c));
  state.SetItemsProcessed(state.iterations() * (1 << 16));
}
BENCHMARK(BM_MixDown);

void BM_RunLcls2(benchmark::State& state) {
  const CarrierConfig c(7, 33, 94.29e6);
  const DdcChain chain{.carrier = c, .ddc_filter = make_2sr(c), .lowpass_omega = 2 * 3.141592653589793 * 100e3};
  const auto y = noisy_carrier(c, 1 << 16);
  for (auto _ : state) benchmark::DoNotOptimize(run(chain, y));
  state.SetItemsProcessed(state.iterations() * (1 << 16));
}
BENCHMARK(BM_RunLcls2);

void BM_RunEss(benchmark::State& state) {
  const CarrierConfig c(3, 14, 117.40e6);
  const DdcChain chain{.carrier = c, .ddc_filter = make_ma(14), .decimation = 14};
  const auto y = noisy_carrier(c, 14 << 12);
  for (auto _ : state) benchmark::DoNotOptimize(run(chain, y));
  state.SetItemsProcessed(state.iterations() * (14 << 12));
}
BENCHMARK(BM_RunEss);

void BM_H2NormClosedForm(benchmark::State& state) {
  const Cascade cas{make_ma(33), make_lp(0.01, 1.0)};
  for (auto _ : state) benchmark::DoNotOptimize(h2_norm_sq(cas));
}
BENCHMARK(BM_H2NormClosedForm);

void BM_H2NormImpulseSum(benchmark::State& state) {
  const Cascade cas{make_ma(33), make_lp(0.01, 1.0), make_lp(0.03, 1.0)};
  for (auto _ : state) benchmark::DoNotOptimize(h2_norm_sq(cas));
}
BENCHMARK(BM_H2NormImpulseSum);

void BM_MultirateNorm(benchmark::State& state) {
  const Cascade h{make_ma(14)};
  const auto ft = make_lp(0.14, 1.0);
  for (auto _ : state) benchmark::DoNotOptimize(multirate_norm_sq(h, ft, 14));
}
BENCHMARK(BM_MultirateNorm);

void BM_Tune(benchmark::State& state) {
  const Cascade h{make_2sr(CarrierConfig(7, 33))};
  for (auto _ : state) benchmark::DoNotOptimize(tune_lp_bandwidth(h, -20.0, 1.0));
}
BENCHMARK(BM_Tune);

}  // namespace

BENCHMARK_MAIN();
