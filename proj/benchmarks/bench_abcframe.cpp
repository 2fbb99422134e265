#include <benchmark/benchmark.h>

#include <sstream>

#include "abcframe/classifier.hpp"
#include "abcframe/dynamics.hpp"
#include "abcframe/frame_bounds.hpp"
#include "abcframe/grid_oracle.hpp"
#include "abcframe_cli/number_expr.hpp"
#include "abcframe_cli/pipelines.hpp"
#include "abcframe_cli/region_sweep.hpp"

using namespace abcframe;

namespace {

ExactReal q(const char* text) { return cli::parse_number(text, NumberContext::rational()); }
ExactReal p(const char* text) { return cli::parse_number(text, NumberContext::pi()); }

NormalizedTriple r17(const char* c) { return normalize(q("13/17"), q("1"), q(c)); }

void BM_ParseNumber(benchmark::State& st) {
    auto ctx = NumberContext::pi();
    for (auto _ : st) benchmark::DoNotOptimize(cli::parse_number("23 - 11*pi/2 + 3/7", ctx));
}
BENCHMARK(BM_ParseNumber);

void BM_ClassifyRational(benchmark::State& st) {
    auto nt = r17("75/17");
    for (auto _ : st) benchmark::DoNotOptimize(classify(nt));
}
BENCHMARK(BM_ClassifyRational);

void BM_ClassifyPi(benchmark::State& st) {
    auto nt = normalize(p("pi/4"), p("1"), p("23-11*pi/2"));
    for (auto _ : st) benchmark::DoNotOptimize(classify(nt));
}
BENCHMARK(BM_ClassifyPi);

void BM_InvariantSetRational(benchmark::State& st) {
    auto nt = r17("77/17");
    for (auto _ : st) benchmark::DoNotOptimize(compute_S(nt));
}
BENCHMARK(BM_InvariantSetRational);

void BM_InvariantSetPi(benchmark::State& st) {
    auto nt = normalize(p("pi/4"), p("1"), p("23-11*pi/2"));
    for (auto _ : st) benchmark::DoNotOptimize(compute_S(nt));
}
BENCHMARK(BM_InvariantSetPi);

void BM_GridOracle(benchmark::State& st) {
    auto nt = r17("75/17");
    for (auto _ : st) benchmark::DoNotOptimize(grid_frame_decision(GridModel(nt)));
}
BENCHMARK(BM_GridOracle);

void BM_FrameBounds(benchmark::State& st) {
    auto nt = r17("77/17");
    for (auto _ : st) benchmark::DoNotOptimize(numeric_frame_bounds(nt, 8, st.range(0)));
}
BENCHMARK(BM_FrameBounds)->Arg(8)->Arg(32)->Unit(benchmark::kMillisecond);

void BM_AgreementSweep(benchmark::State& st) {
    auto triples = cli::agreement_triples(12, 8);
    for (auto _ : st) benchmark::DoNotOptimize(cli::run_agreement(triples, static_cast<unsigned>(st.range(0))));
}
BENCHMARK(BM_AgreementSweep)->Arg(1)->Arg(8)->Unit(benchmark::kMillisecond);

void BM_RegionSweep(benchmark::State& st) {
    cli::SweepSpec spec;
    spec.threads = static_cast<unsigned>(st.range(0));
    for (auto _ : st) {
        std::ostringstream os;
        cli::write_ppm(os, cli::region_sweep(spec));
        benchmark::DoNotOptimize(os.str());
    }
}
BENCHMARK(BM_RegionSweep)->Arg(1)->Arg(8)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
