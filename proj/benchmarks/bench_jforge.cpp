#include <benchmark/benchmark.h>

#include <jforge/contraction.hpp>
#include <jforge/hopf.hpp>
#include <jforge/rtt.hpp>

using namespace jforge;

namespace {

const RewriteSystem& table() {
    static const RewriteSystem rs = derive_relation_table(rtt_entries(build_RJ3(), TLayout{}, Convention::plain));
    return rs;
}

void BM_QybeRJ3(benchmark::State& state) {
    const RMat r = build_RJ3();
    for (auto _ : state) benchmark::DoNotOptimize(qybe_check(r, "R_J(3)").pass);
}
BENCHMARK(BM_QybeRJ3)->Unit(benchmark::kMillisecond);

void BM_QybeRQ3(benchmark::State& state) {
    const RMat r = build_RQ3();
    for (auto _ : state) benchmark::DoNotOptimize(qybe_check(r, "R_Q(3)").pass);
}
BENCHMARK(BM_QybeRQ3)->Unit(benchmark::kMillisecond);

void BM_Contract(benchmark::State& state) {
    const Schedule s = Schedule::load(JFORGE_SCHEDULE_DIR "/jordanian_gl3.schedule");
    const RMat src = build_RQ3();
    const RMat g = build_G(RatFunc::param(params::eta()));
    for (auto _ : state) benchmark::DoNotOptimize(contract(src, g, s));
}
BENCHMARK(BM_Contract)->Unit(benchmark::kMillisecond);

void BM_DeriveTable(benchmark::State& state) {
    const auto entries = rtt_entries(build_RJ3(), TLayout{}, Convention::plain);
    for (auto _ : state) benchmark::DoNotOptimize(derive_relation_table(entries).rules().size());
}
BENCHMARK(BM_DeriveTable)->Unit(benchmark::kMillisecond);

void BM_ConfluenceFullCore(benchmark::State& state) {
    const ExtendedAlgebra full = build_full_algebra(table());
    for (auto _ : state) benchmark::DoNotOptimize(confluence_check(full.core, 3, "core").pass);
}
BENCHMARK(BM_ConfluenceFullCore)->Unit(benchmark::kMillisecond);

void BM_NormalFormPower(benchmark::State& state) {
    NCPoly w(1);
    const NCPoly base = parse_ncpoly("y*f*d*x");
    for (int i = 0; i < state.range(0); ++i) w = w * base;
    for (auto _ : state) benchmark::DoNotOptimize(table().normal_form(w).terms().size());
}
BENCHMARK(BM_NormalFormPower)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
