// Microbenchmarks for the hot paths: stable refinement, canonicalization,
// census enumeration, marking-run profiles, and 2-tuple refinement.
#include <benchmark/benchmark.h>

#include "wlx/canonical.hpp"
#include "wlx/constructions.hpp"
#include "wlx/extensions.hpp"
#include "wlx/refine.hpp"

namespace {

void BM_refine_stable_rook(benchmark::State& state) {
  auto g = wlx::gen_rook44();
  for (auto _ : state) {
    wlx::InternTable table;
    auto colors =
        wlx::refine_rounds(g, wlx::interned_node_colors(g, table), wlx::kStable, table);
    benchmark::DoNotOptimize(colors);
  }
}
BENCHMARK(BM_refine_stable_rook);

void BM_refine_stable_cfi80(benchmark::State& state) {
  auto pair = wlx::gen_cfi_pair(8);
  for (auto _ : state) {
    wlx::InternTable table;
    auto colors = wlx::refine_rounds(
        pair.a, wlx::interned_node_colors(pair.a, table), wlx::kStable, table);
    benchmark::DoNotOptimize(colors);
  }
}
BENCHMARK(BM_refine_stable_cfi80);

void BM_certificate_rook(benchmark::State& state) {
  auto g = wlx::gen_rook44();
  for (auto _ : state) {
    auto cert = wlx::certificate(g);
    benchmark::DoNotOptimize(cert);
  }
}
BENCHMARK(BM_certificate_rook);

void BM_certificate_shrikhande(benchmark::State& state) {
  auto g = wlx::gen_shrikhande();
  for (auto _ : state) {
    auto cert = wlx::certificate(g);
    benchmark::DoNotOptimize(cert);
  }
}
BENCHMARK(BM_certificate_shrikhande);

void BM_census_s4_rook(benchmark::State& state) {
  auto g = wlx::gen_rook44();
  for (auto _ : state) {
    wlx::Session session;
    auto census = wlx::sk_census(g, 0, 4, session);
    benchmark::DoNotOptimize(census);
  }
}
BENCHMARK(BM_census_s4_rook);

void BM_mk_profile_markdrop(benchmark::State& state) {
  auto pair = wlx::gen_markdrop_pair();
  for (auto _ : state) {
    wlx::Session session;
    auto profile = wlx::mk_run_profile(pair.a, pair.root_a, 2, 2,
                                       wlx::MkMode::MARK, session);
    benchmark::DoNotOptimize(profile);
  }
}
BENCHMARK(BM_mk_profile_markdrop);

void BM_kfwl2_rook_pair(benchmark::State& state) {
  auto pair = wlx::gen_rook_shrikhande();
  for (auto _ : state) {
    wlx::InternTable table;
    auto res = wlx::kfwl_compare(pair.a, pair.b, 2, table);
    benchmark::DoNotOptimize(res);
  }
}
BENCHMARK(BM_kfwl2_rook_pair);

}  // namespace

BENCHMARK_MAIN();
