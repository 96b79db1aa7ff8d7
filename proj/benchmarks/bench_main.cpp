#include <benchmark/benchmark.h>

#include "ircl/amalg.hpp"
#include "ircl/chains.hpp"
#include "ircl/congr.hpp"
#include "ircl/decomp.hpp"
#include "ircl/enumerate.hpp"

using namespace ircl;

static void BM_EnumerateChains(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    int count = 0;
    enumerate_chains(n, [&](const FinResLat&) { ++count; });
    benchmark::DoNotOptimize(count);
  }
}
BENCHMARK(BM_EnumerateChains)->Arg(6)->Arg(8)->Arg(10);

static void BM_VerifyAlgebra(benchmark::State& state) {
  FinResLat a = sugihara_chain(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    Report rep = verify_algebra(a);
    benchmark::DoNotOptimize(rep.ok());
  }
}
BENCHMARK(BM_VerifyAlgebra)->Arg(21)->Arg(41);

static void BM_EmpRoundTrip(benchmark::State& state) {
  FinResLat a = sugihara_chain(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    FinResLat b = from_emp(to_emp(a));
    benchmark::DoNotOptimize(b.size());
  }
}
BENCHMARK(BM_EmpRoundTrip)->Arg(15)->Arg(31);

static void BM_CongruenceLattice(benchmark::State& state) {
  FinResLat p = direct_product(sugihara_chain(5), sugihara_chain(5));
  for (auto _ : state) {
    auto cong = enumerate_congruences(p);
    benchmark::DoNotOptimize(cong.size());
  }
}
BENCHMARK(BM_CongruenceLattice);

static void BM_AmalgamateChains(benchmark::State& state) {
  FinResLat b = sugihara_chain(static_cast<int>(state.range(0)));
  VFormation v = v_formation_by_labels(FinResLat::trivial(), b, b);
  for (auto _ : state) {
    AmalgamCert cert = amalgamate_star_inv_chains(v);
    benchmark::DoNotOptimize(cert.D.size());
  }
}
BENCHMARK(BM_AmalgamateChains)->Arg(7)->Arg(11);

static void BM_SearchAmalgamNegative(benchmark::State& state) {
  VFormation v = v_formation_by_labels(library("fig_APfails_A"), library("fig_APfails_B"),
                                       library("fig_APfails_C"));
  for (auto _ : state) {
    auto cert = search_amalgam(v, AmalgClass::Chains, static_cast<int>(state.range(0)));
    benchmark::DoNotOptimize(cert.has_value());
  }
}
BENCHMARK(BM_SearchAmalgamNegative)->Arg(8)->Arg(10);

static void BM_ExtractBuildRoundTrip(benchmark::State& state) {
  FinResLat a = library("fig_APfails2_C");
  for (auto _ : state) {
    FinResLat b = build_algebra(extract_system(a));
    benchmark::DoNotOptimize(b.size());
  }
}
BENCHMARK(BM_ExtractBuildRoundTrip);

BENCHMARK_MAIN();
