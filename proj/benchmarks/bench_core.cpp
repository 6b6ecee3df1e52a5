// Copyright 2026 The majorana-rp Authors
// SPDX-License-Identifier: Apache-2.0

#include <benchmark/benchmark.h>

#include "majorana_rp/clifford.hpp"
#include "majorana_rp/gibbs_rp.hpp"
#include "majorana_rp/matrix_rep.hpp"
#include "majorana_rp/random_model.hpp"
#include "majorana_rp/trotter.hpp"

namespace mr = majorana_rp;

namespace {

mr::HamiltonianSpec spec_for(int sites_per_side, int flavors) {
  mr::Rng rng(1);
  return mr::random_spec(mr::ReflectionGeometry::chain(sites_per_side, flavors), {}, rng);
}

void BM_CanonicalProduct(benchmark::State& state) {
  const int gens = static_cast<int>(state.range(0));
  mr::Rng rng(2);
  std::uniform_int_distribution<std::uint64_t> bits(0, (std::uint64_t{1} << gens) - 1);
  std::vector<mr::Monomial> ms;
  for (int i = 0; i < 256; ++i) {
    ms.emplace_back(gens, bits(rng));
  }
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(mr::canonical_product(ms[i % 256], ms[(i + 1) % 256]));
    ++i;
  }
}
BENCHMARK(BM_CanonicalProduct)->Arg(8)->Arg(24)->Arg(48);

void BM_ToMatrix(benchmark::State& state) {
  const int sites = static_cast<int>(state.range(0));
  const auto h = mr::assemble(spec_for(sites, 2));
  for (auto _ : state) {
    benchmark::DoNotOptimize(mr::to_matrix(h));
  }
}
BENCHMARK(BM_ToMatrix)->Arg(1)->Arg(2)->Arg(3);

void BM_GibbsWeight(benchmark::State& state) {
  const int sites = static_cast<int>(state.range(0));
  const auto h = mr::assemble(spec_for(sites, 2));
  for (auto _ : state) {
    benchmark::DoNotOptimize(mr::gibbs_weight(h));
  }
}
BENCHMARK(BM_GibbsWeight)->Arg(1)->Arg(2)->Arg(3);

void BM_GramMatrix(benchmark::State& state) {
  const int sites = static_cast<int>(state.range(0));
  const auto spec = spec_for(sites, 2);
  const auto h = mr::assemble(spec);
  for (auto _ : state) {
    benchmark::DoNotOptimize(mr::gram_matrix(h, spec.geometry, mr::Side::minus));
  }
}
BENCHMARK(BM_GramMatrix)->Arg(1)->Arg(2)->Arg(3);

void BM_LieProduct(benchmark::State& state) {
  const auto spec = spec_for(2, 2);
  for (auto _ : state) {
    benchmark::DoNotOptimize(mr::lie_product_approx(spec, static_cast<int>(state.range(0))));
  }
}
BENCHMARK(BM_LieProduct)->Arg(16)->Arg(1024);

}  // namespace

BENCHMARK_MAIN();
