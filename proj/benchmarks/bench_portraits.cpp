#include <benchmark/benchmark.h>

#include <random>

#include "basilica/detail/packed.hpp"
#include "basilica/dyadic.hpp"
#include "basilica/enumerate.hpp"
#include "basilica/groups.hpp"
#include "basilica/preimage.hpp"

using namespace basilica;

namespace {

tree_aut random_portrait(int depth, std::mt19937_64& rng) {
  tree_aut::builder b(depth);
  for (int level = 0; level < depth; ++level)
    for (std::uint32_t i = 0; i < (std::uint32_t{1} << level); ++i)
      b.set_par(level, i, (rng() & 1) != 0);
  return std::move(b).build();
}

void BM_packed_in_m(benchmark::State& state) {
  const detail::packed_predicates pred(5);
  std::uint64_t w = 0x12345;
  for (auto _ : state) {
    benchmark::DoNotOptimize(pred.in_m(w));
    w = (w * 6364136223846793005ull + 1442695040888963407ull) & ((1ull << 31) - 1);
  }
  state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_packed_in_m);

void BM_packed_compose(benchmark::State& state) {
  std::mt19937_64 rng(1);
  const std::uint64_t u = rng() & ((1ull << 31) - 1);
  std::uint64_t v = rng() & ((1ull << 31) - 1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(v = detail::packed_compose(5, u, v));
  }
  state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_packed_compose);

void BM_packed_multiplier(benchmark::State& state) {
  const detail::packed_multiplier step(make_generator(generator_name::alpha, 5));
  std::uint64_t w = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(w = step(w));
  }
  state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_packed_multiplier);

void BM_generic_compose(benchmark::State& state) {
  const int depth = static_cast<int>(state.range(0));
  std::mt19937_64 rng(2);
  const tree_aut s = random_portrait(depth, rng);
  const tree_aut t = random_portrait(depth, rng);
  for (auto _ : state) {
    benchmark::DoNotOptimize(compose(s, t));
  }
}
BENCHMARK(BM_generic_compose)->Arg(5)->Arg(12)->Arg(20);

void BM_p_value(benchmark::State& state) {
  const int depth = static_cast<int>(state.range(0));
  std::mt19937_64 rng(3);
  const tree_aut s = random_portrait(depth, rng);
  const node_address root;
  for (auto _ : state) {
    benchmark::DoNotOptimize(p_value(s, root));
  }
}
BENCHMARK(BM_p_value)->Arg(8)->Arg(16)->Arg(24);

void BM_sweep_depth4(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(sweep(4, {selector_kind::m}, 1).count);
  }
  state.SetItemsProcessed(state.iterations() * (1 << 15));
}
BENCHMARK(BM_sweep_depth4);

void BM_closure_b4(benchmark::State& state) {
  const std::vector<tree_aut> gens = {make_generator(generator_name::alpha, 4),
                                      make_generator(generator_name::beta, 4)};
  closure_options opt;
  opt.threads = 1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(closure(gens, opt).summary.count);
  }
}
BENCHMARK(BM_closure_b4);

void BM_canonical_label(benchmark::State& state) {
  const int depth = static_cast<int>(state.range(0));
  const root_chain_d chain(8);
  for (auto _ : state) {
    state.PauseTiming();
    preimage_tree tree = preimage_tree::build(5.0, depth, 7);
    state.ResumeTiming();
    benchmark::DoNotOptimize(canonical_label(std::move(tree), chain));
  }
}
BENCHMARK(BM_canonical_label)->Arg(7)->Arg(9);

}  // namespace

BENCHMARK_MAIN();
