#include <benchmark/benchmark.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "antimagic/constructions.hpp"
#include "antimagic/distance_set.hpp"
#include "antimagic/graph.hpp"
#include "antimagic/labeling.hpp"
#include "antimagic/search.hpp"

using namespace antimagic;

static Labeling shuffled_labeling(int n, unsigned seed) {
  Labeling f = Labeling::identity(n);
  std::mt19937 rng(seed);
  std::shuffle(f.values.begin(), f.values.end(), rng);
  return f;
}

// full verifier on a 200-vertex cycle, fresh distance matrix each call
static void BM_weigh_c200(benchmark::State& s) {
  OrientedGraph g = build_unidirectional_cycle(200);
  Labeling f = shuffled_labeling(200, 7);
  DistanceSet d({0, 1});
  for (auto _ : s) {
    WeightReport r = weigh(g, f, d);
    benchmark::DoNotOptimize(r);
  }
}
BENCHMARK(BM_weigh_c200)->MinTime(0.2);

// the search hot-loop primitive: distinctness check with preprocessed
// neighborhoods, no allocation per call
static void BM_evaluator_c200(benchmark::State& s) {
  OrientedGraph g = build_unidirectional_cycle(200);
  DistanceMatrix dm = all_pairs_distance(g);
  DistanceSet d({0, 1});
  WeightEvaluator ev(g, dm, d);
  Labeling f = shuffled_labeling(200, 7);
  for (auto _ : s) {
    bool ok = ev.distinct_weights(f.values);
    benchmark::DoNotOptimize(ok);
  }
}
BENCHMARK(BM_evaluator_c200)->MinTime(0.2);

static void BM_backtrack_c9_04(benchmark::State& s) {
  OrientedGraph g = build_unidirectional_cycle(9);
  DistanceSet d({0, 4});
  for (auto _ : s) {
    SearchOutcome out = backtrack_search(g, d, SearchBudget::unlimited());
    benchmark::DoNotOptimize(out);
  }
}
BENCHMARK(BM_backtrack_c9_04)->MinTime(0.2);

// {0,4} on C_8 has no labeling, so this is always the full 8! scan
static void BM_exhaustive_c8_04(benchmark::State& s) {
  OrientedGraph g = build_unidirectional_cycle(8);
  DistanceSet d({0, 4});
  for (auto _ : s) {
    SearchOutcome out = exhaustive_search(g, d, SearchBudget::unlimited());
    benchmark::DoNotOptimize(out);
  }
  s.counters["nodes"] = 40320;
}
BENCHMARK(BM_exhaustive_c8_04)->MinTime(0.2);

// closed-form labeling of a 200-vertex all-theta union, includes the
// verification pass
static void BM_tworeg_theta_200(benchmark::State& s) {
  TwoRegularSpec spec;
  spec.components = {{50, 2, ComponentKind::Theta, {}},
                     {100, 1, ComponentKind::Theta, {}}};
  DistanceSet d({0, 1});
  for (auto _ : s) {
    ConstructionOutcome out = tworeg_theta(spec, d);
    benchmark::DoNotOptimize(out);
  }
}
BENCHMARK(BM_tworeg_theta_200)->MinTime(0.2);

static void BM_uni_pair_c200(benchmark::State& s) {
  for (auto _ : s) {
    ConstructionOutcome out = uni_pair_0k(200, 3);
    benchmark::DoNotOptimize(out);
  }
}
BENCHMARK(BM_uni_pair_c200)->MinTime(0.2);

BENCHMARK_MAIN();
