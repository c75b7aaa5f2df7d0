#include <random>
#include <stdexcept>

#include "antimagic/labeling.hpp"
#include "antimagic/search.hpp"
#include "doctest.h"

using namespace antimagic;

namespace {

std::vector<int64_t> weights_of(const OrientedGraph& g, const Labeling& f,
                                const DistanceSet& d) {
  return weigh(g, f, d).weights;
}

}  // namespace

TEST_CASE("bijection checks") {
  CHECK(Labeling::identity(4).is_bijection());
  CHECK(Labeling{{2, 1, 3}}.is_bijection());
  CHECK(!Labeling{{1, 1, 3}}.is_bijection());
  CHECK(!Labeling{{0, 1, 2}}.is_bijection());
  CHECK(!Labeling{{1, 2, 4}}.is_bijection());
  OrientedGraph g = build_unidirectional_cycle(3);
  CHECK_THROWS_AS(weigh(g, Labeling{{1, 1, 3}}, DistanceSet({1})),
                  std::invalid_argument);
  CHECK_THROWS_AS(weigh(g, Labeling{{1, 2}}, DistanceSet({1})),
                  std::invalid_argument);
}

TEST_CASE("neighborhoods") {
  OrientedGraph g = build_theta_cycle(5);
  DistanceMatrix dm = all_pairs_distance(g);
  CHECK(d_neighborhood(g, dm, 0, DistanceSet({1})) ==
        std::vector<int>{1, 4});
  CHECK(d_neighborhood(g, dm, 0, DistanceSet({0, 2})) ==
        std::vector<int>{0, 2});
  CHECK(d_neighborhood(g, dm, 4, DistanceSet({1})).empty());  // the sink
  // distances nothing realizes contribute nothing
  CHECK(d_neighborhood(g, dm, 0, DistanceSet({9})).empty());
}

TEST_CASE("frozen weight sequences") {
  // unidirectional C_5, identity, {1}: each weight is the next label
  CHECK(weights_of(build_unidirectional_cycle(5), Labeling::identity(5),
                   DistanceSet({1})) ==
        std::vector<int64_t>{2, 3, 4, 5, 1});
  // unidirectional C_5, identity, {2}
  CHECK(weights_of(build_unidirectional_cycle(5), Labeling::identity(5),
                   DistanceSet({2})) ==
        std::vector<int64_t>{3, 4, 5, 1, 2});
  // unidirectional C_5, identity, {0,1}
  CHECK(weights_of(build_unidirectional_cycle(5), Labeling::identity(5),
                   DistanceSet({0, 1})) ==
        std::vector<int64_t>{3, 5, 7, 9, 6});
  // theta C_5, reverse labeling, {1}: (n, n-i, ..., 0)
  CHECK(weights_of(build_theta_cycle(5), Labeling{{5, 4, 3, 2, 1}},
                   DistanceSet({1})) ==
        std::vector<int64_t>{5, 3, 2, 1, 0});
}

TEST_CASE("witness is the lexicographically first colliding pair") {
  OrientedGraph g = build_unidirectional_cycle(6);
  WeightReport rep = weigh(g, Labeling::identity(6), DistanceSet({0, 3}));
  CHECK(!rep.antimagic);
  REQUIRE(rep.witness.has_value());
  CHECK(rep.witness->first == 0);
  CHECK(rep.witness->second == 3);
  CHECK(rep.weights[0] == rep.weights[3]);

  WeightReport good = weigh(g, Labeling::identity(6), DistanceSet({1}));
  CHECK(good.antimagic);
  CHECK(!good.witness.has_value());
}

TEST_CASE("evaluator agrees with the verifier") {
  std::mt19937 rng(20260823);
  for (int n = 3; n <= 8; n++) {
    std::vector<uint64_t> masks = {0, (1ull << n) - 1, 5ull % (1ull << n)};
    for (uint64_t mask : masks) {
      OrientedGraph g = build_oriented_cycle(orientation_from_mask(mask, n));
      DistanceMatrix dm = all_pairs_distance(g);
      for (int trial = 0; trial < 20; trial++) {
        std::vector<int> dvals;
        for (int d = 0; d < n; d++)
          if (rng() % 3 == 0) dvals.push_back(d);
        if (dvals.empty()) dvals.push_back((int)(rng() % n));
        DistanceSet d(dvals);
        WeightEvaluator ev(g, dm, d);
        Labeling f = Labeling::identity(n);
        std::shuffle(f.values.begin(), f.values.end(), rng);
        WeightReport rep = weigh(g, dm, f, d);
        std::vector<int64_t> w;
        ev.weights_into(f.values, w);
        CHECK(w == rep.weights);
        CHECK(ev.distinct_weights(f.values) == rep.antimagic);
      }
    }
  }
}

TEST_CASE("watcher lists invert the neighborhoods") {
  OrientedGraph g = build_theta_cycle(6);
  DistanceMatrix dm = all_pairs_distance(g);
  DistanceSet d({0, 2});
  WeightEvaluator ev(g, dm, d);
  for (int v = 0; v < 6; v++) {
    int cnt = 0;
    const int32_t* mem = ev.members(v, &cnt);
    for (int i = 0; i < cnt; i++) {
      int u = mem[i], wcnt = 0;
      const int32_t* ws = ev.watchers(u, &wcnt);
      CHECK(std::find(ws, ws + wcnt, v) != ws + wcnt);
    }
  }
  CHECK(ev.max_weight() == 21);
}

TEST_CASE("duality of weights on strong graphs") {
  // per vertex, the D-weight and the complement-weight add to n(n+1)/2
  std::mt19937 rng(7);
  for (int n : {5, 6, 7}) {
    OrientedGraph g = build_unidirectional_cycle(n);
    const int64_t total = (int64_t)n * (n + 1) / 2;
    for (int trial = 0; trial < 50; trial++) {
      std::vector<int> dvals;
      for (int k = 0; k < n; k++)
        if (rng() % 2 == 0) dvals.push_back(k);
      if (dvals.empty() || (int)dvals.size() == n) continue;
      DistanceSet d(dvals);
      DistanceSet dstar = complement_set(d, g);
      Labeling f = Labeling::identity(n);
      std::shuffle(f.values.begin(), f.values.end(), rng);
      std::vector<int64_t> w = weights_of(g, f, d);
      std::vector<int64_t> ws = weights_of(g, f, dstar);
      for (int v = 0; v < n; v++) CHECK(w[v] + ws[v] == total);
    }
  }
}
