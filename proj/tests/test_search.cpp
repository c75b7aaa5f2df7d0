#include <random>
#include <stdexcept>

#include "antimagic/classify.hpp"
#include "antimagic/constructions.hpp"
#include "antimagic/search.hpp"
#include "doctest.h"

using namespace antimagic;

namespace {

std::vector<DistanceSet> small_sets(int n) {
  std::vector<DistanceSet> out;
  std::vector<std::vector<int>> raw = {{0}, {1}, {2},    {0, 1},
                                       {0, 2}, {1, 2}, {0, 1, 2}};
  for (auto& v : raw)
    if (v.back() < n) out.push_back(DistanceSet(v));
  return out;
}

}  // namespace

TEST_CASE("exhaustive baseline facts") {
  // C_6 {0,3}: no labeling among all 720
  SearchOutcome none = exhaustive_search(build_unidirectional_cycle(6),
                                         DistanceSet({0, 3}));
  CHECK(none.verdict == SearchVerdict::ExhaustedNone);
  CHECK(none.nodes == 720);

  // C_4 {0,2}: factor set
  CHECK(exhaustive_search(build_unidirectional_cycle(4), DistanceSet({0, 2}))
            .verdict == SearchVerdict::ExhaustedNone);

  // C_5 {0,2}: identity works, and the canonical first hit is lex-minimal
  SearchOutcome found = exhaustive_search(build_unidirectional_cycle(5),
                                          DistanceSet({0, 2}));
  CHECK(found.verdict == SearchVerdict::Found);
  CHECK(found.labeling->values == std::vector<int>{1, 2, 3, 4, 5});
}

TEST_CASE("backtrack agrees with exhaustive on every small instance") {
  for (int n = 3; n <= 6; n++) {
    for (uint64_t mask = 0; mask < (1ull << n); mask++) {
      OrientedGraph g = build_oriented_cycle(orientation_from_mask(mask, n));
      for (const DistanceSet& d : small_sets(n)) {
        SearchOutcome ex = exhaustive_search(g, d);
        SearchOutcome bt = backtrack_search(g, d);
        CHECK(ex.verdict == bt.verdict);
        SearchOptions canon;
        canon.canonical = true;
        SearchOutcome bc = backtrack_search(g, d, SearchBudget::defaults(), canon);
        CHECK(bc.verdict == ex.verdict);
        if (ex.verdict == SearchVerdict::Found)
          CHECK(bc.labeling->values == ex.labeling->values);
      }
    }
  }
}

TEST_CASE("backtrack matches exhaustive on random larger instances") {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 12; trial++) {
    int n = 7 + (int)(rng() % 2);
    uint64_t mask = rng() % (1ull << n);
    OrientedGraph g = build_oriented_cycle(orientation_from_mask(mask, n));
    std::vector<int> dv;
    for (int i = 0; i < n; i++)
      if (rng() % 3 == 0) dv.push_back(i);
    if (dv.empty()) dv.push_back((int)(rng() % n));
    DistanceSet d(dv);
    CHECK(exhaustive_search(g, d).verdict == backtrack_search(g, d).verdict);
  }
}

TEST_CASE("found labelings are re-verified witnesses") {
  SearchOutcome out =
      backtrack_search(build_unidirectional_cycle(8), DistanceSet({0, 3}));
  REQUIRE(out.verdict == SearchVerdict::Found);
  CHECK(weigh(build_unidirectional_cycle(8), *out.labeling,
              DistanceSet({0, 3}))
            .antimagic);
}

TEST_CASE("two zero-weight vertices die before any assignment") {
  // two sinks and {1}: both weigh 0 under every labeling
  OrientedGraph g = build_oriented_cycle(parse_orientation_bits("110100"));
  SearchOutcome out = backtrack_search(g, DistanceSet({1}));
  CHECK(out.verdict == SearchVerdict::ExhaustedNone);
  CHECK(out.nodes == 0);
}

TEST_CASE("budgets abort deterministically") {
  // {0,4} on C_8 is a factor set, so no labeling exists and the scan can
  // only end by exhausting 8! permutations; a 100 node budget must abort it
  OrientedGraph g = build_unidirectional_cycle(8);
  SearchOutcome out =
      exhaustive_search(g, DistanceSet({0, 4}), SearchBudget::nodes(100));
  CHECK(out.verdict == SearchVerdict::Aborted);
  CHECK(out.nodes <= 1024);  // stops on the first batch boundary past 100

  // unbounded search beyond n = 10 is refused
  CHECK_THROWS_AS(backtrack_search(build_unidirectional_cycle(11),
                                   DistanceSet({1}), SearchBudget::unlimited()),
                  std::invalid_argument);
  CHECK_NOTHROW(backtrack_search(build_unidirectional_cycle(9),
                                 DistanceSet({1}), SearchBudget::unlimited()));
}

TEST_CASE("parallel verdicts match sequential") {
  SearchOptions par;
  par.threads = 4;
  OrientedGraph c8 = build_unidirectional_cycle(8);

  SearchOutcome seq = backtrack_search(c8, DistanceSet({0, 4}));
  SearchOutcome parr = backtrack_search(c8, DistanceSet({0, 4}),
                                        SearchBudget::defaults(), par);
  CHECK(seq.verdict == SearchVerdict::ExhaustedNone);
  CHECK(parr.verdict == SearchVerdict::ExhaustedNone);

  SearchOutcome pf = backtrack_search(c8, DistanceSet({0, 3}),
                                      SearchBudget::defaults(), par);
  CHECK(pf.verdict == SearchVerdict::Found);
  CHECK(weigh(c8, *pf.labeling, DistanceSet({0, 3})).antimagic);

  // canonical witness is thread-count independent
  SearchOptions canon1, canon4;
  canon1.canonical = true;
  canon4.canonical = true;
  canon4.threads = 4;
  SearchOutcome w1 = backtrack_search(c8, DistanceSet({0, 3}),
                                      SearchBudget::defaults(), canon1);
  SearchOutcome w4 = backtrack_search(c8, DistanceSet({0, 3}),
                                      SearchBudget::defaults(), canon4);
  REQUIRE(w1.verdict == SearchVerdict::Found);
  REQUIRE(w4.verdict == SearchVerdict::Found);
  CHECK(w1.labeling->values == w4.labeling->values);

  // and equals the exhaustive first find
  SearchOutcome ex = exhaustive_search(c8, DistanceSet({0, 3}));
  CHECK(w1.labeling->values == ex.labeling->values);
}

TEST_CASE("singleton sweep reproduces the characterization") {
  SweepResult res = sweep_singleton(5);
  CHECK(res.mismatches == 0);
  CHECK(res.unknowns == 0);
  // 2^n orientations x n singleton sets per order
  int64_t want = 8 * 3 + 16 * 4 + 32 * 5;
  CHECK((int64_t)res.rows.size() == want);
  for (const SweepRow& row : res.rows) {
    if (row.outcome == SweepVerdict::Exists)
      CHECK(!row.witness_labels.empty());
  }
}

TEST_CASE("pair sweep runs both universes") {
  SweepResult all = sweep_pairs(4, OrientationUniverse::All);
  CHECK(all.unknowns == 0);
  // pairs {a,b} within 0..n-1: C(3,2)=3 at n=3, C(4,2)=6 at n=4
  CHECK((int64_t)all.rows.size() == 8 * 3 + 16 * 6);

  SweepResult uni = sweep_pairs(6, OrientationUniverse::UniOnly);
  CHECK(uni.unknowns == 0);
  for (const SweepRow& row : uni.rows) {
    CHECK(row.orientation_bits == std::string(row.n, '1'));
    // cross-check a few known rows
    if (row.n == 6 && row.d == std::vector<int>{0, 3})
      CHECK(row.outcome == SweepVerdict::NotExists);
    if (row.n == 6 && row.d == std::vector<int>{0, 1})
      CHECK(row.outcome == SweepVerdict::Exists);
  }
}

TEST_CASE("fixture generation is deterministic and valid") {
  std::vector<FixtureWitness> a = generate_fixtures();
  std::vector<FixtureWitness> b = generate_fixtures();
  REQUIRE(a.size() == 8);
  REQUIRE(b.size() == 8);
  for (size_t i = 0; i < a.size(); i++) {
    CHECK(a[i].name == b[i].name);
    CHECK(a[i].labeling.values == b[i].labeling.values);
    CHECK(orientation_bits_string(a[i].orientation) ==
          orientation_bits_string(b[i].orientation));
    OrientedGraph g = build_oriented_cycle(a[i].orientation);
    CHECK(weigh(g, a[i].labeling, DistanceSet(a[i].d)).antimagic);
  }
  // the three unidirectional fixtures match the bundled construction table
  for (size_t i = 0; i < 3; i++) {
    int n = a[i].n;
    CHECK(a[i].labeling.values == uni_pair_0k(n, 3).labeling->values);
  }
  // the C_6 rows use a non-unidirectional orientation
  for (size_t i = 3; i < 8; i++) {
    Classification c = classify(build_oriented_cycle(a[i].orientation));
    CHECK(!c.is_unidirectional_cycle);
  }
}
