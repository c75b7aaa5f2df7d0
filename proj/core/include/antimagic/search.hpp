#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "antimagic/labeling.hpp"

namespace antimagic {

// Node/time caps. Unbounded searches are only accepted for n <= 10; above
// that at least one bound must be set (the defaults satisfy this).
struct SearchBudget {
  std::optional<int64_t> max_nodes;
  std::optional<int64_t> max_millis;

  static SearchBudget defaults() { return {100000000, 60000}; }
  static SearchBudget unlimited() { return {}; }
  static SearchBudget nodes(int64_t n) { return {n, std::nullopt}; }
};

enum class SearchVerdict { Found, ExhaustedNone, Aborted };

struct SearchOutcome {
  SearchVerdict verdict = SearchVerdict::Aborted;
  std::optional<Labeling> labeling;  // present iff Found, re-verified
  int64_t nodes = 0;
  int64_t millis = 0;
};

// threads > 1 fans a search out over disjoint first-label blocks. With
// canonical set, Found witnesses are the lexicographically smallest valid
// labeling regardless of thread count (lower blocks must complete before a
// higher block's find counts, so a budget abort in a lower block reports
// Aborted). Without it, parallel Found witnesses depend on scheduling;
// verdicts of completed searches do not.
struct SearchOptions {
  int threads = 1;
  bool canonical = false;
};

// Tries all n! labelings in lexicographic order of the label vector.
SearchOutcome exhaustive_search(const OrientedGraph& g, const DistanceSet& d,
                                const SearchBudget& budget = SearchBudget::defaults(),
                                const SearchOptions& options = {});

// Depth-first label assignment with pruning: a vertex weight is final once
// every member of its neighborhood is labeled, and two equal finalized
// weights cut the branch. Default vertex order is most-constraining first
// (descending count of neighborhoods the vertex appears in, ties by id);
// canonical switches to natural order so the first find is the
// lexicographically smallest labeling, matching exhaustive_search.
SearchOutcome backtrack_search(const OrientedGraph& g, const DistanceSet& d,
                               const SearchBudget& budget = SearchBudget::defaults(),
                               const SearchOptions& options = {});

// ---- orientation enumeration ----

// Low n bits of the mask are the per-edge direction bits of C_n.
CycleOrientation orientation_from_mask(uint64_t mask, int n);
uint64_t mask_from_orientation(const CycleOrientation& c);

// Lexicographically (numerically) smallest mask in the dihedral class of
// this orientation. The group is vertex relabeling: rotations shift bits;
// reflections reverse edge order and complement every bit, since a
// reflected forward arc runs backward.
uint64_t canonical_orientation_mask(uint64_t mask, int n);

// All 2^n orientations in mask order; with reduce_symmetry only canonical
// class representatives are emitted.
void enumerate_orientations(int n, bool reduce_symmetry,
                            const std::function<void(const CycleOrientation&)>& fn);
std::vector<CycleOrientation> all_orientations(int n, bool reduce_symmetry);

// ---- sweep drivers ----

enum class SweepVerdict { Exists, NotExists, Unknown };

struct SweepRow {
  int n = 0;
  std::string orientation_bits;
  std::vector<int> d;
  SweepVerdict outcome = SweepVerdict::Unknown;
  std::vector<int> witness_labels;  // empty unless Exists
};

struct SweepResult {
  std::vector<SweepRow> rows;
  int64_t mismatches = 0;  // rows contradicting the known characterization
  int64_t unknowns = 0;    // budget-aborted rows
};

// Singleton distance sets {k}, k = 0..n-1, over every orientation of C_n,
// n = 3..n_max (n_max <= 7; exhaustive verdicts). Each row is checked
// against the characterization: {0} always exists, {1} exists iff
// unidirectional or theta, {k>=2} exists iff unidirectional.
SweepResult sweep_singleton(int n_max,
                            const SearchBudget& per_instance = SearchBudget::defaults(),
                            const SearchOptions& options = {});

enum class OrientationUniverse { All, UniOnly };

// Two-element distance sets over C_n. All orientations uses exhaustive
// search (n_max <= 7); UniOnly covers just the unidirectional orientation
// with backtracking (n_max <= 9). No characterization is asserted; several
// of these families are open.
SweepResult sweep_pairs(int n_max, OrientationUniverse universe,
                        const SearchBudget& per_instance = SearchBudget::defaults(),
                        const SearchOptions& options = {});

// ---- bundled witnesses ----

// Search-produced witnesses that no closed form covers: {0,3} labelings of
// the unidirectional C_8/C_10/C_12 and labelings of non-unidirectional C_6
// orientations for {0,1}, {0,2}, {0,3}, {0,1,2}, {0,2,3}.
struct FixtureWitness {
  std::string name;
  int n = 0;
  CycleOrientation orientation;
  std::vector<int> d;
  Labeling labeling;
};

// Deterministic: single-threaded canonical searches, first qualifying
// orientation in mask order. Throws std::runtime_error if a budget aborts.
std::vector<FixtureWitness> generate_fixtures(
    const SearchBudget& per_instance = SearchBudget::defaults());

}  // namespace antimagic
