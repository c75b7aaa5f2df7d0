#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "antimagic/distance.hpp"
#include "antimagic/distance_set.hpp"
#include "antimagic/graph.hpp"

namespace antimagic {

// Bijection V -> {1..n}; values[v] is the label of vertex v.
struct Labeling {
  std::vector<int> values;

  int order() const { return (int)values.size(); }
  bool is_bijection() const;
  static Labeling identity(int n);
};

// Outcome of weighing one labeling against one distance set.
struct WeightReport {
  std::vector<int64_t> weights;  // weights[v] = sum of labels over N_D(v)
  bool antimagic = false;
  // Lexicographically first pair (u, v), u < v, with equal weights.
  std::optional<std::pair<int, int>> witness;
};

// N_D(v) = { y : d(v, y) in D }, ascending. Distances are directed shortest
// paths; D values beyond what the graph realizes simply contribute nothing.
std::vector<int> d_neighborhood(const OrientedGraph& g,
                                const DistanceMatrix& dm, int v,
                                const DistanceSet& d);

// The verifier. Exact 64-bit arithmetic; throws std::overflow_error for
// orders where n * n(n+1)/2 would not fit (far beyond anything supported),
// std::invalid_argument when f is not a bijection onto {1..n}.
WeightReport weigh(const OrientedGraph& g, const DistanceMatrix& dm,
                   const Labeling& f, const DistanceSet& d);
WeightReport weigh(const OrientedGraph& g, const Labeling& f,
                   const DistanceSet& d);

// Preprocessed neighborhoods for one (graph, D) pair, for code that weighs
// many labelings of the same instance (search hot loops). Duplicate
// detection runs in O(n) via an epoch-stamped direct-address table over the
// weight range [0, n(n+1)/2].
class WeightEvaluator {
 public:
  WeightEvaluator(const OrientedGraph& g, const DistanceMatrix& dm,
                  const DistanceSet& d);

  int order() const { return n_; }
  int64_t max_weight() const { return max_weight_; }

  // Members of N_D(v) as a flat slice.
  const int32_t* members(int v, int* count) const {
    *count = offsets_[v + 1] - offsets_[v];
    return flat_.data() + offsets_[v];
  }

  // For each u, the list of v with u in N_D(v) ("watchers" of u).
  const int32_t* watchers(int u, int* count) const {
    *count = woffsets_[u + 1] - woffsets_[u];
    return wflat_.data() + woffsets_[u];
  }

  void weights_into(const std::vector<int>& labels,
                    std::vector<int64_t>& out) const;
  // True when all weights under these labels are pairwise distinct.
  bool distinct_weights(const std::vector<int>& labels);

 private:
  int n_ = 0;
  int64_t max_weight_ = 0;
  std::vector<int32_t> offsets_, flat_;    // neighborhoods, CSR
  std::vector<int32_t> woffsets_, wflat_;  // watchers, CSR
  std::vector<int64_t> scratch_;
  std::vector<uint32_t> stamp_;
  uint32_t epoch_ = 0;
};

}  // namespace antimagic
