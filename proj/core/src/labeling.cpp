#include "antimagic/labeling.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace antimagic {

bool Labeling::is_bijection() const {
  const int n = order();
  std::vector<bool> seen(n + 1, false);
  for (int x : values) {
    if (x < 1 || x > n || seen[x]) return false;
    seen[x] = true;
  }
  return true;
}

Labeling Labeling::identity(int n) {
  Labeling f;
  f.values.resize(n);
  std::iota(f.values.begin(), f.values.end(), 1);
  return f;
}

std::vector<int> d_neighborhood(const OrientedGraph& g,
                                const DistanceMatrix& dm, int v,
                                const DistanceSet& d) {
  (void)g;
  std::vector<int> out;
  const int n = dm.order();
  for (int y = 0; y < n; y++) {
    int32_t dist = dm.raw(v, y);
    if (dist >= 0 && d.contains((int)dist)) out.push_back(y);
  }
  return out;
}

namespace {

// n(n+1)/2 * n must stay below 2^63; caps n around two million, far above
// any supported instance.
void check_weight_width(int n) {
  if (n > 2000000)
    throw std::overflow_error("order too large for exact 64-bit weights");
}

}  // namespace

WeightReport weigh(const OrientedGraph& g, const DistanceMatrix& dm,
                   const Labeling& f, const DistanceSet& d) {
  const int n = g.order();
  check_weight_width(n);
  if (f.order() != n || !f.is_bijection())
    throw std::invalid_argument("labeling is not a bijection onto {1..n}");

  WeightReport r;
  r.weights.assign(n, 0);
  for (int v = 0; v < n; v++) {
    int64_t w = 0;
    for (int y : d_neighborhood(g, dm, v, d)) w += f.values[y];
    r.weights[v] = w;
  }
  r.antimagic = true;
  for (int u = 0; u < n && r.antimagic; u++)
    for (int v = u + 1; v < n; v++)
      if (r.weights[u] == r.weights[v]) {
        r.antimagic = false;
        r.witness = {u, v};
        break;
      }
  return r;
}

WeightReport weigh(const OrientedGraph& g, const Labeling& f,
                   const DistanceSet& d) {
  return weigh(g, all_pairs_distance(g), f, d);
}

WeightEvaluator::WeightEvaluator(const OrientedGraph& g,
                                 const DistanceMatrix& dm,
                                 const DistanceSet& d) {
  n_ = g.order();
  check_weight_width(n_);
  max_weight_ = (int64_t)n_ * (n_ + 1) / 2;

  offsets_.assign(n_ + 1, 0);
  for (int v = 0; v < n_; v++) {
    auto nb = d_neighborhood(g, dm, v, d);
    offsets_[v + 1] = offsets_[v] + (int32_t)nb.size();
    flat_.insert(flat_.end(), nb.begin(), nb.end());
  }

  woffsets_.assign(n_ + 1, 0);
  for (int32_t u : flat_) woffsets_[u + 1]++;
  for (int v = 0; v < n_; v++) woffsets_[v + 1] += woffsets_[v];
  wflat_.resize(flat_.size());
  std::vector<int32_t> cursor(woffsets_.begin(), woffsets_.end() - 1);
  for (int v = 0; v < n_; v++)
    for (int32_t k = offsets_[v]; k < offsets_[v + 1]; k++)
      wflat_[cursor[flat_[k]]++] = v;

  scratch_.assign(n_, 0);
  stamp_.assign((size_t)max_weight_ + 1, 0);
}

void WeightEvaluator::weights_into(const std::vector<int>& labels,
                                   std::vector<int64_t>& out) const {
  out.assign(n_, 0);
  for (int v = 0; v < n_; v++) {
    int64_t w = 0;
    for (int32_t k = offsets_[v]; k < offsets_[v + 1]; k++)
      w += labels[flat_[k]];
    out[v] = w;
  }
}

bool WeightEvaluator::distinct_weights(const std::vector<int>& labels) {
  epoch_++;
  if (epoch_ == 0) {  // wrapped; reset stamps once
    std::fill(stamp_.begin(), stamp_.end(), 0);
    epoch_ = 1;
  }
  for (int v = 0; v < n_; v++) {
    int64_t w = 0;
    for (int32_t k = offsets_[v]; k < offsets_[v + 1]; k++)
      w += labels[flat_[k]];
    if (stamp_[w] == epoch_) return false;
    stamp_[w] = epoch_;
  }
  return true;
}

}  // namespace antimagic
