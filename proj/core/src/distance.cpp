#include "antimagic/distance.hpp"

#include <algorithm>
#include <queue>

namespace antimagic {

std::optional<int> DistanceMatrix::diameter() const {
  int32_t best = -1;
  for (int u = 0; u < n_; u++)
    for (int v = 0; v < n_; v++) {
      if (u == v) continue;
      best = std::max(best, d_[idx(u, v)]);
    }
  if (best < 0) return std::nullopt;
  return (int)best;
}

DistanceMatrix all_pairs_distance(const OrientedGraph& g) {
  const int n = g.order();
  std::vector<int32_t> flat((size_t)n * n, -1);
  std::vector<int> queue;
  queue.reserve(n);
  for (int s = 0; s < n; s++) {
    int32_t* row = flat.data() + (size_t)s * n;
    row[s] = 0;
    queue.clear();
    queue.push_back(s);
    for (size_t qi = 0; qi < queue.size(); qi++) {
      int u = queue[qi];
      for (int w : g.out_neighbors(u))
        if (row[w] < 0) {
          row[w] = row[u] + 1;
          queue.push_back(w);
        }
    }
  }
  return DistanceMatrix(n, std::move(flat));
}

}  // namespace antimagic
