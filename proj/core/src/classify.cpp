#include "antimagic/classify.hpp"

#include <algorithm>

namespace antimagic {

namespace {

// Underlying graph is a single cycle through all n vertices: n >= 3, n arcs,
// every vertex has undirected degree 2, one weak component.
bool underlying_single_cycle(const OrientedGraph& g) {
  const int n = g.order();
  if (n < 3 || (int)g.arcs().size() != n) return false;
  if (g.component_count() != 1) return false;
  for (int v = 0; v < n; v++)
    if (g.out_degree(v) + g.in_degree(v) != 2) return false;
  return true;
}

bool adjacent_underlying(const OrientedGraph& g, int a, int b) {
  for (int w : g.out_neighbors(a))
    if (w == b) return true;
  for (int w : g.in_neighbors(a))
    if (w == b) return true;
  return false;
}

}  // namespace

Classification classify(const OrientedGraph& g) {
  return classify(g, all_pairs_distance(g));
}

Classification classify(const OrientedGraph& g, const DistanceMatrix& dm) {
  const int n = g.order();
  Classification c;
  for (int v = 0; v < n; v++) {
    if (g.out_degree(v) == 0) c.sinks.push_back(v);
    if (g.in_degree(v) == 0) c.sources.push_back(v);
  }

  bool strong = true, unilateral = true;
  for (int u = 0; u < n && unilateral; u++)
    for (int v = u + 1; v < n; v++) {
      bool uv = dm.reachable(u, v), vu = dm.reachable(v, u);
      if (!(uv && vu)) strong = false;
      if (!uv && !vu) {
        unilateral = false;
        break;
      }
    }
  c.connectivity = strong      ? Connectivity::Strong
                   : unilateral ? Connectivity::Weak
                                : Connectivity::Disconnected;
  c.diameter = dm.diameter();

  if (underlying_single_cycle(g)) {
    if (c.sinks.empty() && c.sources.empty()) {
      c.is_unidirectional_cycle = true;
    } else if (c.sinks.size() == 1 && c.sources.size() == 1 &&
               adjacent_underlying(g, c.sources[0], c.sinks[0])) {
      c.is_theta_cycle = true;
    }
  }
  return c;
}

}  // namespace antimagic
