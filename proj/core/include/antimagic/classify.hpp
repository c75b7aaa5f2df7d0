#pragma once

#include <optional>
#include <vector>

#include "antimagic/distance.hpp"
#include "antimagic/graph.hpp"

namespace antimagic {

// Connectivity here is the unilateral taxonomy: a graph is "connected" when
// every pair of distinct vertices has a finite distance in at least one
// direction; Strong means both directions for all pairs, Weak means
// connected but not strong, Disconnected means some pair is mutually
// unreachable. Note an oriented cycle with two sinks lands in Disconnected
// under this definition even though its underlying graph is a single cycle.
enum class Connectivity { Strong, Weak, Disconnected };

struct Classification {
  std::vector<int> sinks;    // out-degree 0, ascending
  std::vector<int> sources;  // in-degree 0, ascending
  Connectivity connectivity = Connectivity::Disconnected;
  std::optional<int> diameter;
  // Structural predicates, independent of vertex numbering: the underlying
  // graph is one spanning cycle and the arc pattern matches.
  bool is_unidirectional_cycle = false;
  bool is_theta_cycle = false;
};

Classification classify(const OrientedGraph& g);
Classification classify(const OrientedGraph& g, const DistanceMatrix& dm);

}  // namespace antimagic
