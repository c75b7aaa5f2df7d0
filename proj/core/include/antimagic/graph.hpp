#pragma once

#include <string>
#include <vector>

namespace antimagic {

// Vertices are 0-based ints internally. Every serialized form (JSON, DOT,
// printed tables) is 1-based, matching the usual v_1..v_n convention; the
// io layer does the shifting.
struct Arc {
  int tail = 0;
  int head = 0;
  friend bool operator==(const Arc&, const Arc&) = default;
  friend auto operator<=>(const Arc&, const Arc&) = default;
};

// An orientation of a simple graph: no loops, no antiparallel arc pairs.
class OrientedGraph {
 public:
  OrientedGraph() = default;

  // Validates and computes adjacency plus the weak-component partition.
  // Throws std::invalid_argument on loops, out-of-range ids, duplicate or
  // antiparallel arcs.
  static OrientedGraph from_arcs(int n, std::vector<Arc> arcs);

  int order() const { return n_; }
  const std::vector<Arc>& arcs() const { return arcs_; }
  std::vector<Arc> sorted_arcs() const;

  const std::vector<int>& out_neighbors(int v) const { return out_[v]; }
  const std::vector<int>& in_neighbors(int v) const { return in_[v]; }
  int out_degree(int v) const { return (int)out_[v].size(); }
  int in_degree(int v) const { return (int)in_[v].size(); }

  // Weak components of the underlying undirected graph, numbered 0.. in
  // order of their smallest vertex id.
  const std::vector<int>& component_of() const { return comp_; }
  int component_count() const { return comp_count_; }

 private:
  int n_ = 0;
  std::vector<Arc> arcs_;
  std::vector<std::vector<int>> out_, in_;
  std::vector<int> comp_;
  int comp_count_ = 0;
};

// Orientation of the cycle v_1..v_n as one bit per edge: edge i joins v_i
// and v_{i+1} (cyclically), bit true means the arc runs v_i -> v_{i+1}.
struct CycleOrientation {
  int n = 0;
  std::vector<bool> bits;
};

// "110100" style rendering, index 0 first. Parser throws on bad chars.
std::string orientation_bits_string(const CycleOrientation& c);
CycleOrientation parse_orientation_bits(const std::string& s);

enum class ComponentKind { Unidirectional, Theta, Custom };

struct TwoRegularComponent {
  int order = 0;          // cycle length, >= 3
  int multiplicity = 1;   // number of copies
  ComponentKind kind = ComponentKind::Unidirectional;
  CycleOrientation custom;  // used only when kind == Custom
};

// Disjoint union of oriented cycles: components grouped into families of
// identical (order, kind), listed with strictly increasing order.
struct TwoRegularSpec {
  std::vector<TwoRegularComponent> components;

  int family_count() const { return (int)components.size(); }
  int total_order() const;
  int total_components() const;
  // Throws std::invalid_argument unless orders are strictly increasing,
  // all >= 3, multiplicities >= 1, and custom bits match the order.
  void validate() const;
};

// Canonical id layout for build_union: families in spec order, copies
// consecutive, local vertices contiguous. family/copy/local are 0-based.
int union_vertex_id(const TwoRegularSpec& spec, int family, int copy,
                    int local);

// Arcs (v_i, v_{i+1}) for i=1..n-1 plus (v_n, v_1): the strong orientation.
OrientedGraph build_unidirectional_cycle(int n);

// Arcs (v_i, v_{i+1}) for i=1..n-1 plus (v_1, v_n): source v_1, sink v_n,
// the only weak orientation of C_n with diameter n-2.
OrientedGraph build_theta_cycle(int n);

OrientedGraph build_oriented_cycle(const CycleOrientation& c);

OrientedGraph build_union(const TwoRegularSpec& spec);

// Same graph with every arc reversed.
OrientedGraph mirror(const OrientedGraph& g);

}  // namespace antimagic
