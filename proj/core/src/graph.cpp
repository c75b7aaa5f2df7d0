#include "antimagic/graph.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>

namespace antimagic {

OrientedGraph OrientedGraph::from_arcs(int n, std::vector<Arc> arcs) {
  if (n < 1) throw std::invalid_argument("graph order must be positive");
  std::set<std::pair<int, int>> seen;
  for (const Arc& a : arcs) {
    if (a.tail < 0 || a.tail >= n || a.head < 0 || a.head >= n)
      throw std::invalid_argument("arc endpoint out of range");
    if (a.tail == a.head) throw std::invalid_argument("self loop not allowed");
    if (!seen.insert({a.tail, a.head}).second)
      throw std::invalid_argument("duplicate arc");
  }
  for (const Arc& a : arcs)
    if (seen.count({a.head, a.tail}))
      throw std::invalid_argument(
          "antiparallel arc pair: not an orientation of a simple graph");

  OrientedGraph g;
  g.n_ = n;
  g.arcs_ = std::move(arcs);
  g.out_.assign(n, {});
  g.in_.assign(n, {});
  for (const Arc& a : g.arcs_) {
    g.out_[a.tail].push_back(a.head);
    g.in_[a.head].push_back(a.tail);
  }
  for (auto& v : g.out_) std::sort(v.begin(), v.end());
  for (auto& v : g.in_) std::sort(v.begin(), v.end());

  // weak components by union-find over the underlying edges
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const Arc& a : g.arcs_) {
    int ra = find(a.tail), rb = find(a.head);
    if (ra != rb) parent[std::max(ra, rb)] = std::min(ra, rb);
  }
  g.comp_.assign(n, -1);
  int next = 0;
  for (int v = 0; v < n; v++) {
    int r = find(v);
    if (g.comp_[r] < 0) g.comp_[r] = next++;
    g.comp_[v] = g.comp_[r];
  }
  g.comp_count_ = next;
  return g;
}

std::vector<Arc> OrientedGraph::sorted_arcs() const {
  std::vector<Arc> a = arcs_;
  std::sort(a.begin(), a.end());
  return a;
}

std::string orientation_bits_string(const CycleOrientation& c) {
  std::string s;
  s.reserve(c.bits.size());
  for (bool b : c.bits) s.push_back(b ? '1' : '0');
  return s;
}

CycleOrientation parse_orientation_bits(const std::string& s) {
  CycleOrientation c;
  c.n = (int)s.size();
  c.bits.reserve(s.size());
  for (char ch : s) {
    if (ch != '0' && ch != '1')
      throw std::invalid_argument("orientation bits must be 0/1");
    c.bits.push_back(ch == '1');
  }
  if (c.n < 3) throw std::invalid_argument("cycle order must be >= 3");
  return c;
}

int TwoRegularSpec::total_order() const {
  int t = 0;
  for (const auto& f : components) t += f.order * f.multiplicity;
  return t;
}

int TwoRegularSpec::total_components() const {
  int t = 0;
  for (const auto& f : components) t += f.multiplicity;
  return t;
}

void TwoRegularSpec::validate() const {
  if (components.empty())
    throw std::invalid_argument("spec needs at least one component family");
  int prev = 0;
  for (const auto& f : components) {
    if (f.order < 3) throw std::invalid_argument("cycle order must be >= 3");
    if (f.order <= prev)
      throw std::invalid_argument("family orders must be strictly increasing");
    prev = f.order;
    if (f.multiplicity < 1)
      throw std::invalid_argument("multiplicity must be >= 1");
    if (f.kind == ComponentKind::Custom && f.custom.n != f.order)
      throw std::invalid_argument("custom orientation bits do not match order");
  }
}

int union_vertex_id(const TwoRegularSpec& spec, int family, int copy,
                    int local) {
  int off = 0;
  for (int j = 0; j < family; j++)
    off += spec.components[j].order * spec.components[j].multiplicity;
  return off + copy * spec.components[family].order + local;
}

OrientedGraph build_unidirectional_cycle(int n) {
  if (n < 3) throw std::invalid_argument("cycle order must be >= 3");
  std::vector<Arc> arcs;
  arcs.reserve(n);
  for (int i = 0; i < n; i++) arcs.push_back({i, (i + 1) % n});
  return OrientedGraph::from_arcs(n, std::move(arcs));
}

OrientedGraph build_theta_cycle(int n) {
  if (n < 3) throw std::invalid_argument("cycle order must be >= 3");
  std::vector<Arc> arcs;
  arcs.reserve(n);
  for (int i = 0; i + 1 < n; i++) arcs.push_back({i, i + 1});
  arcs.push_back({0, n - 1});
  return OrientedGraph::from_arcs(n, std::move(arcs));
}

OrientedGraph build_oriented_cycle(const CycleOrientation& c) {
  if (c.n < 3) throw std::invalid_argument("cycle order must be >= 3");
  if ((int)c.bits.size() != c.n)
    throw std::invalid_argument("orientation needs one bit per edge");
  std::vector<Arc> arcs;
  arcs.reserve(c.n);
  for (int i = 0; i < c.n; i++) {
    int a = i, b = (i + 1) % c.n;
    if (c.bits[i])
      arcs.push_back({a, b});
    else
      arcs.push_back({b, a});
  }
  return OrientedGraph::from_arcs(c.n, std::move(arcs));
}

OrientedGraph build_union(const TwoRegularSpec& spec) {
  spec.validate();
  std::vector<Arc> arcs;
  int off = 0;
  for (const auto& f : spec.components) {
    for (int s = 0; s < f.multiplicity; s++) {
      int base = off + s * f.order;
      switch (f.kind) {
        case ComponentKind::Unidirectional:
          for (int i = 0; i < f.order; i++)
            arcs.push_back({base + i, base + (i + 1) % f.order});
          break;
        case ComponentKind::Theta:
          for (int i = 0; i + 1 < f.order; i++)
            arcs.push_back({base + i, base + i + 1});
          arcs.push_back({base, base + f.order - 1});
          break;
        case ComponentKind::Custom:
          for (int i = 0; i < f.order; i++) {
            int a = base + i, b = base + (i + 1) % f.order;
            if (f.custom.bits[i])
              arcs.push_back({a, b});
            else
              arcs.push_back({b, a});
          }
          break;
      }
    }
    off += f.order * f.multiplicity;
  }
  return OrientedGraph::from_arcs(off, std::move(arcs));
}

OrientedGraph mirror(const OrientedGraph& g) {
  std::vector<Arc> arcs;
  arcs.reserve(g.arcs().size());
  for (const Arc& a : g.arcs()) arcs.push_back({a.head, a.tail});
  return OrientedGraph::from_arcs(g.order(), std::move(arcs));
}

}  // namespace antimagic
