#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "antimagic/graph.hpp"

namespace antimagic {

// All-pairs directed distances. Unreachable pairs are a real sentinel
// (nullopt through the public accessors), never some large finite stand-in,
// so membership tests against distance sets stay exact.
class DistanceMatrix {
 public:
  DistanceMatrix() = default;
  DistanceMatrix(int n, std::vector<int32_t> flat)
      : n_(n), d_(std::move(flat)) {}

  int order() const { return n_; }
  bool reachable(int u, int v) const { return d_[idx(u, v)] >= 0; }
  std::optional<int> dist(int u, int v) const {
    int32_t x = d_[idx(u, v)];
    if (x < 0) return std::nullopt;
    return (int)x;
  }
  // -1 for unreachable; handy for hot loops that test against small ints.
  int32_t raw(int u, int v) const { return d_[idx(u, v)]; }

  // Greatest finite distance over ordered pairs of distinct vertices;
  // nullopt when no such pair exists.
  std::optional<int> diameter() const;

 private:
  size_t idx(int u, int v) const { return (size_t)u * n_ + v; }
  int n_ = 0;
  std::vector<int32_t> d_;
};

// BFS from every vertex over out-arcs.
DistanceMatrix all_pairs_distance(const OrientedGraph& g);

}  // namespace antimagic
