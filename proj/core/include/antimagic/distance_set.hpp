#pragma once

#include <string>
#include <vector>

#include "antimagic/graph.hpp"

namespace antimagic {

// Non-empty strictly increasing set of non-negative distances.
class DistanceSet {
 public:
  // Throws std::invalid_argument unless values are strictly increasing and
  // non-negative (duplicates are an error, not silently merged).
  explicit DistanceSet(std::vector<int> values);

  // Sorts and deduplicates first; for internally computed sets.
  static DistanceSet normalized(std::vector<int> values);

  const std::vector<int>& values() const { return v_; }
  int min() const { return v_.front(); }
  int max() const { return v_.back(); }
  int size() const { return (int)v_.size(); }
  bool contains(int d) const;

  std::string to_string() const;  // "{0,3}"
  friend bool operator==(const DistanceSet&, const DistanceSet&) = default;

 private:
  DistanceSet() = default;
  std::vector<int> v_;
};

// Elementwise (d + k) mod n, re-sorted. Distinctness survives because the
// shift is a bijection mod n. k may be any integer.
DistanceSet shift_set(const DistanceSet& d, int k, int n);

// {0..diam(g)} \ d for strongly connected g. Throws std::domain_error when
// g is not strongly connected, std::invalid_argument when d is not a proper
// subset of {0..diam} (so the complement would be empty or d sticks out).
DistanceSet complement_set(const DistanceSet& d, const OrientedGraph& g);

}  // namespace antimagic
