#include "antimagic/distance_set.hpp"

#include <algorithm>
#include <stdexcept>

#include "antimagic/classify.hpp"

namespace antimagic {

DistanceSet::DistanceSet(std::vector<int> values) : v_(std::move(values)) {
  if (v_.empty()) throw std::invalid_argument("distance set must be non-empty");
  if (v_.front() < 0)
    throw std::invalid_argument("distances must be non-negative");
  for (size_t i = 1; i < v_.size(); i++)
    if (v_[i] <= v_[i - 1])
      throw std::invalid_argument(
          "distance set must be strictly increasing (no duplicates)");
}

DistanceSet DistanceSet::normalized(std::vector<int> values) {
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  return DistanceSet(std::move(values));
}

bool DistanceSet::contains(int d) const {
  return std::binary_search(v_.begin(), v_.end(), d);
}

std::string DistanceSet::to_string() const {
  std::string s = "{";
  for (size_t i = 0; i < v_.size(); i++) {
    if (i) s += ",";
    s += std::to_string(v_[i]);
  }
  return s + "}";
}

DistanceSet shift_set(const DistanceSet& d, int k, int n) {
  if (n < 1) throw std::invalid_argument("modulus must be positive");
  std::vector<int> out;
  out.reserve(d.values().size());
  for (int x : d.values()) {
    long long y = ((long long)x + k) % n;
    if (y < 0) y += n;
    out.push_back((int)y);
  }
  return DistanceSet::normalized(std::move(out));
}

DistanceSet complement_set(const DistanceSet& d, const OrientedGraph& g) {
  DistanceMatrix dm = all_pairs_distance(g);
  Classification c = classify(g, dm);
  if (c.connectivity != Connectivity::Strong)
    throw std::domain_error(
        "distance-set complement needs a strongly connected graph");
  int diam = c.diameter.value_or(0);
  if (d.max() > diam)
    throw std::invalid_argument("distance set exceeds the graph diameter");
  std::vector<int> out;
  for (int x = 0; x <= diam; x++)
    if (!d.contains(x)) out.push_back(x);
  if (out.empty())
    throw std::invalid_argument(
        "complement is empty: distance set already covers {0..diam}");
  return DistanceSet(std::move(out));
}

}  // namespace antimagic
