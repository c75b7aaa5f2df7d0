#include "antimagic/constructions.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

#include "antimagic/classify.hpp"
#include "antimagic/search.hpp"

namespace antimagic {

namespace {

// Constructors must never hand out a labeling the verifier rejects; a
// rejection here means the closed form (or its transcription) is wrong.
ConstructionOutcome verified(const OrientedGraph& g, Labeling f,
                             const DistanceSet& d, const char* who) {
  WeightReport rep = weigh(g, f, d);
  if (!rep.antimagic)
    throw std::logic_error(std::string(who) +
                          ": constructed labeling failed verification");
  return ConstructionOutcome::of(std::move(f));
}

void require_order(int n) {
  if (n < 3) throw std::invalid_argument("cycle order must be >= 3");
}

// {0,3} labelings of unidirectional C_8/C_10/C_12: no closed form is known
// for these three, so they are search witnesses (lexicographically smallest
// valid labeling, reproducible via the canonical backtracking search; the
// fixtures command regenerates them and a test cross-checks).
const std::vector<int>* bundled_pair3_labels(int n) {
  static const std::map<int, std::vector<int>> table = {
      {8, {1, 2, 3, 5, 6, 4, 7, 8}},
      {10, {1, 2, 3, 4, 5, 9, 10, 8, 6, 7}},
      {12, {1, 2, 3, 4, 5, 6, 7, 8, 11, 9, 10, 12}},
  };
  auto it = table.find(n);
  return it == table.end() ? nullptr : &it->second;
}

}  // namespace

ConstructionOutcome uni_singleton(int n, int k) {
  require_order(n);
  if (k < 1 || k > n - 1)
    return ConstructionOutcome::unsupported(
        UnsupportedReason::OutOfRange,
        "singleton distance must satisfy 1 <= k <= n-1");
  OrientedGraph g = build_unidirectional_cycle(n);
  return verified(g, Labeling::identity(n), DistanceSet({k}), "uni_singleton");
}

ConstructionOutcome theta_general(int n, const DistanceSet& d) {
  require_order(n);
  if (d.max() > n - 2)
    return ConstructionOutcome::unsupported(
        UnsupportedReason::OutOfRange,
        "theta C_" + std::to_string(n) + " has diameter " +
            std::to_string(n - 2) + "; distance " + std::to_string(d.max()) +
            " is out of range");
  if (d.min() >= 2)
    return ConstructionOutcome::unsupported(
        UnsupportedReason::KnownNonexistent,
        "min(D) >= 2 forces equal weights on a non-unidirectional cycle: no "
        "labeling exists");
  OrientedGraph g = build_theta_cycle(n);
  Labeling f;
  f.values.resize(n);
  for (int i = 0; i < n; i++) f.values[i] = n - i;
  return verified(g, std::move(f), d, "theta_general");
}

ConstructionOutcome uni_pair_0k(int n, int k) {
  require_order(n);
  if (k < 1 || k > n - 1)
    return ConstructionOutcome::unsupported(
        UnsupportedReason::OutOfRange,
        "pair distance must satisfy 1 <= k <= n-1");

  OrientedGraph g = build_unidirectional_cycle(n);
  DistanceSet d = DistanceSet::normalized({0, k});

  if (n % 2 == 1)  // identity works for every k on odd cycles
    return verified(g, Labeling::identity(n), d, "uni_pair_0k");

  if (k == n / 2)
    return ConstructionOutcome::unsupported(
        UnsupportedReason::KnownNonexistent,
        "{0," + std::to_string(k) + "} is the factor set of gap " +
            std::to_string(k) + " on C_" + std::to_string(n) +
            ": vertices k apart share their neighborhood, no labeling exists");

  if (n == 4 && k == 3) {
    // the one k > n/2 case with a direct labeling of its own; keep it ahead
    // of the shift reduction so the weight sequence (3,4,7,6) is what callers
    // see for {0,3} on C_4
    return verified(g, Labeling{{1, 3, 4, 2}}, d, "uni_pair_0k");
  }

  if (k > n / 2) {
    // {0,k} is a shift of {0,n-k}; the same labeling serves both
    ConstructionOutcome base = uni_pair_0k(n, n - k);
    if (!base.ok()) {
      base.detail += " (reduced from the shift-equivalent {0," +
                     std::to_string(k) + "})";
      return base;
    }
    return verified(g, std::move(*base.labeling), d, "uni_pair_0k");
  }

  if (k == 1) {
    Labeling f = Labeling::identity(n);
    std::swap(f.values[0], f.values[1]);
    return verified(g, std::move(f), d, "uni_pair_0k");
  }
  if (k == 2) {
    Labeling f = Labeling::identity(n);
    f.values[0] = n;
    f.values[n - 1] = 1;
    return verified(g, std::move(f), d, "uni_pair_0k");
  }
  if (k == 3) {
    if (const std::vector<int>* bundled = bundled_pair3_labels(n))
      return verified(g, Labeling{*bundled}, d, "uni_pair_0k");
    // n >= 14: identity except the last five labels rotate to
    // (n, n-4, n-3, n-2, n-1)
    Labeling f = Labeling::identity(n);
    f.values[n - 5] = n;
    f.values[n - 4] = n - 4;
    f.values[n - 3] = n - 3;
    f.values[n - 2] = n - 2;
    f.values[n - 1] = n - 1;
    return verified(g, std::move(f), d, "uni_pair_0k");
  }
  return ConstructionOutcome::unsupported(
      UnsupportedReason::NotCovered,
      "whether the unidirectional C_" + std::to_string(n) + " admits a {0," +
          std::to_string(k) + "} labeling is an open question (even order, "
          "4 <= k < n/2)");
}

// ---- unions ----

namespace {

enum class EffKind { Uni, Theta, Other };

struct CompInfo {
  int family = 0, copy = 0, order = 0, base = 0;
  EffKind kind = EffKind::Other;
  std::vector<int> theta_path;  // global ids, source first, sink last
};

// Structural per-component classification; declared kinds shortcut, custom
// bits are classified and, for thetas, the source-to-sink path extracted.
std::vector<CompInfo> analyze_components(const TwoRegularSpec& spec) {
  std::vector<CompInfo> comps;
  int off = 0;
  for (int j = 0; j < spec.family_count(); j++) {
    const TwoRegularComponent& fam = spec.components[j];
    for (int s = 0; s < fam.multiplicity; s++) {
      CompInfo ci;
      ci.family = j;
      ci.copy = s;
      ci.order = fam.order;
      ci.base = off + s * fam.order;
      if (fam.kind == ComponentKind::Unidirectional) {
        ci.kind = EffKind::Uni;
      } else if (fam.kind == ComponentKind::Theta) {
        ci.kind = EffKind::Theta;
        for (int i = 0; i < fam.order; i++)
          ci.theta_path.push_back(ci.base + i);
      } else {
        OrientedGraph comp = build_oriented_cycle(fam.custom);
        Classification cls = classify(comp);
        if (cls.is_unidirectional_cycle) {
          ci.kind = EffKind::Uni;
        } else if (cls.is_theta_cycle) {
          ci.kind = EffKind::Theta;
          int source = cls.sources[0], sink = cls.sinks[0];
          ci.theta_path.push_back(ci.base + source);
          // the source's two out-arcs go to the sink and to the path
          // successor; step to the successor, then follow unique out-arcs
          const std::vector<int>& outs = comp.out_neighbors(source);
          int cur = (outs[0] == sink) ? outs[1] : outs[0];
          while (true) {
            ci.theta_path.push_back(ci.base + cur);
            if (cur == sink) break;
            cur = comp.out_neighbors(cur)[0];
          }
        } else {
          ci.kind = EffKind::Other;
        }
      }
      comps.push_back(std::move(ci));
    }
    off += fam.order * fam.multiplicity;
  }
  return comps;
}

ConstructionOutcome need_two_components(const TwoRegularSpec& spec) {
  spec.validate();
  if (spec.total_components() < 2)
    return ConstructionOutcome::unsupported(
        UnsupportedReason::OutOfRange,
        "union constructions need at least two cycle components");
  return ConstructionOutcome::of(Labeling{});  // sentinel "fine"
}

}  // namespace

namespace detail {

int64_t level_label_mirror(const TwoRegularSpec& spec, int j, int i, int s) {
  const int t = spec.family_count();
  auto order_of = [&](int q) {
    return q == 0 ? 0 : spec.components[q - 1].order;
  };
  auto mult_of = [&](int q) { return spec.components[q - 1].multiplicity; };
  auto mult_suffix = [&](int q) {
    int64_t m = 0;
    for (int p = q; p <= t; p++) m += mult_of(p);
    return m;
  };
  int ji = 1;
  while (order_of(ji) < i) ji++;
  int64_t label = 0;
  for (int q = 1; q <= ji - 1; q++)
    label += (int64_t)(order_of(q) - order_of(q - 1)) * mult_suffix(q);
  label += (int64_t)(i - order_of(ji - 1) - 1) * mult_suffix(ji);
  for (int q = ji; q <= j - 1; q++) label += mult_of(q);
  return label + s;
}

}  // namespace detail

ConstructionOutcome tworeg_singleton_1(const TwoRegularSpec& spec) {
  ConstructionOutcome gate = need_two_components(spec);
  if (!gate.ok()) return gate;

  std::vector<CompInfo> comps = analyze_components(spec);
  int thetas = 0;
  for (const CompInfo& c : comps) {
    if (c.kind == EffKind::Other)
      return ConstructionOutcome::unsupported(
          UnsupportedReason::NotCovered,
          "a component is neither unidirectional nor theta-oriented; the {1} "
          "construction does not cover it");
    if (c.kind == EffKind::Theta) thetas++;
  }
  if (thetas >= 2)
    return ConstructionOutcome::unsupported(
        UnsupportedReason::KnownNonexistent,
        "two theta components give two sinks, both with {1}-weight 0: no "
        "labeling exists");

  OrientedGraph g = build_union(spec);
  const int n = g.order();
  Labeling f;
  f.values.assign(n, 0);
  if (thetas == 0) {
    f = Labeling::identity(n);
  } else {
    const CompInfo* th = nullptr;
    for (const CompInfo& c : comps)
      if (c.kind == EffKind::Theta) th = &c;
    int next = 1;
    std::vector<bool> in_theta(n, false);
    for (int v : th->theta_path) in_theta[v] = true;
    for (int v = 0; v < n; v++)
      if (!in_theta[v]) f.values[v] = next++;
    // top labels descend along the theta path, source gets n
    int top = n;
    for (int v : th->theta_path) f.values[v] = top--;
  }
  return verified(g, std::move(f), DistanceSet({1}), "tworeg_singleton_1");
}

ConstructionOutcome tworeg_singleton_k(const TwoRegularSpec& spec, int k) {
  ConstructionOutcome gate = need_two_components(spec);
  if (!gate.ok()) return gate;

  int n_min = spec.components.front().order;
  if (k < 2 || k > n_min - 1)
    return ConstructionOutcome::unsupported(
        UnsupportedReason::OutOfRange,
        "singleton distance must satisfy 2 <= k <= " +
            std::to_string(n_min - 1) + " (smallest component order minus 1)");

  for (const CompInfo& c : analyze_components(spec))
    if (c.kind != EffKind::Uni)
      return ConstructionOutcome::unsupported(
          UnsupportedReason::KnownNonexistent,
          "a non-unidirectional component has a sink; the sink and an "
          "in-neighbor both weigh 0 for distances >= 2: no labeling exists");

  OrientedGraph g = build_union(spec);
  return verified(g, Labeling::identity(g.order()), DistanceSet({k}),
                  "tworeg_singleton_k");
}

ConstructionOutcome tworeg_theta(const TwoRegularSpec& spec,
                                 const DistanceSet& d) {
  ConstructionOutcome gate = need_two_components(spec);
  if (!gate.ok()) return gate;

  std::vector<CompInfo> comps = analyze_components(spec);
  for (const CompInfo& c : comps)
    if (c.kind != EffKind::Theta)
      return ConstructionOutcome::unsupported(
          UnsupportedReason::NotCovered,
          "the level construction needs every component theta-oriented");

  int n_max = spec.components.back().order;
  if (d.max() > n_max - 2)
    return ConstructionOutcome::unsupported(
        UnsupportedReason::OutOfRange,
        "largest component has diameter " + std::to_string(n_max - 2) +
            "; distance " + std::to_string(d.max()) + " is out of range");
  if (d.min() != 0)
    return ConstructionOutcome::unsupported(
        UnsupportedReason::KnownNonexistent,
        "min(D) > 0 gives every sink weight 0, and an all-theta union has at "
        "least two sinks: no labeling exists");

  OrientedGraph g = build_union(spec);
  const int n = g.order();
  Labeling f;
  f.values.assign(n, 0);
  for (const CompInfo& c : comps) {
    // canonical path position r maps to mirror level n_j - r + 1
    for (int r = 1; r <= c.order; r++) {
      int64_t lab = detail::level_label_mirror(spec, c.family + 1,
                                               c.order - r + 1, c.copy + 1);
      f.values[c.theta_path[r - 1]] = (int)lab;
    }
  }

  WeightReport rep = weigh(g, f, d);
  if (rep.antimagic) return ConstructionOutcome::of(std::move(f));

  // The closed form ties at some boundaries (smaller-component sources vs
  // same-level vertices of larger components when 1 is in D). Existence
  // still holds; a deterministic backtracking search supplies the witness.
  SearchOutcome so = backtrack_search(g, d, SearchBudget::defaults(), {});
  if (so.verdict == SearchVerdict::Found)
    return ConstructionOutcome::of(std::move(*so.labeling));
  if (so.verdict == SearchVerdict::ExhaustedNone)
    throw std::runtime_error(
        "no labeling exists for an all-theta union with min(D)=0; this "
        "contradicts the characterization");
  throw std::runtime_error(
      "fallback search for the all-theta union exceeded its budget");
}

// ---- dispatchers ----

std::optional<int> shifted_factor_gap(const DistanceSet& d, int n) {
  const std::vector<int>& v = d.values();
  int sz = (int)v.size();
  if (sz < 2 || n % sz != 0) return std::nullopt;
  if (v.back() >= n) return std::nullopt;
  int gap = n / sz;
  for (int i = 0; i + 1 < sz; i++)
    if (v[i + 1] - v[i] != gap) return std::nullopt;
  if (v.front() + n - v.back() != gap) return std::nullopt;
  return gap;
}

ConstructionOutcome construct_uni(int n, const DistanceSet& d) {
  require_order(n);
  if (d.max() > n - 1)
    return ConstructionOutcome::unsupported(
        UnsupportedReason::OutOfRange,
        "unidirectional C_" + std::to_string(n) + " has diameter " +
            std::to_string(n - 1) + "; distance " + std::to_string(d.max()) +
            " is out of range");

  OrientedGraph g = build_unidirectional_cycle(n);

  if (auto gap = shifted_factor_gap(d, n))
    return ConstructionOutcome::unsupported(
        UnsupportedReason::KnownNonexistent,
        "D is a cyclic shift of the gap-" + std::to_string(*gap) +
            " factor set: vertices that far apart share their neighborhood, "
            "no labeling exists");

  if (d.size() == 1) {
    int k = d.min();
    if (k == 0)
      return verified(g, Labeling::identity(n), d, "construct_uni");
    return uni_singleton(n, k);
  }

  if (d.size() == 2) {
    int a = d.values()[0], b = d.values()[1];
    int k = std::min(b - a, n - (b - a));
    ConstructionOutcome base = uni_pair_0k(n, k);
    if (!base.ok()) {
      if (!(a == 0 && b == k))
        base.detail += " (via the shift-equivalent {0," + std::to_string(k) +
                       "})";
      return base;
    }
    // a shift of D leaves the weight multiset a rotation of itself, so the
    // same labeling works; verify against the requested set anyway
    return verified(g, std::move(*base.labeling), d, "construct_uni");
  }

  if (d.size() >= n - 2) {
    // complement once: same labeling works since weights pairwise sum to
    // the constant n(n+1)/2
    DistanceSet comp = complement_set(d, g);
    ConstructionOutcome base = construct_uni(n, comp);
    if (!base.ok()) {
      base.detail += " (via the complement " + comp.to_string() + ")";
      return base;
    }
    return verified(g, std::move(*base.labeling), d, "construct_uni");
  }

  return ConstructionOutcome::unsupported(
      UnsupportedReason::NotCovered,
      "no known construction covers " + d.to_string() + " on C_" +
          std::to_string(n) +
          "; sets of three or more distances are open in general");
}

ConstructionOutcome construct_theta(int n, const DistanceSet& d) {
  return theta_general(n, d);
}

ConstructionOutcome construct_tworeg(const TwoRegularSpec& spec,
                                     const DistanceSet& d) {
  ConstructionOutcome gate = need_two_components(spec);
  if (!gate.ok()) return gate;

  std::vector<CompInfo> comps = analyze_components(spec);
  bool all_theta = std::all_of(comps.begin(), comps.end(), [](const CompInfo& c) {
    return c.kind == EffKind::Theta;
  });

  if (d.size() == 1) {
    int k = d.min();
    if (k == 0) {
      if (all_theta) return tworeg_theta(spec, d);
      OrientedGraph g = build_union(spec);
      return verified(g, Labeling::identity(g.order()), d, "construct_tworeg");
    }
    if (k == 1) return tworeg_singleton_1(spec);
    return tworeg_singleton_k(spec, k);
  }

  if (all_theta) return tworeg_theta(spec, d);

  return ConstructionOutcome::unsupported(
      UnsupportedReason::NotCovered,
      "multi-distance sets on unions are only covered for all-theta "
      "components with min(D)=0");
}

}  // namespace antimagic
