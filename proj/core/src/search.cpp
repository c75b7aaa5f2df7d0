#include "antimagic/search.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <climits>
#include <numeric>
#include <stdexcept>
#include <thread>

#include "antimagic/classify.hpp"

namespace antimagic {

namespace {

using Clock = std::chrono::steady_clock;

constexpr int kNodeBatch = 512;

void check_budget_usable(const SearchBudget& b, int n) {
  if (n > 10 && !b.max_nodes && !b.max_millis)
    throw std::invalid_argument(
        "unbounded search only allowed for n <= 10; set a node or time cap");
}

struct SharedBudget {
  int64_t max_nodes = INT64_MAX;
  bool has_deadline = false;
  Clock::time_point deadline;
  std::atomic<int64_t> nodes{0};
  std::atomic<bool> aborted{false};
  std::atomic<bool> stop_all{false};          // any-witness early stop
  std::atomic<int> best_found_block{INT_MAX};  // canonical early stop

  explicit SharedBudget(const SearchBudget& b) {
    if (b.max_nodes) max_nodes = *b.max_nodes;
    if (b.max_millis) {
      has_deadline = true;
      deadline = Clock::now() + std::chrono::milliseconds(*b.max_millis);
    }
  }

  // Returns false when the search must stop.
  bool flush(int64_t batch) {
    int64_t total = nodes.fetch_add(batch) + batch;
    if (total > max_nodes || (has_deadline && Clock::now() > deadline)) {
      aborted.store(true);
      return false;
    }
    return !aborted.load(std::memory_order_relaxed);
  }
};

enum class BlockStatus { Completed, Found, Aborted, Superseded };

struct BlockResult {
  BlockStatus status = BlockStatus::Superseded;
  std::vector<int> labels;
};

// Shared per-search inputs for the workers.
struct SearchContext {
  const OrientedGraph& g;
  const DistanceMatrix& dm;
  const DistanceSet& d;
  SearchOptions options;
  SharedBudget* budget;
  std::vector<BlockResult>* results;
};

bool should_stop_block(const SearchContext& ctx, int block) {
  if (ctx.budget->aborted.load(std::memory_order_relaxed)) return true;
  if (ctx.options.canonical)
    return block > ctx.budget->best_found_block.load(std::memory_order_relaxed);
  return ctx.budget->stop_all.load(std::memory_order_relaxed);
}

void record_found(const SearchContext& ctx, int block,
                  const std::vector<int>& labels) {
  (*ctx.results)[block] = {BlockStatus::Found, labels};
  if (ctx.options.canonical) {
    int cur = ctx.budget->best_found_block.load();
    while (block < cur &&
           !ctx.budget->best_found_block.compare_exchange_weak(cur, block)) {
    }
  } else {
    ctx.budget->stop_all.store(true);
  }
}

// ---- exhaustive ----

void exhaustive_block(const SearchContext& ctx, int block) {
  const int n = ctx.g.order();
  WeightEvaluator ev(ctx.g, ctx.dm, ctx.d);
  std::vector<int> labels(n);
  labels[0] = block + 1;
  for (int v = 1, l = 1; v < n; l++)
    if (l != block + 1) labels[v++] = l;

  int64_t batch = 0;
  do {
    if (++batch == kNodeBatch) {
      if (!ctx.budget->flush(batch) || should_stop_block(ctx, block)) {
        (*ctx.results)[block] = {should_stop_block(ctx, block) &&
                                         !ctx.budget->aborted.load()
                                     ? BlockStatus::Superseded
                                     : BlockStatus::Aborted,
                                 {}};
        return;
      }
      batch = 0;
    }
    if (ev.distinct_weights(labels)) {
      ctx.budget->flush(batch);
      record_found(ctx, block, labels);
      return;
    }
  } while (std::next_permutation(labels.begin() + 1, labels.end()));
  ctx.budget->flush(batch);
  (*ctx.results)[block] = {BlockStatus::Completed, {}};
}

// ---- backtracking ----

struct BacktrackWorker {
  const SearchContext& ctx;
  int block;
  int n;
  WeightEvaluator ev;
  std::vector<int> order, labels;
  std::vector<char> used;
  std::vector<int64_t> sum;
  std::vector<int> remaining;
  std::vector<char> seen;
  struct TrailEntry {
    int v;
    char owner;
  };
  std::vector<TrailEntry> trail;
  int64_t batch = 0;
  bool stopped = false;

  BacktrackWorker(const SearchContext& c, int b, const std::vector<int>& ord)
      : ctx(c), block(b), n(c.g.order()), ev(c.g, c.dm, c.d), order(ord) {
    labels.assign(n, 0);
    used.assign(n + 1, 0);
    sum.assign(n, 0);
    remaining.assign(n, 0);
    seen.assign((size_t)ev.max_weight() + 1, 0);
  }

  bool count_node() {
    if (++batch == kNodeBatch) {
      if (!ctx.budget->flush(batch) || should_stop_block(ctx, block)) {
        stopped = true;
        return false;
      }
      batch = 0;
    }
    return true;
  }

  // Adds label l at vertex u to every weight watching u; finalized weights
  // go through the seen table. Returns conflict flag and how many weights
  // finalized (for the undo).
  std::pair<bool, int> apply(int u, int l) {
    bool conflict = false;
    int cnt = 0, wc = 0;
    const int32_t* ws = ev.watchers(u, &wc);
    for (int k = 0; k < wc; k++) {
      int v = ws[k];
      sum[v] += l;
      if (--remaining[v] == 0) {
        int64_t w = sum[v];
        char owner = seen[w] ? 0 : 1;
        if (owner)
          seen[w] = 1;
        else
          conflict = true;
        trail.push_back({v, owner});
        cnt++;
      }
    }
    return {conflict, cnt};
  }

  void undo(int u, int l, int cnt) {
    for (int k = 0; k < cnt; k++) {
      TrailEntry e = trail.back();
      trail.pop_back();
      if (e.owner) seen[sum[e.v]] = 0;
    }
    int wc = 0;
    const int32_t* ws = ev.watchers(u, &wc);
    for (int k = 0; k < wc; k++) {
      sum[ws[k]] -= l;
      remaining[ws[k]]++;
    }
  }

  bool dfs(int depth) {
    if (depth == n) return true;
    int v = order[depth];
    for (int l = 1; l <= n; l++) {
      if (used[l]) continue;
      if (!count_node()) return false;
      used[l] = 1;
      labels[v] = l;
      auto [conflict, cnt] = apply(v, l);
      bool found = !conflict && dfs(depth + 1);
      if (found) return true;
      undo(v, l, cnt);
      used[l] = 0;
      if (stopped) return false;
    }
    return false;
  }

  void run() {
    int mc = 0;
    for (int v = 0; v < n; v++) {
      ev.members(v, &mc);
      remaining[v] = mc;
    }
    // weights of empty neighborhoods are final (zero) before any labels
    bool seed_conflict = false;
    for (int v = 0; v < n; v++)
      if (remaining[v] == 0) {
        if (seen[0]) seed_conflict = true;
        seen[0] = 1;
      }
    if (seed_conflict) {
      (*ctx.results)[block] = {BlockStatus::Completed, {}};
      return;
    }

    int v0 = order[0];
    int l0 = block + 1;
    bool found = false;
    if (count_node()) {
      used[l0] = 1;
      labels[v0] = l0;
      auto [conflict, cnt] = apply(v0, l0);
      found = !conflict && dfs(1);
      if (!found) undo(v0, l0, cnt);
    }
    ctx.budget->flush(batch);
    batch = 0;
    if (found)
      record_found(ctx, block, labels);
    else if (stopped)
      (*ctx.results)[block] = {ctx.budget->aborted.load()
                                   ? BlockStatus::Aborted
                                   : BlockStatus::Superseded,
                               {}};
    else
      (*ctx.results)[block] = {BlockStatus::Completed, {}};
  }
};

std::vector<int> backtrack_order(const OrientedGraph& g,
                                 const DistanceMatrix& dm,
                                 const DistanceSet& d, bool canonical) {
  const int n = g.order();
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  if (canonical) return order;
  WeightEvaluator ev(g, dm, d);
  std::vector<int> wcount(n);
  for (int v = 0; v < n; v++) {
    int c = 0;
    ev.watchers(v, &c);
    wcount[v] = c;
  }
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    if (wcount[a] != wcount[b]) return wcount[a] > wcount[b];
    return a < b;
  });
  return order;
}

SearchOutcome run_blocks(const OrientedGraph& g, const DistanceSet& d,
                         const SearchBudget& budget,
                         const SearchOptions& options, bool use_backtrack) {
  const int n = g.order();
  if (n < 1) throw std::invalid_argument("empty graph");
  check_budget_usable(budget, n);
  DistanceMatrix dm = all_pairs_distance(g);

  auto t0 = Clock::now();
  SharedBudget shared(budget);
  std::vector<BlockResult> results(n);
  SearchContext ctx{g, dm, d, options, &shared, &results};
  std::vector<int> order =
      use_backtrack ? backtrack_order(g, dm, d, options.canonical)
                    : std::vector<int>{};

  int threads = std::max(1, options.threads);
  threads = std::min(threads, n);
  if (threads == 1) {
    for (int b = 0; b < n; b++) {
      if (should_stop_block(ctx, b)) break;
      if (use_backtrack) {
        BacktrackWorker w(ctx, b, order);
        w.run();
      } else {
        exhaustive_block(ctx, b);
      }
      // sequentially, the first find is already the lexicographic minimum
      if (results[b].status == BlockStatus::Found) break;
    }
  } else {
    std::atomic<int> next{0};
    auto worker = [&] {
      for (;;) {
        int b = next.fetch_add(1);
        if (b >= n) return;
        if (should_stop_block(ctx, b)) continue;
        if (use_backtrack) {
          BacktrackWorker w(ctx, b, order);
          w.run();
        } else {
          exhaustive_block(ctx, b);
        }
      }
    };
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; t++) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }

  SearchOutcome out;
  out.nodes = shared.nodes.load();
  out.millis = std::chrono::duration_cast<std::chrono::milliseconds>(
                   Clock::now() - t0)
                   .count();

  auto finish_found = [&](const std::vector<int>& labels) {
    Labeling f{labels};
    WeightReport rep = weigh(g, dm, f, d);
    if (!rep.antimagic)
      throw std::logic_error("search produced an invalid witness");
    out.verdict = SearchVerdict::Found;
    out.labeling = std::move(f);
  };

  if (options.canonical || threads == 1) {
    // lowest found block wins, but only if everything below it completed
    for (int b = 0; b < n; b++) {
      if (results[b].status == BlockStatus::Aborted) {
        out.verdict = SearchVerdict::Aborted;
        return out;
      }
      if (results[b].status == BlockStatus::Found) {
        finish_found(results[b].labels);
        return out;
      }
      if (results[b].status == BlockStatus::Superseded) break;
    }
    bool all_completed = std::all_of(
        results.begin(), results.end(),
        [](const BlockResult& r) { return r.status == BlockStatus::Completed; });
    out.verdict = all_completed ? SearchVerdict::ExhaustedNone
                                : SearchVerdict::Aborted;
    return out;
  }

  for (const BlockResult& r : results)
    if (r.status == BlockStatus::Found) {
      finish_found(r.labels);
      return out;
    }
  bool any_aborted =
      std::any_of(results.begin(), results.end(), [](const BlockResult& r) {
        return r.status != BlockStatus::Completed;
      });
  out.verdict =
      any_aborted ? SearchVerdict::Aborted : SearchVerdict::ExhaustedNone;
  return out;
}

}  // namespace

SearchOutcome exhaustive_search(const OrientedGraph& g, const DistanceSet& d,
                                const SearchBudget& budget,
                                const SearchOptions& options) {
  return run_blocks(g, d, budget, options, false);
}

SearchOutcome backtrack_search(const OrientedGraph& g, const DistanceSet& d,
                               const SearchBudget& budget,
                               const SearchOptions& options) {
  return run_blocks(g, d, budget, options, true);
}

// ---- orientation enumeration ----

CycleOrientation orientation_from_mask(uint64_t mask, int n) {
  CycleOrientation c;
  c.n = n;
  c.bits.resize(n);
  for (int i = 0; i < n; i++) c.bits[i] = (mask >> i) & 1;
  return c;
}

uint64_t mask_from_orientation(const CycleOrientation& c) {
  uint64_t m = 0;
  for (int i = 0; i < c.n; i++)
    if (c.bits[i]) m |= (uint64_t)1 << i;
  return m;
}

uint64_t canonical_orientation_mask(uint64_t mask, int n) {
  uint64_t best = mask;
  for (int r = 0; r < n; r++) {
    uint64_t rot = 0;
    for (int i = 0; i < n; i++)
      if ((mask >> i) & 1) rot |= (uint64_t)1 << ((i + r) % n);
    best = std::min(best, rot);
  }
  for (int c = 0; c < n; c++) {
    uint64_t refl = 0;
    for (int i = 0; i < n; i++)
      if (!((mask >> i) & 1)) refl |= (uint64_t)1 << (((c - i - 1) % n + n) % n);
    best = std::min(best, refl);
  }
  return best;
}

void enumerate_orientations(
    int n, bool reduce_symmetry,
    const std::function<void(const CycleOrientation&)>& fn) {
  if (n < 3 || n > 30)
    throw std::invalid_argument("orientation enumeration supports 3 <= n <= 30");
  for (uint64_t mask = 0; mask < ((uint64_t)1 << n); mask++) {
    if (reduce_symmetry && canonical_orientation_mask(mask, n) != mask)
      continue;
    fn(orientation_from_mask(mask, n));
  }
}

std::vector<CycleOrientation> all_orientations(int n, bool reduce_symmetry) {
  std::vector<CycleOrientation> out;
  enumerate_orientations(n, reduce_symmetry,
                         [&](const CycleOrientation& c) { out.push_back(c); });
  return out;
}

// ---- sweeps ----

namespace {

SweepRow make_row(int n, const CycleOrientation& c, const std::vector<int>& d,
                  const SearchOutcome& so) {
  SweepRow row;
  row.n = n;
  row.orientation_bits = orientation_bits_string(c);
  row.d = d;
  switch (so.verdict) {
    case SearchVerdict::Found:
      row.outcome = SweepVerdict::Exists;
      row.witness_labels = so.labeling->values;
      break;
    case SearchVerdict::ExhaustedNone:
      row.outcome = SweepVerdict::NotExists;
      break;
    case SearchVerdict::Aborted:
      row.outcome = SweepVerdict::Unknown;
      break;
  }
  return row;
}

}  // namespace

SweepResult sweep_singleton(int n_max, const SearchBudget& per_instance,
                            const SearchOptions& options) {
  if (n_max < 3 || n_max > 7)
    throw std::invalid_argument("singleton sweep covers 3 <= n_max <= 7");
  SweepResult res;
  for (int n = 3; n <= n_max; n++) {
    enumerate_orientations(n, false, [&](const CycleOrientation& c) {
      OrientedGraph g = build_oriented_cycle(c);
      Classification cls = classify(g);
      for (int k = 0; k < n; k++) {
        DistanceSet d({k});
        SearchOutcome so = exhaustive_search(g, d, per_instance, options);
        SweepRow row = make_row(n, c, d.values(), so);
        if (row.outcome == SweepVerdict::Unknown) {
          res.unknowns++;
        } else {
          bool expected = k == 0 ? true
                          : k == 1
                              ? (cls.is_unidirectional_cycle || cls.is_theta_cycle)
                              : cls.is_unidirectional_cycle;
          if ((row.outcome == SweepVerdict::Exists) != expected)
            res.mismatches++;
        }
        res.rows.push_back(std::move(row));
      }
    });
  }
  return res;
}

SweepResult sweep_pairs(int n_max, OrientationUniverse universe,
                        const SearchBudget& per_instance,
                        const SearchOptions& options) {
  int cap = universe == OrientationUniverse::All ? 7 : 9;
  if (n_max < 3 || n_max > cap)
    throw std::invalid_argument("pair sweep n_max out of supported range");
  SweepResult res;
  for (int n = 3; n <= n_max; n++) {
    std::vector<CycleOrientation> cycle_orients;
    if (universe == OrientationUniverse::All)
      cycle_orients = all_orientations(n, false);
    else
      cycle_orients.push_back(
          orientation_from_mask(((uint64_t)1 << n) - 1, n));
    for (const CycleOrientation& c : cycle_orients) {
      OrientedGraph g = build_oriented_cycle(c);
      for (int a = 0; a < n; a++)
        for (int b = a + 1; b < n; b++) {
          DistanceSet d({a, b});
          SearchOutcome so = universe == OrientationUniverse::All
                                 ? exhaustive_search(g, d, per_instance, options)
                                 : backtrack_search(g, d, per_instance, options);
          SweepRow row = make_row(n, c, d.values(), so);
          if (row.outcome == SweepVerdict::Unknown) res.unknowns++;
          res.rows.push_back(std::move(row));
        }
    }
  }
  return res;
}

// ---- bundled witnesses ----

std::vector<FixtureWitness> generate_fixtures(const SearchBudget& per_instance) {
  SearchOptions opts;
  opts.threads = 1;
  opts.canonical = true;

  std::vector<FixtureWitness> out;
  auto d_name = [](const std::vector<int>& d) {
    std::string s = "d";
    for (size_t i = 0; i < d.size(); i++) {
      if (i) s += "-";
      s += std::to_string(d[i]);
    }
    return s;
  };

  for (int n : {8, 10, 12}) {
    OrientedGraph g = build_unidirectional_cycle(n);
    DistanceSet d({0, 3});
    SearchOutcome so = backtrack_search(g, d, per_instance, opts);
    if (so.verdict == SearchVerdict::Aborted)
      throw std::runtime_error("fixture search aborted: budget too small");
    if (so.verdict != SearchVerdict::Found)
      throw std::runtime_error("fixture search found no witness unexpectedly");
    FixtureWitness fw;
    fw.name = "uni_c" + std::to_string(n) + "_" + d_name(d.values());
    fw.n = n;
    fw.orientation = orientation_from_mask(((uint64_t)1 << n) - 1, n);
    fw.d = d.values();
    fw.labeling = *so.labeling;
    out.push_back(std::move(fw));
  }

  const std::vector<std::vector<int>> c6_sets = {
      {0, 1}, {0, 2}, {0, 3}, {0, 1, 2}, {0, 2, 3}};
  for (const auto& dv : c6_sets) {
    DistanceSet d(dv);
    bool placed = false;
    for (uint64_t mask = 0; mask < 64 && !placed; mask++) {
      CycleOrientation c = orientation_from_mask(mask, 6);
      OrientedGraph g = build_oriented_cycle(c);
      if (classify(g).is_unidirectional_cycle) continue;
      SearchOutcome so = backtrack_search(g, d, per_instance, opts);
      if (so.verdict == SearchVerdict::Aborted)
        throw std::runtime_error("fixture search aborted: budget too small");
      if (so.verdict == SearchVerdict::Found) {
        FixtureWitness fw;
        fw.name = "c6_nonuni_" + d_name(dv);
        fw.n = 6;
        fw.orientation = c;
        fw.d = dv;
        fw.labeling = *so.labeling;
        out.push_back(std::move(fw));
        placed = true;
      }
    }
    if (!placed)
      throw std::runtime_error(
          "no non-unidirectional C6 witness found unexpectedly");
  }
  return out;
}

}  // namespace antimagic
