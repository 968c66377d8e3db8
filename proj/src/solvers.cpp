#include "hyperburn/solvers.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>

#include "hyperburn/compiled_game.hpp"
#include "hyperburn/propagation.hpp"

namespace hb {

namespace {

constexpr std::uint64_t kHashMult = 0x9E3779B97F4A7C15ull;

// Fixed-capacity transposition table: key -> largest remaining budget that
// was searched exhaustively and failed. Collisions evict the smaller record;
// eviction can only cost time, never correctness, because every pruned state
// would simply be re-searched.
class BudgetMemo {
 public:
  explicit BudgetMemo(std::size_t log2_slots)
      : slots_(std::size_t{1} << log2_slots), mask_((std::size_t{1} << log2_slots) - 1) {}

  // Enough slots for the reachable state count, within a fixed ceiling.
  static std::size_t log2_slots_for(int n) {
    return static_cast<std::size_t>(std::clamp(n, 12, 20));
  }

  int lookup(std::uint64_t key) const {
    std::size_t at = index(key);
    for (std::size_t i = 0; i < kProbe; ++i) {
      const Slot& s = slots_[(at + i) & mask_];
      if (s.rem >= 0 && s.key == key) return s.rem;
    }
    return -1;
  }

  void store(std::uint64_t key, int rem) {
    std::size_t at = index(key);
    std::size_t victim = at;
    int victim_rem = INT32_MAX;
    for (std::size_t i = 0; i < kProbe; ++i) {
      std::size_t j = (at + i) & mask_;
      Slot& s = slots_[j];
      if (s.rem < 0) {
        s.key = key;
        s.rem = rem;
        return;
      }
      if (s.key == key) {
        s.rem = std::max(s.rem, rem);
        return;
      }
      if (s.rem < victim_rem) {
        victim_rem = s.rem;
        victim = j;
      }
    }
    slots_[victim] = Slot{key, rem};
  }

 private:
  struct Slot {
    std::uint64_t key = 0;
    std::int32_t rem = -1;
  };
  static constexpr std::size_t kProbe = 4;

  std::size_t index(std::uint64_t key) const {
    return static_cast<std::size_t>((key * kHashMult) >> 13) & mask_;
  }

  std::vector<Slot> slots_;
  std::size_t mask_;
};

struct SearchCtx {
  std::uint64_t nodes = 0;
  std::uint64_t budget = 0;
  bool aborted = false;

  bool tick() {
    if (++nodes > budget) {
      aborted = true;
      return false;
    }
    return true;
  }
};

// Branching order shared by both searches: descending degree in the
// flammable structure, ties by index. Deterministic by construction.
std::vector<int> branch_order(const CompiledGame& g) {
  std::vector<int> deg(g.n(), 0);
  for (auto m : g.edge_masks())
    for (std::uint64_t bits = m; bits; bits &= bits - 1) ++deg[std::countr_zero(bits)];
  std::vector<int> order(g.n());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return deg[a] != deg[b] ? deg[a] > deg[b] : a < b; });
  return order;
}

std::vector<int> mask_to_vertices(std::uint64_t m) {
  std::vector<int> out;
  for (std::uint64_t bits = m; bits; bits &= bits - 1) out.push_back(std::countr_zero(bits));
  return out;
}

// ---------------------------------------------------------------------------
// Lazy search
// ---------------------------------------------------------------------------

struct LazyComponent {
  std::uint64_t vertices = 0;
  std::vector<int> edge_ids;
  int min_tau = 0;
};

// Components of the flammable structure only; uncovered vertices are handled
// separately (each must appear in any lazy burning set).
std::vector<LazyComponent> flammable_components(const CompiledGame& g) {
  int n = g.n();
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (auto m : g.edge_masks()) {
    int root = find(std::countr_zero(m));
    for (std::uint64_t bits = m; bits; bits &= bits - 1) parent[find(std::countr_zero(bits))] = root;
  }
  std::vector<LazyComponent> comps;
  std::vector<int> comp_of(n, -1);
  for (int v = 0; v < n; ++v) {
    if (g.uncovered_mask() >> v & 1) continue;
    int r = find(v);
    if (comp_of[r] < 0) {
      comp_of[r] = static_cast<int>(comps.size());
      comps.emplace_back();
    }
    comps[comp_of[r]].vertices |= std::uint64_t{1} << v;
  }
  for (int e = 0; e < g.edge_count(); ++e) {
    int r = find(std::countr_zero(g.edge_masks()[e]));
    auto& c = comps[comp_of[r]];
    c.edge_ids.push_back(e);
    int t = g.taus()[e];
    c.min_tau = c.min_tau == 0 ? t : std::min(c.min_tau, t);
  }
  return comps;
}

// Memo for the lazy search: a recorded entry says "exploring this closure
// with `rem` more vertices allowed, drawing candidates from order positions
// >= `from`, failed exhaustively". A revisit is prunable when its budget is
// no larger and its candidate pool no wider.
class LazyMemo {
 public:
  explicit LazyMemo(std::size_t log2_slots)
      : slots_(std::size_t{1} << log2_slots), mask_((std::size_t{1} << log2_slots) - 1) {}

  bool dominated(std::uint64_t key, int rem, int from) const {
    std::size_t at = index(key);
    for (std::size_t i = 0; i < kProbe; ++i) {
      const Slot& s = slots_[(at + i) & mask_];
      if (s.rem >= 0 && s.key == key && rem <= s.rem && from >= s.from) return true;
    }
    return false;
  }

  void store(std::uint64_t key, int rem, int from) {
    std::size_t at = index(key);
    std::size_t victim = at;
    int victim_rem = INT32_MAX;
    for (std::size_t i = 0; i < kProbe; ++i) {
      std::size_t j = (at + i) & mask_;
      Slot& s = slots_[j];
      if (s.rem < 0) {
        s = Slot{key, static_cast<std::int16_t>(rem), static_cast<std::int16_t>(from)};
        return;
      }
      if (s.key == key && rem >= s.rem && from <= s.from) {
        s.rem = static_cast<std::int16_t>(rem);
        s.from = static_cast<std::int16_t>(from);
        return;
      }
      if (s.rem < victim_rem) {
        victim_rem = s.rem;
        victim = j;
      }
    }
    slots_[victim] = Slot{key, static_cast<std::int16_t>(rem), static_cast<std::int16_t>(from)};
  }

 private:
  struct Slot {
    std::uint64_t key = 0;
    std::int16_t rem = -1;
    std::int16_t from = 0;
  };
  static constexpr std::size_t kProbe = 4;

  std::size_t index(std::uint64_t key) const {
    return static_cast<std::size_t>((key * kHashMult) >> 13) & mask_;
  }

  std::vector<Slot> slots_;
  std::size_t mask_;
};

class LazyComponentSearch {
 public:
  LazyComponentSearch(const CompiledGame& g, const LazyComponent& comp,
                      const std::vector<int>& order, SearchCtx& ctx, LazyMemo& memo)
      : g_(g), comp_(comp), ctx_(ctx), memo_(memo) {
    for (int v : order)
      if (comp.vertices >> v & 1) order_.push_back(v);
  }

  // Smallest percolating set between `lower` and the size of `fallback`.
  // Returns false when the budget ran out; *reached_lower is then the largest
  // size proved insufficient plus one.
  bool run(int lower, const std::vector<int>& fallback, int* value, std::vector<int>* witness,
           int* reached_lower) {
    *reached_lower = lower;
    for (int target = lower; target < static_cast<int>(fallback.size()); ++target) {
      chosen_.clear();
      if (dfs(0, 0, target, 0)) {
        *value = target;
        *witness = chosen_;
        return true;
      }
      if (ctx_.aborted) {
        *reached_lower = target;
        return false;
      }
      *reached_lower = target + 1;
    }
    *value = static_cast<int>(fallback.size());
    *witness = fallback;
    return true;
  }

 private:
  // Memo keys from different components never collide: the padding forces
  // every key to carry the component's complement, and stored states are
  // always proper subsets of the component.
  std::uint64_t key(std::uint64_t closed) const { return closed | ~comp_.vertices; }

  // Candidates are drawn in increasing branch-order position, so every vertex
  // set is generated at most once. This loses no solutions: in a minimum
  // percolating set no member lies in the closure of the others, hence each
  // member is still unburned when added in any order.
  bool dfs(std::uint64_t closed, int used, int target, int from) {
    if (!ctx_.tick()) return false;
    if ((closed & comp_.vertices) == comp_.vertices) return true;
    int remaining = target - used;
    if (remaining <= 0) return false;
    if (memo_.dominated(key(closed), remaining, from)) return false;
    // The state is a closure fixpoint, so before anything new burns some edge
    // must be topped up to its trigger count by added vertices alone.
    int first_fire = INT32_MAX;
    for (int e : comp_.edge_ids) {
      std::uint64_t mask = g_.edge_masks()[e];
      if (!(mask & ~closed)) continue;
      first_fire = std::min(first_fire,
                            g_.taus()[e] - std::popcount(mask & closed));
    }
    if (first_fire <= remaining) {
      for (int i = from; i < static_cast<int>(order_.size()); ++i) {
        int v = order_[i];
        if (closed >> v & 1) continue;
        chosen_.push_back(v);
        std::uint64_t next = g_.close(closed | (std::uint64_t{1} << v), ws_);
        if (dfs(next, used + 1, target, i + 1)) return true;
        chosen_.pop_back();
        if (ctx_.aborted) return false;
      }
    }
    memo_.store(key(closed), remaining, from);
    return false;
  }

  const CompiledGame& g_;
  const LazyComponent& comp_;
  SearchCtx& ctx_;
  LazyMemo& memo_;
  std::vector<int> order_;
  std::vector<int> chosen_;
  CompiledGame::Workspace ws_;
};

std::vector<int> greedy_component_set(const CompiledGame& g, const LazyComponent& comp) {
  std::vector<int> picked;
  std::uint64_t set_mask = 0;
  CompiledGame::Workspace ws;
  const auto& masks = g.edge_masks();
  const auto& taus = g.taus();
  while (true) {
    if ((g.close(set_mask, ws) & comp.vertices) == comp.vertices) return picked;
    // Vertex covering the most edges still short of their threshold.
    std::vector<int> gain(g.n(), 0);
    for (int e : comp.edge_ids) {
      if (std::popcount(masks[e] & set_mask) >= taus[e]) continue;
      for (std::uint64_t bits = masks[e] & ~set_mask; bits; bits &= bits - 1)
        ++gain[std::countr_zero(bits)];
    }
    int best = -1;
    for (std::uint64_t bits = comp.vertices & ~set_mask; bits; bits &= bits - 1) {
      int v = std::countr_zero(bits);
      if (best < 0 || gain[v] > gain[best]) best = v;
    }
    if (best < 0 || gain[best] == 0) {
      // Every edge met its threshold yet the component is not closed; cannot
      // happen for components built from flammable edges.
      for (std::uint64_t bits = comp.vertices & ~set_mask; bits; bits &= bits - 1)
        picked.push_back(std::countr_zero(bits));
      return picked;
    }
    picked.push_back(best);
    set_mask |= std::uint64_t{1} << best;
  }
}

// ---------------------------------------------------------------------------
// Burn search
// ---------------------------------------------------------------------------

class BurnSearch {
 public:
  BurnSearch(const CompiledGame& g, SearchCtx& ctx)
      : g_(g), ctx_(ctx), order_(branch_order(g)), memo_(BudgetMemo::log2_slots_for(g.n())) {}

  bool found_at_depth(int depth, std::vector<int>* sequence) {
    seq_.assign(depth, -1);
    if (dfs(0, depth, depth)) {
      *sequence = seq_;
      return true;
    }
    return false;
  }

 private:
  bool dfs(std::uint64_t f, int rem, int depth) {
    if (!ctx_.tick()) return false;
    std::uint64_t after = g_.step(f);
    int at = depth - rem;
    if (rem == 1) {
      std::uint64_t rest = g_.full_mask() & ~after;
      if (rest == 0) {
        seq_[at] = std::countr_zero(g_.full_mask() & ~f);  // any unburned: redundant final source
        return true;
      }
      if (std::popcount(rest) == 1) {
        seq_[at] = std::countr_zero(rest);
        return true;
      }
      memo_.store(f, 1);
      return false;
    }
    if (memo_.lookup(f) >= rem) return false;
    std::uint64_t unburned = g_.full_mask() & ~f;
    // Vertices no flammable edge reaches must each take a round of their own.
    if (std::popcount(unburned & g_.uncovered_mask()) > rem) {
      memo_.store(f, rem);
      return false;
    }
    // If no edge can be topped up to its trigger count early enough to fire
    // inside the remaining window, sources are the only burns left.
    int first_fire = INT32_MAX;
    for (std::size_t e = 0; e < g_.edge_masks().size(); ++e) {
      std::uint64_t mask = g_.edge_masks()[e];
      if (!(mask & ~f)) continue;
      first_fire = std::min(first_fire, g_.taus()[e] - std::popcount(mask & f));
    }
    if (first_fire >= rem && std::popcount(unburned) > rem) {
      memo_.store(f, rem);
      return false;
    }
    // Mid-game sources are never redundant: whenever propagation leaves some
    // vertex unburned, igniting an unburned non-redundant vertex dominates.
    for (int u : order_) {
      if (after >> u & 1) continue;
      std::uint64_t next = after | (std::uint64_t{1} << u);
      if (next == g_.full_mask()) continue;  // would end the game before round `depth`
      seq_[at] = u;
      if (dfs(next, rem - 1, depth)) return true;
      if (ctx_.aborted) return false;
    }
    memo_.store(f, rem);
    return false;
  }

  const CompiledGame& g_;
  SearchCtx& ctx_;
  std::vector<int> order_;
  std::vector<int> seq_;
  BudgetMemo memo_;
};

// Play a full game following `preferred` vertices in order, substituting the
// first unburned vertex once the list runs dry. Any full play is a valid
// upper-bound witness.
std::vector<int> play_from_list(const CompiledGame& g, const std::vector<int>& preferred) {
  std::vector<int> seq;
  std::uint64_t f = 0;
  std::size_t cursor = 0;
  while (f != g.full_mask()) {
    std::uint64_t after = g.step(f);
    int pick = -1;
    while (cursor < preferred.size()) {
      int v = preferred[cursor];
      if (!(f >> v & 1)) {
        pick = v;
        break;
      }
      ++cursor;
    }
    if (pick < 0) pick = std::countr_zero(g.full_mask() & ~f);
    seq.push_back(pick);
    f = after | (std::uint64_t{1} << pick);
  }
  return seq;
}

// Each round ignite the unburned vertex maximising the next round's spread.
std::vector<int> greedy_play(const CompiledGame& g) {
  std::vector<int> seq;
  std::uint64_t f = 0;
  while (f != g.full_mask()) {
    std::uint64_t after = g.step(f);
    int best = -1, best_score = -1;
    for (int u = 0; u < g.n(); ++u) {
      if (f >> u & 1) continue;
      std::uint64_t next = after | (std::uint64_t{1} << u);
      int score = std::popcount(g.step(next));
      if (score > best_score) {
        best_score = score;
        best = u;
      }
    }
    seq.push_back(best);
    f = after | (std::uint64_t{1} << best);
  }
  return seq;
}

}  // namespace

int LazyResult::value() const {
  if (!exact()) throw std::logic_error("lazy result is not exact");
  return upper;
}

int BurnResult::value() const {
  if (!exact()) throw std::logic_error("burn result is not exact");
  return upper;
}

int lazy_lower_bound(const Hypergraph& h, const Proportion& p) {
  int n = h.vertex_count();
  bool any_flammable = false;
  for (const auto& e : h.edges())
    any_flammable |= is_flammable(classify_edge(p, static_cast<int>(e.size())));
  if (!any_flammable) return n;

  if (n <= 64) {
    CompiledGame g(h, p);
    int bound = std::popcount(g.uncovered_mask());
    for (const auto& c : flammable_components(g)) bound += c.min_tau;
    return bound;
  }
  // Large instances: same bound computed on the generic structures.
  Hypergraph s = strip_nonflammable(h, p);
  auto comps = components(s);
  auto inc = s.incidence();
  int bound = 0;
  for (const auto& comp : comps) {
    bool covered = false;
    int min_tau = 0;
    for (int v : comp)
      for (int e : inc[v]) {
        covered = true;
        int t = threshold(p, s.edge_size(e));
        min_tau = min_tau == 0 ? t : std::min(min_tau, t);
      }
    bound += covered ? min_tau : static_cast<int>(comp.size());
  }
  return bound;
}

std::vector<int> greedy_lazy_upper(const Hypergraph& h, const Proportion& p) {
  int n = h.vertex_count();
  Hypergraph s = strip_nonflammable(h, p);
  std::vector<char> covered(n, 0);
  for (const auto& e : s.edges())
    for (int v : e) covered[v] = 1;

  std::vector<int> picked;
  std::vector<char> in_set(n, 0);
  for (int v = 0; v < n; ++v)
    if (!covered[v]) {
      picked.push_back(v);
      in_set[v] = 1;
    }

  std::vector<int> tau(s.edge_count());
  for (int e = 0; e < s.edge_count(); ++e) tau[e] = threshold(p, s.edge_size(e));

  while (!closure(s, p, picked).state.all()) {
    std::vector<int> gain(n, 0);
    for (int e = 0; e < s.edge_count(); ++e) {
      int have = 0;
      for (int v : s.edge(e)) have += in_set[v];
      if (have >= tau[e]) continue;
      for (int v : s.edge(e))
        if (!in_set[v]) ++gain[v];
    }
    int best = -1;
    for (int v = 0; v < n; ++v)
      if (!in_set[v] && (best < 0 || gain[v] > gain[best])) best = v;
    if (best < 0 || gain[best] == 0) break;  // unreachable for flammable edges
    picked.push_back(best);
    in_set[best] = 1;
  }
  std::sort(picked.begin(), picked.end());
  return picked;
}

LazyResult lazy_burning_number(const Hypergraph& h, const Proportion& p,
                               const SolveLimits& limits) {
  LazyResult out;
  int n = h.vertex_count();
  if (n > limits.max_vertices || n > 64) {
    out.lower = lazy_lower_bound(h, p);
    out.witness = greedy_lazy_upper(h, p);
    out.upper = static_cast<int>(out.witness.size());
    // Bounds that already meet certify the greedy witness without a search.
    out.status = out.lower == out.upper ? SolveStatus::Exact : SolveStatus::CapExceeded;
    out.root_lower = out.lower;
    out.root_upper = out.upper;
    return out;
  }

  CompiledGame g(h, p);
  SearchCtx ctx;
  ctx.budget = limits.node_budget;
  LazyMemo memo(BudgetMemo::log2_slots_for(n));

  std::vector<int> order = branch_order(g);
  std::vector<int> witness = mask_to_vertices(g.uncovered_mask());
  int forced = static_cast<int>(witness.size());

  auto comps = flammable_components(g);
  std::vector<std::vector<int>> fallbacks;
  int root_lower = forced;
  int root_upper = forced;
  for (const auto& comp : comps) {
    fallbacks.push_back(greedy_component_set(g, comp));
    root_lower += comp.min_tau;
    root_upper += static_cast<int>(fallbacks.back().size());
  }

  int total_lower = forced;
  int total_upper = forced;
  bool exact = true;
  for (std::size_t i = 0; i < comps.size(); ++i) {
    if (!exact) {
      // Budget already gone: count the remaining components at their bounds.
      total_lower += comps[i].min_tau;
      total_upper += static_cast<int>(fallbacks[i].size());
      witness.insert(witness.end(), fallbacks[i].begin(), fallbacks[i].end());
      continue;
    }
    int value = 0, reached = 0;
    std::vector<int> comp_witness;
    LazyComponentSearch search(g, comps[i], order, ctx, memo);
    if (search.run(comps[i].min_tau, fallbacks[i], &value, &comp_witness, &reached)) {
      total_lower += value;
      total_upper += value;
      witness.insert(witness.end(), comp_witness.begin(), comp_witness.end());
    } else {
      exact = false;
      total_lower += reached;
      total_upper += static_cast<int>(fallbacks[i].size());
      witness.insert(witness.end(), fallbacks[i].begin(), fallbacks[i].end());
    }
  }

  std::sort(witness.begin(), witness.end());
  out.status = exact ? SolveStatus::Exact : SolveStatus::Interval;
  out.lower = total_lower;
  out.upper = total_upper;
  out.witness = std::move(witness);
  out.nodes = ctx.nodes;
  out.root_lower = root_lower;
  out.root_upper = root_upper;
  return out;
}

BurnResult burning_number(const Hypergraph& h, const Proportion& p, const SolveLimits& limits) {
  BurnResult out;
  int n = h.vertex_count();
  if (n > limits.max_vertices || n > 64) {
    out.lower = std::max(lazy_lower_bound(h, p), n >= 2 ? 2 : 1);
    // A valid play on the generic engine: ignite the first unburned vertex
    // every round.
    FireState f(n);
    while (!f.all()) {
      int u = 0;
      while (f.test(u)) ++u;
      FireState next = propagate_step(h, p, f);
      next.set(u);
      f = next;
      out.witness.push_back(u);
    }
    out.upper = static_cast<int>(out.witness.size());
    out.status = out.lower == out.upper ? SolveStatus::Exact : SolveStatus::CapExceeded;
    out.root_lower = out.lower;
    out.root_upper = out.upper;
    return out;
  }

  CompiledGame g(h, p);

  // Without flammable edges every vertex is its own source.
  if (g.edge_count() == 0) {
    out.lower = out.upper = n;
    out.witness.resize(n);
    std::iota(out.witness.begin(), out.witness.end(), 0);
    out.root_lower = out.root_upper = n;
    return out;
  }

  LazyResult lazy = lazy_burning_number(h, p, limits);
  int lower = std::max(lazy.lower, n >= 2 ? 2 : 1);
  if (g.uncovered_mask() == 0) lower = std::max(lower, lazy.lower + 1);

  std::vector<int> seed = lazy.exact() ? lazy.witness : greedy_lazy_upper(h, p);
  std::vector<int> ub_seq = play_from_list(g, seed);
  std::vector<int> greedy_seq = greedy_play(g);
  if (greedy_seq.size() < ub_seq.size()) ub_seq = greedy_seq;
  int upper = static_cast<int>(ub_seq.size());

  SearchCtx ctx;
  ctx.budget = limits.node_budget;
  BurnSearch search(g, ctx);
  for (int depth = lower; depth < upper; ++depth) {
    std::vector<int> seq;
    if (search.found_at_depth(depth, &seq)) {
      out.status = SolveStatus::Exact;
      out.lower = out.upper = depth;
      out.witness = std::move(seq);
      out.nodes = ctx.nodes;
      out.root_lower = lower;
      out.root_upper = upper;
      return out;
    }
    if (ctx.aborted) {
      out.status = SolveStatus::Interval;
      out.lower = depth;
      out.upper = upper;
      out.witness = std::move(ub_seq);
      out.nodes = ctx.nodes;
      out.root_lower = lower;
      out.root_upper = upper;
      return out;
    }
  }
  out.status = SolveStatus::Exact;
  out.lower = out.upper = upper;
  out.witness = std::move(ub_seq);
  out.nodes = ctx.nodes;
  out.root_lower = lower;
  out.root_upper = upper;
  return out;
}

int brute_force_lazy(const Hypergraph& h, const Proportion& p) {
  int n = h.vertex_count();
  if (n > 20) throw std::invalid_argument("brute-force lazy oracle supports at most 20 vertices");
  CompiledGame g(h, p);
  CompiledGame::Workspace ws;
  std::uint64_t full = g.full_mask();
  for (int size = 0; size <= n; ++size) {
    if (size == 0) {
      if (g.close(0, ws) == full) return 0;
      continue;
    }
    // Gosper's hack over size-subsets of n bits.
    std::uint64_t set = (std::uint64_t{1} << size) - 1;
    std::uint64_t limit = std::uint64_t{1} << n;
    while (set < limit) {
      if (g.close(set, ws) == full) return size;
      std::uint64_t c = set & -set;
      std::uint64_t r = set + c;
      set = (((r ^ set) >> 2) / c) | r;
    }
  }
  return n;
}

int brute_force_burn(const Hypergraph& h, const Proportion& p) {
  int n = h.vertex_count();
  if (n > 20) throw std::invalid_argument("brute-force burn oracle supports at most 20 vertices");
  CompiledGame g(h, p);
  std::uint64_t full = g.full_mask();
  std::vector<char> seen(std::size_t{1} << n, 0);
  std::vector<std::uint64_t> layer{0};
  seen[0] = 1;
  for (int round = 1;; ++round) {
    std::vector<std::uint64_t> next_layer;
    for (std::uint64_t f : layer) {
      std::uint64_t after = g.step(f);
      for (std::uint64_t bits = full & ~f; bits; bits &= bits - 1) {
        std::uint64_t next = after | (bits & -bits);
        if (next == full) return round;
        if (!seen[next]) {
          seen[next] = 1;
          next_layer.push_back(next);
        }
      }
    }
    if (next_layer.empty())
      throw std::logic_error("burn oracle frontier emptied before reaching the full state");
    layer = std::move(next_layer);
  }
}

namespace {

template <class R>
std::string serialize_common(const R& r) {
  std::string out;
  if (r.status == SolveStatus::Exact)
    out = std::to_string(r.upper);
  else
    out = std::to_string(r.lower) + ".." + std::to_string(r.upper);
  for (int v : r.witness) out += " " + std::to_string(v);
  out += " nodes=" + std::to_string(r.nodes);
  out += " status=";
  switch (r.status) {
    case SolveStatus::Exact: out += "exact"; break;
    case SolveStatus::Interval: out += "interval"; break;
    case SolveStatus::CapExceeded: out += "cap-exceeded"; break;
  }
  return out;
}

}  // namespace

std::string serialize_result(const LazyResult& r) { return serialize_common(r); }
std::string serialize_result(const BurnResult& r) { return serialize_common(r); }

}  // namespace hb
