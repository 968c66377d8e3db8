#include "hyperburn/propagation.hpp"

#include <bit>
#include <stdexcept>

namespace hb {

FireState::FireState(int n) : n_(n), w_((n + 63) / 64, 0) {
  if (n < 0) throw std::invalid_argument("negative bit vector length");
}

FireState FireState::from_vertices(int n, const std::vector<int>& vs) {
  FireState f(n);
  for (int v : vs) {
    if (v < 0 || v >= n) throw std::invalid_argument("vertex out of range");
    f.set(v);
  }
  return f;
}

int FireState::count() const {
  int c = 0;
  for (auto w : w_) c += std::popcount(w);
  return c;
}

bool FireState::none() const {
  for (auto w : w_)
    if (w) return false;
  return true;
}

bool FireState::all() const { return count() == n_; }

bool FireState::is_subset_of(const FireState& other) const {
  for (std::size_t i = 0; i < w_.size(); ++i)
    if (w_[i] & ~other.w_[i]) return false;
  return true;
}

FireState& FireState::operator|=(const FireState& other) {
  for (std::size_t i = 0; i < w_.size(); ++i) w_[i] |= other.w_[i];
  return *this;
}

std::vector<int> FireState::vertices() const {
  std::vector<int> out;
  for (int v = 0; v < n_; ++v)
    if (test(v)) out.push_back(v);
  return out;
}

FireState propagate_step(const Hypergraph& h, const Proportion& p, const FireState& f) {
  FireState next = f;
  for (int i = 0; i < h.edge_count(); ++i) {
    const auto& e = h.edge(i);
    int burning = 0;
    for (int v : e) burning += f.test(v);
    if (burning >= threshold(p, static_cast<int>(e.size())))
      for (int v : e) next.set(v);
  }
  return next;
}

ClosureResult closure(const Hypergraph& h, const Proportion& p, const FireState& seed) {
  const int m = h.edge_count();

  std::vector<int> tau(m);
  std::vector<int> burning_in(m, 0);
  std::vector<char> fired(m, 0);
  auto inc = h.incidence();

  FireState cur = seed;
  std::vector<int> frontier = seed.vertices();
  for (int v : frontier)
    for (int e : inc[v]) ++burning_in[e];
  for (int i = 0; i < m; ++i) tau[i] = threshold(p, h.edge_size(i));

  int steps = 0;
  while (!frontier.empty()) {
    // Collect every edge whose threshold is met, then ignite them together:
    // the round is synchronous, so counters update only after all fire.
    // Frontier incidence covers every edge whose counter changed, and tau >= 1
    // means an eligible edge always touches the frontier.
    std::vector<int> firing;
    for (int v : frontier)
      for (int e : inc[v])
        if (!fired[e] && burning_in[e] >= tau[e]) {
          fired[e] = 1;
          firing.push_back(e);
        }
    std::vector<int> newly;
    for (int e : firing)
      for (int v : h.edge(e))
        if (!cur.test(v)) {
          cur.set(v);
          newly.push_back(v);
        }
    if (newly.empty()) break;
    ++steps;
    for (int v : newly)
      for (int e : inc[v]) ++burning_in[e];
    frontier = std::move(newly);
  }
  return ClosureResult{cur, steps};
}

ClosureResult closure(const Hypergraph& h, const Proportion& p, const std::vector<int>& seed) {
  return closure(h, p, FireState::from_vertices(h.vertex_count(), seed));
}

bool is_lazy_burning_set(const Hypergraph& h, const Proportion& p, const std::vector<int>& s) {
  return closure(h, p, s).state.all();
}

RoundOutcome simulate_round_game(const Hypergraph& h, const Proportion& p,
                                 const std::vector<int>& sources) {
  if (sources.empty()) throw std::invalid_argument("source sequence must be nonempty");
  const int n = h.vertex_count();
  RoundOutcome out;
  FireState f(n);
  out.trace.push_back(f);
  for (std::size_t i = 0; i < sources.size(); ++i) {
    int u = sources[i];
    if (f.all() || u < 0 || u >= n || f.test(u)) {
      out.valid = false;
      out.invalid_index = static_cast<int>(i);
      break;
    }
    FireState next = propagate_step(h, p, f);
    out.redundant.push_back(next.test(u));
    next.set(u);
    f = next;
    out.trace.push_back(f);
    ++out.rounds;
  }
  out.fully_burned = out.valid && f.all();
  return out;
}

std::string format_trace(const RoundOutcome& outcome, const std::vector<int>& sources) {
  std::string out;
  for (int r = 1; r <= outcome.rounds; ++r) {
    const FireState& prev = outcome.trace[r - 1];
    const FireState& cur = outcome.trace[r];
    int source = sources[r - 1];
    bool first = true;
    for (int v = 0; v < cur.size(); ++v) {
      if (!cur.test(v) || prev.test(v)) continue;
      if (!first) out += ' ';
      first = false;
      out += std::to_string(v);
      if (v == source) out += outcome.redundant[r - 1] ? 'R' : '*';
    }
    out += '\n';
  }
  return out;
}

}  // namespace hb
