#include "hyperburn/compiled_game.hpp"

#include <bit>
#include <stdexcept>

namespace hb {

CompiledGame::CompiledGame(const Hypergraph& h, const Proportion& p) : n_(h.vertex_count()) {
  if (n_ > 64) throw std::invalid_argument("compiled engine supports at most 64 vertices");
  full_ = n_ == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n_) - 1;
  incident_.resize(n_);
  std::uint64_t covered = 0;
  for (int i = 0; i < h.edge_count(); ++i) {
    const auto& e = h.edge(i);
    int size = static_cast<int>(e.size());
    if (!is_flammable(classify_edge(p, size))) continue;
    std::uint64_t m = 0;
    for (int v : e) m |= std::uint64_t{1} << v;
    int id = static_cast<int>(mask_.size());
    mask_.push_back(m);
    tau_.push_back(threshold(p, size));
    for (int v : e) incident_[v].push_back(id);
    covered |= m;
  }
  uncovered_ = full_ & ~covered;
}

std::uint64_t CompiledGame::step(std::uint64_t f) const {
  std::uint64_t next = f;
  for (std::size_t i = 0; i < mask_.size(); ++i)
    if (std::popcount(mask_[i] & f) >= tau_[i]) next |= mask_[i];
  return next;
}

std::uint64_t CompiledGame::close(std::uint64_t f, Workspace& ws, int* steps) const {
  const int m = static_cast<int>(mask_.size());
  ws.burning_in.assign(m, 0);
  ws.fired.assign(m, 0);
  ws.frontier.clear();

  std::uint64_t cur = f;
  for (std::uint64_t bits = f; bits; bits &= bits - 1) {
    int v = std::countr_zero(bits);
    ws.frontier.push_back(v);
    for (int e : incident_[v]) ++ws.burning_in[e];
  }

  int rounds = 0;
  while (!ws.frontier.empty()) {
    std::uint64_t newly = 0;
    for (int v : ws.frontier)
      for (int e : incident_[v])
        if (!ws.fired[e] && ws.burning_in[e] >= tau_[e]) {
          ws.fired[e] = 1;
          newly |= mask_[e] & ~cur;
        }
    if (!newly) break;
    ++rounds;
    cur |= newly;
    ws.next.clear();
    for (std::uint64_t bits = newly; bits; bits &= bits - 1) {
      int v = std::countr_zero(bits);
      ws.next.push_back(v);
      for (int e : incident_[v]) ++ws.burning_in[e];
    }
    ws.frontier.swap(ws.next);
  }
  if (steps) *steps = rounds;
  return cur;
}

std::uint64_t CompiledGame::close(std::uint64_t f, int* steps) const {
  Workspace ws;
  return close(f, ws, steps);
}

}  // namespace hb
