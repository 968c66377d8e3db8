#pragma once

#include <cstdint>
#include <vector>

#include "hyperburn/hypergraph.hpp"

namespace hb {

// Mask-based propagation engine for hypergraphs with at most 64 vertices.
// Non-flammable edges are dropped at build time: they can never fire, so the
// propagation behaviour is unchanged. Search code runs on this engine; the
// generic FireState engine is the reference it is tested against.
class CompiledGame {
 public:
  CompiledGame(const Hypergraph& h, const Proportion& p);

  int n() const { return n_; }
  std::uint64_t full_mask() const { return full_; }
  int edge_count() const { return static_cast<int>(mask_.size()); }
  const std::vector<std::uint64_t>& edge_masks() const { return mask_; }
  const std::vector<int>& taus() const { return tau_; }
  // Vertices contained in no flammable edge; fire can never reach them.
  std::uint64_t uncovered_mask() const { return uncovered_; }

  std::uint64_t step(std::uint64_t f) const;

  struct Workspace {
    std::vector<int> burning_in;
    std::vector<char> fired;
    std::vector<int> frontier;
    std::vector<int> next;
  };

  std::uint64_t close(std::uint64_t f, Workspace& ws, int* steps = nullptr) const;
  std::uint64_t close(std::uint64_t f, int* steps = nullptr) const;

 private:
  int n_;
  std::uint64_t full_;
  std::uint64_t uncovered_;
  std::vector<std::uint64_t> mask_;
  std::vector<int> tau_;
  std::vector<std::vector<int>> incident_;  // vertex -> flammable edge ids
};

}  // namespace hb
