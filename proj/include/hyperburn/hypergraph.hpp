#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "hyperburn/rational.hpp"

namespace hb {

// Finite hypergraph on vertices 0..n-1. Edges form an ordered multiset:
// parallel edges are kept, but vertices are deduplicated within an edge.
class Hypergraph {
 public:
  explicit Hypergraph(int n);
  Hypergraph(int n, std::vector<std::vector<int>> edges);

  void add_edge(std::vector<int> edge);

  int vertex_count() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<int>& edge(int i) const { return edges_[i]; }
  int edge_size(int i) const { return static_cast<int>(edges_[i].size()); }
  const std::vector<std::vector<int>>& edges() const { return edges_; }

  std::vector<int> degrees() const;
  // vertex -> indices of incident edges
  std::vector<std::vector<int>> incidence() const;

  // Distinct edge sizes in increasing order.
  std::vector<int> distinct_edge_sizes() const;

  // Copy with edges sorted lexicographically (parallel copies adjacent).
  Hypergraph canonical() const;

  // Equality as (vertex count, edge multiset).
  friend bool operator==(const Hypergraph& a, const Hypergraph& b);

 private:
  int n_;
  std::vector<std::vector<int>> edges_;
};

// Flammability with respect to a proportion. Singleton edges are reported
// NonFlammable: they can never spread fire. For edges of two or more
// vertices, HighlyFlammable refines Flammable.
enum class EdgeClass { NonFlammable, Flammable, HighlyFlammable };

inline bool is_flammable(EdgeClass c) { return c != EdgeClass::NonFlammable; }

// tau = ceil(p * size): how many burning vertices make the edge spread fire.
int threshold(const Proportion& p, int size);

EdgeClass classify_edge(const Proportion& p, int size);

// Same vertex set, non-flammable edges removed. Both game values are
// preserved by this transformation.
Hypergraph strip_nonflammable(const Hypergraph& h, const Proportion& p);

// k-uniform tight path: the n-k+1 consecutive k-windows of 0..n-1.
Hypergraph gen_tight_path(int k, int n);

// Edges {0,1}, {0,1,2}, ..., {0,...,n-1}: n-1 nested edges.
Hypergraph gen_nested_chain(int n);

Hypergraph gen_single_edge(int k);

// Fixed small fixtures: "fig1", "fig2", "fig4", "fig5".
Hypergraph gen_figure(const std::string& name);
std::vector<std::string> figure_names();

// Text format: optional '#' comment lines, then "n m", then m lines of
// space-separated vertex indices. Serialization always emits canonical form.
Hypergraph parse_hypergraph(std::string_view text);
std::string serialize_hypergraph(const Hypergraph& h);

// Connected components (isolated vertices are singleton components),
// each sorted, ordered by smallest member.
std::vector<std::vector<int>> components(const Hypergraph& h);
bool is_connected(const Hypergraph& h);

// Copy with vertex v renamed to new_index_of[v] (a permutation of 0..n-1).
Hypergraph relabel(const Hypergraph& h, const std::vector<int>& new_index_of);

}  // namespace hb
