#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "hyperburn/hypergraph.hpp"
#include "hyperburn/solvers.hpp"

namespace hb {

// A balanced incomplete block design: blocks are hyperedges, repeated blocks
// are parallel edges.
struct Design {
  Hypergraph hg;
  int v = 0;
  int k = 0;
  int lambda = 0;
  int r = 0;  // replication number lambda*(v-1)/(k-1)
  int b = 0;  // block count lambda*v*(v-1)/(k*(k-1))
  std::string name;
  std::vector<std::string> labels;  // original point labels, when not 0..v-1
};

// Full verification: block sizes, every pair covered exactly lambda times,
// derived replication and block counts. Throws ValidationError naming the
// first offending block or pair.
Design validate_bibd(const Hypergraph& h, int v, int k, int lambda, std::string name = "");

// Every block duplicated: parameters (v,k,2*lambda).
Design double_design(const Design& d);

// Block multisets concatenated: parameters (v,k,lambda1+lambda2).
Design merge_designs(const Design& a, const Design& b);

std::string u128_to_string(unsigned __int128 x);

// Automorphisms of the incidence structure: a point permutation together
// with a block-multiset matching. The order factors as the number of
// multiset-preserving point permutations times the product of the
// factorials of the block multiplicities.
struct AutResult {
  unsigned long long point_stabilizer_count = 0;
  unsigned __int128 multiplicity_factor = 1;
  unsigned __int128 order = 0;

  std::string order_str() const { return u128_to_string(order); }
};

// Exhaustive scan over all v! point permutations; at most 10 vertices.
AutResult automorphism_order_brute(const Hypergraph& h);

// Backtracking over a refined vertex partition of the point-block incidence
// structure, counted through the stabilizer chain; at most 16 vertices.
// Refuses larger inputs rather than approximating.
AutResult automorphism_order(const Hypergraph& h);

struct CorrelationRow {
  std::string name;
  int v = 0, k = 0, lambda = 0;
  SolveStatus lazy_status = SolveStatus::Exact;
  int lazy_lower = 0;
  int lazy_upper = 0;
  AutResult aut;
};

// Lazy burning number under the original spread rule (proportion (k-1)/k)
// next to the automorphism group order, one row per design, sorted by
// parameters.
std::vector<CorrelationRow> correlation_report(const std::vector<Design>& corpus,
                                               const SolveLimits& limits = {});

// CSV "name,v,k,lambda,b_L,aut_order" plus '#' rank-agreement lines per
// parameter class.
std::string correlation_csv(const std::vector<CorrelationRow>& rows);

// Corpus text format: per design a line "BIBD v k lambda name" followed by
// its block lines; '#' starts a comment. Every design is validated on load.
// Points may be arbitrary labels; non-index labels are mapped through a
// stored label table in sorted order.
std::vector<Design> parse_design_corpus(std::string_view text);
std::string serialize_design_corpus(const std::vector<Design>& corpus);

// Constructible catalog.
Design fano();                  // (7,3,1)
Design ag23();                  // (9,3,1), the affine plane of order 3
Design sts13_cyclic();          // (13,3,1) #1
Design sts13_noncyclic();       // (13,3,1) #2, by switching a quadrilateral
Design sts15_points_lines();    // (15,3,1) #1, points/lines of the binary projective space
Design bibd_13_4_1();           // the projective plane of order 3
Design bibd_16_4_1();           // the affine plane of order 4

// The designs shipped with the tool: the catalog plus doubled/tripled
// classics, sorted by parameters.
std::vector<Design> shipped_corpus();

}  // namespace hb
