#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hyperburn/hypergraph.hpp"

namespace hb {

struct SolveLimits {
  int max_vertices = 64;                    // hard cap for the exact search
  std::uint64_t node_budget = 10'000'000;   // search nodes per solve
};

enum class SolveStatus {
  Exact,        // value proved optimal, witness attached
  Interval,     // node budget ran out; only [lower, upper] is certified
  CapExceeded,  // instance larger than the configured vertex cap
};

struct LazyResult {
  SolveStatus status = SolveStatus::Exact;
  int lower = 0;
  int upper = 0;
  std::vector<int> witness;  // a lazy burning set of size `upper`
  std::uint64_t nodes = 0;
  int root_lower = 0;  // bounds at the search root
  int root_upper = 0;

  bool exact() const { return status == SolveStatus::Exact; }
  int value() const;  // requires exact()
};

struct BurnResult {
  SolveStatus status = SolveStatus::Exact;
  int lower = 0;
  int upper = 0;
  std::vector<int> witness;  // a valid burning sequence of length `upper`
  std::uint64_t nodes = 0;
  int root_lower = 0;
  int root_upper = 0;

  bool exact() const { return status == SolveStatus::Exact; }
  int value() const;
};

// Componentwise lower bound: vertices no flammable edge can ever reach must
// burn on their own, and each component with flammable edges needs at least
// the smallest threshold among them. Returns |V| when nothing is flammable.
int lazy_lower_bound(const Hypergraph& h, const Proportion& p);

// Greedy set meeting every flammable edge's threshold, seeded with all
// vertices outside flammable edges; stops as soon as its closure is V.
// The result is always a lazy burning set.
std::vector<int> greedy_lazy_upper(const Hypergraph& h, const Proportion& p);

// Exact lazy burning number with witness: components are solved independently
// by branch and bound over closure states and the sizes are summed.
LazyResult lazy_burning_number(const Hypergraph& h, const Proportion& p,
                               const SolveLimits& limits = {});

// Exact burning number with witness: iterative deepening over the round count
// with transposition pruning on (state, rounds remaining).
BurnResult burning_number(const Hypergraph& h, const Proportion& p,
                          const SolveLimits& limits = {});

// Exhaustive reference oracles, usable up to 20 vertices. The lazy oracle
// enumerates vertex subsets by increasing cardinality; the burn oracle runs
// breadth-first search over end-of-round fire states.
int brute_force_lazy(const Hypergraph& h, const Proportion& p);
int brute_force_burn(const Hypergraph& h, const Proportion& p);

// "value witness... nodes=N status=exact" (interval results show lower..upper).
std::string serialize_result(const LazyResult& r);
std::string serialize_result(const BurnResult& r);

}  // namespace hb
