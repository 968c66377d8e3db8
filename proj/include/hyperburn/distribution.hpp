#pragma once

#include <string>
#include <vector>

#include "hyperburn/hypergraph.hpp"
#include "hyperburn/solvers.hpp"

namespace hb {

// Half-open interval of proportions. Intervals are (lo,hi]; the rightmost
// interval of a distribution has hi == 1 and is read as the open (lo,1).
struct RationalInterval {
  Rational lo;
  Rational hi;

  bool open_right() const { return hi == Rational{1, 1}; }
  friend bool operator==(const RationalInterval&, const RationalInterval&) = default;
};

enum class DistKind { Burning, Lazy };

struct DistEntry {
  RationalInterval interval;
  SolveStatus status = SolveStatus::Exact;
  int value = 0;  // exact entries
  int lower = 0;  // non-exact entries carry certified bounds
  int upper = 0;
};

// Piecewise-constant burning profile over p in (0,1): ordered disjoint
// intervals covering (0,1), adjacent exact entries merged.
struct Distribution {
  DistKind kind = DistKind::Lazy;
  int n = 0;
  std::vector<DistEntry> entries;

  bool all_exact() const;
};

// Every j/x for each distinct edge size x (1 <= j < x), deduplicated as
// rationals and sorted. Between consecutive breakpoints all edge thresholds
// are constant. Edgeless hypergraphs (and all-singleton ones) have none.
std::vector<Proportion> breakpoints(const Hypergraph& h);

// Evaluates the chosen number at every breakpoint (each right endpoint stands
// for the interval ending there) and at the midpoint of the final open
// interval, then merges equal neighbours. Probes run independently, so they
// may be spread over `threads` workers; assembly order is fixed.
Distribution compute_distribution(const Hypergraph& h, DistKind kind,
                                  const SolveLimits& limits = {}, int threads = 1);

// The ordered list of realized values; requires an all-exact distribution.
std::vector<int> condensed(const Distribution& d);

// "1, 3, 7"; spans that are only bounded render as "<=9".
std::string condensed_text(const Distribution& d);

// The k canonical intervals (m/k,(m+1)/k] plus ((k-1)/k,1).
std::vector<RationalInterval> k_uniform_expected_intervals(int k);

// 1 - l + sum of the l distinct sizes: the most intervals any distribution
// over these edge sizes can have.
long long max_interval_count(const std::vector<int>& sizes);

std::string to_json(const Distribution& d);

}  // namespace hb
