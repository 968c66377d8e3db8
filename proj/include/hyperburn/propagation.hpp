#pragma once

#include <string>
#include <vector>

#include "hyperburn/firestate.hpp"
#include "hyperburn/hypergraph.hpp"

namespace hb {

// One synchronous round of fire spread: every edge with at least tau(e)
// burning vertices ignites completely, all such edges firing at once.
FireState propagate_step(const Hypergraph& h, const Proportion& p, const FireState& f);

struct ClosureResult {
  FireState state;
  int steps;  // productive propagation rounds until the fixpoint
};

// Least fixpoint of propagate_step containing the seed.
ClosureResult closure(const Hypergraph& h, const Proportion& p, const FireState& seed);
ClosureResult closure(const Hypergraph& h, const Proportion& p, const std::vector<int>& seed);

bool is_lazy_burning_set(const Hypergraph& h, const Proportion& p, const std::vector<int>& s);

struct RoundOutcome {
  bool valid = true;
  int invalid_index = -1;  // position of the offending source when !valid
  bool fully_burned = false;
  int rounds = 0;
  std::vector<FireState> trace;  // F_0 .. F_rounds
  std::vector<bool> redundant;   // one flag per consumed source
};

// Plays the round-based game with the given source sequence. Each round,
// propagation from the previous state and ignition of the next source happen
// simultaneously; a source already burning at the end of the previous round
// invalidates the sequence, as does any source after the hypergraph is fully
// burned.
RoundOutcome simulate_round_game(const Hypergraph& h, const Proportion& p,
                                 const std::vector<int>& sources);

// One line per round: newly burned vertices in ascending order, the source
// suffixed '*' (or 'R' when redundant).
std::string format_trace(const RoundOutcome& outcome, const std::vector<int>& sources);

}  // namespace hb
