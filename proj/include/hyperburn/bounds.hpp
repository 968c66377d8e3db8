#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hyperburn/distribution.hpp"
#include "hyperburn/hypergraph.hpp"
#include "hyperburn/solvers.hpp"

namespace hb {

struct PropertyReport {
  enum class Status { Holds, Violated, Skipped };

  std::string property;
  std::string inputs;
  Status status = Status::Holds;
  std::string detail;  // skip reason, bound values, or a re-checkable witness

  bool violated() const { return status == Status::Violated; }
};

std::string to_json_line(const PropertyReport& r);

// Exact solver outputs for one proportion; the raw material for the checks.
struct SolvedPoint {
  Proportion p;
  int lazy;
  int burn;
};

// Runs every applicable bound from the general-results toolkit against the
// supplied exact values. Inapplicable hypotheses come back as Skipped with
// the failing hypothesis named. The original-rule comparison needs the values
// at p=(k-1)/k on a k-uniform hypergraph; pass them when available, otherwise
// they are computed with `limits`.
std::vector<PropertyReport> check_theorems(const Hypergraph& h, const Proportion& p, int lazy,
                                           int burn,
                                           std::optional<std::pair<int, int>> original_rule = {},
                                           const SolveLimits& limits = {});

// Monotonicity of both numbers in p across a profile of exact solutions.
std::vector<PropertyReport> check_monotone_profile(const Hypergraph& h,
                                                   std::vector<SolvedPoint> profile);

// ceil(a) + floor(b) <= ceil(a+b), exactly.
bool ceil_floor_lemma_check(const Rational& a, const Rational& b);

// SplitMix64: tiny, well-known, identical on every platform.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}
  std::uint64_t next();
  // Uniform value in [0, n) by rejection; n >= 1.
  std::uint64_t bounded(std::uint64_t n);

 private:
  std::uint64_t state_;
};

struct RandomHypergraphParams {
  int n = 8;
  int m = 5;
  int size_lo = 2;
  int size_hi = 5;
  bool dedup = false;      // reject duplicate edges (gives up after 64 misses)
  bool connected = false;  // regenerate until connected
};

Hypergraph random_hypergraph(const RandomHypergraphParams& params, std::uint64_t seed);

// Containment of every lazy interval in some burning interval, per sample.
// A candidate violation is re-validated against the brute-force oracles
// before it is reported. Trials are independent and merged by index.
std::vector<PropertyReport> probe_conjecture_interval_containment(
    const RandomHypergraphParams& params, int trials, std::uint64_t seed,
    const SolveLimits& limits = {}, int threads = 1);

// The ceil(p|V|) lazy upper bound on connected, fully flammable samples,
// plus the two fixed shapes that defeat the inductive proof (p=13/20 with
// x=2,y=3 and p=2/5 with x=1,y=2). Violations re-validated by brute force.
std::vector<PropertyReport> probe_conjecture_ceil_pv(const RandomHypergraphParams& params,
                                                     int trials, std::uint64_t seed,
                                                     const SolveLimits& limits = {},
                                                     int threads = 1);

// The projective-plane BIBD(13,4,1) gap sequence across its quarter
// intervals is (1,1,2,0): the burn/lazy gap rises and then collapses, so the
// gap is not monotone in p. Also reports the single-edge gap baseline.
std::vector<PropertyReport> check_difference_nonmonotone_example(const SolveLimits& limits = {});

}  // namespace hb
