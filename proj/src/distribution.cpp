#include "hyperburn/distribution.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include <json.hpp>

#include "hyperburn/parallel.hpp"

namespace hb {

bool Distribution::all_exact() const {
  for (const auto& e : entries)
    if (e.status != SolveStatus::Exact) return false;
  return true;
}

std::vector<Proportion> breakpoints(const Hypergraph& h) {
  std::set<Rational> points;
  for (int size : h.distinct_edge_sizes())
    for (int j = 1; j < size; ++j) points.insert(Rational(j, size));
  std::vector<Proportion> out;
  for (const auto& r : points) out.emplace_back(r);
  return out;
}

namespace {

struct Probe {
  Proportion p;
  SolveStatus status;
  int value;
  int lower;
  int upper;
};

Probe solve_at(const Hypergraph& h, DistKind kind, const Proportion& p, const SolveLimits& lim) {
  if (kind == DistKind::Lazy) {
    LazyResult r = lazy_burning_number(h, p, lim);
    return Probe{p, r.status, r.exact() ? r.value() : 0, r.lower, r.upper};
  }
  BurnResult r = burning_number(h, p, lim);
  return Probe{p, r.status, r.exact() ? r.value() : 0, r.lower, r.upper};
}

}  // namespace

Distribution compute_distribution(const Hypergraph& h, DistKind kind, const SolveLimits& limits,
                                  int threads) {
  std::vector<Proportion> bps = breakpoints(h);
  std::vector<Proportion> probes = bps;
  // One interior point of the last open interval; any point gives its value.
  Rational last = bps.empty() ? Rational{0, 1} : bps.back().rational();
  probes.emplace_back(midpoint(last, Rational{1, 1}));

  std::vector<Probe> results(probes.size(),
                             Probe{probes[0], SolveStatus::Exact, 0, 0, 0});
  run_indexed(static_cast<int>(probes.size()), threads,
              [&](int i) { results[i] = solve_at(h, kind, probes[i], limits); });

  Distribution dist;
  dist.kind = kind;
  dist.n = h.vertex_count();
  Rational left{0, 1};
  for (std::size_t i = 0; i < results.size(); ++i) {
    Rational right = i < bps.size() ? bps[i].rational() : Rational{1, 1};
    const Probe& pr = results[i];
    bool mergeable = !dist.entries.empty() && pr.status == SolveStatus::Exact &&
                     dist.entries.back().status == SolveStatus::Exact &&
                     dist.entries.back().value == pr.value;
    if (mergeable) {
      dist.entries.back().interval.hi = right;
    } else {
      DistEntry e;
      e.interval = RationalInterval{left, right};
      e.status = pr.status;
      e.value = pr.value;
      e.lower = pr.lower;
      e.upper = pr.upper;
      dist.entries.push_back(e);
    }
    left = right;
  }
  return dist;
}

std::vector<int> condensed(const Distribution& d) {
  if (!d.all_exact()) throw std::logic_error("distribution has undetermined spans");
  std::vector<int> out;
  for (const auto& e : d.entries) out.push_back(e.value);
  return out;
}

std::string condensed_text(const Distribution& d) {
  std::string out;
  for (std::size_t i = 0; i < d.entries.size(); ++i) {
    if (i) out += ", ";
    const auto& e = d.entries[i];
    if (e.status == SolveStatus::Exact)
      out += std::to_string(e.value);
    else
      out += "<=" + std::to_string(e.upper);
  }
  return out;
}

std::vector<RationalInterval> k_uniform_expected_intervals(int k) {
  if (k < 2) throw std::invalid_argument("uniformity needs k >= 2");
  std::vector<RationalInterval> out;
  for (int m = 0; m + 1 < k; ++m)
    out.push_back(RationalInterval{Rational(m, k), Rational(m + 1, k)});
  out.push_back(RationalInterval{Rational(k - 1, k), Rational{1, 1}});
  return out;
}

long long max_interval_count(const std::vector<int>& sizes) {
  std::vector<int> distinct = sizes;
  std::sort(distinct.begin(), distinct.end());
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
  long long sum = 0;
  for (int x : distinct) sum += x;
  return 1 - static_cast<long long>(distinct.size()) + sum;
}

std::string to_json(const Distribution& d) {
  nlohmann::json j;
  j["kind"] = d.kind == DistKind::Lazy ? "lazy" : "burning";
  j["n"] = d.n;
  j["intervals"] = nlohmann::json::array();
  for (const auto& e : d.entries) {
    nlohmann::json iv;
    iv["lo"] = to_string(e.interval.lo);
    iv["hi"] = to_string(e.interval.hi);
    if (e.status == SolveStatus::Exact) {
      iv["value"] = e.value;
    } else {
      iv["status"] = "unknown";
      iv["lower"] = e.lower;
      iv["upper"] = e.upper;
    }
    j["intervals"].push_back(iv);
  }
  return j.dump();
}

}  // namespace hb
