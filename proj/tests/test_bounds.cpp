#include <doctest.h>

#include <map>

#include "hyperburn/bounds.hpp"
#include "hyperburn/designs.hpp"
#include "hyperburn/distribution.hpp"
#include "hyperburn/propagation.hpp"

using namespace hb;

namespace {

std::map<std::string, PropertyReport> by_name(const std::vector<PropertyReport>& reports) {
  std::map<std::string, PropertyReport> out;
  for (const auto& r : reports) out.emplace(r.property, r);
  return out;
}

std::vector<Proportion> probe_points(const Hypergraph& h) {
  std::vector<Proportion> pts = breakpoints(h);
  Rational last = pts.empty() ? Rational{0, 1} : pts.back().rational();
  pts.emplace_back(midpoint(last, Rational{1, 1}));
  return pts;
}

}  // namespace

TEST_CASE("random hypergraphs are reproducible across runs and platforms") {
  RandomHypergraphParams params;
  params.n = 8;
  params.m = 5;
  params.size_lo = 2;
  params.size_hi = 5;
  Hypergraph a = random_hypergraph(params, 1);
  Hypergraph b = random_hypergraph(params, 1);
  CHECK(serialize_hypergraph(a) == serialize_hypergraph(b));
  // Frozen fingerprint of the generator stream.
  CHECK(serialize_hypergraph(a) == "8 5\n0 1 5\n0 1 6 7\n0 2 7\n1 2 3 4 7\n2 6\n");

  params.size_lo = params.size_hi = 3;
  Hypergraph uniform = random_hypergraph(params, 9);
  for (const auto& e : uniform.edges()) CHECK(e.size() == 3);

  params.m = 0;
  CHECK(random_hypergraph(params, 4).edge_count() == 0);

  params.m = 4;
  params.connected = true;
  for (std::uint64_t s = 1; s <= 10; ++s) CHECK(is_connected(random_hypergraph(params, s)));

  params.connected = false;
  params.dedup = true;
  params.n = 3;
  params.size_lo = params.size_hi = 3;
  params.m = 5;  // only one 3-subset exists, so deduplication stops early
  CHECK(random_hypergraph(params, 2).edge_count() == 1);
}

TEST_CASE("theorem suite on the Fano plane") {
  Design d = fano();
  Proportion p(2, 3);
  int lazy = lazy_burning_number(d.hg, p).value();
  int burn = burning_number(d.hg, p).value();
  CHECK(lazy == 3);
  CHECK(burn == 4);
  auto reports = by_name(check_theorems(d.hg, p, lazy, burn));
  for (const auto& [name, r] : reports) CHECK(!r.violated());
  CHECK(reports.at("lazy-lower-min-threshold").status == PropertyReport::Status::Holds);
  CHECK(reports.at("lazy-lt-burn-when-flammable").status == PropertyReport::Status::Holds);
  CHECK(reports.at("reciprocal-ceil-upper").status == PropertyReport::Status::Skipped);
  CHECK(reports.at("original-rule-dominates").status == PropertyReport::Status::Holds);
  CHECK(reports.at("combined-bounds-chain").status == PropertyReport::Status::Holds);
}

TEST_CASE("lower bound is tight on a single edge") {
  Hypergraph h = gen_single_edge(6);
  Proportion p(1, 2);
  int lazy = lazy_burning_number(h, p).value();
  CHECK(lazy == 3);
  auto reports = by_name(check_theorems(h, p, lazy, burning_number(h, p).value()));
  CHECK(reports.at("lazy-lower-min-threshold").detail == "3 <= 3");
  CHECK(reports.at("reciprocal-ceil-upper").status == PropertyReport::Status::Holds);
}

TEST_CASE("strictness check is skipped when a non-flammable edge is present") {
  Hypergraph fig2 = gen_figure("fig2");
  Proportion p(5, 6);
  int lazy = lazy_burning_number(fig2, p).value();
  int burn = burning_number(fig2, p).value();
  CHECK(lazy == 8);
  CHECK(burn == 8);
  auto reports = by_name(check_theorems(fig2, p, lazy, burn));
  CHECK(reports.at("lazy-lt-burn-when-flammable").status == PropertyReport::Status::Skipped);
  CHECK(reports.at("lazy-lt-burn-when-flammable").detail.find("non-flammable") !=
        std::string::npos);
}

TEST_CASE("vertices covered only by singleton edges count as isolated") {
  Hypergraph h(3, {{0, 1}, {2}});
  Proportion p(1, 3);
  int lazy = lazy_burning_number(h, p).value();
  int burn = burning_number(h, p).value();
  CHECK(lazy == 2);
  CHECK(burn == 2);  // equality: the strict bound's hypothesis must not fire
  auto reports = by_name(check_theorems(h, p, lazy, burn));
  CHECK(reports.at("lazy-lt-burn-when-flammable").status == PropertyReport::Status::Skipped);
  CHECK(reports.at("lazy-lt-burn-when-flammable").detail.find("isolated") != std::string::npos);
}

TEST_CASE("hitting-set bounds are skipped with isolated vertices") {
  Hypergraph h(3, {{0, 1}});
  auto reports = by_name(check_theorems(h, Proportion(1, 2), 2, 2));
  CHECK(reports.at("lazy-upper-greedy-set").status == PropertyReport::Status::Skipped);
  CHECK(reports.at("upper-sum-thresholds").status == PropertyReport::Status::Skipped);
  CHECK(reports.at("upper-uniform-times-edges").status == PropertyReport::Status::Skipped);
}

TEST_CASE("full theorem suite over a random corpus") {
  for (std::uint64_t seed = 200; seed < 300; ++seed) {
    RandomHypergraphParams params;
    params.n = 2 + static_cast<int>(seed % 8);
    params.m = static_cast<int>(seed % 6);
    params.size_lo = 2;
    params.size_hi = std::min(5, params.n);
    params.dedup = seed % 2 == 0;
    Hypergraph h = random_hypergraph(params, seed);
    std::vector<SolvedPoint> profile;
    for (const auto& p : probe_points(h)) {
      int lazy = lazy_burning_number(h, p).value();
      int burn = burning_number(h, p).value();
      profile.push_back(SolvedPoint{p, lazy, burn});
      for (const auto& r : check_theorems(h, p, lazy, burn)) {
        INFO(r.property, " on seed ", seed, " p=", to_string(p), ": ", r.detail);
        CHECK(!r.violated());
      }
    }
    for (const auto& r : check_monotone_profile(h, profile)) CHECK(!r.violated());
  }
}

TEST_CASE("interval containment holds on connected uniform samples") {
  RandomHypergraphParams params;
  params.n = 8;
  params.m = 4;
  params.size_lo = params.size_hi = 3;
  params.dedup = true;
  params.connected = true;
  auto reports = probe_conjecture_interval_containment(params, 25, 500);
  for (const auto& r : reports) {
    INFO(r.inputs, ": ", r.detail);
    CHECK(r.status == PropertyReport::Status::Holds);
  }
}

TEST_CASE("interval containment fails on mixed sizes and survives the oracle recheck") {
  // The five-inside-eight nesting keeps the lazy number at one across
  // (0,1/5] while the round game crosses a breakpoint at 1/8.
  Hypergraph fig4 = gen_figure("fig4");
  Distribution lazy_dist = compute_distribution(fig4, DistKind::Lazy);
  Distribution burn_dist = compute_distribution(fig4, DistKind::Burning);
  const auto& q1 = lazy_dist.entries.front();
  CHECK(q1.interval == RationalInterval{Rational(0, 1), Rational(1, 5)});
  bool contained = false;
  for (const auto& be : burn_dist.entries)
    contained |= !(q1.interval.lo < be.interval.lo) && !(be.interval.hi < q1.interval.hi);
  CHECK(!contained);
  // Oracle confirmation at the straddled breakpoint: equal lazy, different burn.
  CHECK(brute_force_lazy(fig4, Proportion(1, 10)) == brute_force_lazy(fig4, Proportion(3, 20)));
  CHECK(brute_force_burn(fig4, Proportion(1, 10)) == 2);
  CHECK(brute_force_burn(fig4, Proportion(3, 20)) == 3);

  RandomHypergraphParams params;
  params.n = 9;
  params.m = 6;
  params.size_lo = 2;
  params.size_hi = 5;
  auto reports = probe_conjecture_interval_containment(params, 30, 7);
  int violations = 0;
  for (const auto& r : reports) {
    CHECK(r.detail.find("mismatch") == std::string::npos);
    violations += r.violated();
  }
  CHECK(violations > 0);
}

TEST_CASE("ceil p|V| probe: fixed near-miss shapes and sampled trials") {
  RandomHypergraphParams params;
  params.n = 8;
  params.m = 5;
  params.size_lo = 2;
  params.size_hi = 5;
  auto reports = probe_conjecture_ceil_pv(params, 50, 3);
  REQUIRE(reports.size() == 52);
  CHECK(reports[0].inputs.find("fixed-x2y3") != std::string::npos);
  CHECK(reports[0].status == PropertyReport::Status::Holds);
  CHECK(reports[0].detail == "4 <= 4");
  CHECK(reports[1].inputs.find("fixed-x1y2") != std::string::npos);
  CHECK(reports[1].status == PropertyReport::Status::Holds);
  CHECK(reports[1].detail == "2 <= 2");
  for (const auto& r : reports) CHECK(!r.violated());

  // Unit-numerator proportions are covered by a proved bound.
  for (std::uint64_t seed = 40; seed < 60; ++seed) {
    RandomHypergraphParams cp;
    cp.n = 7;
    cp.m = 4;
    cp.size_lo = 2;
    cp.size_hi = 4;
    cp.connected = true;
    Hypergraph h = random_hypergraph(cp, seed);
    for (int den = 2; den <= 5; ++den) {
      Proportion p(1, den);
      CHECK(lazy_burning_number(h, p).value() <= ceil_mul(1, den, h.vertex_count()));
    }
  }

  // The worked tight case: five seeds are both optimal and the ceiling.
  Hypergraph fig5 = gen_figure("fig5");
  CHECK(lazy_burning_number(fig5, Proportion(1, 2)).value() == 5);
  CHECK(ceil_mul(1, 2, 10) == 5);
}

TEST_CASE("the burn/lazy gap rises then collapses on the order-3 projective plane") {
  auto reports = check_difference_nonmonotone_example();
  REQUIRE(reports.size() == 2);
  CHECK(reports[0].property == "gap-nonmonotone");
  CHECK(reports[0].status == PropertyReport::Status::Holds);
  CHECK(reports[0].detail.find("(1,1,2,0)") != std::string::npos);
  CHECK(reports[1].property == "single-edge-gaps");
  CHECK(reports[1].detail.find("(1,1,1,1,1,0)") != std::string::npos);
}

TEST_CASE("property reports serialize as JSON lines") {
  PropertyReport r;
  r.property = "demo";
  r.inputs = "n=1";
  r.status = PropertyReport::Status::Violated;
  r.detail = "x";
  std::string line = to_json_line(r);
  CHECK(line == R"({"detail":"x","inputs":"n=1","property":"demo","status":"violated"})");
}

TEST_CASE("probe trials are independent of the worker count") {
  RandomHypergraphParams params;
  params.n = 7;
  params.m = 4;
  params.size_lo = 2;
  params.size_hi = 4;
  auto serial = probe_conjecture_interval_containment(params, 12, 99, {}, 1);
  auto parallel = probe_conjecture_interval_containment(params, 12, 99, {}, 4);
  REQUIRE(serial.size() == parallel.size());
  for (std::size_t i = 0; i < serial.size(); ++i) {
    CHECK(serial[i].status == parallel[i].status);
    CHECK(serial[i].detail == parallel[i].detail);
  }
}

TEST_CASE("theorem suite at twelve vertices") {
  for (std::uint64_t seed = 1; seed <= 300; ++seed) {
    RandomHypergraphParams params;
    params.n = 11 + static_cast<int>(seed % 2);
    params.m = 2 + static_cast<int>(seed % 7);
    params.size_lo = 2;
    params.size_hi = 6;
    params.dedup = seed % 2 == 0;
    Hypergraph h = random_hypergraph(params, 3'000'000 + seed);
    std::vector<SolvedPoint> profile;
    for (const auto& p : probe_points(h)) {
      int lazy = lazy_burning_number(h, p).value();
      int burn = burning_number(h, p).value();
      profile.push_back(SolvedPoint{p, lazy, burn});
      for (const auto& r : check_theorems(h, p, lazy, burn)) {
        INFO("seed ", seed, " p=", to_string(p), " ", r.property, ": ", r.detail);
        CHECK(!r.violated());
      }
    }
    for (const auto& r : check_monotone_profile(h, profile)) CHECK(!r.violated());
  }
}
