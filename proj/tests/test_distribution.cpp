#include <doctest.h>

#include <set>

#include "hyperburn/bounds.hpp"
#include "hyperburn/designs.hpp"
#include "hyperburn/distribution.hpp"

using namespace hb;

namespace {

// Closed forms for the single-edge distributions.
Distribution expected_single_edge(int k, DistKind kind) {
  Distribution d;
  d.kind = kind;
  d.n = k;
  auto add = [&](Rational lo, Rational hi, int value) {
    d.entries.push_back(DistEntry{RationalInterval{lo, hi}, SolveStatus::Exact, value, value, value});
  };
  if (kind == DistKind::Lazy) {
    for (int i = 1; i < k; ++i) add(Rational(i - 1, k), Rational(i, k), i);
    add(Rational(k - 1, k), Rational(1, 1), k);
  } else {
    for (int i = 1; i < k - 1; ++i) add(Rational(i - 1, k), Rational(i, k), i + 1);
    add(Rational(k - 2, k), Rational(1, 1), k);
  }
  return d;
}

void check_equal(const Distribution& got, const Distribution& expect) {
  REQUIRE(got.entries.size() == expect.entries.size());
  for (std::size_t i = 0; i < got.entries.size(); ++i) {
    CHECK(got.entries[i].interval == expect.entries[i].interval);
    CHECK(got.entries[i].status == SolveStatus::Exact);
    CHECK(got.entries[i].value == expect.entries[i].value);
  }
}

}  // namespace

TEST_CASE("breakpoints enumerate reduced threshold jumps") {
  auto bp3 = breakpoints(gen_single_edge(3));
  REQUIRE(bp3.size() == 2);
  CHECK(bp3[0] == Proportion(1, 3));
  CHECK(bp3[1] == Proportion(2, 3));

  Hypergraph mixed(5, {{0, 1}, {2, 3, 4}});
  auto bp23 = breakpoints(mixed);
  REQUIRE(bp23.size() == 3);
  CHECK(bp23[0] == Proportion(1, 3));
  CHECK(bp23[1] == Proportion(1, 2));
  CHECK(bp23[2] == Proportion(2, 3));

  // Sizes 5 and 8: enumerate j/5 and j/8 and deduplicate as rationals.
  Hypergraph five_eight(8, {{0, 1, 2, 3, 4}, {0, 1, 2, 3, 4, 5, 6, 7}});
  std::set<Rational> expect;
  for (int j = 1; j < 5; ++j) expect.insert(Rational(j, 5));
  for (int j = 1; j < 8; ++j) expect.insert(Rational(j, 8));
  auto bp58 = breakpoints(five_eight);
  REQUIRE(bp58.size() == expect.size());
  REQUIRE(bp58.size() == 11);
  std::size_t i = 0;
  for (const auto& r : expect) CHECK(bp58[i++].rational() == r);

  CHECK(breakpoints(Hypergraph(4)).empty());
  CHECK(breakpoints(gen_single_edge(1)).empty());
}

TEST_CASE("single-edge distributions match their closed forms") {
  for (int k = 2; k <= 8; ++k) {
    check_equal(compute_distribution(gen_single_edge(k), DistKind::Lazy),
                expected_single_edge(k, DistKind::Lazy));
    check_equal(compute_distribution(gen_single_edge(k), DistKind::Burning),
                expected_single_edge(k, DistKind::Burning));
  }
}

TEST_CASE("nested chains realize every lazy value") {
  Distribution d = compute_distribution(gen_nested_chain(4), DistKind::Lazy);
  REQUIRE(d.entries.size() == 4);
  for (int k = 1; k <= 3; ++k) {
    CHECK(d.entries[k - 1].interval == RationalInterval{Rational(k - 1, k), Rational(k, k + 1)});
    CHECK(d.entries[k - 1].value == k);
  }
  CHECK(d.entries[3].interval == RationalInterval{Rational(3, 4), Rational(1, 1)});
  CHECK(d.entries[3].value == 4);
}

TEST_CASE("the affine-plane design realizes quarter-interval lazy values") {
  Design plane = bibd_16_4_1();
  Distribution d = compute_distribution(plane.hg, DistKind::Lazy);
  REQUIRE(d.entries.size() == 4);
  int expect_values[] = {1, 3, 7, 16};
  for (int i = 0; i < 4; ++i) {
    CHECK(d.entries[i].interval == RationalInterval{Rational(i, 4), Rational(i + 1, 4)});
    CHECK(d.entries[i].value == expect_values[i]);
  }
}

TEST_CASE("condensed output") {
  Distribution lazy3 = compute_distribution(gen_single_edge(2), DistKind::Lazy);
  CHECK(condensed(lazy3) == std::vector<int>{1, 2});
  CHECK(condensed_text(lazy3) == "1, 2");

  Design dfano = fano();
  CHECK(condensed_text(compute_distribution(dfano.hg, DistKind::Lazy)) == "1, 3, 7");
  CHECK(condensed_text(compute_distribution(dfano.hg, DistKind::Burning)) == "2, 4, 7");

  Design d1152 = merge_designs(double_design(fano()), fano());
  CHECK(condensed_text(compute_distribution(d1152.hg, DistKind::Lazy)) == "1, 3, 7");
}

TEST_CASE("uniform interval grid helper") {
  auto k3 = k_uniform_expected_intervals(3);
  REQUIRE(k3.size() == 3);
  CHECK(k3[0] == RationalInterval{Rational(0, 1), Rational(1, 3)});
  CHECK(k3[2] == RationalInterval{Rational(2, 3), Rational(1, 1)});
  auto k2 = k_uniform_expected_intervals(2);
  REQUIRE(k2.size() == 2);
  CHECK(k2[1] == RationalInterval{Rational(1, 2), Rational(1, 1)});
  CHECK(k_uniform_expected_intervals(9).size() == 9);
}

TEST_CASE("interval count ceiling") {
  CHECK(max_interval_count({3}) == 3);
  CHECK(max_interval_count({2, 3, 5}) == 8);
  CHECK(max_interval_count({5, 8}) == 12);
  CHECK(max_interval_count({3, 3, 3}) == 3);

  // Pairwise coprime sizes meet the ceiling exactly; shared factors fall short.
  Hypergraph coprime(5, {{0, 1, 2}, {0, 1, 2, 3}, {0, 1, 2, 3, 4}});
  CHECK(static_cast<long long>(breakpoints(coprime).size()) + 1 == max_interval_count({3, 4, 5}));
  Hypergraph shared(6, {{0, 1, 2, 3}, {0, 1, 2, 3, 4, 5}});
  CHECK(static_cast<long long>(breakpoints(shared).size()) + 1 < max_interval_count({4, 6}));

  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    RandomHypergraphParams params;
    params.n = 9;
    params.m = 5;
    params.size_lo = 2;
    params.size_hi = 9;
    Hypergraph h = random_hypergraph(params, seed);
    Distribution d = compute_distribution(h, DistKind::Lazy);
    CHECK(static_cast<long long>(d.entries.size()) <=
          max_interval_count(h.distinct_edge_sizes()));
  }
}

TEST_CASE("reported intervals are constant at interior rationals") {
  std::vector<Hypergraph> corpus{gen_figure("fig2"), gen_figure("fig4")};
  for (std::uint64_t seed = 60; seed < 63; ++seed) {
    RandomHypergraphParams params;
    params.n = 7;
    params.m = 4;
    params.size_lo = 2;
    params.size_hi = 5;
    corpus.push_back(random_hypergraph(params, seed));
  }
  for (const Hypergraph& h : corpus)
    for (DistKind kind : {DistKind::Lazy, DistKind::Burning}) {
      Distribution d = compute_distribution(h, kind);
      for (const auto& entry : d.entries) {
        Rational lo = entry.interval.lo, hi = entry.interval.hi;
        Rational width = hi - lo;
        for (int j = 1; j <= 50; ++j) {
          Proportion probe(lo + width * Rational(j, 51));
          int value = kind == DistKind::Lazy ? lazy_burning_number(h, probe).value()
                                             : burning_number(h, probe).value();
          CHECK(value == entry.value);
        }
      }
    }
}

TEST_CASE("distribution structure invariants") {
  for (std::uint64_t seed = 100; seed < 130; ++seed) {
    RandomHypergraphParams params;
    params.n = 8;
    params.m = 5;
    params.size_lo = 2;
    params.size_hi = 6;
    Hypergraph h = random_hypergraph(params, seed);
    for (DistKind kind : {DistKind::Lazy, DistKind::Burning}) {
      Distribution d = compute_distribution(h, kind);
      REQUIRE(!d.entries.empty());
      CHECK(d.entries.front().interval.lo == Rational(0, 1));
      CHECK(d.entries.back().interval.hi == Rational(1, 1));
      CHECK(d.entries.back().value == h.vertex_count());
      for (std::size_t i = 1; i < d.entries.size(); ++i) {
        CHECK(d.entries[i - 1].interval.hi == d.entries[i].interval.lo);
        CHECK(d.entries[i - 1].value < d.entries[i].value);
      }
    }
  }

  Hypergraph edgeless(3);
  Distribution d = compute_distribution(edgeless, DistKind::Lazy);
  REQUIRE(d.entries.size() == 1);
  CHECK(d.entries[0].interval == RationalInterval{Rational(0, 1), Rational(1, 1)});
  CHECK(d.entries[0].value == 3);
}

TEST_CASE("distribution JSON and thread independence") {
  Distribution d = compute_distribution(gen_single_edge(3), DistKind::Lazy);
  CHECK(to_json(d) ==
        R"({"intervals":[{"hi":"1/3","lo":"0","value":1},{"hi":"2/3","lo":"1/3","value":2},)"
        R"({"hi":"1","lo":"2/3","value":3}],"kind":"lazy","n":3})");

  Hypergraph h = gen_figure("fig4");
  Distribution serial = compute_distribution(h, DistKind::Burning, {}, 1);
  Distribution parallel = compute_distribution(h, DistKind::Burning, {}, 4);
  CHECK(to_json(serial) == to_json(parallel));
}

TEST_CASE("budget exhaustion shows as unknown spans") {
  SolveLimits tiny;
  tiny.node_budget = 60;
  Distribution d = compute_distribution(gen_tight_path(4, 26), DistKind::Burning, tiny);
  CHECK(!d.all_exact());
  CHECK(condensed_text(d).find("<=") != std::string::npos);
  CHECK_THROWS_AS(condensed(d), std::logic_error);
  bool saw_unknown = false;
  for (const auto& e : d.entries)
    if (e.status != SolveStatus::Exact) {
      saw_unknown = true;
      CHECK(e.lower <= e.upper);
    }
  CHECK(saw_unknown);
}

TEST_CASE("connected uniform samples pin the first and last values") {
  for (std::uint64_t seed = 700; seed < 730; ++seed) {
    RandomHypergraphParams params;
    params.n = 5 + static_cast<int>(seed % 3);  // three triples cover at most 7
    params.m = 3;
    params.size_lo = params.size_hi = 3;
    params.dedup = true;
    params.connected = true;
    Hypergraph h = random_hypergraph(params, seed);
    if (h.edge_count() < 2) continue;
    Distribution lazy = compute_distribution(h, DistKind::Lazy);
    CHECK(lazy.entries.front().interval.hi == Rational(1, 3));
    CHECK(lazy.entries.front().value == 1);
    CHECK(lazy.entries.back().interval.lo == Rational(2, 3));
    CHECK(lazy.entries.back().value == h.vertex_count());
    Distribution burn = compute_distribution(h, DistKind::Burning);
    CHECK(burn.entries.front().value >= 2);
    CHECK(burn.entries.back().interval.lo == Rational(2, 3));
    CHECK(burn.entries.back().value == h.vertex_count());
  }
}

TEST_CASE("the order-eleven biplane realizes five values in each game") {
  Hypergraph h(11);
  for (int i = 0; i < 11; ++i)
    h.add_edge({(i + 1) % 11, (i + 3) % 11, (i + 4) % 11, (i + 5) % 11, (i + 9) % 11});
  Design d = validate_bibd(h, 11, 5, 2, "biplane11");
  CHECK(d.r == 5);
  CHECK(d.b == 11);
  CHECK(condensed_text(compute_distribution(d.hg, DistKind::Lazy)) == "1, 2, 4, 6, 11");
  CHECK(condensed_text(compute_distribution(d.hg, DistKind::Burning)) == "2, 4, 5, 8, 11");
  CHECK(automorphism_order(d.hg).order_str() == "660");
}
