#include <cmath>
#include <random>

#include "doctest.h"
#include "lorenznet/catalog.hpp"
#include "lorenznet/enumerate.hpp"
#include "lorenznet/error.hpp"
#include "lorenznet/families.hpp"
#include "lorenznet/lorenz.hpp"
#include "lorenznet/sequences.hpp"
#include "oracles.hpp"

using namespace lorenznet;

namespace {

using Vec = std::vector<std::int64_t>;

MajorizationVerdict cmp(const Vec& x, const Vec& y) {
  return majorize_compare(std::span<const std::int64_t>(x), std::span<const std::int64_t>(y));
}

std::int64_t gini(const Vec& x) { return gini_generalized(std::span<const std::int64_t>(x)); }

// Prefix-sum comparison spelled out, for property checks.
Relation brute_relation(const Vec& x, const Vec& y) {
  bool le = true, ge = true;
  std::int64_t sx = 0, sy = 0;
  for (std::size_t j = 0; j < x.size(); ++j) {
    sx += x[j];
    sy += y[j];
    le = le && sx <= sy;
    ge = ge && sx >= sy;
  }
  if (le && ge) return Relation::equal;
  if (le) return Relation::less;
  if (ge) return Relation::greater;
  return Relation::incomparable;
}

Vec random_decreasing(std::mt19937_64& rng, std::size_t n, std::int64_t lo, std::int64_t hi) {
  std::uniform_int_distribution<std::int64_t> v(lo, hi);
  Vec x(n);
  for (auto& e : x) e = v(rng);
  std::sort(x.rbegin(), x.rend());
  return x;
}

}  // namespace

TEST_SUITE("lorenz-order") {

TEST_CASE("lorenz curve") {
  const Vec x{2, 2, 1, 1};
  const auto c = lorenz_curve(std::span<const std::int64_t>(x));
  const std::vector<std::pair<std::size_t, std::int64_t>> expected{{0, 0}, {1, 2}, {2, 4}, {3, 5}, {4, 6}};
  CHECK(c.points == expected);
  const Vec k{3, 3, 3, 3};
  CHECK(lorenz_curve(std::span<const std::int64_t>(k)).points.back() == std::pair<std::size_t, std::int64_t>{4, 12});
  const Vec zero{0, 0};
  for (auto [j, s] : lorenz_curve(std::span<const std::int64_t>(zero)).points) CHECK(s == 0);
}

TEST_CASE("lorenz curve rejects unsorted or negative input") {
  const Vec unsorted{1, 2}, negative{1, -1};
  CHECK_THROWS_AS(lorenz_curve(std::span<const std::int64_t>(unsorted)), Error);
  CHECK_THROWS_AS(lorenz_curve(std::span<const std::int64_t>(negative)), Error);
}

TEST_CASE("majorize compare examples") {
  CHECK(cmp({2, 2, 1, 1}, {3, 2, 2, 1}) == MajorizationVerdict{Relation::less, true});
  CHECK(cmp({3, 1, 1, 1}, {2, 2, 2, 2}).relation == Relation::incomparable);
  CHECK(cmp({5, 3, 3, 3, 3, 3}, {4, 4, 4, 3, 3, 2}).relation == Relation::incomparable);
  CHECK(cmp({3, 2, 1}, {3, 2, 1}) == MajorizationVerdict{Relation::equal, false});
  CHECK(cmp({3, 2, 2, 1}, {2, 2, 1, 1}) == MajorizationVerdict{Relation::greater, true});
  try {
    cmp({1, 1}, {1, 1, 1});
    FAIL("length mismatch accepted");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::length_mismatch);
  }
}

TEST_CASE("majorize compare: partial-order axioms on random triples") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 500; ++trial) {
    const std::size_t n = 1 + trial % 7;
    const auto x = random_decreasing(rng, n, 0, 5);
    const auto y = random_decreasing(rng, n, 0, 5);
    const auto z = random_decreasing(rng, n, 0, 5);
    const auto xy = cmp(x, y), yx = cmp(y, x);
    CHECK(xy.relation == brute_relation(x, y));
    CHECK(cmp(x, x).relation == Relation::equal);
    if (xy.relation == Relation::less) CHECK(yx.relation == Relation::greater);
    if (xy.relation == Relation::greater) CHECK(yx.relation == Relation::less);
    if (xy.relation == Relation::equal) CHECK(x == y);
    if (xy.relation == Relation::incomparable) CHECK(yx.relation == Relation::incomparable);
    CHECK(xy.strict == (xy.relation == Relation::less || xy.relation == Relation::greater));
    const auto yz = cmp(y, z);
    const bool x_le_y = xy.relation == Relation::less || xy.relation == Relation::equal;
    const bool y_le_z = yz.relation == Relation::less || yz.relation == Relation::equal;
    if (x_le_y && y_le_z) {
      const auto xz = cmp(x, z).relation;
      CHECK((xz == Relation::less || xz == Relation::equal));
    }
  }
}

TEST_CASE("generalized Gini") {
  CHECK(gini({2, 2, 1, 1}) == 17);
  CHECK(gini({3, 3, 3, 3}) == 30);
  CHECK(gini({3, 1, 1, 1}) == 18);
  CHECK(gini({2, 2, 2, 2}) == 20);
  CHECK(gini({3, 3, 2, 2}) == 27);
  CHECK(gini({3, 2, 2, 1}) == 3 + 5 + 7 + 8);
}

TEST_CASE("theil and power measures") {
  const Vec ones{1, 1, 1, 1}, twos{2, 2};
  CHECK(theil(std::span<const std::int64_t>(ones)) == 0.0);
  CHECK(theil(std::span<const std::int64_t>(twos)) == doctest::Approx(4 * std::log(2.0)).epsilon(1e-12));
  const Vec g1{2, 2, 1, 1}, g3{3, 2, 2, 1}, g2{3, 1, 1, 1}, one{1}, z{1, 0};
  CHECK(theil(std::span<const std::int64_t>(g1)) <= theil(std::span<const std::int64_t>(g3)));
  CHECK(theil(std::span<const std::int64_t>(z)) == 0.0);
  CHECK(power_measure(std::span<const std::int64_t>(g1), 2.0) == 4 + 4 + 1 + 1);
  CHECK(power_measure(std::span<const std::int64_t>(g2), 2.0) == 9 + 1 + 1 + 1);
  CHECK(power_measure(std::span<const std::int64_t>(one), 2.0) == 1);
  CHECK_THROWS_AS(power_measure(std::span<const std::int64_t>(one), 1.0), Error);
}

TEST_CASE("standard Gini") {
  for (std::int64_t n : {4, 10, 100}) {
    const auto d = degree_array(make_family({FamilyKind::star}, n));
    const double closed = double(n - 2) / double(2 * n);
    CHECK(std::abs(gini_standard(d.span()) - closed) < 1e-12);
    std::vector<double> as_double(d.begin(), d.end());
    CHECK(std::abs(gini_standard(d.span()) - oracle::gini_pairwise(as_double)) < 1e-12);
  }
  const Vec flat{3, 3, 3};
  CHECK(gini_standard(std::span<const std::int64_t>(flat)) == 0.0);
  const Vec zero{0, 0};
  CHECK_THROWS_AS(gini_standard(std::span<const std::int64_t>(zero)), Error);
  std::mt19937_64 rng(32);
  for (int trial = 0; trial < 100; ++trial) {
    const auto x = random_decreasing(rng, 1 + trial % 12, 1, 9);
    std::vector<double> as_double(x.begin(), x.end());
    CHECK(std::abs(gini_standard(std::span<const std::int64_t>(x)) - oracle::gini_pairwise(as_double)) < 1e-12);
  }
}

TEST_CASE("acceptable measures respect the order") {
  std::mt19937_64 rng(33);
  int seen = 0;
  while (seen < 500) {
    const std::size_t n = 2 + rng() % 8;
    const auto x = random_decreasing(rng, n, 1, 8);
    const auto y = random_decreasing(rng, n, 1, 8);
    if (cmp(x, y).relation != Relation::less) continue;
    ++seen;
    const auto sx = std::span<const std::int64_t>(x), sy = std::span<const std::int64_t>(y);
    CHECK(gini_generalized(sx) <= gini_generalized(sy));
    CHECK(theil(sx) <= theil(sy) + 1e-9);
    for (double p : {1.5, 2.0, 3.0}) CHECK(power_measure(sx, p) <= power_measure(sy, p) + 1e-9);
  }
}

TEST_CASE("Δ_chain is below every connected graph; Δ_complete is above") {
  for (std::size_t n = 3; n <= 6; ++n) {
    const auto chain = degree_array(make_family({FamilyKind::chain}, std::int64_t(n)));
    const auto complete = degree_array(make_family({FamilyKind::complete}, std::int64_t(n)));
    for_each_connected_graph(n, [&](const Graph& g) {
      const auto d = degree_array(g);
      const auto low = majorize_compare(chain.span(), d.span()).relation;
      const auto high = majorize_compare(d.span(), complete.span()).relation;
      CHECK((low == Relation::less || low == Relation::equal));
      CHECK((high == Relation::less || high == Relation::equal));
    });
  }
}

TEST_CASE("max and mean degree follow the order, the median need not") {
  std::mt19937_64 rng(34);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 3 + trial % 8;
    const auto g = degree_array(random_connected_graph(n, 0.3, rng));
    const auto h = degree_array(random_connected_graph(n, 0.3, rng));
    if (majorize_compare(g.span(), h.span()).relation != Relation::less) continue;
    const auto sg = degree_stats(g), sh = degree_stats(h);
    CHECK(sg.max <= sh.max);
    CHECK(sg.mean <= sh.mean);
  }
  // fig1: G ≺ H with Md(G) = 2 > Md(H) = 1; fig2: G1 ≺ H1 with 2 < 3
  const auto g = degree_array(catalog_figure("fig1_G").graph);
  const auto h = degree_array(catalog_figure("fig1_H").graph);
  CHECK(majorize_compare(g.span(), h.span()).relation == Relation::less);
  CHECK(degree_stats(g).median > degree_stats(h).median);
  const auto g1 = degree_array(catalog_figure("fig2_G1").graph);
  const auto h1 = degree_array(catalog_figure("fig2_H1").graph);
  CHECK(majorize_compare(g1.span(), h1.span()).relation == Relation::less);
  CHECK(degree_stats(g1).median < degree_stats(h1).median);
}

TEST_CASE("order is not carried between delta and gamma arrays") {
  auto rel = [](const auto& a, const auto& b) { return majorize_compare(a.span(), b.span()).relation; };
  const auto& a18 = catalog_figure("fig18_a").graph;
  const auto& b18 = catalog_figure("fig18_b").graph;
  CHECK(rel(degree_array(a18), degree_array(b18)) == Relation::less);
  CHECK(rel(gamma_array(a18), gamma_array(b18)) == Relation::incomparable);
  const auto& a19 = catalog_figure("fig19_a").graph;
  const auto& b19 = catalog_figure("fig19_b").graph;
  CHECK(rel(gamma_array(a19), gamma_array(b19)) == Relation::less);
  CHECK(rel(degree_array(a19), degree_array(b19)) == Relation::incomparable);
}

TEST_CASE("floating-point arrays") {
  const std::vector<double> x{2.5, 1.0}, y{3.0, 0.5};
  CHECK(majorize_compare(std::span<const double>(x), std::span<const double>(y)).relation == Relation::less);
}

}  // TEST_SUITE
