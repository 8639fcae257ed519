#include <map>
#include <random>
#include <set>
#include <sstream>

#include "doctest.h"
#include "lorenznet/enumerate.hpp"
#include "lorenznet/error.hpp"
#include "lorenznet/families.hpp"
#include "lorenznet/graph.hpp"
#include "lorenznet/lorenz.hpp"
#include "lorenznet/sequences.hpp"
#include "oracles.hpp"

using namespace lorenznet;

namespace {

Graph family(FamilyKind k, std::int64_t size) { return make_family({k}, size); }

Errc error_code(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an exception");
  return Errc::invalid_argument;
}

}  // namespace

TEST_SUITE("graph-core") {

TEST_CASE("edge list: labels map in first-appearance order") {
  const auto g = parse_edge_list("a b\nb c");
  CHECK(g.node_count() == 3);
  CHECK(g.edges() == std::vector<Edge>{{0, 1}, {1, 2}});
  CHECK(g.label(0) == "a");
  CHECK(g.label(2) == "c");
}

TEST_CASE("edge list: duplicates collapse, comments and blank lines skip") {
  CHECK(parse_edge_list("a b\na b").edge_count() == 1);
  CHECK(parse_edge_list("a b\nb a\n").edge_count() == 1);
  const auto g = parse_edge_list("# header\n\nx y  # trailing\n   \ny z\n");
  CHECK(g.node_count() == 3);
  CHECK(g.edge_count() == 2);
}

TEST_CASE("edge list: isolated nodes via node lines") {
  const auto g = parse_edge_list("node lonely\na b\n");
  CHECK(g.node_count() == 3);
  CHECK(g.degree(0) == 0);
  CHECK_FALSE(is_connected(g));
}

TEST_CASE("edge list: errors name the line") {
  try {
    parse_edge_list("a b\na a\n");
    FAIL("self-loop accepted");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::parse);
    CHECK(std::string(e.what()).find("line 2") != std::string::npos);
  }
  CHECK(error_code([] { parse_edge_list("a b c\n"); }) == Errc::parse);
  CHECK(error_code([] { parse_edge_list("lonely\n"); }) == Errc::parse);
  CHECK(error_code([] { parse_edge_list(""); }) == Errc::parse);
  CHECK(error_code([] { parse_edge_list("# nothing\n"); }) == Errc::parse);
}

TEST_CASE("edge list: round trip") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    const auto g = random_connected_graph(2 + trial % 9, 0.3, rng);
    const auto back = parse_edge_list(to_edge_list(g));
    CHECK(back.node_count() == g.node_count());
    CHECK(degree_array(back) == degree_array(g));
    CHECK(oracle::brute_canonical(back) == oracle::brute_canonical(g));
  }
  const auto with_isolated = Graph(4, {{1, 2}});
  CHECK(parse_edge_list(to_edge_list(with_isolated)).node_count() == 4);
}

TEST_CASE("constructor rejects self-loops and out-of-range endpoints") {
  CHECK(error_code([] { Graph(3, {{1, 1}}); }) == Errc::invalid_argument);
  CHECK(error_code([] { Graph(3, {{0, 3}}); }) == Errc::out_of_range);
}

TEST_CASE("degree arrays of small families") {
  CHECK(degree_array(family(FamilyKind::star, 5)) == DeltaArray{4, 1, 1, 1, 1});
  CHECK(degree_array(family(FamilyKind::polygon, 4)) == DeltaArray{2, 2, 2, 2});
  const auto kite = family(FamilyKind::kite, 3);
  CHECK(kite.node_count() == 5);
  CHECK(degree_array(kite) == DeltaArray{3, 2, 2, 2, 1});
  CHECK(degree_array(kite).sum() == 3 * 3 + 3 - 2);
}

TEST_CASE("connectivity") {
  CHECK(is_connected(family(FamilyKind::chain, 5)));
  CHECK_FALSE(is_connected(Graph(4, {{0, 1}, {2, 3}})));
  CHECK(is_connected(family(FamilyKind::complete, 6)));
  CHECK(is_connected(Graph(1, {})));
}

TEST_CASE("tree predicate") {
  CHECK(is_tree(family(FamilyKind::chain, 5)));
  CHECK_FALSE(is_tree(family(FamilyKind::polygon, 5)));
  const auto spider = family(FamilyKind::spider, 3);
  // K_3 has 3 edges, plus two pendants on each of the 3 clique nodes
  CHECK(spider.edge_count() == 3 + 2 * 3);
  CHECK(spider.node_count() == 9);
  CHECK_FALSE(is_tree(spider));
  CHECK_FALSE(is_tree(Graph(4, {{0, 1}, {2, 3}, {0, 1}})));
}

TEST_CASE("distance matrix") {
  const auto k4 = distance_matrix(family(FamilyKind::complete, 4));
  for (NodeId i = 0; i < 4; ++i)
    for (NodeId j = 0; j < 4; ++j) CHECK(k4(i, j) == (i == j ? 0u : 1u));
  CHECK(distance_matrix(family(FamilyKind::chain, 3)).max() == 2);
  CHECK(distance_matrix(family(FamilyKind::polygon, 6)).max() == 3);
  CHECK(error_code([] { distance_matrix(Graph(4, {{0, 1}, {2, 3}})); }) == Errc::disconnected);
}

TEST_CASE("distance matrix: symmetry, triangle inequality, agreement with Floyd-Warshall") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 60; ++trial) {
    const auto n = 2 + trial % 9;
    const auto g = random_connected_graph(n, 0.25, rng);
    const auto d = distance_matrix(g);
    const auto ref = oracle::floyd_warshall(g);
    for (NodeId i = 0; i < n; ++i) {
      CHECK(d(i, i) == 0);
      for (NodeId j = 0; j < n; ++j) {
        REQUIRE(d(i, j) == std::uint32_t(ref[i][j]));
        CHECK(d(i, j) == d(j, i));
        if (i != j) CHECK(d(i, j) >= 1);
        for (NodeId k = 0; k < n; ++k) CHECK(d(i, k) <= d(i, j) + d(j, k));
      }
    }
  }
}

TEST_CASE("distance histogram matches the matrix") {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 40; ++trial) {
    const auto g = random_connected_graph(2 + trial % 11, 0.2, rng);
    const auto h = distance_histogram(g);
    const auto ref = oracle::alpha(g);
    REQUIRE(h.size() == ref.size());
    for (std::size_t j = 0; j < h.size(); ++j) CHECK(std::int64_t(h[j]) == ref[j]);
  }
}

TEST_CASE("distance stats") {
  const auto star = distance_stats(family(FamilyKind::star, 6));
  CHECK(star.diameter == 2);
  // oracle: average over the Floyd-Warshall matrix
  const auto d = oracle::floyd_warshall(family(FamilyKind::star, 6));
  std::int64_t total = 0, pairs = 0;
  for (std::size_t i = 0; i < 6; ++i)
    for (std::size_t j = i + 1; j < 6; ++j) total += d[i][j], ++pairs;
  CHECK(star.mean_distance == Rational(total, pairs));
  CHECK(star.mean_distance == Rational(5, 3));
  CHECK(star.pair_count == 15);

  CHECK(distance_stats(family(FamilyKind::chain, 5)).diameter == 4);
  const auto k7 = distance_stats(family(FamilyKind::complete, 7));
  CHECK(k7.diameter == 1);
  CHECK(k7.mean_distance == Rational(1));
  CHECK(k7.median_distance == Rational(1));
}

TEST_CASE("distance stats: even-size median averages the middle pair") {
  // chain(4): pair distances 1,1,1,2,2,3 -> median (1+2)/2
  CHECK(distance_stats(family(FamilyKind::chain, 4)).median_distance == Rational(3, 2));
  // invariant 1 <= median <= diameter and mean <= diameter
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 30; ++trial) {
    const auto s = distance_stats(random_connected_graph(2 + trial % 10, 0.3, rng));
    CHECK(s.median_distance >= Rational(1));
    CHECK(s.median_distance <= Rational(s.diameter));
    CHECK(s.mean_distance <= Rational(s.diameter));
  }
  CHECK(error_code([] { distance_stats(Graph(1, {})); }) == Errc::invalid_argument);
  CHECK(error_code([] { distance_stats(Graph(3, {{0, 1}})); }) == Errc::disconnected);
}

TEST_CASE("spanning tree") {
  const auto from_polygon = spanning_tree(family(FamilyKind::polygon, 5));
  CHECK(is_tree(from_polygon));
  CHECK(degree_array(from_polygon) == DeltaArray{2, 2, 2, 1, 1});

  const auto tree = Graph(5, {{0, 1}, {0, 2}, {0, 3}, {3, 4}});
  CHECK(spanning_tree(tree) == tree);

  const auto k4 = family(FamilyKind::complete, 4);
  const auto t = spanning_tree(k4);
  CHECK(t.edge_count() == 3);
  CHECK(is_tree(t));
  const auto dt = degree_array(t), dk = degree_array(k4);
  CHECK(majorize_compare(dt.span(), dk.span()).relation == Relation::less);
  CHECK(error_code([] { spanning_tree(Graph(4, {{0, 1}, {2, 3}})); }) == Errc::disconnected);
}

TEST_CASE("spanning tree: subset of edges, majorized by the input") {
  std::mt19937_64 rng(14);
  for (int trial = 0; trial < 40; ++trial) {
    const auto g = random_connected_graph(2 + trial % 10, 0.4, rng);
    const auto t = spanning_tree(g);
    CHECK(is_tree(t));
    for (auto [u, v] : t.edges()) CHECK(g.has_edge(u, v));
    const auto dt = degree_array(t), dg = degree_array(g);
    const auto r = majorize_compare(dt.span(), dg.span()).relation;
    CHECK((r == Relation::less || r == Relation::equal));
  }
}

TEST_CASE("labeled trees: Cayley counts, all distinct trees") {
  CHECK(error_code([] { LabeledTreeEnumerator(1); }) == Errc::out_of_range);
  CHECK(error_code([] { LabeledTreeEnumerator(kMaxTreeEnumerationNodes + 1); }) == Errc::out_of_range);
  for (std::size_t n = 2; n <= 7; ++n) {
    std::uint64_t cayley = 1;
    for (std::size_t i = 0; i + 2 < n; ++i) cayley *= n;
    std::set<std::vector<Edge>> seen;
    std::uint64_t count = 0;
    for_each_labeled_tree(n, [&](const Graph& g) {
      ++count;
      CHECK(is_tree(g));
      seen.insert(g.edges());
    });
    CHECK(count == cayley);
    CHECK(seen.size() == cayley);
  }
  std::size_t streamed = 0;
  LabeledTreeEnumerator e(3);
  while (e.next()) ++streamed;
  CHECK(streamed == 3);
  CHECK_FALSE(e.next().has_value());
}

TEST_CASE("connected graphs: counts agree with the recurrence") {
  const auto expected = oracle::connected_graph_counts(6);
  CHECK(expected[3] == 4);
  CHECK(expected[4] == 38);
  for (std::size_t n = 2; n <= 6; ++n) {
    std::int64_t count = 0;
    for_each_connected_graph(n, [&](const Graph& g) {
      ++count;
      CHECK(is_connected(g));
    });
    CHECK(count == expected[n]);
  }
  CHECK(error_code([] { ConnectedGraphEnumerator(8); }) == Errc::out_of_range);
  CHECK(error_code([] { ConnectedGraphEnumerator(1); }) == Errc::out_of_range);
}

TEST_CASE("triangle count") {
  CHECK(triangle_count(family(FamilyKind::complete, 4)) == 4);
  const auto k33 = Graph(6, {{0, 3}, {0, 4}, {0, 5}, {1, 3}, {1, 4}, {1, 5}, {2, 3}, {2, 4}, {2, 5}});
  CHECK(triangle_count(k33) == 0);
  const auto prism = Graph(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}, {0, 3}, {1, 4}, {2, 5}});
  CHECK(triangle_count(prism) == 2);
  std::mt19937_64 rng(15);
  for (int trial = 0; trial < 30; ++trial) {
    const auto g = random_connected_graph(3 + trial % 9, 0.5, rng);
    CHECK(triangle_count(g) == oracle::triangles(g));
  }
}

TEST_CASE("canonical form separates exactly the isomorphism classes") {
  // every connected 5-node graph: library canonical code vs brute-force key
  std::map<std::uint32_t, std::vector<int>> by_code;
  std::set<std::vector<int>> keys;
  for_each_connected_graph(5, [&](const Graph& g) {
    const auto key = oracle::brute_canonical(g);
    keys.insert(key);
    auto [it, fresh] = by_code.emplace(canonical_form(g), key);
    if (!fresh) CHECK(it->second == key);
  });
  CHECK(by_code.size() == keys.size());
  CHECK(keys.size() == 21);  // connected unlabeled graphs on 5 nodes
}

TEST_CASE("degree sum bounds for connected graphs") {
  std::mt19937_64 rng(16);
  for (int trial = 0; trial < 50; ++trial) {
    const std::int64_t n = 2 + trial % 12;
    const auto g = random_connected_graph(std::size_t(n), 0.3, rng);
    const auto s = degree_array(g).sum();
    CHECK(s == 2 * std::int64_t(g.edge_count()));
    CHECK(s >= 2 * (n - 1));
    CHECK(s <= n * (n - 1));
  }
  CHECK(degree_array(family(FamilyKind::chain, 9)).sum() == 2 * 8);
  CHECK(degree_array(family(FamilyKind::complete, 9)).sum() == 9 * 8);
}

}  // TEST_SUITE
