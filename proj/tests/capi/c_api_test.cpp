// Exercises the shared library through its C header only.

#include <cstring>
#include <string>
#include <vector>

#include "doctest.h"
#include "json.hpp"
#include "lorenznet/lorenznet.h"

namespace {

std::string take(char* s) {
  std::string out(s);
  ln_string_free(s);
  return out;
}

}  // namespace

TEST_SUITE("c-api") {

TEST_CASE("parse, query, free") {
  const char text[] = "a b\nb c\nc a\nc d\n";
  ln_graph* g = nullptr;
  REQUIRE(ln_graph_parse(text, std::strlen(text), &g) == LN_OK);
  CHECK(ln_graph_node_count(g) == 4);
  CHECK(ln_graph_edge_count(g) == 4);
  int connected = 0, tree = 1;
  CHECK(ln_graph_is_connected(g, &connected) == LN_OK);
  CHECK(ln_graph_is_tree(g, &tree) == LN_OK);
  CHECK(connected == 1);
  CHECK(tree == 0);
  std::uint64_t triangles = 0;
  CHECK(ln_graph_triangle_count(g, &triangles) == LN_OK);
  CHECK(triangles == 1);
  std::int64_t nu = 0;
  CHECK(ln_graph_neighboring_index(g, &nu) == LN_OK);
  CHECK(nu == 3 * 4 + 2 * 3 + 2 * 3 + 1 * 2);

  std::int64_t buf[4];
  std::size_t len = 0;
  CHECK(ln_graph_array(g, LN_ARRAY_DELTA, buf, 4, &len) == LN_OK);
  CHECK(len == 4);
  CHECK(std::vector<std::int64_t>(buf, buf + 4) == std::vector<std::int64_t>{3, 2, 2, 1});
  CHECK(ln_graph_array(g, LN_ARRAY_ALPHA, buf, 4, &len) == LN_OK);
  CHECK(len == 3);
  CHECK(ln_graph_array(g, LN_ARRAY_GAMMA, buf, 2, &len) == LN_ERR_BUFFER_TOO_SMALL);
  CHECK(len == 4);
  ln_graph_free(g);
  ln_graph_free(nullptr);
}

TEST_CASE("errors carry a status and a message") {
  ln_graph* g = nullptr;
  CHECK(ln_graph_parse("a a", 3, &g) == LN_ERR_PARSE);
  CHECK(std::string(ln_last_error()).find("line 1") != std::string::npos);
  CHECK(g == nullptr);
  CHECK(ln_graph_parse("", 0, &g) == LN_ERR_PARSE);
  CHECK(ln_graph_from_catalog("nosuch", &g) == LN_ERR_UNKNOWN_ID);
  CHECK(ln_graph_from_family("hypercube", 4, 0, 0, &g) == LN_ERR_INVALID_ARGUMENT);
  CHECK(ln_graph_from_family("polygon", 2, 0, 0, &g) == LN_ERR_INVALID_ARGUMENT);
  CHECK(ln_graph_from_catalog(nullptr, &g) == LN_ERR_INVALID_ARGUMENT);
  const std::uint32_t loop[] = {1, 1};
  CHECK(ln_graph_from_edges(3, loop, 1, &g) == LN_ERR_INVALID_ARGUMENT);
  const std::uint32_t outside[] = {0, 5};
  CHECK(ln_graph_from_edges(3, outside, 1, &g) == LN_ERR_OUT_OF_RANGE);
  CHECK(std::string(ln_status_name(LN_ERR_LENGTH_MISMATCH)) == "length_mismatch");

  const std::uint32_t split[] = {0, 1, 2, 3};
  REQUIRE(ln_graph_from_edges(4, split, 2, &g) == LN_OK);
  std::int64_t buf[3];
  std::size_t len = 0;
  CHECK(ln_graph_array(g, LN_ARRAY_ALPHA, buf, 3, &len) == LN_ERR_DISCONNECTED);
  ln_graph_free(g);
}

TEST_CASE("reports") {
  ln_graph *a = nullptr, *b = nullptr, *c = nullptr;
  REQUIRE(ln_graph_from_catalog("fig18_a", &a) == LN_OK);
  REQUIRE(ln_graph_from_catalog("fig18_b", &b) == LN_OK);
  REQUIRE(ln_graph_from_family("star", 4, 0, 0, &c) == LN_OK);

  char* out = nullptr;
  REQUIRE(ln_compare_json(a, b, &out) == LN_OK);
  const auto cmp = nlohmann::json::parse(take(out));
  CHECK(cmp["delta_verdict"]["relation"] == "less");
  CHECK(cmp["gamma_verdict"]["relation"] == "incomparable");
  CHECK(ln_compare_json(a, c, &out) == LN_ERR_LENGTH_MISMATCH);

  REQUIRE(ln_analyze_json(a, &out) == LN_OK);
  CHECK(nlohmann::json::parse(take(out))["nodes"] == 6);

  REQUIRE(ln_lorenz_csv(c, LN_ARRAY_DELTA, &out) == LN_OK);
  CHECK(take(out) == "j,cumulative\n0,0\n1,3\n2,4\n3,5\n4,6\n");
  CHECK(ln_lorenz_csv(c, LN_ARRAY_ALPHA, &out) == LN_ERR_INVALID_ARGUMENT);

  REQUIRE(ln_graph_edge_list(c, &out) == LN_OK);
  CHECK(take(out) == "0 1\n0 2\n0 3\n");

  ln_graph_free(a);
  ln_graph_free(b);
  ln_graph_free(c);
}

TEST_CASE("family sizing") {
  std::int64_t m = 0;
  CHECK(ln_family_size_for_nodes("spider", 0, 0, 96, &m) == LN_OK);
  CHECK(m == 32);
  CHECK(ln_family_size_for_nodes("spider", 0, 0, 32, &m) == LN_ERR_INVALID_ARGUMENT);
  CHECK(std::string(ln_last_error()).find("multiple of 3") != std::string::npos);
  int uses_m = 0;
  CHECK(ln_family_uses_m("kite", &uses_m) == LN_OK);
  CHECK(uses_m == 1);
  CHECK(ln_family_uses_m("chain", &uses_m) == LN_OK);
  CHECK(uses_m == 0);
}

TEST_CASE("family report") {
  char* out = nullptr;
  const std::int64_t grid[] = {10, 20, 50};
  REQUIRE(ln_family_report("kite", 0, 0, LN_AXIS_M, grid, 3, 0, &out) == LN_OK);
  const auto j = nlohmann::json::parse(take(out));
  CHECK(j["classification"]["closed_form"]["DSWMd"]["value"] == true);
  CHECK(ln_family_report("chain", 0, 0, LN_AXIS_M, grid, 3, 0, &out) == LN_ERR_INVALID_ARGUMENT);
  REQUIRE(ln_family_report("chain", 0, 0, LN_AXIS_NODES, nullptr, 0, 1, &out) == LN_OK);
  const auto csv = take(out);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 7);
  const std::int64_t bad[] = {32};
  CHECK(ln_family_report("spider", 0, 0, LN_AXIS_NODES, bad, 1, 0, &out) == LN_ERR_INVALID_ARGUMENT);
}

TEST_CASE("majorization on raw arrays") {
  const double x[] = {2, 2, 1, 1}, y[] = {3, 2, 2, 1}, z[] = {1, 1};
  ln_relation r{};
  int strict = 0;
  CHECK(ln_majorize_compare(x, 4, y, 4, &r, &strict) == LN_OK);
  CHECK(r == LN_RELATION_LESS);
  CHECK(strict == 1);
  CHECK(ln_majorize_compare(x, 4, z, 2, &r, &strict) == LN_ERR_LENGTH_MISMATCH);
  const double unsorted[] = {1, 2};
  CHECK(ln_majorize_compare(unsorted, 2, z, 2, &r, nullptr) == LN_ERR_INVALID_ARGUMENT);
}

TEST_CASE("catalog and verify") {
  char* out = nullptr;
  REQUIRE(ln_catalog_list_json(&out) == LN_OK);
  CHECK(nlohmann::json::parse(take(out)).size() >= 20);
  REQUIRE(ln_catalog_emit("fig19_b", &out) == LN_OK);
  CHECK(take(out) == "0 1\n0 3\n1 2\n2 3\n");
  CHECK(ln_catalog_emit("nosuch", &out) == LN_ERR_UNKNOWN_ID);

  std::size_t failures = 99, flagged = 99;
  REQUIRE(ln_verify_json("gini", 0, &out, &failures, &flagged) == LN_OK);
  CHECK(nlohmann::json::parse(take(out))["fixtures"].size() == 6);
  CHECK(failures == 0);
  CHECK(ln_verify_json("nosuch", 0, &out, &failures, &flagged) == LN_ERR_UNKNOWN_ID);
}

}  // TEST_SUITE
