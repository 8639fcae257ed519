#include "lorenznet/lorenznet.h"

#include <cstdlib>
#include <cstring>
#include <string>
#include <vector>

#include "lorenznet/catalog.hpp"
#include "lorenznet/error.hpp"
#include "lorenznet/families.hpp"
#include "lorenznet/graph.hpp"
#include "lorenznet/lorenz.hpp"
#include "lorenznet/report.hpp"
#include "lorenznet/sequences.hpp"
#include "lorenznet/smallworld.hpp"
#include "lorenznet/verify.hpp"

struct ln_graph {
  lorenznet::Graph graph;
};

namespace {

thread_local std::string last_error;

ln_status code_of(lorenznet::Errc e) {
  using lorenznet::Errc;
  switch (e) {
    case Errc::invalid_argument: return LN_ERR_INVALID_ARGUMENT;
    case Errc::parse: return LN_ERR_PARSE;
    case Errc::disconnected: return LN_ERR_DISCONNECTED;
    case Errc::out_of_range: return LN_ERR_OUT_OF_RANGE;
    case Errc::unknown_id: return LN_ERR_UNKNOWN_ID;
    case Errc::length_mismatch: return LN_ERR_LENGTH_MISMATCH;
  }
  return LN_ERR_INTERNAL;
}

ln_status fail(ln_status status, std::string message) {
  last_error = std::move(message);
  return status;
}

// Runs body, translating exceptions into status codes.
template <class F>
ln_status guarded(F&& body) {
  try {
    last_error.clear();
    return body();
  } catch (const lorenznet::Error& e) {
    return fail(code_of(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(LN_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(LN_ERR_INTERNAL, e.what());
  }
}

char* copy_string(const std::string& s) {
  auto* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

ln_status emit(char** out, const std::string& s) {
  if (out == nullptr) return fail(LN_ERR_INVALID_ARGUMENT, "null output pointer");
  *out = copy_string(s);
  return LN_OK;
}

ln_status adopt(ln_graph** out, lorenznet::Graph g) {
  if (out == nullptr) return fail(LN_ERR_INVALID_ARGUMENT, "null output pointer");
  *out = new ln_graph{std::move(g)};
  return LN_OK;
}

#define LN_REQUIRE(cond, msg) \
  if (!(cond)) return fail(LN_ERR_INVALID_ARGUMENT, msg)

}  // namespace

extern "C" {

const char* ln_version(void) { return "0.1.0"; }

const char* ln_status_name(ln_status status) {
  switch (status) {
    case LN_OK: return "ok";
    case LN_ERR_INVALID_ARGUMENT: return "invalid_argument";
    case LN_ERR_PARSE: return "parse";
    case LN_ERR_DISCONNECTED: return "disconnected";
    case LN_ERR_OUT_OF_RANGE: return "out_of_range";
    case LN_ERR_UNKNOWN_ID: return "unknown_id";
    case LN_ERR_LENGTH_MISMATCH: return "length_mismatch";
    case LN_ERR_BUFFER_TOO_SMALL: return "buffer_too_small";
    case LN_ERR_INTERNAL: return "internal";
  }
  return "unknown";
}

const char* ln_last_error(void) { return last_error.c_str(); }

void ln_string_free(char* s) { std::free(s); }

// ---------------------------------------------------------------------------
// Graph construction
//

ln_status ln_graph_parse(const char* text, size_t length, ln_graph** out) {
  LN_REQUIRE(text != nullptr || length == 0, "null text");
  return guarded([&] { return adopt(out, lorenznet::parse_edge_list(std::string_view(text, length))); });
}

ln_status ln_graph_from_edges(size_t n, const uint32_t* endpoints, size_t edge_count, ln_graph** out) {
  LN_REQUIRE(endpoints != nullptr || edge_count == 0, "null endpoint array");
  return guarded([&] {
    std::vector<lorenznet::Edge> edges;
    edges.reserve(edge_count);
    for (size_t i = 0; i < edge_count; ++i) edges.emplace_back(endpoints[2 * i], endpoints[2 * i + 1]);
    return adopt(out, lorenznet::Graph(n, std::move(edges)));
  });
}

ln_status ln_graph_from_catalog(const char* id, ln_graph** out) {
  LN_REQUIRE(id != nullptr, "null catalog id");
  return guarded([&] { return adopt(out, lorenznet::catalog_figure(id).graph); });
}

ln_status ln_graph_from_family(const char* kind, int64_t size, int64_t a, int64_t b, ln_graph** out) {
  LN_REQUIRE(kind != nullptr, "null family kind");
  return guarded([&] {
    const lorenznet::FamilySpec spec{lorenznet::parse_family_kind(kind), a, b};
    return adopt(out, lorenznet::make_family(spec, size));
  });
}

void ln_graph_free(ln_graph* g) { delete g; }

ln_status ln_family_size_for_nodes(const char* kind, int64_t a, int64_t b, int64_t nodes, int64_t* size) {
  LN_REQUIRE(kind && size, "null argument");
  return guarded([&] {
    const lorenznet::FamilySpec spec{lorenznet::parse_family_kind(kind), a, b};
    *size = lorenznet::size_for_node_count(spec, nodes);
    return LN_OK;
  });
}

ln_status ln_family_uses_m(const char* kind, int* out) {
  LN_REQUIRE(kind && out, "null argument");
  return guarded([&] {
    *out = lorenznet::natural_axis(lorenznet::parse_family_kind(kind)) == lorenznet::SizeAxis::m;
    return LN_OK;
  });
}

// ---------------------------------------------------------------------------
// Graph queries
//

size_t ln_graph_node_count(const ln_graph* g) { return g ? g->graph.node_count() : 0; }

size_t ln_graph_edge_count(const ln_graph* g) { return g ? g->graph.edge_count() : 0; }

ln_status ln_graph_is_connected(const ln_graph* g, int* out) {
  LN_REQUIRE(g && out, "null argument");
  return guarded([&] {
    *out = lorenznet::is_connected(g->graph) ? 1 : 0;
    return LN_OK;
  });
}

ln_status ln_graph_is_tree(const ln_graph* g, int* out) {
  LN_REQUIRE(g && out, "null argument");
  return guarded([&] {
    *out = lorenznet::is_tree(g->graph) ? 1 : 0;
    return LN_OK;
  });
}

ln_status ln_graph_triangle_count(const ln_graph* g, uint64_t* out) {
  LN_REQUIRE(g && out, "null argument");
  return guarded([&] {
    *out = lorenznet::triangle_count(g->graph);
    return LN_OK;
  });
}

ln_status ln_graph_neighboring_index(const ln_graph* g, int64_t* out) {
  LN_REQUIRE(g && out, "null argument");
  return guarded([&] {
    *out = lorenznet::neighboring_index(g->graph);
    return LN_OK;
  });
}

ln_status ln_graph_array(const ln_graph* g, ln_array_kind kind, int64_t* out, size_t capacity,
                         size_t* length) {
  LN_REQUIRE(g && length, "null argument");
  return guarded([&] {
    std::vector<std::int64_t> values;
    switch (kind) {
      case LN_ARRAY_DELTA: values = lorenznet::degree_array(g->graph).values; break;
      case LN_ARRAY_ALPHA: values = lorenznet::alpha_array(g->graph).values; break;
      case LN_ARRAY_GAMMA: values = lorenznet::gamma_array(g->graph).values; break;
      default: return fail(LN_ERR_INVALID_ARGUMENT, "unknown array kind");
    }
    *length = values.size();
    if (capacity < values.size())
      return fail(LN_ERR_BUFFER_TOO_SMALL, "array needs " + std::to_string(values.size()) + " slots");
    if (!values.empty()) std::memcpy(out, values.data(), values.size() * sizeof(int64_t));
    return LN_OK;
  });
}

ln_status ln_graph_edge_list(const ln_graph* g, char** out) {
  LN_REQUIRE(g != nullptr, "null graph");
  return guarded([&] { return emit(out, lorenznet::to_edge_list(g->graph)); });
}

// ---------------------------------------------------------------------------
// Reports
//

ln_status ln_analyze_json(const ln_graph* g, char** out) {
  LN_REQUIRE(g != nullptr, "null graph");
  return guarded([&] { return emit(out, lorenznet::to_json(lorenznet::analyze(g->graph)).dump(2)); });
}

ln_status ln_compare_json(const ln_graph* first, const ln_graph* second, char** out) {
  LN_REQUIRE(first && second, "null graph");
  return guarded([&] { return emit(out, lorenznet::compare_json(first->graph, second->graph).dump(2)); });
}

ln_status ln_lorenz_csv(const ln_graph* g, ln_array_kind kind, char** out) {
  LN_REQUIRE(g != nullptr, "null graph");
  return guarded([&] {
    switch (kind) {
      case LN_ARRAY_DELTA: return emit(out, lorenznet::lorenz_csv(lorenznet::degree_array(g->graph).span()));
      case LN_ARRAY_GAMMA: return emit(out, lorenznet::lorenz_csv(lorenznet::gamma_array(g->graph).span()));
      default: return fail(LN_ERR_INVALID_ARGUMENT, "Lorenz curves are drawn for delta or gamma arrays");
    }
  });
}

ln_status ln_majorize_compare(const double* x, size_t x_length, const double* y, size_t y_length,
                              ln_relation* relation, int* strict) {
  LN_REQUIRE((x || x_length == 0) && (y || y_length == 0) && relation, "null argument");
  return guarded([&] {
    const auto v = lorenznet::majorize_compare(std::span<const double>(x, x_length),
                                               std::span<const double>(y, y_length));
    switch (v.relation) {
      case lorenznet::Relation::equal: *relation = LN_RELATION_EQUAL; break;
      case lorenznet::Relation::less: *relation = LN_RELATION_LESS; break;
      case lorenznet::Relation::greater: *relation = LN_RELATION_GREATER; break;
      case lorenznet::Relation::incomparable: *relation = LN_RELATION_INCOMPARABLE; break;
    }
    if (strict) *strict = v.strict ? 1 : 0;
    return LN_OK;
  });
}

ln_status ln_family_report(const char* kind, int64_t a, int64_t b, ln_grid_axis axis,
                           const int64_t* grid, size_t grid_length, int csv, char** out) {
  LN_REQUIRE(kind != nullptr, "null family kind");
  return guarded([&] {
    const lorenznet::FamilySpec spec{lorenznet::parse_family_kind(kind), a, b};
    std::vector<std::int64_t> values;
    auto grid_axis = axis == LN_AXIS_M ? lorenznet::SizeAxis::m : lorenznet::SizeAxis::nodes;
    if (grid == nullptr) {
      values = lorenznet::default_grid(spec);
      grid_axis = lorenznet::natural_axis(spec.kind);
    } else {
      values.assign(grid, grid + grid_length);
      if (grid_axis == lorenznet::SizeAxis::m && lorenznet::natural_axis(spec.kind) != grid_axis)
        return fail(LN_ERR_INVALID_ARGUMENT,
                    lorenznet::to_string(spec.kind) + " is parameterized by N, not M");
    }
    const auto report = lorenznet::growth_report(spec, values, grid_axis);
    return emit(out, csv ? lorenznet::growth_csv(report) : lorenznet::family_json(report).dump(2));
  });
}

ln_status ln_catalog_list_json(char** out) {
  return guarded([&] { return emit(out, lorenznet::catalog_json().dump(2)); });
}

ln_status ln_catalog_emit(const char* id, char** out) {
  LN_REQUIRE(id != nullptr, "null catalog id");
  return guarded([&] { return emit(out, lorenznet::to_edge_list(lorenznet::catalog_figure(id).graph)); });
}

ln_status ln_verify_json(const char* only, size_t tree_max_n, char** out, size_t* failures,
                         size_t* flagged) {
  return guarded([&] {
    lorenznet::VerifyOptions options;
    if (only != nullptr) options.only = only;
    if (tree_max_n != 0) options.tree_max_n = tree_max_n;
    const auto results = lorenznet::run_verification(options);
    size_t failed = 0, flags = 0;
    for (const auto& r : results) {
      if (r.status == lorenznet::FixtureStatus::fail) ++failed;
      if (r.status == lorenznet::FixtureStatus::flagged) ++flags;
    }
    if (failures) *failures = failed;
    if (flagged) *flagged = flags;
    return emit(out, lorenznet::to_json(results).dump(2));
  });
}

}  // extern "C"
