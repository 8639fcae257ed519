// lorenznet command-line front end. Talks to the library only through the C API.

#include <cstdio>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "lorenznet/lorenznet.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;

// Library failure carrying the status; reported on stderr with exit code 2.
struct LibraryError {
  ln_status status;
  std::string message;
};

void check(ln_status s) {
  if (s != LN_OK) throw LibraryError{s, ln_last_error()};
}

struct GraphDeleter {
  void operator()(ln_graph* g) const { ln_graph_free(g); }
};
using GraphPtr = std::unique_ptr<ln_graph, GraphDeleter>;

std::string take(char* s) {
  std::string out(s);
  ln_string_free(s);
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw LibraryError{LN_ERR_PARSE, "cannot open '" + path + "'"};
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

GraphPtr load_file(const std::string& path) {
  const auto text = read_file(path);
  ln_graph* g = nullptr;
  const auto s = ln_graph_parse(text.data(), text.size(), &g);
  if (s != LN_OK) throw LibraryError{s, path + ": " + ln_last_error()};
  return GraphPtr(g);
}

GraphPtr load_catalog(const std::string& id) {
  ln_graph* g = nullptr;
  check(ln_graph_from_catalog(id.c_str(), &g));
  return GraphPtr(g);
}

struct FamilyArgs {
  std::string name;
  std::int64_t n = 0, m = 0, a = 0, b = 0;
  CLI::Option* n_opt = nullptr;
  CLI::Option* m_opt = nullptr;
};

GraphPtr load_family(const FamilyArgs& f) {
  const bool has_n = f.n_opt && f.n_opt->count() > 0;
  const bool has_m = f.m_opt && f.m_opt->count() > 0;
  if (has_n == has_m) throw CLI::ValidationError("--family needs exactly one of --n or --m");
  int uses_m = 0;
  check(ln_family_uses_m(f.name.c_str(), &uses_m));
  std::int64_t size = has_n ? f.n : f.m;
  if (has_n && uses_m) {
    check(ln_family_size_for_nodes(f.name.c_str(), f.a, f.b, f.n, &size));
  } else if (has_m && !uses_m) {
    throw CLI::ValidationError("family '" + f.name + "' is sized by --n, not --m");
  }
  ln_graph* g = nullptr;
  check(ln_graph_from_family(f.name.c_str(), size, f.a, f.b, &g));
  return GraphPtr(g);
}

// One graph from --input, --catalog or --family.
struct SourceArgs {
  std::vector<std::string> inputs;
  std::vector<std::string> catalogs;
  FamilyArgs family;
  CLI::Option* family_opt = nullptr;

  void attach(CLI::App* app, bool repeatable) {
    auto* in = app->add_option("--input", inputs, "edge-list file");
    auto* cat = app->add_option("--catalog", catalogs, "catalog id");
    if (!repeatable) {
      in->expected(1);
      cat->expected(1);
    }
    family_opt = app->add_option("--family", family.name, "family name");
    family.n_opt = app->add_option("--n", family.n, "node count N");
    family.m_opt = app->add_option("--m", family.m, "family parameter M");
    app->add_option("--a", family.a, "family parameter a (s1, s2)");
    app->add_option("--b", family.b, "family parameter b (s1, s2)");
  }

  GraphPtr single() const {
    const auto given = inputs.size() + catalogs.size() + (family_opt->count() ? 1 : 0);
    if (given != 1) throw CLI::ValidationError("give exactly one of --input, --catalog or --family");
    if (!inputs.empty()) return load_file(inputs.front());
    if (!catalogs.empty()) return load_catalog(catalogs.front());
    return load_family(family);
  }
};

std::vector<std::int64_t> parse_grid(const std::string& text) {
  std::vector<std::int64_t> out;
  auto number = [&](const std::string& s) -> std::int64_t {
    std::size_t used = 0;
    std::int64_t v = 0;
    try {
      v = std::stoll(s, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != s.size()) throw CLI::ValidationError("bad grid value '" + s + "'");
    return v;
  };
  if (const auto dots = text.find(".."); dots != std::string::npos) {
    // LO..HI: doubling sequence from LO up to HI.
    const auto lo = number(text.substr(0, dots));
    const auto hi = number(text.substr(dots + 2));
    if (lo < 1 || hi < lo) throw CLI::ValidationError("grid range needs 1 <= LO <= HI");
    for (auto v = lo; v <= hi; v *= 2) out.push_back(v);
    return out;
  }
  std::stringstream ss(text);
  for (std::string item; std::getline(ss, item, ',');) out.push_back(number(item));
  if (out.empty()) throw CLI::ValidationError("empty grid");
  return out;
}

void print_error_record(ln_status s, const std::string& message) {
  nlohmann::json j{{"error", {{"status", ln_status_name(s)}, {"message", message}}}};
  std::cout << j.dump(2) << '\n';
}

// ---------------------------------------------------------------------------

int run_verify_table(const std::string& json_text, std::size_t failures, std::size_t flagged) {
  const auto j = nlohmann::json::parse(json_text);
  std::size_t w_group = 5, w_name = 7;
  for (const auto& f : j.at("fixtures")) {
    w_group = std::max(w_group, f.at("group").get<std::string>().size());
    w_name = std::max(w_name, f.at("fixture").get<std::string>().size());
  }
  std::cout << std::left << std::setw(int(w_group) + 2) << "group" << std::setw(int(w_name) + 2)
            << "fixture" << std::setw(9) << "status" << "expected | computed\n";
  for (const auto& f : j.at("fixtures")) {
    std::cout << std::setw(int(w_group) + 2) << f.at("group").get<std::string>()
              << std::setw(int(w_name) + 2) << f.at("fixture").get<std::string>() << std::setw(9)
              << f.at("status").get<std::string>() << f.at("expected").get<std::string>() << " | "
              << f.at("computed").get<std::string>() << '\n';
  }
  const auto total = j.at("fixtures").size();
  std::cout << '\n'
            << total << " fixtures: " << total - failures - flagged << " passed, " << failures
            << " failed, " << flagged << " flagged\n";
  return failures == 0 ? kExitOk : kExitVerifyFailed;
}

void print_catalog_listing(const std::string& json_text) {
  for (const auto& e : nlohmann::json::parse(json_text)) {
    std::cout << e.at("id").get<std::string>() << "  N=" << e.at("nodes") << " E=" << e.at("edges")
              << "  " << e.at("description").get<std::string>() << '\n';
    for (const auto& [key, value] : e.at("expected").items())
      std::cout << "    " << key << " = " << value.dump() << '\n';
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Degree, distance and neighboring arrays, Lorenz order and small-world checks"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(ln_version()));

  // analyze
  auto* analyze = app.add_subcommand("analyze", "full invariant report for one graph (JSON)");
  SourceArgs analyze_src;
  analyze_src.attach(analyze, false);
  std::string analyze_format = "json";
  analyze->add_option("--format", analyze_format, "output format")->check(CLI::IsMember({"json"}));

  // compare
  auto* compare = app.add_subcommand("compare", "majorization verdicts for two graphs (JSON)");
  SourceArgs compare_src;
  compare_src.attach(compare, true);

  // family
  auto* family = app.add_subcommand("family", "growth report and small-world classification");
  std::string family_name, family_format = "json", n_grid, m_grid;
  std::int64_t family_a = 0, family_b = 0;
  family->add_option("--family", family_name, "family name")->required();
  family->add_option("--a", family_a, "family parameter a (s1, s2)");
  family->add_option("--b", family_b, "family parameter b (s1, s2)");
  auto* n_grid_opt = family->add_option("--n-grid", n_grid, "node counts: LIST (32,64) or LO..HI (doubling)");
  auto* m_grid_opt = family->add_option("--m-grid", m_grid, "M values: LIST or LO..HI (doubling)");
  n_grid_opt->excludes(m_grid_opt);
  family->add_option("--format", family_format, "output format")->check(CLI::IsMember({"json", "csv"}));

  // lorenz
  auto* lorenz = app.add_subcommand("lorenz", "Lorenz curve points as CSV");
  SourceArgs lorenz_src;
  lorenz_src.attach(lorenz, false);
  std::string lorenz_array = "delta";
  lorenz->add_option("--array", lorenz_array, "array to plot")->check(CLI::IsMember({"delta", "gamma"}));

  // verify
  auto* verify = app.add_subcommand("verify", "run the worked-example fixture suite");
  std::string verify_only, verify_format = "text";
  std::size_t verify_n = 0;
  auto* only_opt = verify->add_option("--only", verify_only, "run a single fixture group");
  verify->add_option("--n", verify_n, "largest tree size for the tree grouping check");
  verify->add_option("--format", verify_format, "output format")->check(CLI::IsMember({"text", "json"}));

  // catalog
  auto* catalog = app.add_subcommand("catalog", "built-in example graphs");
  catalog->require_subcommand(1);
  auto* catalog_list = catalog->add_subcommand("list", "list entries and their expected invariants");
  std::string list_format = "text";
  catalog_list->add_option("--format", list_format, "output format")->check(CLI::IsMember({"text", "json"}));
  auto* catalog_emit = catalog->add_subcommand("emit", "write an entry as an edge list");
  std::string emit_id;
  catalog_emit->add_option("id", emit_id, "catalog id")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    char* out = nullptr;
    if (analyze->parsed()) {
      const auto g = analyze_src.single();
      check(ln_analyze_json(g.get(), &out));
      std::cout << take(out) << '\n';
    } else if (compare->parsed()) {
      if (compare_src.family_opt->count())
        throw CLI::ValidationError("compare takes --input and --catalog sources only");
      // Sources are taken in command-line order.
      std::vector<GraphPtr> graphs;
      std::size_t next_input = 0, next_catalog = 0;
      for (const auto* opt : compare->parse_order()) {
        if (opt->get_name() == "--input") graphs.push_back(load_file(compare_src.inputs.at(next_input++)));
        if (opt->get_name() == "--catalog") graphs.push_back(load_catalog(compare_src.catalogs.at(next_catalog++)));
      }
      if (graphs.size() != 2) throw CLI::ValidationError("compare needs exactly two --input/--catalog sources");
      const auto s = ln_compare_json(graphs[0].get(), graphs[1].get(), &out);
      if (s != LN_OK) {
        print_error_record(s, ln_last_error());
        return kExitUsage;
      }
      std::cout << take(out) << '\n';
    } else if (family->parsed()) {
      const bool csv = family_format == "csv";
      if (n_grid_opt->count() || m_grid_opt->count()) {
        const auto grid = parse_grid(n_grid_opt->count() ? n_grid : m_grid);
        const auto axis = m_grid_opt->count() ? LN_AXIS_M : LN_AXIS_NODES;
        check(ln_family_report(family_name.c_str(), family_a, family_b, axis, grid.data(), grid.size(),
                               csv, &out));
      } else {
        check(ln_family_report(family_name.c_str(), family_a, family_b, LN_AXIS_NODES, nullptr, 0, csv, &out));
      }
      std::cout << take(out) << (csv ? "" : "\n");
    } else if (lorenz->parsed()) {
      const auto g = lorenz_src.single();
      check(ln_lorenz_csv(g.get(), lorenz_array == "gamma" ? LN_ARRAY_GAMMA : LN_ARRAY_DELTA, &out));
      std::cout << take(out);
    } else if (verify->parsed()) {
      std::size_t failures = 0, flagged = 0;
      check(ln_verify_json(only_opt->count() ? verify_only.c_str() : nullptr, verify_n, &out, &failures,
                           &flagged));
      const auto text = take(out);
      if (verify_format == "json") {
        std::cout << text << '\n';
        return failures == 0 ? kExitOk : kExitVerifyFailed;
      }
      return run_verify_table(text, failures, flagged);
    } else if (catalog_list->parsed()) {
      check(ln_catalog_list_json(&out));
      const auto text = take(out);
      if (list_format == "json") {
        std::cout << text << '\n';
      } else {
        print_catalog_listing(text);
      }
    } else if (catalog_emit->parsed()) {
      check(ln_catalog_emit(emit_id.c_str(), &out));
      std::cout << take(out);
    }
  } catch (const CLI::ParseError& e) {
    std::cerr << "lorenznet: " << e.what() << '\n';
    return kExitUsage;
  } catch (const LibraryError& e) {
    std::cerr << "lorenznet: " << ln_status_name(e.status) << ": " << e.message << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "lorenznet: internal: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitOk;
}
