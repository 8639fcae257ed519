#include "lorenznet/report.hpp"

#include <sstream>

#include "lorenznet/error.hpp"

namespace lorenznet {

using nlohmann::json;

namespace {

Rational parse_rational(const std::string& s) {
  const auto slash = s.find('/');
  if (slash == std::string::npos) return Rational(std::stoll(s));
  return Rational(std::stoll(s.substr(0, slash)), std::stoll(s.substr(slash + 1)));
}

// A rational goes out as a float under `key` and exactly under `key_exact`.
void put(json& j, const std::string& key, const Rational& r) {
  j[key] = to_double(r);
  j[key + "_exact"] = to_string(r);
}

Rational get(const json& j, const std::string& key) {
  return parse_rational(j.at(key + "_exact").get<std::string>());
}

template <class Tag>
std::vector<std::int64_t> values(const json& j) {
  return j.get<std::vector<std::int64_t>>();
}

json measures_json(const Measures& m) {
  json j{{"gini_generalized", m.gini_generalized}, {"theil", m.theil}, {"power_2", m.power_2}};
  j["gini_standard"] = m.gini_standard ? json(*m.gini_standard) : json(nullptr);
  return j;
}

Measures measures_from(const json& j) {
  Measures m;
  m.gini_generalized = j.at("gini_generalized").get<std::int64_t>();
  m.theil = j.at("theil").get<double>();
  m.power_2 = j.at("power_2").get<double>();
  if (!j.at("gini_standard").is_null()) m.gini_standard = j.at("gini_standard").get<double>();
  return m;
}

json flag_json(const std::optional<SmallWorldFlag>& f) {
  if (!f) return nullptr;
  return json{{"value", f->value}, {"provenance", to_string(f->provenance)}};
}

}  // namespace

Measures measures_of(const DeltaArray& delta) {
  const auto x = delta.span();
  Measures m;
  m.gini_generalized = gini_generalized(x);
  m.theil = theil(x);
  m.power_2 = power_measure(x, 2.0);
  if (delta.sum() > 0) m.gini_standard = gini_standard(x);
  return m;
}

AnalysisReport analyze(const Graph& g) {
  AnalysisReport r;
  r.nodes = g.node_count();
  r.edges = g.edge_count();
  r.connected = is_connected(g);
  r.is_tree = is_tree(g);
  r.delta = degree_array(g);
  r.gamma = gamma_array(g);
  r.nu = r.gamma.sum();
  r.total_degree = total_degree(g);
  if (r.nodes >= 2) r.density = density(g);
  r.degree = degree_stats(r.delta);
  if (r.connected && r.nodes >= 2) {
    r.alpha = alpha_array(g);
    r.distances = distance_stats(g);
  }
  r.triangles = triangle_count(g);
  r.measures = measures_of(r.delta);
  return r;
}

json to_json(const AnalysisReport& r) {
  json j;
  j["nodes"] = r.nodes;
  j["edges"] = r.edges;
  j["connected"] = r.connected;
  j["is_tree"] = r.is_tree;
  j["delta"] = r.delta.values;
  j["alpha"] = r.alpha ? json(r.alpha->values) : json(nullptr);
  j["gamma"] = r.gamma.values;
  j["nu"] = r.nu;
  j["total_degree"] = r.total_degree;
  if (r.density) {
    put(j, "density", *r.density);
  } else {
    j["density"] = nullptr;
    j["density_exact"] = nullptr;
  }
  json degree{{"max", r.degree.max}};
  put(degree, "mean", r.degree.mean);
  put(degree, "median", r.degree.median);
  j["degree_stats"] = degree;
  if (r.distances) {
    json d{{"diameter", r.distances->diameter}, {"pairs", r.distances->pair_count}};
    put(d, "mean", r.distances->mean_distance);
    put(d, "median", r.distances->median_distance);
    j["distance_stats"] = d;
  } else {
    j["distance_stats"] = nullptr;
  }
  j["triangles"] = r.triangles;
  j["measures"] = measures_json(r.measures);
  return j;
}

AnalysisReport analysis_from_json(const json& j) {
  AnalysisReport r;
  r.nodes = j.at("nodes").get<std::size_t>();
  r.edges = j.at("edges").get<std::size_t>();
  r.connected = j.at("connected").get<bool>();
  r.is_tree = j.at("is_tree").get<bool>();
  r.delta = DeltaArray(values<DeltaTag>(j.at("delta")));
  if (!j.at("alpha").is_null()) r.alpha = AlphaArray(values<AlphaTag>(j.at("alpha")));
  r.gamma = GammaArray(values<GammaTag>(j.at("gamma")));
  r.nu = j.at("nu").get<std::int64_t>();
  r.total_degree = j.at("total_degree").get<std::int64_t>();
  if (!j.at("density").is_null()) r.density = get(j, "density");
  const auto& degree = j.at("degree_stats");
  r.degree = {degree.at("max").get<std::int64_t>(), get(degree, "mean"), get(degree, "median")};
  if (const auto& d = j.at("distance_stats"); !d.is_null()) {
    r.distances = DistanceStats{d.at("diameter").get<std::uint32_t>(), get(d, "mean"),
                                get(d, "median"), d.at("pairs").get<std::uint64_t>()};
  }
  r.triangles = j.at("triangles").get<std::uint64_t>();
  r.measures = measures_from(j.at("measures"));
  return r;
}

bool operator==(const AnalysisReport& a, const AnalysisReport& b) {
  auto same_distances = [](const std::optional<DistanceStats>& x, const std::optional<DistanceStats>& y) {
    if (!x || !y) return !x && !y;
    return x->diameter == y->diameter && x->mean_distance == y->mean_distance &&
           x->median_distance == y->median_distance && x->pair_count == y->pair_count;
  };
  return a.nodes == b.nodes && a.edges == b.edges && a.connected == b.connected &&
         a.is_tree == b.is_tree && a.delta == b.delta && a.alpha == b.alpha && a.gamma == b.gamma &&
         a.nu == b.nu && a.total_degree == b.total_degree && a.density == b.density &&
         a.degree.max == b.degree.max && a.degree.mean == b.degree.mean &&
         a.degree.median == b.degree.median && same_distances(a.distances, b.distances) &&
         a.triangles == b.triangles && a.measures == b.measures;
}

json to_json(const MajorizationVerdict& v) {
  return json{{"relation", to_string(v.relation)}, {"strict", v.strict}};
}

json compare_json(const Graph& first, const Graph& second) {
  const auto world = smaller_world_compare(first, second);
  const auto d1 = degree_array(first), d2 = degree_array(second);
  const auto g1 = gamma_array(first), g2 = gamma_array(second);
  auto side = [](const DeltaArray& d, const GammaArray& g) {
    return json{{"delta", d.values}, {"gamma", g.values}, {"nu", g.sum()},
                {"measures", measures_json(measures_of(d))}};
  };
  json j;
  j["nodes"] = first.node_count();
  j["first"] = side(d1, g1);
  j["second"] = side(d2, g2);
  j["delta_verdict"] = to_json(world.delta);
  j["gamma_verdict"] = to_json(majorize_compare(g1.span(), g2.span()));
  j["smaller_world"] = to_string(world.statement);
  return j;
}

json to_json(const SWClassification& c) {
  return json{{"DSWL", flag_json(c.dswl)}, {"DSWA", flag_json(c.dswa)}, {"DSWMd", flag_json(c.dswmd)},
              {"SWD", flag_json(c.swd)},   {"SWA", flag_json(c.swa)},   {"SWMd", flag_json(c.swmd)}};
}

json to_json(const GrowthReport& r) {
  json rows = json::array();
  for (const auto& row : r.rows) {
    json j{{"size", row.size}, {"N", row.n}, {"ln_N", row.ln_n()}, {"max_degree", row.max_degree},
           {"diameter", row.diameter}};
    put(j, "mean_degree", row.mean_degree);
    put(j, "median_degree", row.median_degree);
    put(j, "mean_distance", row.mean_distance);
    put(j, "median_distance", row.median_distance);
    j["ratios"] = json{{"max_degree", row.max_degree_ratio()},
                       {"mean_degree", row.mean_degree_ratio()},
                       {"median_degree", row.median_degree_ratio()},
                       {"diameter", row.diameter_ratio()},
                       {"mean_distance", row.mean_distance_ratio()},
                       {"median_distance", row.median_distance_ratio()}};
    rows.push_back(std::move(j));
  }
  return json{{"family", {{"kind", to_string(r.family.kind)}, {"a", r.family.a}, {"b", r.family.b}}},
              {"axis", r.axis == SizeAxis::nodes ? "N" : "M"},
              {"grid", r.grid},
              {"rows", rows}};
}

std::string growth_csv(const GrowthReport& r) {
  std::ostringstream out;
  out.precision(17);
  out << "size,N,max_degree,mean_degree,median_degree,diameter,mean_distance,median_distance,"
         "max_degree_ratio,mean_degree_ratio,median_degree_ratio,diameter_ratio,"
         "mean_distance_ratio,median_distance_ratio\n";
  for (const auto& row : r.rows) {
    out << row.size << ',' << row.n << ',' << row.max_degree << ',' << to_double(row.mean_degree)
        << ',' << to_double(row.median_degree) << ',' << row.diameter << ','
        << to_double(row.mean_distance) << ',' << to_double(row.median_distance) << ','
        << row.max_degree_ratio() << ',' << row.mean_degree_ratio() << ','
        << row.median_degree_ratio() << ',' << row.diameter_ratio() << ','
        << row.mean_distance_ratio() << ',' << row.median_distance_ratio() << '\n';
  }
  return out.str();
}

json family_json(const GrowthReport& r) {
  auto j = to_json(r);
  json classification;
  try {
    auto empirical = classify_degree_empirical(r);
    const auto distance = classify_distance_empirical(r);
    empirical.swd = distance.swd;
    empirical.swa = distance.swa;
    empirical.swmd = distance.swmd;
    classification["empirical"] = to_json(empirical);
    classification["empirical_error"] = nullptr;
  } catch (const Error& e) {
    classification["empirical"] = nullptr;
    classification["empirical_error"] = e.what();
  }
  classification["closed_form"] = to_json(known_classification(r.family));
  j["classification"] = classification;
  return j;
}

std::string lorenz_csv(std::span<const std::int64_t> decreasing) {
  std::ostringstream out;
  out << "j,cumulative\n";
  for (auto [j, s] : lorenz_curve(decreasing).points) out << j << ',' << s << '\n';
  return out.str();
}

json to_json(const CatalogEntry& e) {
  json expected = json::object();
  if (e.expected.delta) expected["delta"] = e.expected.delta->values;
  if (e.expected.alpha) expected["alpha"] = e.expected.alpha->values;
  if (e.expected.gamma) expected["gamma"] = e.expected.gamma->values;
  if (e.expected.nu) expected["nu"] = *e.expected.nu;
  if (e.expected.total_degree) expected["total_degree"] = *e.expected.total_degree;
  if (e.expected.triangles) expected["triangles"] = *e.expected.triangles;
  json j{{"id", e.id},
         {"description", e.description},
         {"nodes", e.graph.node_count()},
         {"edges", e.graph.edge_count()},
         {"expected", expected}};
  if (e.selected_by) {
    json sel{{"n", e.selected_by->n}};
    if (e.selected_by->delta) sel["delta"] = e.selected_by->delta->values;
    if (e.selected_by->alpha) sel["alpha"] = e.selected_by->alpha->values;
    if (e.selected_by->gamma) sel["gamma"] = e.selected_by->gamma->values;
    j["selected_by"] = sel;
  } else {
    j["selected_by"] = nullptr;
  }
  return j;
}

json catalog_json() {
  json list = json::array();
  for (const auto& e : catalog()) list.push_back(to_json(e));
  return list;
}

}  // namespace lorenznet
