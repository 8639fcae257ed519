#pragma once

#include <optional>
#include <string>

#include "json.hpp"
#include "lorenznet/catalog.hpp"
#include "lorenznet/graph.hpp"
#include "lorenznet/lorenz.hpp"
#include "lorenznet/sequences.hpp"
#include "lorenznet/smallworld.hpp"

namespace lorenznet {

struct Measures {
  std::int64_t gini_generalized = 0;
  double theil = 0.0;
  double power_2 = 0.0;
  std::optional<double> gini_standard;  // absent for an all-zero array

  friend bool operator==(const Measures&, const Measures&) = default;
};

Measures measures_of(const DeltaArray& delta);

// Everything the CLI reports for one graph. Distance fields are absent for a
// disconnected graph.
struct AnalysisReport {
  std::size_t nodes = 0;
  std::size_t edges = 0;
  bool connected = false;
  bool is_tree = false;
  DeltaArray delta;
  std::optional<AlphaArray> alpha;
  GammaArray gamma;
  std::int64_t nu = 0;
  std::int64_t total_degree = 0;
  std::optional<Rational> density;
  DegreeStats degree;
  std::optional<DistanceStats> distances;
  std::uint64_t triangles = 0;
  Measures measures;
};

AnalysisReport analyze(const Graph& g);

nlohmann::json to_json(const AnalysisReport& r);
AnalysisReport analysis_from_json(const nlohmann::json& j);
bool operator==(const AnalysisReport& a, const AnalysisReport& b);

nlohmann::json to_json(const MajorizationVerdict& v);
nlohmann::json compare_json(const Graph& first, const Graph& second);

nlohmann::json to_json(const SWClassification& c);
nlohmann::json to_json(const GrowthReport& r);
std::string growth_csv(const GrowthReport& r);

// Growth report plus the empirical and closed-form classifications. When the
// grid is too short for a trend reading, "empirical" is null and
// "empirical_error" says why.
nlohmann::json family_json(const GrowthReport& r);

// Two-column "j,cumulative" rows starting at 0,0.
std::string lorenz_csv(std::span<const std::int64_t> decreasing);

nlohmann::json to_json(const CatalogEntry& e);
nlohmann::json catalog_json();

}  // namespace lorenznet
