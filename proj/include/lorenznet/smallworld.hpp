#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lorenznet/families.hpp"
#include "lorenznet/graph.hpp"
#include "lorenznet/lorenz.hpp"

namespace lorenznet {

// One family member. Ratios divide by ln N (natural log).
struct GrowthRow {
  std::int64_t size = 0;  // the family's size argument (N or M)
  std::int64_t n = 0;
  std::int64_t max_degree = 0;
  Rational mean_degree;
  Rational median_degree;
  std::uint32_t diameter = 0;
  Rational mean_distance;
  Rational median_distance;

  double ln_n() const;
  double max_degree_ratio() const;
  double mean_degree_ratio() const;
  double median_degree_ratio() const;
  double diameter_ratio() const;
  double mean_distance_ratio() const;
  double median_distance_ratio() const;
};

struct GrowthReport {
  FamilySpec family;
  SizeAxis axis = SizeAxis::nodes;  // meaning of the grid values
  std::vector<std::int64_t> grid;
  std::vector<GrowthRow> rows;  // sorted by N
};

// grid values are node counts when axis == nodes and the family's size
// argument otherwise. Throws when a grid point is unrealizable or N < 3.
GrowthReport growth_report(const FamilySpec& spec, const std::vector<std::int64_t>& grid,
                           SizeAxis axis);

// N in {32, 64, ..., 1024}, expressed on the family's natural axis.
std::vector<std::int64_t> default_grid(const FamilySpec& spec);

enum class Provenance { closed_form, empirical_trend };
std::string to_string(Provenance p);

struct SmallWorldFlag {
  bool value = false;
  Provenance provenance = Provenance::empirical_trend;
};

// Degree notions diverge (max, mean, median degree over ln N -> infinity);
// distance notions stay bounded (diameter, mean, median distance over ln N).
struct SWClassification {
  std::optional<SmallWorldFlag> dswl, dswa, dswmd;
  std::optional<SmallWorldFlag> swd, swa, swmd;
};

struct TrendThresholds {
  double divergence_factor = 4.0;
  double boundedness_factor = 2.0;
  std::size_t min_rows = 4;
  double min_span = 10.0;  // N_last / N_first
};

// Empirical trend reading of a report; implications DSWMd => DSWA => DSWL and
// SWD => SWA, SWD => SWMd are applied to the result.
SWClassification classify_degree_empirical(const GrowthReport& report,
                                           const TrendThresholds& t = {});
SWClassification classify_distance_empirical(const GrowthReport& report,
                                             const TrendThresholds& t = {});

// Empirical flags, replaced by known_classification() for built-in families.
SWClassification classify_degree_smallworld(const GrowthReport& report,
                                            const TrendThresholds& t = {});
SWClassification classify_distance_smallworld(const GrowthReport& report,
                                              const TrendThresholds& t = {});

// Flags derived in closed form for every built-in family.
SWClassification known_classification(const FamilySpec& spec);

// True when the flags respect the implication chains.
bool implications_hold(const SWClassification& c);

enum class SmallerWorld { h_smaller, g_smaller, equal, incomparable };
std::string to_string(SmallerWorld s);

struct SmallerWorldVerdict {
  MajorizationVerdict delta;  // Δ_G compared with Δ_H
  SmallerWorld statement = SmallerWorld::equal;
};

// Δ_G ≺ Δ_H reads "H is a smaller world than G". Equal node counts only.
SmallerWorldVerdict smaller_world_compare(const Graph& g, const Graph& h);

// Lower bound on the kite's median distance, N = 2M - 1.
double kite_median_distance_bound(std::int64_t n);
// Upper bound on the diameter of ln_tree(N); infinite when floor(ln N) <= 1.
double ln_tree_diameter_bound(std::int64_t n);

}  // namespace lorenznet
