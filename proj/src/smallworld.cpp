#include "lorenznet/smallworld.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "lorenznet/error.hpp"
#include "lorenznet/sequences.hpp"

namespace lorenznet {

double GrowthRow::ln_n() const { return std::log(static_cast<double>(n)); }
double GrowthRow::max_degree_ratio() const { return static_cast<double>(max_degree) / ln_n(); }
double GrowthRow::mean_degree_ratio() const { return to_double(mean_degree) / ln_n(); }
double GrowthRow::median_degree_ratio() const { return to_double(median_degree) / ln_n(); }
double GrowthRow::diameter_ratio() const { return static_cast<double>(diameter) / ln_n(); }
double GrowthRow::mean_distance_ratio() const { return to_double(mean_distance) / ln_n(); }
double GrowthRow::median_distance_ratio() const { return to_double(median_distance) / ln_n(); }

GrowthReport growth_report(const FamilySpec& spec, const std::vector<std::int64_t>& grid,
                           SizeAxis axis) {
  validate(spec);
  if (grid.empty()) throw Error(Errc::invalid_argument, "empty grid");
  for (std::size_t i = 1; i < grid.size(); ++i)
    if (grid[i] <= grid[i - 1]) throw Error(Errc::invalid_argument, "grid must be strictly increasing");

  GrowthReport report{spec, axis, grid, {}};
  for (auto value : grid) {
    const auto size = axis == natural_axis(spec.kind) ? value : size_for_node_count(spec, value);
    const auto n = family_node_count(spec, size);
    if (n < 3)
      throw Error(Errc::invalid_argument,
                  to_string(spec.kind) + ": growth rows need N >= 3, got N = " + std::to_string(n));
    const auto g = make_family(spec, size);
    const auto degrees = degree_stats(degree_array(g));
    const auto distances = distance_stats(g);
    report.rows.push_back({size, n, degrees.max, degrees.mean, degrees.median, distances.diameter,
                           distances.mean_distance, distances.median_distance});
  }
  std::sort(report.rows.begin(), report.rows.end(),
            [](const auto& a, const auto& b) { return a.n < b.n; });
  return report;
}

std::vector<std::int64_t> default_grid(const FamilySpec& spec) {
  std::vector<std::int64_t> out;
  for (std::int64_t n = 32; n <= 1024; n *= 2) {
    switch (spec.kind) {
      case FamilyKind::spider: out.push_back(n / 3); break;
      case FamilyKind::kite: out.push_back((n + 1) / 2); break;
      case FamilyKind::s1:
      case FamilyKind::s2: out.push_back(std::max<std::int64_t>(1, (n - spec.a - spec.b) / 2)); break;
      default: out.push_back(n);
    }
  }
  return out;
}

std::string to_string(Provenance p) {
  return p == Provenance::closed_form ? "closed-form" : "empirical-trend";
}

namespace {

template <class Ratio>
std::vector<double> ratios(const GrowthReport& r, Ratio ratio) {
  std::vector<double> out;
  for (const auto& row : r.rows) out.push_back((row.*ratio)());
  return out;
}

void require_trend_grid(const GrowthReport& r, const TrendThresholds& t) {
  if (r.rows.size() < t.min_rows)
    throw Error(Errc::invalid_argument, "trend classification needs at least " +
                                            std::to_string(t.min_rows) + " grid points, got " +
                                            std::to_string(r.rows.size()));
  const auto span = static_cast<double>(r.rows.back().n) / static_cast<double>(r.rows.front().n);
  if (span < t.min_span)
    throw Error(Errc::invalid_argument, "trend classification needs N_last / N_first >= " +
                                            std::to_string(t.min_span));
}

// Tail (last half) strictly increasing and last >= factor * first.
bool diverging(const std::vector<double>& r, double factor) {
  const auto tail_start = r.size() / 2;
  for (auto i = std::max<std::size_t>(tail_start, 1); i < r.size(); ++i)
    if (!(r[i] > r[i - 1])) return false;
  return r.back() >= factor * r.front();
}

// last < factor * first, and the final step grows by less than sqrt(factor).
bool bounded(const std::vector<double>& r, double factor) {
  if (!(r.back() < factor * r.front())) return false;
  return r.size() < 2 || r.back() <= std::sqrt(factor) * r[r.size() - 2];
}

SmallWorldFlag empirical(bool v) { return {v, Provenance::empirical_trend}; }
SmallWorldFlag closed(bool v) { return {v, Provenance::closed_form}; }

void close_degree(SWClassification& c) {
  if (c.dswmd && c.dswmd->value && c.dswa) c.dswa->value = true;
  if (c.dswa && c.dswa->value && c.dswl) c.dswl->value = true;
}

void close_distance(SWClassification& c) {
  if (c.swd && c.swd->value) {
    if (c.swa) c.swa->value = true;
    if (c.swmd) c.swmd->value = true;
  }
}

}  // namespace

SWClassification classify_degree_empirical(const GrowthReport& report, const TrendThresholds& t) {
  require_trend_grid(report, t);
  SWClassification c;
  c.dswl = empirical(diverging(ratios(report, &GrowthRow::max_degree_ratio), t.divergence_factor));
  c.dswa = empirical(diverging(ratios(report, &GrowthRow::mean_degree_ratio), t.divergence_factor));
  c.dswmd = empirical(diverging(ratios(report, &GrowthRow::median_degree_ratio), t.divergence_factor));
  close_degree(c);
  return c;
}

SWClassification classify_distance_empirical(const GrowthReport& report, const TrendThresholds& t) {
  require_trend_grid(report, t);
  SWClassification c;
  c.swd = empirical(bounded(ratios(report, &GrowthRow::diameter_ratio), t.boundedness_factor));
  c.swa = empirical(bounded(ratios(report, &GrowthRow::mean_distance_ratio), t.boundedness_factor));
  c.swmd = empirical(bounded(ratios(report, &GrowthRow::median_distance_ratio), t.boundedness_factor));
  close_distance(c);
  return c;
}

// Every built-in family has a closed form, so the grid is not consulted; the
// thresholds stay in the signature for families that may lack one.
SWClassification classify_degree_smallworld(const GrowthReport& report, const TrendThresholds&) {
  SWClassification c;
  const auto known = known_classification(report.family);
  c.dswl = known.dswl;
  c.dswa = known.dswa;
  c.dswmd = known.dswmd;
  return c;
}

SWClassification classify_distance_smallworld(const GrowthReport& report, const TrendThresholds&) {
  SWClassification c;
  const auto known = known_classification(report.family);
  c.swd = known.swd;
  c.swa = known.swa;
  c.swmd = known.swmd;
  return c;
}

SWClassification known_classification(const FamilySpec& spec) {
  validate(spec);
  // {DSWL, DSWA, DSWMd, SWD, SWA, SWMd}
  bool f[6] = {};
  switch (spec.kind) {
    case FamilyKind::complete: std::fill(f, f + 6, true); break;     // degree N-1, diameter 1
    case FamilyKind::star: f[0] = f[3] = f[4] = f[5] = true; break;  // mean degree < 2, diameter 2
    case FamilyKind::chain:
    case FamilyKind::polygon: break;                                  // bounded degrees, diameter ~N
    case FamilyKind::spider: f[0] = f[1] = f[3] = f[4] = f[5] = true; break;  // median 1, diameter 3
    case FamilyKind::kite: f[0] = f[1] = f[2] = true; break;                  // median degree M-1, Md_N ~ N
    case FamilyKind::ln_tree: f[3] = f[4] = f[5] = true; break;               // degrees <= floor(ln N)+2
    case FamilyKind::s1: std::fill(f, f + 6, true); break;                    // median M+a-1, diameter 3
    case FamilyKind::s2: f[0] = f[1] = f[3] = f[4] = f[5] = true; break;      // median 1, diameter 3
  }
  SWClassification c;
  c.dswl = closed(f[0]);
  c.dswa = closed(f[1]);
  c.dswmd = closed(f[2]);
  c.swd = closed(f[3]);
  c.swa = closed(f[4]);
  c.swmd = closed(f[5]);
  return c;
}

bool implications_hold(const SWClassification& c) {
  auto on = [](const std::optional<SmallWorldFlag>& f) { return f && f->value; };
  auto off = [](const std::optional<SmallWorldFlag>& f) { return f && !f->value; };
  if (on(c.dswmd) && off(c.dswa)) return false;
  if (on(c.dswa) && off(c.dswl)) return false;
  if (on(c.dswmd) && off(c.dswl)) return false;
  if (on(c.swd) && (off(c.swa) || off(c.swmd))) return false;
  return true;
}

std::string to_string(SmallerWorld s) {
  switch (s) {
    case SmallerWorld::h_smaller: return "second is a smaller world than first";
    case SmallerWorld::g_smaller: return "first is a smaller world than second";
    case SmallerWorld::equal: return "equal";
    case SmallerWorld::incomparable: return "incomparable";
  }
  return "unknown";
}

SmallerWorldVerdict smaller_world_compare(const Graph& g, const Graph& h) {
  if (g.node_count() != h.node_count())
    throw Error(Errc::length_mismatch, "smaller-world comparison needs equal node counts, got " +
                                           std::to_string(g.node_count()) + " and " +
                                           std::to_string(h.node_count()));
  const auto dg = degree_array(g), dh = degree_array(h);
  SmallerWorldVerdict v;
  v.delta = majorize_compare(dg.span(), dh.span());
  switch (v.delta.relation) {
    case Relation::less: v.statement = SmallerWorld::h_smaller; break;
    case Relation::greater: v.statement = SmallerWorld::g_smaller; break;
    case Relation::equal: v.statement = SmallerWorld::equal; break;
    case Relation::incomparable: v.statement = SmallerWorld::incomparable; break;
  }
  return v;
}

double kite_median_distance_bound(std::int64_t n) {
  const double s3 = std::sqrt(3.0);
  return (2.0 - s3) / 2.0 * static_cast<double>(n) - (1.0 + s3) / 2.0;
}

double ln_tree_diameter_bound(std::int64_t n) {
  const double ln = std::log(static_cast<double>(n));
  const double k = std::floor(ln);
  if (k <= 1.0) return std::numeric_limits<double>::infinity();
  return k + 2.0 * ln / std::log(k) + 2.0;
}

}  // namespace lorenznet
