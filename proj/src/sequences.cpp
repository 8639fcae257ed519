#include "lorenznet/sequences.hpp"

#include <algorithm>
#include <functional>

#include "lorenznet/error.hpp"

namespace lorenznet {

namespace {

void sort_decreasing(std::vector<std::int64_t>& v) { std::sort(v.begin(), v.end(), std::greater<>()); }

}  // namespace

DeltaArray degree_array(const Graph& g) {
  std::vector<std::int64_t> d(g.node_count());
  for (NodeId v = 0; v < g.node_count(); ++v) d[v] = static_cast<std::int64_t>(g.degree(v));
  sort_decreasing(d);
  return DeltaArray(std::move(d));
}

AlphaArray alpha_array(const Graph& g) {
  const auto hist = distance_histogram(g);
  return AlphaArray(std::vector<std::int64_t>(hist.begin(), hist.end()));
}

std::vector<std::int64_t> gamma_by_node(const Graph& g) {
  std::vector<std::int64_t> gamma(g.node_count());
  for (NodeId v = 0; v < g.node_count(); ++v) {
    auto sum = static_cast<std::int64_t>(g.degree(v));
    for (auto w : g.neighbors(v)) sum += static_cast<std::int64_t>(g.degree(w));
    gamma[v] = sum;
  }
  return gamma;
}

GammaArray gamma_array(const Graph& g) {
  auto gamma = gamma_by_node(g);
  sort_decreasing(gamma);
  return GammaArray(std::move(gamma));
}

GammaArray gamma_via_adjacency(const Graph& g) {
  const auto n = g.node_count();
  std::vector<std::int64_t> a(n * n, 0);
  for (auto [u, v] : g.edges()) a[u * n + v] = a[v * n + u] = 1;

  // column sums of A² + A
  std::vector<std::int64_t> result(n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      if (a[i * n + k] == 0) continue;
      for (std::size_t j = 0; j < n; ++j) result[j] += a[i * n + k] * a[k * n + j];
    }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) result[j] += a[i * n + j];
  sort_decreasing(result);
  return GammaArray(std::move(result));
}

std::int64_t neighboring_index(const Graph& g) { return gamma_array(g).sum(); }

std::int64_t neighboring_index(const DeltaArray& delta) {
  std::int64_t v = 0;
  for (auto d : delta) v += d * (d + 1);
  return v;
}

std::int64_t total_degree(const Graph& g) { return 2 * static_cast<std::int64_t>(g.edge_count()); }

Rational density(const Graph& g) {
  const auto n = static_cast<std::int64_t>(g.node_count());
  if (n < 2) throw Error(Errc::invalid_argument, "density needs n >= 2");
  return Rational(total_degree(g), n * (n - 1));
}

DegreeStats degree_stats(const DeltaArray& delta) {
  if (delta.size() == 0) throw Error(Errc::invalid_argument, "degree stats of an empty array");
  DegreeStats s;
  s.max = *std::max_element(delta.begin(), delta.end());
  s.mean = Rational(delta.sum(), static_cast<std::int64_t>(delta.size()));
  auto sorted = delta.values;
  sort_decreasing(sorted);
  s.median = sorted_median(sorted);
  return s;
}

}  // namespace lorenznet
