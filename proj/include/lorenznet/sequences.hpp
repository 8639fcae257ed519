#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "lorenznet/graph.hpp"

namespace lorenznet {

// Integer invariant array with a tag so delta, alpha and gamma arrays cannot
// be mixed up at call sites.
template <class Tag>
struct InvariantArray {
  std::vector<std::int64_t> values;

  InvariantArray() = default;
  explicit InvariantArray(std::vector<std::int64_t> v) : values(std::move(v)) {}
  InvariantArray(std::initializer_list<std::int64_t> v) : values(v) {}

  std::size_t size() const noexcept { return values.size(); }
  std::int64_t operator[](std::size_t i) const { return values[i]; }
  auto begin() const { return values.begin(); }
  auto end() const { return values.end(); }
  std::span<const std::int64_t> span() const noexcept { return values; }
  std::int64_t sum() const {
    std::int64_t s = 0;
    for (auto x : values) s += x;
    return s;
  }
  friend bool operator==(const InvariantArray&, const InvariantArray&) = default;
};

struct DeltaTag {};
struct AlphaTag {};
struct GammaTag {};

// Degrees, sorted decreasing.
using DeltaArray = InvariantArray<DeltaTag>;
// Unordered pair counts by distance 1..n-1, trailing zeros kept.
using AlphaArray = InvariantArray<AlphaTag>;
// Closed-neighborhood degree sums, sorted decreasing.
using GammaArray = InvariantArray<GammaTag>;

DeltaArray degree_array(const Graph& g);
AlphaArray alpha_array(const Graph& g);
GammaArray gamma_array(const Graph& g);

// Per-node gamma values in node order (unsorted).
std::vector<std::int64_t> gamma_by_node(const Graph& g);

// e · (A² + A) evaluated with a dense adjacency matrix, then sorted
// decreasing. Independent of gamma_array's neighbor walk.
GammaArray gamma_via_adjacency(const Graph& g);

// Σ γ_i, computed from the gamma array.
std::int64_t neighboring_index(const Graph& g);
// Σ δ(δ+1), computed from the degrees.
std::int64_t neighboring_index(const DeltaArray& delta);

std::int64_t total_degree(const Graph& g);
Rational density(const Graph& g);

struct DegreeStats {
  std::int64_t max = 0;
  Rational mean;
  Rational median;
};

DegreeStats degree_stats(const DeltaArray& delta);

}  // namespace lorenznet
