#pragma once

#include <cmath>
#include <concepts>
#include <cstdint>
#include <span>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "lorenznet/error.hpp"

namespace lorenznet {

template <class T>
concept Arithmetic = std::integral<T> || std::floating_point<T>;

enum class Relation { equal, less, greater, incomparable };

struct MajorizationVerdict {
  Relation relation = Relation::equal;
  bool strict = false;  // some prefix inequality is strict

  friend bool operator==(const MajorizationVerdict&, const MajorizationVerdict&) = default;
};

std::string to_string(Relation r);

// Throws Errc::invalid_argument unless x is decreasing and non-negative.
template <Arithmetic T>
void require_decreasing_nonnegative(std::span<const T> x) {
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] < T{0}) throw Error(Errc::invalid_argument, "array has a negative entry");
    if (i > 0 && x[i] > x[i - 1])
      throw Error(Errc::invalid_argument, "array is not sorted in decreasing order");
  }
}

// Non-normalized Lorenz curve: (0, 0), then (j, x_1 + ... + x_j).
template <Arithmetic T>
struct LorenzCurve {
  std::vector<std::pair<std::size_t, T>> points;
};

template <Arithmetic T>
LorenzCurve<T> lorenz_curve(std::span<const T> x) {
  require_decreasing_nonnegative(x);
  LorenzCurve<T> curve;
  curve.points.reserve(x.size() + 1);
  T cumulative{0};
  curve.points.emplace_back(0, cumulative);
  for (std::size_t j = 0; j < x.size(); ++j) {
    cumulative += x[j];
    curve.points.emplace_back(j + 1, cumulative);
  }
  return curve;
}

// Generalized majorization: x ≺ y when every prefix sum of x is <= the one of
// y. Only defined between arrays of equal length.
template <Arithmetic T>
MajorizationVerdict majorize_compare(std::span<const T> x, std::span<const T> y) {
  if (x.size() != y.size())
    throw Error(Errc::length_mismatch, "majorization compares arrays of equal length, got " +
                                           std::to_string(x.size()) + " and " +
                                           std::to_string(y.size()));
  require_decreasing_nonnegative(x);
  require_decreasing_nonnegative(y);
  bool below = false, above = false;
  T sx{0}, sy{0};
  for (std::size_t j = 0; j < x.size(); ++j) {
    sx += x[j];
    sy += y[j];
    if (sx < sy) below = true;
    if (sx > sy) above = true;
  }
  if (below && above) return {Relation::incomparable, false};
  if (below) return {Relation::less, true};
  if (above) return {Relation::greater, true};
  return {Relation::equal, false};
}

// Sum of all prefix sums ("generalized Gini").
template <Arithmetic T>
T gini_generalized(std::span<const T> x) {
  require_decreasing_nonnegative(x);
  T cumulative{0}, total{0};
  for (auto v : x) {
    cumulative += v;
    total += cumulative;
  }
  return total;
}

// Σ x ln x with 0 ln 0 = 0.
template <Arithmetic T>
double theil(std::span<const T> x) {
  require_decreasing_nonnegative(x);
  double s = 0.0;
  for (auto v : x) {
    const auto d = static_cast<double>(v);
    if (d > 0.0) s += d * std::log(d);
  }
  return s;
}

template <Arithmetic T>
double power_measure(std::span<const T> x, double p) {
  if (!(p > 1.0)) throw Error(Errc::invalid_argument, "power measure needs p > 1");
  require_decreasing_nonnegative(x);
  double s = 0.0;
  for (auto v : x) s += std::pow(static_cast<double>(v), p);
  return s;
}

// Classical Gini coefficient: mean absolute pairwise difference over twice
// the mean.
template <Arithmetic T>
double gini_standard(std::span<const T> x) {
  require_decreasing_nonnegative(x);
  const auto n = static_cast<double>(x.size());
  double sum = 0.0;
  for (auto v : x) sum += static_cast<double>(v);
  if (x.empty() || sum <= 0.0) throw Error(Errc::invalid_argument, "standard Gini needs a positive sum");
  // x is decreasing, so Σ_i Σ_j |x_i - x_j| = 2 Σ_i (n - 1 - 2i) x_i
  double weighted = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i)
    weighted += (n - 1.0 - 2.0 * static_cast<double>(i)) * static_cast<double>(x[i]);
  return 2.0 * weighted / (2.0 * n * sum);
}

template <Arithmetic T>
std::vector<T> cumulative_sums(std::span<const T> x) {
  std::vector<T> out;
  out.reserve(x.size());
  T s{0};
  for (auto v : x) out.push_back(s += v);
  return out;
}

}  // namespace lorenznet
