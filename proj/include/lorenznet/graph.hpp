#pragma once

#include <cstdint>
#include <istream>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <boost/rational.hpp>

namespace lorenznet {

using NodeId = std::uint32_t;
using Edge = std::pair<NodeId, NodeId>;
using Rational = boost::rational<std::int64_t>;

// Finite simple undirected graph. Immutable once built: edges are stored as
// (u, v) with u < v, sorted and unique, and adjacency lists are sorted.
class Graph {
 public:
  Graph() = default;

  // Rejects self-loops and out-of-range endpoints; duplicates collapse.
  Graph(std::size_t node_count, std::vector<Edge> edges,
        std::vector<std::string> labels = {});

  std::size_t node_count() const noexcept { return adjacency_.size(); }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  const std::vector<NodeId>& neighbors(NodeId v) const { return adjacency_.at(v); }
  std::size_t degree(NodeId v) const { return adjacency_.at(v).size(); }
  bool has_edge(NodeId u, NodeId v) const;

  // External names in index order; empty when the graph was built from indices.
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  std::string label(NodeId v) const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.node_count() == b.node_count() && a.edges_ == b.edges_;
  }

 private:
  std::vector<Edge> edges_;
  std::vector<std::vector<NodeId>> adjacency_;
  std::vector<std::string> labels_;
};

// Edge-list text: one "a b" pair per line, '#' starts a comment, "node x"
// declares a (possibly isolated) node. Labels map to indices in order of first
// appearance.
Graph parse_edge_list(std::istream& in);
Graph parse_edge_list(std::string_view text);
std::string to_edge_list(const Graph& g);

bool is_connected(const Graph& g);
bool is_tree(const Graph& g);
std::uint64_t triangle_count(const Graph& g);

// Hop distances, row-major n x n. Built by one breadth-first search per node.
class DistanceMatrix {
 public:
  explicit DistanceMatrix(const Graph& g);
  std::size_t size() const noexcept { return n_; }
  std::uint32_t operator()(NodeId i, NodeId j) const { return d_[std::size_t(i) * n_ + j]; }
  std::uint32_t max() const;

 private:
  std::size_t n_ = 0;
  std::vector<std::uint32_t> d_;
};

DistanceMatrix distance_matrix(const Graph& g);

// Entry j-1 counts unordered pairs at distance j, for j = 1..n-1. Uses
// level-synchronous bitset traversals, so dense graphs cost the same as
// sparse ones. Throws Errc::disconnected.
std::vector<std::uint64_t> distance_histogram(const Graph& g);

struct DistanceStats {
  std::uint32_t diameter = 0;
  Rational mean_distance;
  Rational median_distance;
  std::uint64_t pair_count = 0;  // n(n-1)/2
};

DistanceStats distance_stats(const Graph& g);

// Breadth-first tree from node 0, neighbors visited in index order.
Graph spanning_tree(const Graph& g);

// Median of a sorted (either direction) sequence; even sizes average the two
// middle order statistics.
template <class Range>
Rational sorted_median(const Range& sorted) {
  const auto size = static_cast<std::size_t>(std::size(sorted));
  auto at = [&](std::size_t i) { return static_cast<std::int64_t>(*(std::begin(sorted) + i)); };
  if (size % 2 == 1) return Rational(at(size / 2));
  return Rational(at(size / 2 - 1) + at(size / 2), 2);
}

double to_double(const Rational& r);
std::string to_string(const Rational& r);

}  // namespace lorenznet
