#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <vector>

#include "lorenznet/graph.hpp"

namespace lorenznet {

inline constexpr std::size_t kMaxTreeEnumerationNodes = 9;
inline constexpr std::size_t kMaxGraphEnumerationNodes = 7;

// Walks all n^(n-2) Prüfer sequences in lexicographic order and decodes each
// into its labeled tree. Restartable: a fresh enumerator starts from the
// first sequence.
class LabeledTreeEnumerator {
 public:
  explicit LabeledTreeEnumerator(std::size_t n);

  std::optional<Graph> next();
  std::uint64_t total() const noexcept { return total_; }

  // Writes the edge list of the tree for a Prüfer sequence over [0, n).
  static std::vector<Edge> decode(const std::vector<NodeId>& pruefer, std::size_t n);

 private:
  std::size_t n_;
  std::vector<NodeId> sequence_;
  std::uint64_t total_ = 0;
  std::uint64_t emitted_ = 0;
};

// Walks the 2^(n(n-1)/2) edge subsets in increasing bitmask order and yields
// the connected ones. Bit k of the mask is the k-th pair of
// pair_index_table(n).
class ConnectedGraphEnumerator {
 public:
  explicit ConnectedGraphEnumerator(std::size_t n);

  std::optional<Graph> next();
  // Raw mask form, skipping Graph construction.
  std::optional<std::uint32_t> next_mask();

  static Graph from_mask(std::size_t n, std::uint32_t mask);
  static bool mask_connected(std::size_t n, std::uint32_t mask);

 private:
  std::size_t n_;
  std::uint64_t limit_;
  std::uint64_t mask_ = 0;
};

const std::vector<Edge>& pair_index_table(std::size_t n);

void for_each_labeled_tree(std::size_t n, const std::function<void(const Graph&)>& visit);
void for_each_connected_graph(std::size_t n, const std::function<void(const Graph&)>& visit);

// Uniform random labeled tree (random Prüfer sequence) plus every other pair
// independently with probability extra_edge_probability.
Graph random_connected_graph(std::size_t n, double extra_edge_probability, std::mt19937_64& rng);

// Smallest adjacency bit string over all n! relabelings (upper triangle,
// row-major). Equal iff the graphs are isomorphic. n <= 7.
std::uint32_t canonical_form(const Graph& g);

}  // namespace lorenznet
