#include "lorenznet/enumerate.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <numeric>
#include <queue>

#include "lorenznet/error.hpp"

namespace lorenznet {

LabeledTreeEnumerator::LabeledTreeEnumerator(std::size_t n) : n_(n) {
  if (n < 2 || n > kMaxTreeEnumerationNodes)
    throw Error(Errc::out_of_range, "labeled tree enumeration supports 2 <= n <= " +
                                        std::to_string(kMaxTreeEnumerationNodes) + ", got " +
                                        std::to_string(n));
  sequence_.assign(n - 2, 0);
  total_ = 1;
  for (std::size_t i = 0; i + 2 < n; ++i) total_ *= n;
}

std::vector<Edge> LabeledTreeEnumerator::decode(const std::vector<NodeId>& pruefer,
                                                std::size_t n) {
  std::vector<std::size_t> degree(n, 1);
  for (auto v : pruefer) ++degree[v];

  std::vector<Edge> edges;
  edges.reserve(n - 1);
  // min-heap of current leaves
  std::priority_queue<NodeId, std::vector<NodeId>, std::greater<>> leaves;
  for (NodeId v = 0; v < n; ++v)
    if (degree[v] == 1) leaves.push(v);
  for (auto v : pruefer) {
    const auto leaf = leaves.top();
    leaves.pop();
    edges.emplace_back(leaf, v);
    if (--degree[v] == 1) leaves.push(v);
  }
  const auto a = leaves.top();
  leaves.pop();
  edges.emplace_back(a, leaves.top());
  return edges;
}

std::optional<Graph> LabeledTreeEnumerator::next() {
  if (emitted_ == total_) return std::nullopt;
  Graph tree(n_, decode(sequence_, n_));
  ++emitted_;
  // odometer increment, last position fastest
  for (auto it = sequence_.rbegin(); it != sequence_.rend(); ++it) {
    if (++*it < n_) break;
    *it = 0;
  }
  return tree;
}

const std::vector<Edge>& pair_index_table(std::size_t n) {
  static const auto tables = [] {
    std::array<std::vector<Edge>, kMaxGraphEnumerationNodes + 1> t;
    for (std::size_t k = 0; k <= kMaxGraphEnumerationNodes; ++k)
      for (NodeId u = 0; u < k; ++u)
        for (NodeId v = u + 1; v < k; ++v) t[k].emplace_back(u, v);
    return t;
  }();
  if (n > kMaxGraphEnumerationNodes) throw Error(Errc::out_of_range, "pair table supports n <= 7");
  return tables[n];
}

ConnectedGraphEnumerator::ConnectedGraphEnumerator(std::size_t n) : n_(n) {
  if (n < 2 || n > kMaxGraphEnumerationNodes)
    throw Error(Errc::out_of_range, "connected graph enumeration supports 2 <= n <= " +
                                        std::to_string(kMaxGraphEnumerationNodes) + ", got " +
                                        std::to_string(n));
  limit_ = std::uint64_t{1} << (n * (n - 1) / 2);
}

bool ConnectedGraphEnumerator::mask_connected(std::size_t n, std::uint32_t mask) {
  const auto& pairs = pair_index_table(n);
  std::array<std::uint32_t, kMaxGraphEnumerationNodes> rows{};
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    if (!(mask >> k & 1u)) continue;
    rows[pairs[k].first] |= 1u << pairs[k].second;
    rows[pairs[k].second] |= 1u << pairs[k].first;
  }
  std::uint32_t reached = 1, frontier = 1;
  while (frontier != 0) {
    std::uint32_t grown = 0;
    for (std::size_t v = 0; v < n; ++v)
      if (frontier >> v & 1u) grown |= rows[v];
    frontier = grown & ~reached;
    reached |= grown;
  }
  return reached == (1u << n) - 1;
}

Graph ConnectedGraphEnumerator::from_mask(std::size_t n, std::uint32_t mask) {
  const auto& pairs = pair_index_table(n);
  std::vector<Edge> edges;
  for (std::size_t k = 0; k < pairs.size(); ++k)
    if (mask >> k & 1u) edges.push_back(pairs[k]);
  return Graph(n, std::move(edges));
}

std::optional<std::uint32_t> ConnectedGraphEnumerator::next_mask() {
  while (mask_ < limit_) {
    const auto mask = static_cast<std::uint32_t>(mask_++);
    if (mask_connected(n_, mask)) return mask;
  }
  return std::nullopt;
}

std::optional<Graph> ConnectedGraphEnumerator::next() {
  if (auto mask = next_mask()) return from_mask(n_, *mask);
  return std::nullopt;
}

void for_each_labeled_tree(std::size_t n, const std::function<void(const Graph&)>& visit) {
  LabeledTreeEnumerator trees(n);
  while (auto t = trees.next()) visit(*t);
}

void for_each_connected_graph(std::size_t n, const std::function<void(const Graph&)>& visit) {
  ConnectedGraphEnumerator graphs(n);
  while (auto g = graphs.next()) visit(*g);
}

Graph random_connected_graph(std::size_t n, double extra_edge_probability, std::mt19937_64& rng) {
  if (n == 0) throw Error(Errc::invalid_argument, "random graph needs n >= 1");
  if (n == 1) return Graph(1, {});
  std::vector<Edge> edges;
  if (n == 2) {
    edges.emplace_back(0, 1);
  } else {
    std::uniform_int_distribution<NodeId> pick(0, static_cast<NodeId>(n - 1));
    std::vector<NodeId> pruefer(n - 2);
    for (auto& v : pruefer) v = pick(rng);
    edges = LabeledTreeEnumerator::decode(pruefer, n);
  }
  std::bernoulli_distribution extra(extra_edge_probability);
  for (NodeId u = 0; u < n; ++u)
    for (NodeId v = u + 1; v < n; ++v)
      if (extra(rng)) edges.emplace_back(u, v);
  return Graph(n, std::move(edges));
}

std::uint32_t canonical_form(const Graph& g) {
  const auto n = g.node_count();
  if (n > kMaxGraphEnumerationNodes)
    throw Error(Errc::out_of_range, "canonical form supports n <= 7");
  const auto& pairs = pair_index_table(n);
  std::vector<NodeId> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  auto best = std::numeric_limits<std::uint32_t>::max();
  do {
    // bit order: the first pair is the most significant bit
    std::uint32_t code = 0;
    for (auto [u, v] : pairs) code = code << 1 | (g.has_edge(perm[u], perm[v]) ? 1u : 0u);
    best = std::min(best, code);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

}  // namespace lorenznet
