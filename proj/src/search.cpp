#include "lorenznet/catalog.hpp"

#include <algorithm>
#include <bit>
#include <set>

#include "lorenznet/enumerate.hpp"
#include "lorenznet/error.hpp"

namespace lorenznet {

Graph graph_from_canonical(std::size_t n, std::uint32_t code) {
  const auto& pairs = pair_index_table(n);
  std::vector<Edge> edges;
  for (std::size_t k = 0; k < pairs.size(); ++k)
    if (code >> (pairs.size() - 1 - k) & 1u) edges.push_back(pairs[k]);
  return Graph(n, std::move(edges));
}

std::vector<Graph> find_graphs_matching(const SearchConstraints& c) {
  if (c.n > kMaxGraphEnumerationNodes)
    throw Error(Errc::out_of_range, "graph search supports n <= " +
                                        std::to_string(kMaxGraphEnumerationNodes));
  if (!c.delta && !c.alpha && !c.gamma)
    throw Error(Errc::invalid_argument, "graph search needs at least one constraint");
  if ((c.delta && c.delta->size() != c.n) || (c.gamma && c.gamma->size() != c.n) ||
      (c.alpha && c.alpha->size() + 1 != c.n))
    return {};

  std::set<std::uint32_t> classes;
  ConnectedGraphEnumerator graphs(c.n);
  std::optional<std::int64_t> edge_target;
  if (c.delta) edge_target = c.delta->sum() / 2;
  if (c.alpha) edge_target = c.alpha->values.front();
  while (auto mask = graphs.next_mask()) {
    if (edge_target && std::popcount(*mask) != *edge_target) continue;
    const auto g = ConnectedGraphEnumerator::from_mask(c.n, *mask);
    if (c.delta && degree_array(g) != *c.delta) continue;
    if (c.gamma && gamma_array(g) != *c.gamma) continue;
    if (c.alpha && alpha_array(g) != *c.alpha) continue;
    classes.insert(canonical_form(g));
  }
  std::vector<Graph> out;
  for (auto code : classes) out.push_back(graph_from_canonical(c.n, code));
  return out;
}

}  // namespace lorenznet
