#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lorenznet/graph.hpp"
#include "lorenznet/sequences.hpp"

namespace lorenznet {

struct SearchConstraints {
  std::size_t n = 0;
  std::optional<DeltaArray> delta{};
  std::optional<AlphaArray> alpha{};
  std::optional<GammaArray> gamma{};
};

// Every connected graph on n <= 7 nodes whose arrays equal all supplied
// constraints, one representative per isomorphism class, sorted by canonical
// form. The representative is the canonical relabeling itself.
std::vector<Graph> find_graphs_matching(const SearchConstraints& constraints);

// Graph rebuilt from a canonical_form() code.
Graph graph_from_canonical(std::size_t n, std::uint32_t code);

struct ExpectedInvariants {
  std::optional<DeltaArray> delta{};
  std::optional<AlphaArray> alpha{};
  std::optional<GammaArray> gamma{};
  std::optional<std::int64_t> nu{};
  std::optional<std::int64_t> total_degree{};
  std::optional<std::uint64_t> triangles{};
};

struct CatalogEntry {
  std::string id;
  std::string description;
  Graph graph;
  ExpectedInvariants expected;
  // Set for figures pinned by find_graphs_matching: the constraints that
  // selected the frozen edge list.
  std::optional<SearchConstraints> selected_by{};
};

const std::vector<CatalogEntry>& catalog();
const CatalogEntry& catalog_figure(std::string_view id);

}  // namespace lorenznet
