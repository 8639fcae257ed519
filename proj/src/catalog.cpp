#include "lorenznet/catalog.hpp"

#include "lorenznet/error.hpp"
#include "lorenznet/families.hpp"

namespace lorenznet {

namespace {

Graph edges(std::size_t n, std::vector<Edge> list) { return Graph(n, std::move(list)); }

CatalogEntry direct(std::string id, std::string description, Graph g, ExpectedInvariants e) {
  return {std::move(id), std::move(description), std::move(g), std::move(e), std::nullopt};
}

// Frozen output of find_graphs_matching(selected_by): the class with the
// smallest canonical form, as printed by tools/freeze_catalog.
CatalogEntry frozen(std::string id, std::string description, SearchConstraints selected_by,
                    std::vector<Edge> list, ExpectedInvariants e) {
  const auto n = selected_by.n;
  return {std::move(id), std::move(description), edges(n, std::move(list)), std::move(e),
          std::move(selected_by)};
}

std::vector<CatalogEntry> build() {
  const auto chain5 = make_family({FamilyKind::chain}, 5);
  const auto tree_h = edges(5, {{0, 1}, {0, 2}, {0, 3}, {3, 4}});
  const auto s1 = make_family({FamilyKind::s1, 3, 1}, 3);
  const auto s2 = make_family({FamilyKind::s2, 1, 3}, 3);

  std::vector<CatalogEntry> c;
  c.push_back(direct("fig1_G", "5-chain", chain5, {.delta = DeltaArray{2, 2, 2, 1, 1}}));
  c.push_back(direct("fig1_H", "5-node tree: a degree-3 node with a two-edge branch", tree_h,
                     {.delta = DeltaArray{3, 2, 1, 1, 1}}));
  c.push_back(frozen("fig2_G1", "5 nodes, degrees (3,3,2,2,2)", {5, DeltaArray{3, 3, 2, 2, 2}, {}, {}},
                     {{0, 3}, {0, 4}, {1, 3}, {1, 4}, {2, 3}, {2, 4}},
                     {.delta = DeltaArray{3, 3, 2, 2, 2}}));
  c.push_back(frozen("fig2_H1", "5 nodes, degrees (4,3,3,2,2)", {5, DeltaArray{4, 3, 3, 2, 2}, {}, {}},
                     {{0, 3}, {0, 4}, {1, 2}, {1, 4}, {2, 3}, {2, 4}, {3, 4}},
                     {.delta = DeltaArray{4, 3, 3, 2, 2}}));
  c.push_back(direct("fig3_H1", "5-wheel",
                     edges(6, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {0, 5},
                               {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 1}}),
                     {.delta = DeltaArray{5, 3, 3, 3, 3, 3}}));
  c.push_back(frozen("fig3_H2", "6 nodes, degrees (4,4,4,3,3,2)",
                     {6, DeltaArray{4, 4, 4, 3, 3, 2}, {}, {}},
                     {{0, 4}, {0, 5}, {1, 3}, {1, 4}, {1, 5}, {2, 3}, {2, 4}, {2, 5}, {3, 4}, {3, 5}},
                     {.delta = DeltaArray{4, 4, 4, 3, 3, 2}}));
  c.push_back(frozen("fig4_G1", "5 nodes, degrees (3,3,3,2,1)", {5, DeltaArray{3, 3, 3, 2, 1}, {}, {}},
                     {{0, 4}, {1, 2}, {1, 3}, {2, 3}, {2, 4}, {3, 4}},
                     {.delta = DeltaArray{3, 3, 3, 2, 1}}));
  c.push_back(frozen("fig4_G2", "5 nodes, degrees (4,2,2,1,1)", {5, DeltaArray{4, 2, 2, 1, 1}, {}, {}},
                     {{0, 4}, {1, 4}, {2, 3}, {2, 4}, {3, 4}},
                     {.delta = DeltaArray{4, 2, 2, 1, 1}}));
  c.push_back(frozen("fig4_G3", "5 nodes, degrees (4,2,2,2,2)", {5, DeltaArray{4, 2, 2, 2, 2}, {}, {}},
                     {{0, 3}, {0, 4}, {1, 2}, {1, 4}, {2, 4}, {3, 4}},
                     {.delta = DeltaArray{4, 2, 2, 2, 2}}));

  c.push_back(direct("fig6_G1", "4-chain", make_family({FamilyKind::chain}, 4),
                     {.delta = DeltaArray{2, 2, 1, 1}}));
  c.push_back(direct("fig6_G2", "4-star", make_family({FamilyKind::star}, 4),
                     {.delta = DeltaArray{3, 1, 1, 1}}));
  c.push_back(direct("fig6_G3", "triangle with a pendant", edges(4, {{0, 1}, {0, 2}, {1, 2}, {0, 3}}),
                     {.delta = DeltaArray{3, 2, 2, 1}}));
  c.push_back(direct("fig6_G4", "4-polygon", make_family({FamilyKind::polygon}, 4),
                     {.delta = DeltaArray{2, 2, 2, 2}}));
  c.push_back(direct("fig6_G5", "complete-4 minus one edge",
                     edges(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}}),
                     {.delta = DeltaArray{3, 3, 2, 2}}));
  c.push_back(direct("fig6_G6", "complete-4", make_family({FamilyKind::complete}, 4),
                     {.delta = DeltaArray{3, 3, 3, 3}}));

  c.push_back(direct("fig9_spider5", "5-spider", make_family({FamilyKind::spider}, 5),
                     {.delta = DeltaArray{6, 6, 6, 6, 6, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1}}));
  c.push_back(direct("fig12_s1", "S1 with M=3, a=3, b=1", s1,
                     {.delta = DeltaArray{6, 6, 6, 6, 5, 5, 1, 1, 1, 1}}));
  c.push_back(direct("fig13_s2", "S2 with M=3, a=1, b=3", s2,
                     {.delta = DeltaArray{5, 5, 4, 4, 1, 1, 1, 1, 1, 1}}));

  const SearchConstraints fig14_common{6, DeltaArray{4, 4, 3, 3, 3, 3}, AlphaArray{10, 5, 0, 0, 0}, {}};
  auto fig14_g = fig14_common;
  fig14_g.gamma = GammaArray{17, 17, 14, 14, 13, 13};
  auto fig14_gp = fig14_common;
  fig14_gp.gamma = GammaArray{16, 16, 14, 14, 14, 14};
  c.push_back(frozen("fig14_G", "shares delta and alpha with fig14_Gp", fig14_g,
                     {{0, 3}, {0, 4}, {0, 5}, {1, 2}, {1, 4}, {1, 5}, {2, 3}, {2, 5}, {3, 4}, {4, 5}},
                     {.delta = fig14_common.delta, .alpha = fig14_common.alpha,
                      .gamma = fig14_g.gamma, .nu = 88}));
  c.push_back(frozen("fig14_Gp", "shares delta and alpha with fig14_G", fig14_gp,
                     {{0, 3}, {0, 4}, {0, 5}, {1, 2}, {1, 4}, {1, 5}, {2, 4}, {2, 5}, {3, 4}, {3, 5}},
                     {.delta = fig14_common.delta, .alpha = fig14_common.alpha,
                      .gamma = fig14_gp.gamma, .nu = 88}));

  const ExpectedInvariants cubic6{.delta = DeltaArray{3, 3, 3, 3, 3, 3},
                                  .alpha = AlphaArray{9, 6, 0, 0, 0},
                                  .gamma = GammaArray{12, 12, 12, 12, 12, 12},
                                  .nu = 72};
  auto k33 = cubic6;
  k33.triangles = 0;
  auto prism = cubic6;
  prism.triangles = 2;
  c.push_back(direct("fig15a", "complete bipartite 3+3",
                     edges(6, {{0, 3}, {0, 4}, {0, 5}, {1, 3}, {1, 4}, {1, 5}, {2, 3}, {2, 4}, {2, 5}}),
                     k33));
  c.push_back(direct("fig15b", "triangular prism",
                     edges(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}, {0, 3}, {1, 4}, {2, 5}}),
                     prism));

  c.push_back(direct("fig16_a", "5-chain", chain5, {.nu = 22, .total_degree = 8}));
  c.push_back(direct("fig16_b", "same tree as fig1_H", tree_h, {.nu = 24, .total_degree = 8}));
  c.push_back(frozen("fig17_a", "6 nodes, 7 edges, neighboring index 48",
                     {6, DeltaArray{3, 3, 2, 2, 2, 2}, {}, {}},
                     {{0, 4}, {0, 5}, {1, 4}, {1, 5}, {2, 3}, {2, 5}, {3, 4}},
                     {.delta = DeltaArray{3, 3, 2, 2, 2, 2}, .nu = 48, .total_degree = 14}));
  c.push_back(frozen("fig17_b", "6 nodes, 6 edges, neighboring index 48",
                     {6, DeltaArray{5, 2, 2, 1, 1, 1}, {}, {}},
                     {{0, 5}, {1, 5}, {2, 5}, {3, 4}, {3, 5}, {4, 5}},
                     {.delta = DeltaArray{5, 2, 2, 1, 1, 1}, .nu = 48, .total_degree = 12}));

  c.push_back(direct("fig18_a", "complete-4 minus one edge, pendants on its degree-2 nodes",
                     edges(6, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 4}, {3, 5}}),
                     {.delta = DeltaArray{3, 3, 3, 3, 1, 1}, .gamma = GammaArray{12, 12, 10, 10, 4, 4}}));
  c.push_back(frozen("fig18_b", "6 nodes, degrees (3,3,3,3,2,2)",
                     {6, DeltaArray{3, 3, 3, 3, 2, 2}, {}, GammaArray{11, 11, 11, 11, 8, 8}},
                     {{0, 4}, {0, 5}, {1, 3}, {1, 4}, {1, 5}, {2, 3}, {2, 4}, {2, 5}},
                     {.delta = DeltaArray{3, 3, 3, 3, 2, 2}, .gamma = GammaArray{11, 11, 11, 11, 8, 8}}));
  c.push_back(direct("fig19_a", "4-star", make_family({FamilyKind::star}, 4),
                     {.delta = DeltaArray{3, 1, 1, 1}, .gamma = GammaArray{6, 4, 4, 4}}));
  c.push_back(direct("fig19_b", "4-polygon", make_family({FamilyKind::polygon}, 4),
                     {.delta = DeltaArray{2, 2, 2, 2}, .gamma = GammaArray{6, 6, 6, 6}}));
  return c;
}

}  // namespace

const std::vector<CatalogEntry>& catalog() {
  static const auto entries = build();
  return entries;
}

const CatalogEntry& catalog_figure(std::string_view id) {
  for (const auto& e : catalog())
    if (e.id == id) return e;
  throw Error(Errc::unknown_id, "unknown catalog id '" + std::string(id) + "'");
}

}  // namespace lorenznet
