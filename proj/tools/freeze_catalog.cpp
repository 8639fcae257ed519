// Prints the isomorphism classes behind every catalog figure that is pinned
// by invariant search, as C++ edge-list initializers ready to paste into
// src/catalog.cpp. The first class (smallest canonical form) is the one
// frozen.

#include <iostream>

#include "lorenznet/catalog.hpp"

using namespace lorenznet;

namespace {

struct Pin {
  const char* id;
  SearchConstraints constraints;
};

void print(const Graph& g) {
  std::cout << "{";
  for (auto [u, v] : g.edges()) std::cout << "{" << u << "," << v << "},";
  std::cout << "}";
}

}  // namespace

int main() {
  const Pin pins[] = {
      {"fig2_G1", {5, DeltaArray{3, 3, 2, 2, 2}, {}, {}}},
      {"fig2_H1", {5, DeltaArray{4, 3, 3, 2, 2}, {}, {}}},
      {"fig3_H2", {6, DeltaArray{4, 4, 4, 3, 3, 2}, {}, {}}},
      {"fig4_G1", {5, DeltaArray{3, 3, 3, 2, 1}, {}, {}}},
      {"fig4_G2", {5, DeltaArray{4, 2, 2, 1, 1}, {}, {}}},
      {"fig4_G3", {5, DeltaArray{4, 2, 2, 2, 2}, {}, {}}},
      {"fig14_G", {6, DeltaArray{4, 4, 3, 3, 3, 3}, AlphaArray{10, 5, 0, 0, 0}, GammaArray{17, 17, 14, 14, 13, 13}}},
      {"fig14_Gp", {6, DeltaArray{4, 4, 3, 3, 3, 3}, AlphaArray{10, 5, 0, 0, 0}, GammaArray{16, 16, 14, 14, 14, 14}}},
      {"fig17_a", {6, DeltaArray{3, 3, 2, 2, 2, 2}, {}, {}}},
      {"fig17_b", {6, DeltaArray{5, 2, 2, 1, 1, 1}, {}, {}}},
      {"fig18_b", {6, DeltaArray{3, 3, 3, 3, 2, 2}, {}, GammaArray{11, 11, 11, 11, 8, 8}}},
  };
  for (const auto& pin : pins) {
    const auto found = find_graphs_matching(pin.constraints);
    std::cout << pin.id << ": " << found.size() << " class(es)\n";
    for (const auto& g : found) {
      std::cout << "  ";
      print(g);
      std::cout << "\n";
    }
  }
}
