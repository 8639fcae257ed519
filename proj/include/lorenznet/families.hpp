#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lorenznet/graph.hpp"

namespace lorenznet {

enum class FamilyKind { complete, star, chain, polygon, spider, kite, s1, s2, ln_tree };

// Which integer the size argument of make_family means.
enum class SizeAxis { nodes, m };

struct FamilySpec {
  FamilyKind kind = FamilyKind::complete;
  // only read by S1 and S2
  std::int64_t a = 0;
  std::int64_t b = 0;

  friend bool operator==(const FamilySpec&, const FamilySpec&) = default;
};

std::string to_string(FamilyKind k);
FamilyKind parse_family_kind(std::string_view name);
SizeAxis natural_axis(FamilyKind k);

// Throws Errc::invalid_argument if (a, b) are unusable for the kind.
void validate(const FamilySpec& spec);

// size is N for complete/star/chain/polygon/ln_tree and M for
// spider/kite/s1/s2.
//   spider(M): K_M with two pendants per clique node, N = 3M
//   kite(M):   K_M with an M-1 node tail hung off one clique node, N = 2M-1
//   s1(M,a,b): K_{M+a} with one pendant on M+b of its nodes (b < a)
//   s2(M,a,b): K_{M+a}, one pendant on every node and a second one on b-a
//              of them (a < b, M+2a-b >= 0)
//   ln_tree(N): a chain of k = floor(ln N) nodes, then every newest node
//              sprouts k children, level by level, cut off after the first N
//              nodes in creation order
Graph make_family(const FamilySpec& spec, std::int64_t size);

// Node count the family produces for a given size argument.
std::int64_t family_node_count(const FamilySpec& spec, std::int64_t size);

// Size argument that yields exactly `nodes` nodes; throws
// Errc::invalid_argument naming the constraint when no parameter does.
std::int64_t size_for_node_count(const FamilySpec& spec, std::int64_t nodes);

}  // namespace lorenznet
