#include "lorenznet/families.hpp"

#include <cmath>

#include "lorenznet/error.hpp"

namespace lorenznet {

namespace {

struct KindInfo {
  FamilyKind kind;
  const char* name;
  SizeAxis axis;
};

constexpr KindInfo kKinds[] = {
    {FamilyKind::complete, "complete", SizeAxis::nodes},
    {FamilyKind::star, "star", SizeAxis::nodes},
    {FamilyKind::chain, "chain", SizeAxis::nodes},
    {FamilyKind::polygon, "polygon", SizeAxis::nodes},
    {FamilyKind::spider, "spider", SizeAxis::m},
    {FamilyKind::kite, "kite", SizeAxis::m},
    {FamilyKind::s1, "s1", SizeAxis::m},
    {FamilyKind::s2, "s2", SizeAxis::m},
    {FamilyKind::ln_tree, "lntree", SizeAxis::nodes},
};

const KindInfo& info(FamilyKind k) {
  for (const auto& i : kKinds)
    if (i.kind == k) return i;
  throw Error(Errc::invalid_argument, "unknown family kind");
}

[[noreturn]] void reject(const FamilySpec& spec, const std::string& why) {
  throw Error(Errc::invalid_argument, to_string(spec.kind) + ": " + why);
}

void add_clique(std::vector<Edge>& edges, NodeId count) {
  for (NodeId u = 0; u < count; ++u)
    for (NodeId v = u + 1; v < count; ++v) edges.emplace_back(u, v);
}

std::int64_t minimum_size(FamilyKind k) {
  switch (k) {
    case FamilyKind::complete: return 1;
    case FamilyKind::star: return 2;
    case FamilyKind::chain: return 2;
    case FamilyKind::polygon: return 3;
    case FamilyKind::ln_tree: return 4;
    case FamilyKind::spider:
    case FamilyKind::kite: return 2;
    case FamilyKind::s1:
    case FamilyKind::s2: return 1;
  }
  return 1;
}

Graph ln_tree(std::int64_t target) {
  const auto k = static_cast<NodeId>(std::floor(std::log(static_cast<double>(target))));
  const auto n = static_cast<NodeId>(target);
  std::vector<Edge> edges;
  NodeId created = 0;
  std::vector<NodeId> level;
  for (; created < k && created < n; ++created) {
    if (created > 0) edges.emplace_back(created - 1, created);
    level.push_back(created);
  }
  while (created < n) {
    std::vector<NodeId> next;
    for (auto parent : level) {
      for (NodeId c = 0; c < k && created < n; ++c, ++created) {
        edges.emplace_back(parent, created);
        next.push_back(created);
      }
    }
    level = std::move(next);
  }
  return Graph(n, std::move(edges));
}

}  // namespace

std::string to_string(FamilyKind k) { return info(k).name; }

FamilyKind parse_family_kind(std::string_view name) {
  for (const auto& i : kKinds)
    if (name == i.name) return i.kind;
  if (name == "ln-tree" || name == "ln_tree") return FamilyKind::ln_tree;
  throw Error(Errc::invalid_argument, "unknown family '" + std::string(name) + "'");
}

SizeAxis natural_axis(FamilyKind k) { return info(k).axis; }

void validate(const FamilySpec& spec) {
  if (spec.kind == FamilyKind::s1) {
    if (spec.a <= 0 || spec.b <= 0) reject(spec, "a and b must be positive");
    if (!(spec.b < spec.a)) reject(spec, "requires b < a");
  } else if (spec.kind == FamilyKind::s2) {
    if (spec.a <= 0 || spec.b <= 0) reject(spec, "a and b must be positive");
    if (!(spec.a < spec.b)) reject(spec, "requires a < b");
  }
}

std::int64_t family_node_count(const FamilySpec& spec, std::int64_t size) {
  switch (spec.kind) {
    case FamilyKind::spider: return 3 * size;
    case FamilyKind::kite: return 2 * size - 1;
    case FamilyKind::s1:
    case FamilyKind::s2: return 2 * size + spec.a + spec.b;
    default: return size;
  }
}

std::int64_t size_for_node_count(const FamilySpec& spec, std::int64_t nodes) {
  validate(spec);
  std::int64_t size = nodes;
  switch (spec.kind) {
    case FamilyKind::spider:
      if (nodes % 3 != 0) reject(spec, "N must be a multiple of 3 (N = 3M), got " + std::to_string(nodes));
      size = nodes / 3;
      break;
    case FamilyKind::kite:
      if (nodes % 2 == 0) reject(spec, "N must be odd (N = 2M-1), got " + std::to_string(nodes));
      size = (nodes + 1) / 2;
      break;
    case FamilyKind::s1:
    case FamilyKind::s2:
      if ((nodes - spec.a - spec.b) % 2 != 0)
        reject(spec, "N - a - b must be even (N = 2M+a+b), got N = " + std::to_string(nodes));
      size = (nodes - spec.a - spec.b) / 2;
      break;
    default: break;
  }
  if (size < minimum_size(spec.kind))
    reject(spec, "N = " + std::to_string(nodes) + " is below the smallest member of the family");
  if (spec.kind == FamilyKind::s2 && size + 2 * spec.a - spec.b < 0)
    reject(spec, "requires M + 2a - b >= 0");
  return size;
}

Graph make_family(const FamilySpec& spec, std::int64_t size) {
  validate(spec);
  const auto axis_name = natural_axis(spec.kind) == SizeAxis::m ? "M" : "N";
  if (size < minimum_size(spec.kind))
    reject(spec, std::string(axis_name) + " must be >= " + std::to_string(minimum_size(spec.kind)) +
                     ", got " + std::to_string(size));
  if (family_node_count(spec, size) > 100000) reject(spec, "graph too large");

  const auto m = static_cast<NodeId>(size);
  std::vector<Edge> edges;
  switch (spec.kind) {
    case FamilyKind::complete:
      add_clique(edges, m);
      return Graph(m, std::move(edges));
    case FamilyKind::star:
      for (NodeId v = 1; v < m; ++v) edges.emplace_back(0, v);
      return Graph(m, std::move(edges));
    case FamilyKind::chain:
      for (NodeId v = 1; v < m; ++v) edges.emplace_back(v - 1, v);
      return Graph(m, std::move(edges));
    case FamilyKind::polygon:
      for (NodeId v = 1; v < m; ++v) edges.emplace_back(v - 1, v);
      edges.emplace_back(m - 1, 0);
      return Graph(m, std::move(edges));
    case FamilyKind::spider: {
      add_clique(edges, m);
      for (NodeId v = 0; v < m; ++v) {
        edges.emplace_back(v, m + 2 * v);
        edges.emplace_back(v, m + 2 * v + 1);
      }
      return Graph(3 * std::size_t{m}, std::move(edges));
    }
    case FamilyKind::kite: {
      add_clique(edges, m);
      // tail m, m+1, ..., 2m-2 hangs off clique node m-1
      for (NodeId v = m; v + 1 < 2 * m; ++v) edges.emplace_back(v - 1, v);
      return Graph(2 * std::size_t{m} - 1, std::move(edges));
    }
    case FamilyKind::s1: {
      const auto clique = static_cast<NodeId>(size + spec.a);
      const auto pendants = static_cast<NodeId>(size + spec.b);
      add_clique(edges, clique);
      for (NodeId v = 0; v < pendants; ++v) edges.emplace_back(v, clique + v);
      return Graph(clique + pendants, std::move(edges));
    }
    case FamilyKind::s2: {
      if (size + 2 * spec.a - spec.b < 0) reject(spec, "requires M + 2a - b >= 0");
      const auto clique = static_cast<NodeId>(size + spec.a);
      const auto doubled = static_cast<NodeId>(spec.b - spec.a);
      add_clique(edges, clique);
      NodeId next = clique;
      for (NodeId v = 0; v < clique; ++v) edges.emplace_back(v, next++);
      for (NodeId v = 0; v < doubled; ++v) edges.emplace_back(v, next++);
      return Graph(next, std::move(edges));
    }
    case FamilyKind::ln_tree:
      return ln_tree(size);
  }
  reject(spec, "unsupported family");
}

}  // namespace lorenznet
