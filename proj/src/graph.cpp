#include "lorenznet/graph.hpp"

#include <algorithm>
#include <bit>
#include <queue>
#include <sstream>
#include <unordered_map>

#include "lorenznet/error.hpp"

namespace lorenznet {

Graph::Graph(std::size_t node_count, std::vector<Edge> edges, std::vector<std::string> labels)
    : labels_(std::move(labels)) {
  if (!labels_.empty() && labels_.size() != node_count)
    throw Error(Errc::invalid_argument, "label count does not match node count");
  for (auto& [u, v] : edges) {
    if (u >= node_count || v >= node_count)
      throw Error(Errc::out_of_range, "edge endpoint out of range: (" + std::to_string(u) +
                                          ", " + std::to_string(v) + ")");
    if (u == v) throw Error(Errc::invalid_argument, "self-loop on node " + std::to_string(u));
    if (u > v) std::swap(u, v);
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  edges_ = std::move(edges);

  adjacency_.assign(node_count, {});
  for (auto [u, v] : edges_) {
    adjacency_[u].push_back(v);
    adjacency_[v].push_back(u);
  }
  for (auto& row : adjacency_) std::sort(row.begin(), row.end());
}

bool Graph::has_edge(NodeId u, NodeId v) const {
  if (u >= node_count() || v >= node_count()) return false;
  const auto& row = adjacency_[u];
  return std::binary_search(row.begin(), row.end(), v);
}

std::string Graph::label(NodeId v) const {
  if (v < labels_.size()) return labels_[v];
  return std::to_string(v);
}

Graph parse_edge_list(std::istream& in) {
  std::unordered_map<std::string, NodeId> index;
  std::vector<std::string> labels;
  std::vector<Edge> edges;

  auto intern = [&](const std::string& name) {
    auto [it, inserted] = index.try_emplace(name, static_cast<NodeId>(labels.size()));
    if (inserted) labels.push_back(name);
    return it->second;
  };

  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream tokens(line);
    std::vector<std::string> words;
    for (std::string w; tokens >> w;) words.push_back(std::move(w));
    if (words.empty()) continue;

    const auto where = "line " + std::to_string(line_no) + ": ";
    if (words.size() != 2)
      throw Error(Errc::parse, where + "expected two labels, got " + std::to_string(words.size()) +
                                   " tokens");
    if (words[0] == "node") {
      intern(words[1]);
      continue;
    }
    if (words[0] == words[1]) throw Error(Errc::parse, where + "self-loop on '" + words[0] + "'");
    const auto u = intern(words[0]);  // sequenced: ids follow first appearance
    edges.emplace_back(u, intern(words[1]));
  }
  if (labels.empty()) throw Error(Errc::parse, "edge list declares no nodes");
  const auto n = labels.size();
  return Graph(n, std::move(edges), std::move(labels));
}

Graph parse_edge_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_edge_list(in);
}

std::string to_edge_list(const Graph& g) {
  std::ostringstream out;
  std::vector<bool> touched(g.node_count(), false);
  for (auto [u, v] : g.edges()) touched[u] = touched[v] = true;
  for (NodeId v = 0; v < g.node_count(); ++v)
    if (!touched[v]) out << "node " << g.label(v) << '\n';
  for (auto [u, v] : g.edges()) out << g.label(u) << ' ' << g.label(v) << '\n';
  return out.str();
}

namespace {

std::vector<std::uint32_t> bfs_levels(const Graph& g, NodeId source) {
  constexpr auto unreached = std::numeric_limits<std::uint32_t>::max();
  std::vector<std::uint32_t> dist(g.node_count(), unreached);
  std::queue<NodeId> frontier;
  dist[source] = 0;
  frontier.push(source);
  while (!frontier.empty()) {
    const auto v = frontier.front();
    frontier.pop();
    for (auto w : g.neighbors(v)) {
      if (dist[w] != unreached) continue;
      dist[w] = dist[v] + 1;
      frontier.push(w);
    }
  }
  return dist;
}

void require_connected(const Graph& g, const char* what) {
  if (!is_connected(g))
    throw Error(Errc::disconnected, std::string(what) + " is undefined on a disconnected graph");
}

}  // namespace

bool is_connected(const Graph& g) {
  if (g.node_count() == 0) return false;
  const auto dist = bfs_levels(g, 0);
  return std::none_of(dist.begin(), dist.end(),
                      [](auto d) { return d == std::numeric_limits<std::uint32_t>::max(); });
}

bool is_tree(const Graph& g) {
  return g.node_count() > 0 && g.edge_count() + 1 == g.node_count() && is_connected(g);
}

std::uint64_t triangle_count(const Graph& g) {
  std::uint64_t count = 0;
  for (auto [u, v] : g.edges()) {
    // count each triangle once via its largest vertex w > v > u
    const auto& nu = g.neighbors(u);
    const auto& nv = g.neighbors(v);
    auto i = std::upper_bound(nu.begin(), nu.end(), v);
    auto j = std::upper_bound(nv.begin(), nv.end(), v);
    while (i != nu.end() && j != nv.end()) {
      if (*i < *j) ++i;
      else if (*j < *i) ++j;
      else { ++count; ++i; ++j; }
    }
  }
  return count;
}

DistanceMatrix::DistanceMatrix(const Graph& g) : n_(g.node_count()) {
  require_connected(g, "distance matrix");
  d_.reserve(n_ * n_);
  for (NodeId s = 0; s < n_; ++s) {
    auto row = bfs_levels(g, s);
    d_.insert(d_.end(), row.begin(), row.end());
  }
}

std::uint32_t DistanceMatrix::max() const {
  return d_.empty() ? 0 : *std::max_element(d_.begin(), d_.end());
}

DistanceMatrix distance_matrix(const Graph& g) { return DistanceMatrix(g); }

std::vector<std::uint64_t> distance_histogram(const Graph& g) {
  require_connected(g, "distance histogram");
  const std::size_t n = g.node_count();
  const std::size_t words = (n + 63) / 64;
  std::vector<std::uint64_t> adj(n * words, 0);
  for (auto [u, v] : g.edges()) {
    adj[u * words + v / 64] |= std::uint64_t{1} << (v % 64);
    adj[v * words + u / 64] |= std::uint64_t{1} << (u % 64);
  }

  std::vector<std::uint64_t> ordered(n > 0 ? n - 1 : 0, 0);
  std::vector<std::uint64_t> visited(words), frontier(words), next(words);
  for (NodeId s = 0; s < n; ++s) {
    std::fill(visited.begin(), visited.end(), 0);
    std::fill(frontier.begin(), frontier.end(), 0);
    visited[s / 64] = frontier[s / 64] = std::uint64_t{1} << (s % 64);
    for (std::size_t level = 1;; ++level) {
      std::fill(next.begin(), next.end(), 0);
      for (std::size_t w = 0; w < words; ++w) {
        for (auto bits = frontier[w]; bits != 0; bits &= bits - 1) {
          const auto v = w * 64 + static_cast<std::size_t>(std::countr_zero(bits));
          const auto* row = &adj[v * words];
          for (std::size_t k = 0; k < words; ++k) next[k] |= row[k];
        }
      }
      std::uint64_t reached = 0;
      for (std::size_t k = 0; k < words; ++k) {
        next[k] &= ~visited[k];
        visited[k] |= next[k];
        reached += static_cast<std::uint64_t>(std::popcount(next[k]));
      }
      if (reached == 0) break;
      ordered[level - 1] += reached;
      frontier.swap(next);
    }
  }
  // every unordered pair was seen from both ends
  for (auto& c : ordered) c /= 2;
  return ordered;
}

DistanceStats distance_stats(const Graph& g) {
  if (g.node_count() < 2) throw Error(Errc::invalid_argument, "distance stats need n >= 2");
  const auto hist = distance_histogram(g);
  DistanceStats s;
  std::int64_t total = 0;
  for (std::size_t j = 0; j < hist.size(); ++j) {
    if (hist[j] == 0) continue;
    s.diameter = static_cast<std::uint32_t>(j + 1);
    s.pair_count += hist[j];
    total += static_cast<std::int64_t>(hist[j] * (j + 1));
  }
  s.mean_distance = Rational(total, static_cast<std::int64_t>(s.pair_count));

  // order statistics k (0-based) of the ascending distance multiset
  auto kth = [&](std::uint64_t k) {
    std::uint64_t seen = 0;
    for (std::size_t j = 0; j < hist.size(); ++j) {
      seen += hist[j];
      if (k < seen) return static_cast<std::int64_t>(j + 1);
    }
    return static_cast<std::int64_t>(s.diameter);
  };
  const auto m = s.pair_count;
  s.median_distance = m % 2 == 1 ? Rational(kth(m / 2)) : Rational(kth(m / 2 - 1) + kth(m / 2), 2);
  return s;
}

Graph spanning_tree(const Graph& g) {
  require_connected(g, "spanning tree");
  std::vector<bool> seen(g.node_count(), false);
  std::vector<Edge> tree;
  std::queue<NodeId> frontier;
  seen[0] = true;
  frontier.push(0);
  while (!frontier.empty()) {
    const auto v = frontier.front();
    frontier.pop();
    for (auto w : g.neighbors(v)) {
      if (seen[w]) continue;
      seen[w] = true;
      tree.emplace_back(v, w);
      frontier.push(w);
    }
  }
  return Graph(g.node_count(), std::move(tree), g.labels());
}

double to_double(const Rational& r) {
  return static_cast<double>(r.numerator()) / static_cast<double>(r.denominator());
}

std::string to_string(const Rational& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

}  // namespace lorenznet
