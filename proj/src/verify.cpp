#include "lorenznet/verify.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "lorenznet/catalog.hpp"
#include "lorenznet/enumerate.hpp"
#include "lorenznet/error.hpp"
#include "lorenznet/families.hpp"
#include "lorenznet/lorenz.hpp"
#include "lorenznet/sequences.hpp"
#include "lorenznet/smallworld.hpp"

namespace lorenznet {

namespace {

template <class Range>
std::string tuple(const Range& r) {
  std::ostringstream out;
  out << '(';
  bool first = true;
  for (auto v : r) {
    if (!first) out << ',';
    out << v;
    first = false;
  }
  out << ')';
  return out.str();
}

std::string verdict(const MajorizationVerdict& v) { return to_string(v.relation); }

class Suite {
 public:
  explicit Suite(std::vector<FixtureResult>& out, std::string group)
      : out_(out), group_(std::move(group)) {}

  void check(std::string name, std::string expected, std::string computed) {
    const auto ok = expected == computed;
    out_.push_back({group_, std::move(name), std::move(expected), std::move(computed),
                    ok ? FixtureStatus::pass : FixtureStatus::fail});
  }

  void check(std::string name, std::string expected, std::string computed, bool ok) {
    out_.push_back({group_, std::move(name), std::move(expected), std::move(computed),
                    ok ? FixtureStatus::pass : FixtureStatus::fail});
  }

  void flag(std::string name, std::string stated, std::string computed, bool consistent) {
    out_.push_back({group_, std::move(name), std::move(stated), std::move(computed),
                    consistent ? FixtureStatus::flagged : FixtureStatus::fail});
  }

 private:
  std::vector<FixtureResult>& out_;
  std::string group_;
};

const Graph& fig(std::string_view id) { return catalog_figure(id).graph; }

MajorizationVerdict delta_compare(const Graph& a, const Graph& b) {
  const auto da = degree_array(a), db = degree_array(b);
  return majorize_compare(da.span(), db.span());
}

MajorizationVerdict gamma_compare(const Graph& a, const Graph& b) {
  const auto ga = gamma_array(a), gb = gamma_array(b);
  return majorize_compare(ga.span(), gb.span());
}

const char* kSix[] = {"fig6_G1", "fig6_G2", "fig6_G3", "fig6_G4", "fig6_G5", "fig6_G6"};
const std::int64_t kG3Delta[] = {3, 2, 2, 1};

void gini(Suite& s) {
  const std::int64_t expected[] = {17, 18, 24, 20, 27, 30};
  for (int i = 0; i < 6; ++i) {
    const auto d = degree_array(fig(kSix[i]));
    const auto name = std::string("Gini(G") + char('1' + i) + ")";
    const auto computed = gini_generalized(d.span());
    if (i == 2) {
      // the stated 24 disagrees with the stated delta (3,2,2,1), whose prefix sums add to 23
      s.flag(name, std::to_string(expected[i]), std::to_string(computed),
             computed == gini_generalized(std::span<const std::int64_t>(kG3Delta)));
      continue;
    }
    s.check(name, std::to_string(expected[i]), std::to_string(computed));
  }
}

void hasse(Suite& s) {
  const char* cumulative[] = {"(2,4,5,6)", "(3,4,5,6)", "(3,5,7,9)",
                              "(2,4,6,8)", "(3,6,8,10)", "(3,6,9,12)"};
  for (int i = 0; i < 6; ++i) {
    const auto d = degree_array(fig(kSix[i]));
    const auto name = std::string("cumulative(G") + char('1' + i) + ")";
    const auto computed = tuple(cumulative_sums(d.span()));
    if (i == 2) {
      // (3,5,7,9) has an odd total, so no graph has it; (3,2,2,1) gives (3,5,7,8)
      s.flag(name, cumulative[i], computed,
             computed == tuple(cumulative_sums(std::span<const std::int64_t>(kG3Delta))));
      continue;
    }
    s.check(name, cumulative[i], computed);
  }
  const std::pair<int, int> less[] = {{0, 1}, {0, 3}, {1, 2}, {3, 2}, {2, 4}, {4, 5}};
  for (auto [a, b] : less) {
    s.check(std::string("G") + char('1' + a) + " vs G" + char('1' + b), "less",
            verdict(delta_compare(fig(kSix[a]), fig(kSix[b]))));
  }
  s.check("G2 vs G4", "incomparable", verdict(delta_compare(fig(kSix[1]), fig(kSix[3]))));
  // only G2/G4 is incomparable among all 15 pairs
  int incomparable = 0;
  for (int a = 0; a < 6; ++a)
    for (int b = a + 1; b < 6; ++b)
      if (delta_compare(fig(kSix[a]), fig(kSix[b])).relation == Relation::incomparable) ++incomparable;
  s.check("incomparable pairs", "1", std::to_string(incomparable));
}

void average_counterexamples(Suite& s) {
  auto stats = [](std::string_view id) { return degree_stats(degree_array(fig(id))); };
  s.check("fig1: G vs H", "less", verdict(delta_compare(fig("fig1_G"), fig("fig1_H"))));
  s.check("fig1: Md(G), Md(H)", "2, 1",
          to_string(stats("fig1_G").median) + ", " + to_string(stats("fig1_H").median));
  s.check("fig2: G1 vs H1", "less", verdict(delta_compare(fig("fig2_G1"), fig("fig2_H1"))));
  s.check("fig2: Md(G1), Md(H1)", "2, 3",
          to_string(stats("fig2_G1").median) + ", " + to_string(stats("fig2_H1").median));
  s.check("fig3: H1 vs H2", "incomparable", verdict(delta_compare(fig("fig3_H1"), fig("fig3_H2"))));
  const auto h1 = stats("fig3_H1"), h2 = stats("fig3_H2");
  s.check("fig3: mean(H1), mean(H2)", to_string(Rational(20, 6)) + ", " + to_string(Rational(20, 6)),
          to_string(h1.mean) + ", " + to_string(h2.mean));
  s.check("fig3: Md(H1), Md(H2)", "3, 7/2", to_string(h1.median) + ", " + to_string(h2.median));
  s.check("fig3: max(H1), max(H2)", "5, 4", std::to_string(h1.max) + ", " + std::to_string(h2.max));
}

void chain_lowest(Suite& s) {
  for (std::size_t n = 3; n <= 6; ++n) {
    const auto chain = degree_array(make_family({FamilyKind::chain}, static_cast<std::int64_t>(n)));
    std::size_t graphs = 0, below = 0;
    for_each_connected_graph(n, [&](const Graph& g) {
      ++graphs;
      const auto r = majorize_compare(chain.span(), degree_array(g).span()).relation;
      if (r == Relation::less || r == Relation::equal) ++below;
    });
    s.check("chain(" + std::to_string(n) + ") below every connected graph",
            std::to_string(graphs) + " of " + std::to_string(graphs),
            std::to_string(below) + " of " + std::to_string(graphs));
  }
}

void gamma_tables(Suite& s) {
  struct Row {
    FamilyKind kind;
    std::function<std::vector<std::int64_t>(std::int64_t)> gamma;
    std::function<std::int64_t(std::int64_t)> nu;
  };
  const Row rows[] = {
      {FamilyKind::complete,
       [](std::int64_t n) { return std::vector<std::int64_t>(n, n * (n - 1)); },
       [](std::int64_t n) { return n * n * (n - 1); }},
      {FamilyKind::star,
       [](std::int64_t n) {
         std::vector<std::int64_t> g(n, n);
         g[0] = 2 * (n - 1);
         return g;
       },
       [](std::int64_t n) { return (n + 2) * (n - 1); }},
      {FamilyKind::polygon, [](std::int64_t n) { return std::vector<std::int64_t>(n, 6); },
       [](std::int64_t n) { return 6 * n; }},
      {FamilyKind::chain,
       [](std::int64_t n) {
         std::vector<std::int64_t> g(n - 4, 6);
         g.insert(g.end(), {5, 5, 3, 3});
         return g;
       },
       [](std::int64_t n) { return 6 * n - 8; }},
  };
  for (const auto& row : rows) {
    for (std::int64_t n = 4; n <= 10; ++n) {
      const auto g = make_family({row.kind}, n);
      const auto name = to_string(row.kind) + "(" + std::to_string(n) + ")";
      s.check(name + " gamma", tuple(row.gamma(n)), tuple(gamma_array(g)));
      s.check(name + " nu", std::to_string(row.nu(n)), std::to_string(neighboring_index(g)));
    }
  }
}

std::vector<Graph> identity_corpus() {
  std::vector<Graph> corpus;
  std::mt19937_64 rng(20240601);
  std::uniform_int_distribution<std::size_t> size(2, 12);
  std::uniform_real_distribution<double> p(0.0, 0.6);
  for (int i = 0; i < 200; ++i) corpus.push_back(random_connected_graph(size(rng), p(rng), rng));
  for (const auto& e : catalog()) corpus.push_back(e.graph);
  return corpus;
}

void gamma_adjacency(Suite& s) {
  const auto corpus = identity_corpus();
  std::size_t agree = 0;
  for (const auto& g : corpus)
    if (gamma_array(g) == gamma_via_adjacency(g)) ++agree;
  s.check("gamma = e(A^2+A) on 200 random graphs + catalog", std::to_string(corpus.size()),
          std::to_string(agree));
}

void gamma_sum(Suite& s) {
  const auto corpus = identity_corpus();
  std::size_t agree = 0;
  for (const auto& g : corpus)
    if (neighboring_index(g) == neighboring_index(degree_array(g))) ++agree;
  s.check("sum gamma = sum delta(delta+1)", std::to_string(corpus.size()), std::to_string(agree));
}

std::string nu_and_total(const Graph& g) {
  return "nu=" + std::to_string(neighboring_index(g)) + " total=" + std::to_string(total_degree(g));
}

void total_degree_vs_nu(Suite& s) {
  s.check("fig16_a", "nu=22 total=8", nu_and_total(fig("fig16_a")));
  s.check("fig16_b", "nu=24 total=8", nu_and_total(fig("fig16_b")));
  s.check("fig17_a", "nu=48 total=14", nu_and_total(fig("fig17_a")));
  s.check("fig17_b", "nu=48 total=12", nu_and_total(fig("fig17_b")));
}

void statements(Suite& s) {
  const auto& a18 = fig("fig18_a");
  const auto& b18 = fig("fig18_b");
  s.check("fig18 gamma", "(12,12,10,10,4,4) vs (11,11,11,11,8,8)",
          tuple(gamma_array(a18)) + " vs " + tuple(gamma_array(b18)));
  s.check("fig18 delta verdict", "less", verdict(delta_compare(a18, b18)));
  s.check("fig18 gamma verdict", "incomparable", verdict(gamma_compare(a18, b18)));
  const auto& a19 = fig("fig19_a");
  const auto& b19 = fig("fig19_b");
  s.check("fig19 gamma", "(6,4,4,4) vs (6,6,6,6)",
          tuple(gamma_array(a19)) + " vs " + tuple(gamma_array(b19)));
  s.check("fig19 gamma verdict", "less", verdict(gamma_compare(a19, b19)));
  s.check("fig19 delta verdict", "incomparable", verdict(delta_compare(a19, b19)));
}

void separations(Suite& s) {
  const auto& g = fig("fig14_G");
  const auto& gp = fig("fig14_Gp");
  s.check("fig14 delta", "(4,4,3,3,3,3) = (4,4,3,3,3,3)",
          tuple(degree_array(g)) + " = " + tuple(degree_array(gp)));
  s.check("fig14 alpha", "(10,5,0,0,0) = (10,5,0,0,0)",
          tuple(alpha_array(g)) + " = " + tuple(alpha_array(gp)));
  s.check("fig14 gamma", "(17,17,14,14,13,13) vs (16,16,14,14,14,14)",
          tuple(gamma_array(g)) + " vs " + tuple(gamma_array(gp)));
  s.check("fig14 nu", "88, 88",
          std::to_string(neighboring_index(g)) + ", " + std::to_string(neighboring_index(gp)));

  const auto& a = fig("fig15a");
  const auto& b = fig("fig15b");
  const bool same = degree_array(a) == degree_array(b) && alpha_array(a) == alpha_array(b) &&
                    gamma_array(a) == gamma_array(b);
  s.check("fig15 arrays", "equal", same ? "equal" : "different");
  s.check("fig15 delta, gamma", "(3,3,3,3,3,3) (12,12,12,12,12,12)",
          tuple(degree_array(a)) + " " + tuple(gamma_array(a)));
  s.check("fig15 triangles", "0 vs 2",
          std::to_string(triangle_count(a)) + " vs " + std::to_string(triangle_count(b)));
  s.check("fig15 isomorphic", "no", canonical_form(a) == canonical_form(b) ? "yes" : "no");
}

void tree_gammas(Suite& s, std::size_t max_n) {
  for (std::size_t n = 4; n <= max_n; ++n) {
    std::map<std::vector<std::int64_t>, std::set<std::vector<std::int64_t>>> by_gamma;
    std::uint64_t trees = 0;
    for_each_labeled_tree(n, [&](const Graph& t) {
      ++trees;
      by_gamma[gamma_array(t).values].insert(degree_array(t).values);
    });
    std::size_t widest = 0;
    for (const auto& [gamma, deltas] : by_gamma) widest = std::max(widest, deltas.size());
    std::uint64_t cayley = 1;
    for (std::size_t i = 0; i + 2 < n; ++i) cayley *= n;
    s.check("trees(" + std::to_string(n) + ")",
            std::to_string(cayley) + " trees, 1 delta per gamma group",
            std::to_string(trees) + " trees, " + std::to_string(widest) + " delta per gamma group");
  }
}

void kite_bound(Suite& s) {
  for (std::int64_t m : {10, 20, 50, 100}) {
    const auto kite = make_family({FamilyKind::kite}, m);
    const auto n = static_cast<std::int64_t>(kite.node_count());
    const auto md = to_double(distance_stats(kite).median_distance);
    const auto bound = kite_median_distance_bound(n) - 1.0;
    std::ostringstream expected, computed;
    expected << "Md > " << bound;
    computed << "Md = " << md;
    s.check("kite(M=" + std::to_string(m) + ") median distance", expected.str(), computed.str(),
            md > bound);
    s.check("kite(M=" + std::to_string(m) + ") median degree", std::to_string((n - 1) / 2),
            to_string(degree_stats(degree_array(kite)).median));
  }
  for (std::int64_t n : {32, 100, 1000}) {
    const auto tree = make_family({FamilyKind::ln_tree}, n);
    const auto d = distance_stats(tree).diameter;
    const auto bound = ln_tree_diameter_bound(n);
    const auto k = static_cast<std::int64_t>(std::floor(std::log(static_cast<double>(n))));
    std::ostringstream expected;
    expected << "tree, diameter <= " << bound << ", max degree <= " << k + 2;
    const auto max_degree = degree_array(tree)[0];
    s.check("lntree(" + std::to_string(n) + ")", expected.str(),
            std::string(is_tree(tree) ? "tree" : "not a tree") + ", diameter = " +
                std::to_string(d) + ", max degree = " + std::to_string(max_degree),
            is_tree(tree) && d <= bound && max_degree <= k + 2);
  }
}

std::string flags(const SWClassification& c) {
  std::string out;
  auto add = [&](const char* name, const std::optional<SmallWorldFlag>& f) {
    if (f && f->value) out += std::string(out.empty() ? "" : " ") + name;
  };
  add("DSWL", c.dswl);
  add("DSWA", c.dswa);
  add("DSWMd", c.dswmd);
  add("SWD", c.swd);
  add("SWA", c.swa);
  add("SWMd", c.swmd);
  return out.empty() ? "none" : out;
}

void classification(Suite& s) {
  struct Family {
    FamilySpec spec;
    // flags stated for the family, as {name, value}
    std::vector<std::pair<const char*, bool>> stated;
  };
  const Family families[] = {
      {{FamilyKind::complete}, {{"DSWL", true}, {"DSWA", true}, {"DSWMd", true}}},
      {{FamilyKind::star}, {{"DSWL", true}, {"DSWA", false}, {"DSWMd", false}, {"SWD", true}}},
      {{FamilyKind::chain}, {{"DSWL", false}, {"DSWA", false}, {"DSWMd", false}, {"SWD", false}}},
      {{FamilyKind::polygon}, {{"DSWL", false}, {"DSWA", false}, {"DSWMd", false}, {"SWD", false}}},
      {{FamilyKind::spider}, {{"DSWA", true}, {"DSWMd", false}}},
      {{FamilyKind::kite}, {{"DSWMd", true}, {"SWMd", false}}},
      {{FamilyKind::ln_tree}, {{"SWD", true}, {"DSWL", false}}},
      {{FamilyKind::s1, 3, 1}, {{"DSWMd", true}}},
      {{FamilyKind::s2, 1, 3}, {{"DSWMd", false}}},
  };
  for (const auto& f : families) {
    const auto known = known_classification(f.spec);
    const auto name = to_string(f.spec.kind);
    const auto set = " " + flags(known) + " ";
    bool stated_ok = true;
    std::string stated;
    for (auto [flag, value] : f.stated) {
      stated += std::string(stated.empty() ? "" : " ") + (value ? "" : "not ") + flag;
      if ((set.find(std::string(" ") + flag + " ") != std::string::npos) != value) stated_ok = false;
    }
    s.check(name + " closed form", stated, flags(known), stated_ok && implications_hold(known));

    const auto report = growth_report(f.spec, default_grid(f.spec), natural_axis(f.spec.kind));
    auto empirical = classify_degree_empirical(report);
    const auto distance = classify_distance_empirical(report);
    empirical.swd = distance.swd;
    empirical.swa = distance.swa;
    empirical.swmd = distance.swmd;
    s.check(name + " empirical trend", flags(known), flags(empirical));
  }
}

void catalog_consistency(Suite& s) {
  for (const auto& e : catalog()) {
    const auto& g = e.graph;
    const auto& x = e.expected;
    bool ok = is_connected(g);
    if (x.delta) ok = ok && degree_array(g) == *x.delta;
    if (x.alpha) ok = ok && alpha_array(g) == *x.alpha;
    if (x.gamma) ok = ok && gamma_array(g) == *x.gamma;
    if (x.nu) ok = ok && neighboring_index(g) == *x.nu;
    if (x.total_degree) ok = ok && total_degree(g) == *x.total_degree;
    if (x.triangles) ok = ok && triangle_count(g) == *x.triangles;
    s.check(e.id, "stored invariants", ok ? "stored invariants" : "mismatch");
  }
}

void flagged(Suite& s) {
  {
    // the stated chain cumulative array ends at 2N, the chain's total degree is 2N-2
    const std::int64_t n = 6;
    const auto d = degree_array(make_family({FamilyKind::chain}, n));
    const auto computed = cumulative_sums(d.span());
    const std::vector<std::int64_t> degree_derived{2, 4, 6, 8, 9, 10};
    s.flag("chain(6) cumulative array", "(2,4,6,...,2N-2,2N-1,2N) = ends 10,11,12",
           tuple(computed), computed == degree_derived);
  }
  {
    // stated: Δ(S1) ≺ Δ(S2); computed for the figure parameters at M = 3..10
    std::set<std::string> relations;
    for (std::int64_t m = 3; m <= 10; ++m) {
      const auto s1 = degree_array(make_family({FamilyKind::s1, 3, 1}, m));
      const auto s2 = degree_array(make_family({FamilyKind::s2, 1, 3}, m));
      relations.insert(to_string(majorize_compare(s1.span(), s2.span()).relation));
    }
    std::string computed;
    for (const auto& r : relations) computed += (computed.empty() ? "" : ",") + r;
    s.flag("S1(a=3,b=1) vs S2(a=1,b=3), M=3..10", "less", computed, computed == "greater");
  }
  {
    const auto a = alpha_array(fig("fig15a"));
    const auto b = alpha_array(fig("fig15b"));
    s.flag("fig15 alpha array", "(9,6,0,0)", tuple(a) + " " + tuple(b),
           a == AlphaArray{9, 6, 0, 0, 0} && b == a);
  }
}

struct Group {
  const char* name;
  std::function<void(Suite&, const VerifyOptions&)> run;
};

const std::vector<Group>& groups() {
  static const std::vector<Group> g = {
      {"catalog", [](Suite& s, const VerifyOptions&) { catalog_consistency(s); }},
      {"gini", [](Suite& s, const VerifyOptions&) { gini(s); }},
      {"hasse", [](Suite& s, const VerifyOptions&) { hasse(s); }},
      {"averages", [](Suite& s, const VerifyOptions&) { average_counterexamples(s); }},
      {"chain_lowest", [](Suite& s, const VerifyOptions&) { chain_lowest(s); }},
      {"gamma_tables", [](Suite& s, const VerifyOptions&) { gamma_tables(s); }},
      {"gamma_adjacency", [](Suite& s, const VerifyOptions&) { gamma_adjacency(s); }},
      {"gamma_sum", [](Suite& s, const VerifyOptions&) { gamma_sum(s); }},
      {"total_degree", [](Suite& s, const VerifyOptions&) { total_degree_vs_nu(s); }},
      {"statements", [](Suite& s, const VerifyOptions&) { statements(s); }},
      {"separations", [](Suite& s, const VerifyOptions&) { separations(s); }},
      {"trees", [](Suite& s, const VerifyOptions& o) { tree_gammas(s, o.tree_max_n); }},
      {"kite_bound", [](Suite& s, const VerifyOptions&) { kite_bound(s); }},
      {"classification", [](Suite& s, const VerifyOptions&) { classification(s); }},
      {"flagged", [](Suite& s, const VerifyOptions&) { flagged(s); }},
  };
  return g;
}

}  // namespace

std::string to_string(FixtureStatus s) {
  switch (s) {
    case FixtureStatus::pass: return "pass";
    case FixtureStatus::fail: return "fail";
    case FixtureStatus::flagged: return "flagged";
  }
  return "unknown";
}

const std::vector<std::string>& verify_groups() {
  static const auto names = [] {
    std::vector<std::string> n;
    for (const auto& g : groups()) n.emplace_back(g.name);
    return n;
  }();
  return names;
}

std::vector<FixtureResult> run_verification(const VerifyOptions& options) {
  if (options.tree_max_n < 4 || options.tree_max_n > kMaxTreeEnumerationNodes)
    throw Error(Errc::out_of_range, "tree check supports 4 <= n <= " +
                                        std::to_string(kMaxTreeEnumerationNodes));
  std::optional<std::string> only = options.only;
  if (only == "theorem6") only = "trees";  // the name the command line documents
  if (only) {
    const auto& names = verify_groups();
    if (std::find(names.begin(), names.end(), *only) == names.end())
      throw Error(Errc::unknown_id, "unknown fixture group '" + *only + "'");
  }
  std::vector<FixtureResult> results;
  for (const auto& g : groups()) {
    if (only && *only != g.name) continue;
    Suite suite(results, g.name);
    g.run(suite, options);
  }
  return results;
}

nlohmann::json to_json(const std::vector<FixtureResult>& results) {
  nlohmann::json rows = nlohmann::json::array();
  std::size_t passed = 0, failed = 0, flagged_count = 0;
  for (const auto& r : results) {
    rows.push_back({{"group", r.group},
                    {"fixture", r.name},
                    {"expected", r.expected},
                    {"computed", r.computed},
                    {"status", to_string(r.status)}});
    switch (r.status) {
      case FixtureStatus::pass: ++passed; break;
      case FixtureStatus::fail: ++failed; break;
      case FixtureStatus::flagged: ++flagged_count; break;
    }
  }
  return {{"fixtures", rows},
          {"summary", {{"pass", passed}, {"fail", failed}, {"flagged", flagged_count}}}};
}

}  // namespace lorenznet
