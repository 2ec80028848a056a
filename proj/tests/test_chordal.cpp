#include <catch2/catch_amalgamated.hpp>

#include <climits>
#include <random>

#include <freiman/chordal.hpp>
#include <freiman/sorting.hpp>

#include "test_util.hpp"

using freiman::find_induced_cycle;
using freiman::is_chordal;
using freiman::is_valid_induced_cycle;
using freiman::k_borel_closure;
using freiman::lemma_chordal_graph;
using freiman::parse_monomial;
using freiman::sorted_graph;
using freiman::to_dot;
using freiman::to_ugraph;
using freiman::UGraph;

namespace {

UGraph cycle_graph(int n) {
  UGraph g(n);
  for (int v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
  return g;
}

UGraph complete_graph(int n) {
  UGraph g(n);
  for (int v = 0; v < n; ++v)
    for (int w = v + 1; w < n; ++w) g.add_edge(v, w);
  return g;
}

// full perfect elimination order check, not just the earliest-neighbor trick
bool valid_peo(const UGraph& g, const std::vector<int>& order) {
  const int n = g.vcount();
  if (static_cast<int>(order.size()) != n) return false;
  std::vector<int> pos(n, -1);
  for (int p = 0; p < n; ++p) {
    if (order[p] < 0 || order[p] >= n || pos[order[p]] != -1) return false;
    pos[order[p]] = p;
  }
  for (int v = 0; v < n; ++v) {
    std::vector<int> later;
    for (int w : g.neighbors(v))
      if (pos[w] > pos[v]) later.push_back(w);
    for (std::size_t i = 0; i < later.size(); ++i)
      for (std::size_t j = i + 1; j < later.size(); ++j)
        if (!g.has_edge(later[i], later[j])) return false;
  }
  return true;
}

std::optional<int> shortest_chordless_brute(const UGraph& g) {
  int best = INT_MAX;
  const int n = g.vcount();
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    std::vector<int> s;
    for (int v = 0; v < n; ++v)
      if (mask & (1u << v)) s.push_back(v);
    if (testutil::subset_is_induced_cycle(g, s))
      best = std::min(best, static_cast<int>(s.size()));
  }
  if (best == INT_MAX) return std::nullopt;
  return best;
}

}  // namespace

TEST_CASE("graph plumbing", "[chordal]") {
  UGraph g(4);
  g.add_edge(1, 3);
  g.add_edge(3, 1);
  g.add_edge(0, 1);
  CHECK(g.vcount() == 4);
  CHECK(g.has_edge(3, 1));
  CHECK_FALSE(g.has_edge(0, 3));
  CHECK(g.neighbors(1) == std::vector<int>{0, 3});
  CHECK(g.edge_list() == std::vector<std::pair<int, int>>{{0, 1}, {1, 3}});

  CHECK_THROWS_AS(g.add_edge(2, 2), std::invalid_argument);
  CHECK_THROWS_AS(g.add_edge(0, 4), std::out_of_range);
  CHECK_THROWS_AS(g.has_edge(-1, 0), std::out_of_range);
  CHECK_THROWS_AS(UGraph(-1), std::invalid_argument);
}

TEST_CASE("chordality of standard graphs", "[chordal]") {
  CHECK(is_chordal(UGraph(0)).chordal);
  CHECK(is_chordal(UGraph(3)).chordal);
  CHECK(is_chordal(complete_graph(5)).chordal);
  CHECK(is_chordal(cycle_graph(3)).chordal);
  CHECK_FALSE(is_chordal(cycle_graph(4)).chordal);
  CHECK_FALSE(is_chordal(cycle_graph(5)).chordal);

  SECTION("trees are chordal") {
    UGraph t(6);
    t.add_edge(0, 1);
    t.add_edge(0, 2);
    t.add_edge(2, 3);
    t.add_edge(2, 4);
    t.add_edge(4, 5);
    CHECK(is_chordal(t).chordal);
  }

  SECTION("complete bipartite K_{2,3} has a four hole") {
    UGraph g(5);
    for (int a : {0, 1})
      for (int b : {2, 3, 4}) g.add_edge(a, b);
    auto res = is_chordal(g);
    REQUIRE_FALSE(res.chordal);
    auto [v, w, y] = res.violation;
    CHECK(g.has_edge(v, w));
    CHECK(g.has_edge(v, y));
    CHECK_FALSE(g.has_edge(w, y));
  }

  SECTION("a wheel is chordal only with a triangle rim") {
    UGraph w6(7);
    for (int v = 0; v < 6; ++v) {
      w6.add_edge(v, (v + 1) % 6);
      w6.add_edge(v, 6);
    }
    CHECK_FALSE(is_chordal(w6).chordal);
    auto c = find_induced_cycle(w6);
    REQUIRE(c.has_value());
    CHECK(c->size() == 6);
    CHECK(is_valid_induced_cycle(w6, *c));
  }
}

TEST_CASE("elimination orders are genuine", "[chordal]") {
  for (const UGraph& g : {complete_graph(4), cycle_graph(3), lemma_chordal_graph(3)}) {
    auto res = is_chordal(g);
    REQUIRE(res.chordal);
    CHECK(valid_peo(g, res.order));
  }

  SECTION("chordal graphs from bounded closures") {
    auto sg = sorted_graph(k_borel_closure(parse_monomial("x1*x2*x3^2"), 2));
    auto res = is_chordal(to_ugraph(sg));
    REQUIRE(res.chordal);
    CHECK(valid_peo(to_ugraph(sg), res.order));
  }
}

TEST_CASE("induced cycle extraction", "[chordal]") {
  SECTION("plain holes come back whole") {
    for (int len : {4, 5, 6, 7}) {
      auto g = cycle_graph(len);
      auto c = find_induced_cycle(g);
      REQUIRE(c.has_value());
      CHECK(static_cast<int>(c->size()) == len);
      CHECK(is_valid_induced_cycle(g, *c));
    }
  }

  SECTION("chordal input gives nothing") {
    CHECK_FALSE(find_induced_cycle(complete_graph(4)).has_value());
    CHECK_FALSE(find_induced_cycle(lemma_chordal_graph(4)).has_value());
  }

  SECTION("longer holes on demand") {
    // disjoint C4 and C6
    UGraph g(10);
    for (int v = 0; v < 4; ++v) g.add_edge(v, (v + 1) % 4);
    for (int v = 0; v < 6; ++v) g.add_edge(4 + v, 4 + (v + 1) % 6);
    auto four = find_induced_cycle(g, 4);
    REQUIRE(four.has_value());
    CHECK(four->size() == 4);
    auto five = find_induced_cycle(g, 5);
    REQUIRE(five.has_value());
    CHECK(five->size() == 6);
    CHECK(is_valid_induced_cycle(g, *five, 5));
    CHECK_FALSE(find_induced_cycle(g, 7).has_value());
    CHECK_THROWS_AS(find_induced_cycle(g, 3), std::invalid_argument);
  }
}

TEST_CASE("cycle validity checks", "[chordal]") {
  auto g = cycle_graph(5);
  CHECK(is_valid_induced_cycle(g, {0, 1, 2, 3, 4}));
  CHECK(is_valid_induced_cycle(g, {2, 3, 4, 0, 1}));
  CHECK_FALSE(is_valid_induced_cycle(g, {0, 1, 2, 3}));
  CHECK_FALSE(is_valid_induced_cycle(g, {0, 1, 2, 3, 4}, 6));
  CHECK_FALSE(is_valid_induced_cycle(g, {0, 1, 2, 2, 4}));
  CHECK_FALSE(is_valid_induced_cycle(g, {0, 2, 1, 3, 4}));

  auto k4 = complete_graph(4);
  CHECK_FALSE(is_valid_induced_cycle(k4, {0, 1, 2, 3}));
}

TEST_CASE("random graphs against subset brute force", "[chordal]") {
  std::mt19937 rng(97531);
  for (int trial = 0; trial < 160; ++trial) {
    int n = 4 + static_cast<int>(rng() % 5);
    int density = 20 + static_cast<int>(rng() % 61);
    UGraph g(n);
    for (int v = 0; v < n; ++v)
      for (int w = v + 1; w < n; ++w)
        if (static_cast<int>(rng() % 100) < density) g.add_edge(v, w);

    auto res = is_chordal(g);
    auto brute = shortest_chordless_brute(g);
    INFO("trial " << trial << ", n = " << n << ", density " << density);
    CHECK(res.chordal == !brute.has_value());
    if (res.chordal) {
      CHECK(valid_peo(g, res.order));
      CHECK_FALSE(find_induced_cycle(g).has_value());
    } else {
      auto [v, w, y] = res.violation;
      CHECK(g.has_edge(v, w));
      CHECK(g.has_edge(v, y));
      CHECK_FALSE(g.has_edge(w, y));
      auto c = find_induced_cycle(g);
      REQUIRE(c.has_value());
      CHECK(is_valid_induced_cycle(g, *c));
      CHECK(static_cast<int>(c->size()) == *brute);
    }
  }
}

TEST_CASE("three stacked cliques", "[chordal]") {
  auto g1 = lemma_chordal_graph(1);
  CHECK(g1.vcount() == 3);
  CHECK(g1.edge_list() == std::vector<std::pair<int, int>>{{0, 1}, {1, 2}});
  CHECK(g1.labels == std::vector<std::string>{"a1", "b1", "c1"});

  for (int p = 1; p <= 8; ++p) {
    auto g = lemma_chordal_graph(p);
    INFO("p = " << p);
    CHECK(g.vcount() == 3 * p);
    CHECK(g.edge_list().size() ==
          static_cast<std::size_t>(3 * p * (p - 1) / 2 + p * (p + 1)));
    CHECK(is_chordal(g).chordal);

    // a_i -- b_j and b_i -- c_j exactly when i <= j, never a -- c
    for (int i = 0; i < p; ++i)
      for (int j = 0; j < p; ++j) {
        CHECK(g.has_edge(i, p + j) == (i <= j));
        CHECK(g.has_edge(p + i, 2 * p + j) == (i <= j));
        CHECK_FALSE(g.has_edge(i, 2 * p + j));
      }
  }

  SECTION("random induced subgraphs stay chordal") {
    std::mt19937 rng(424242);
    auto g = lemma_chordal_graph(4);
    for (int trial = 0; trial < 50; ++trial) {
      std::vector<int> keep;
      for (int v = 0; v < g.vcount(); ++v)
        if (rng() % 2) keep.push_back(v);
      UGraph sub(static_cast<int>(keep.size()));
      for (std::size_t i = 0; i < keep.size(); ++i)
        for (std::size_t j = i + 1; j < keep.size(); ++j)
          if (g.has_edge(keep[i], keep[j])) sub.add_edge(static_cast<int>(i), static_cast<int>(j));
      CHECK(is_chordal(sub).chordal);
    }
  }

  CHECK_THROWS_AS(lemma_chordal_graph(0), std::invalid_argument);
}

TEST_CASE("dot rendering", "[chordal]") {
  UGraph g(2);
  g.add_edge(0, 1);
  CHECK(to_dot(g) == "graph G {\n  0;\n  1;\n  0 -- 1;\n}\n");

  g.labels = {"x1^2", "say \"hi\""};
  CHECK(to_dot(g) ==
        "graph G {\n  0 [label=\"x1^2\"];\n  1 [label=\"say \\\"hi\\\"\"];\n  0 -- 1;\n}\n");

  SECTION("sorted graphs carry monomial labels") {
    auto sg = sorted_graph(k_borel_closure(parse_monomial("x2*x3"), 1));
    auto ug = to_ugraph(sg);
    REQUIRE(ug.labels.size() == 3);
    CHECK(ug.labels[0] == "x1*x2");
    CHECK(ug.labels[1] == "x1*x3");
    CHECK(ug.labels[2] == "x2*x3");
    CHECK(ug.vcount() == 3);
  }
}
