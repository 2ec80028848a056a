#include <catch2/catch_amalgamated.hpp>

#include <freiman/borel.hpp>
#include <freiman/sorting.hpp>

#include "test_util.hpp"

using freiman::borel_closure;
using freiman::GenSet;
using freiman::is_sortable;
using freiman::is_sorted_pair;
using freiman::k_borel_closure;
using freiman::Monomial;
using freiman::parse_monomial;
using freiman::sort_pair;
using freiman::sorted_graph;

namespace {

GenSet gset(std::initializer_list<const char*> texts, int n) {
  std::vector<Monomial> v;
  for (const char* t : texts) v.push_back(parse_monomial(t, n));
  return GenSet::of(std::move(v));
}

}  // namespace

TEST_CASE("sorting a pair interleaves the merged indices", "[sorting]") {
  auto [a, b] = sort_pair(parse_monomial("x1*x3^2", 3), parse_monomial("x2^3", 3));
  // merged sequence 1,2,2,2,3,3 deals into 1,2,3 and 2,2,3
  CHECK(a == parse_monomial("x1*x2*x3", 3));
  CHECK(b == parse_monomial("x2^2*x3", 3));

  auto [c, d] = sort_pair(parse_monomial("x1^2", 2), parse_monomial("x2^2", 2));
  CHECK(c == parse_monomial("x1*x2", 2));
  CHECK(d == parse_monomial("x1*x2", 2));
}

TEST_CASE("sort_pair guards", "[sorting]") {
  CHECK_THROWS_AS(sort_pair(parse_monomial("x1", 2), parse_monomial("x1")),
                  std::invalid_argument);
  CHECK_THROWS_AS(sort_pair(parse_monomial("x1", 2), parse_monomial("x1^2", 2)),
                  std::invalid_argument);
}

TEST_CASE("sorting properties on a full slice", "[sorting]") {
  auto all = testutil::all_monomials(3, 3, 3);
  for (const auto& u : all)
    for (const auto& v : all) {
      auto [a, b] = sort_pair(u, v);
      INFO(u.str() << " , " << v.str());

      // product preserved
      CHECK(a * b == u * v);

      // symmetric up to result order
      auto [a2, b2] = sort_pair(v, u);
      CHECK(a == a2);
      CHECK(b == b2);

      // idempotent
      CHECK(is_sorted_pair(a, b));
      auto [a3, b3] = sort_pair(a, b);
      CHECK(a3 == a);
      CHECK(b3 == b);

      // the two index sequences interleave: s_a[t] <= s_b[t] <= s_a[t+1]
      auto sa = a.index_seq(), sb = b.index_seq();
      for (std::size_t t = 0; t < sa.size(); ++t) {
        CHECK(sa[t] <= sb[t]);
        if (t + 1 < sa.size()) CHECK(sb[t] <= sa[t + 1]);
      }
    }
}

TEST_CASE("sorted pair recognition is order-insensitive", "[sorting]") {
  auto u = parse_monomial("x1*x2*x3", 3);
  auto v = parse_monomial("x2^2*x3", 3);
  CHECK(is_sorted_pair(u, v));
  CHECK(is_sorted_pair(v, u));
  CHECK(is_sorted_pair(u, u));
  CHECK_FALSE(is_sorted_pair(parse_monomial("x1*x3^2", 3), parse_monomial("x2^3", 3)));
}

TEST_CASE("sortability of generating sets", "[sorting]") {
  SECTION("Borel closures of principal ideals are sortable") {
    for (const auto& u : testutil::all_monomials(3, 4, 3)) {
      CHECK(is_sortable(borel_closure(u)).sortable);
      for (int k = 1; k <= 3; ++k)
        if (u.is_k_bounded(k)) CHECK(is_sortable(k_borel_closure(u, k)).sortable);
    }
  }

  SECTION("a non-sortable set with its witness") {
    auto g = gset({"x1^2*x2", "x2*x3^2"}, 3);
    auto check = is_sortable(g);
    REQUIRE_FALSE(check.sortable);
    REQUIRE(check.witness.has_value());
    auto [u, v] = *check.witness;
    auto [a, b] = sort_pair(u, v);
    CHECK((!g.contains(a) || !g.contains(b)));
    CHECK(g.contains(u));
    CHECK(g.contains(v));
  }
}

TEST_CASE("sorted graphs", "[sorting]") {
  SECTION("full bounded closure of x1x2x3 with bound 1 is a complete graph") {
    auto sg = sorted_graph(k_borel_closure(parse_monomial("x2*x3*x4"), 1));
    CHECK(sg.vertices.size() == 4);
    CHECK(sg.edges.size() == 6);
  }

  SECTION("edges come in ascending index order") {
    auto sg = sorted_graph(borel_closure(parse_monomial("x3^2")));
    for (std::size_t t = 0; t < sg.edges.size(); ++t) {
      CHECK(sg.edges[t].first < sg.edges[t].second);
      if (t + 1 < sg.edges.size()) CHECK(sg.edges[t] < sg.edges[t + 1]);
    }
  }

  SECTION("frozen edge sets for two bounded closures") {
    auto g5 = sorted_graph(k_borel_closure(parse_monomial("x1*x2*x3^2"), 2));
    REQUIRE(g5.vertices.size() == 5);
    CHECK(g5.vertices[0] == parse_monomial("x1^2*x2^2", 3));
    CHECK(g5.vertices[4] == parse_monomial("x1*x2*x3^2", 3));
    CHECK(g5.edges == std::vector<std::pair<int, int>>{
                          {0, 1}, {0, 3}, {1, 2}, {1, 3}, {1, 4}, {2, 4}, {3, 4}});

    auto g6 = sorted_graph(k_borel_closure(parse_monomial("x2^2*x3^2"), 2));
    REQUIRE(g6.vertices.size() == 6);
    CHECK(g6.edges == std::vector<std::pair<int, int>>{{0, 1},
                                                         {0, 3},
                                                         {1, 2},
                                                         {1, 3},
                                                         {1, 4},
                                                         {2, 4},
                                                         {3, 4},
                                                         {3, 5},
                                                         {4, 5}});
  }

  SECTION("every edge is a genuinely sorted pair, spot check") {
    auto g = k_borel_closure(parse_monomial("x1*x2*x3*x4"), 2);
    auto sg = sorted_graph(g);
    std::size_t edge_count = 0;
    for (std::size_t i = 0; i < g.size(); ++i)
      for (std::size_t j = i + 1; j < g.size(); ++j)
        if (is_sorted_pair(g[i], g[j])) ++edge_count;
    CHECK(sg.edges.size() == edge_count);
  }
}
