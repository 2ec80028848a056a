#include <catch2/catch_amalgamated.hpp>

#include <freiman/genset.hpp>
#include <freiman/monomial.hpp>

#include "test_util.hpp"

using freiman::GenSet;
using freiman::genset_product;
using freiman::ideal_power;
using freiman::Monomial;
using freiman::parse_monomial;

namespace {

GenSet gs(std::initializer_list<const char*> texts, int n) {
  std::vector<Monomial> v;
  for (const char* t : texts) v.push_back(parse_monomial(t, n));
  return GenSet::of(std::move(v));
}

}  // namespace

TEST_CASE("construction sorts and deduplicates", "[genset]") {
  auto g = gs({"x2^2", "x1*x2", "x1^2", "x1*x2"}, 2);
  CHECK(g.size() == 3);
  CHECK(g.mu() == 3);
  CHECK(g[0] == parse_monomial("x1^2", 2));
  CHECK(g[1] == parse_monomial("x1*x2", 2));
  CHECK(g[2] == parse_monomial("x2^2", 2));
  CHECK(g.n() == 2);
  CHECK(g.deg() == 2);
}

TEST_CASE("construction guards", "[genset]") {
  CHECK_THROWS_AS(GenSet::of({}), std::invalid_argument);
  CHECK_THROWS_AS(GenSet::of({parse_monomial("x1"), parse_monomial("x1", 2)}),
                  std::invalid_argument);
  CHECK_THROWS_AS(GenSet::of({parse_monomial("x1", 2), parse_monomial("x1*x2")}),
                  std::invalid_argument);
}

TEST_CASE("membership queries", "[genset]") {
  auto g = gs({"x1*x3", "x2^2", "x1^2"}, 3);
  CHECK(g.contains(parse_monomial("x2^2", 3)));
  CHECK_FALSE(g.contains(parse_monomial("x2*x3", 3)));
  CHECK_FALSE(g.contains(parse_monomial("x2^2", 4)));
  CHECK_FALSE(g.contains(parse_monomial("x2", 3)));

  CHECK(g.index_of(parse_monomial("x1^2", 3)) == 0);
  CHECK(g.index_of(parse_monomial("x1*x3", 3)) == 1);
  CHECK_FALSE(g.index_of(parse_monomial("x3^2", 3)).has_value());

  SECTION("index_of agrees with a linear scan on a full degree slice") {
    auto all = testutil::all_monomials(3, 3, 3);
    auto slice = GenSet::of(all);
    for (const auto& u : all) {
      auto idx = slice.index_of(u);
      REQUIRE(idx.has_value());
      CHECK(slice[*idx] == u);
    }
  }
}

TEST_CASE("equality is by generator list", "[genset]") {
  CHECK(gs({"x1*x2", "x2^2"}, 2) == gs({"x2^2", "x1*x2"}, 2));
  CHECK_FALSE(gs({"x1*x2"}, 2) == gs({"x2^2"}, 2));
}

TEST_CASE("pairwise products deduplicate", "[genset]") {
  auto g = gs({"x1^2", "x1*x2"}, 2);
  auto sq = genset_product(g, g);
  CHECK(sq == gs({"x1^4", "x1^3*x2", "x1^2*x2^2"}, 2));
  CHECK_THROWS_AS(genset_product(gs({"x1"}, 1), gs({"x1"}, 2)), std::invalid_argument);
}

TEST_CASE("ideal powers", "[genset]") {
  auto g = gs({"x1*x2"}, 2);
  CHECK(ideal_power(g, 1) == g);
  CHECK(ideal_power(g, 3) == gs({"x1^3*x2^3"}, 2));

  auto b = gs({"x1^2", "x1*x2", "x2^2"}, 2);
  CHECK(ideal_power(b, 2).size() == 5);
  CHECK_THROWS_AS(ideal_power(g, 0), std::invalid_argument);

  SECTION("power of a power") {
    auto h = gs({"x1*x3^2", "x2^2*x4"}, 4);
    CHECK(ideal_power(h, 4) == ideal_power(ideal_power(h, 2), 2));
    CHECK(ideal_power(h, 4) == genset_product(ideal_power(h, 3), h));
  }

  SECTION("mu of a square never exceeds the unordered pair count") {
    auto all3 = testutil::all_monomials(2, 3, 2);
    auto g3 = GenSet::of(all3);
    long long m = g3.mu();
    CHECK(ideal_power(g3, 2).mu() <= m * (m + 1) / 2);
  }
}
