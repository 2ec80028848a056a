#pragma once

#include <optional>
#include <string>
#include <vector>

#include "freiman/borel.hpp"
#include "freiman/monomial.hpp"

namespace freiman {

enum class Family {
  degree2_borel,
  remark_rek1,
  main2_family,
  principal_borel,
  kborel_k_eq_dminus1,
  kborel_k2_d4,
  kborel_k2_dge5,
  outside_scope,
};

inline const char* family_name(Family f) {
  switch (f) {
    case Family::degree2_borel: return "degree2_borel";
    case Family::remark_rek1: return "remark_rek1";
    case Family::main2_family: return "main2_family";
    case Family::principal_borel: return "principal_borel";
    case Family::kborel_k_eq_dminus1: return "kborel_k_eq_dminus1";
    case Family::kborel_k2_d4: return "kborel_k2_d4";
    case Family::kborel_k2_dge5: return "kborel_k2_dge5";
    case Family::outside_scope: return "outside_scope";
  }
  return "?";
}

// A classification verdict: which catalogued family the input falls into and,
// when the family carries a Freiman criterion, the predicted answer. An empty
// prediction means the catalogue is silent.
struct ClassVerdict {
  Family family = Family::outside_scope;
  std::optional<bool> freiman_predicted;
  std::string matched_clause;
};

namespace detail {

// variables with index >= 3 and a positive exponent, as (index, exponent)
inline std::vector<std::pair<int, int>> tail_support(const Monomial& u) {
  std::vector<std::pair<int, int>> out;
  for (int i = 3; i <= u.n(); ++i)
    if (u.exp(i) > 0) out.emplace_back(i, u.exp(i));
  return out;
}

}  // namespace detail

// Freiman criterion for the Borel closure of a single monomial of degree >= 2.
// The closure is Freiman exactly when u is supported on x1, x2 alone, or is
// x1^a x2^b x_j with a single extra variable of exponent 1, or is
// x1^(d-2) x3^2.
inline ClassVerdict classify_principal_borel(const Monomial& u, int /*n*/ = 0) {
  const int d = u.deg();
  if (d < 2)
    throw std::invalid_argument("classify_principal_borel: degree must be at least 2");
  const int a = u.exp(1);
  const int b = (u.n() >= 2) ? u.exp(2) : 0;
  auto tail = detail::tail_support(u);
  if (tail.empty())
    return {Family::principal_borel, true, "supported on x1 and x2 only"};
  if (tail.size() == 1) {
    auto [j, e] = tail[0];
    if (e == 1 && a + b == d - 1)
      return {Family::principal_borel, true, "x1^a * x2^b * x_j with a+b = d-1"};
    if (j == 3 && e == 2 && a == d - 2)
      return {Family::principal_borel, true, "x1^(d-2) * x3^2"};
  }
  return {Family::principal_borel, false, "no principal Freiman shape matched"};
}

// Freiman criterion for a Borel ideal with at least two degree-2 generators.
// After minimalization the generators form a chain x_{i_t} x_{j_t} with
// i_1 < ... < i_m <= j_m < ... < j_1; exactly two chain shapes are Freiman.
inline ClassVerdict classify_degree2_borel(const std::vector<Monomial>& gens, int /*n*/ = 0) {
  auto minimal = minimal_borel_generators(gens);
  if (minimal.size() != gens.size())
    throw std::invalid_argument("classify_degree2_borel: generators are not minimal");
  if (minimal.size() < 2)
    throw std::invalid_argument("classify_degree2_borel: need at least two generators");
  std::vector<std::pair<int, int>> pairs;
  for (const auto& g : minimal) {
    if (g.deg() != 2)
      throw std::invalid_argument("classify_degree2_borel: generators must have degree 2");
    auto seq = g.index_seq();
    pairs.emplace_back(seq[0], seq[1]);
  }
  std::sort(pairs.begin(), pairs.end());
  if (pairs.size() == 2) {
    auto [i1, j1] = pairs[0];
    auto [i2, j2] = pairs[1];
    if (i1 == 1 && i2 == 2 && j2 < j1)
      return {Family::degree2_borel, true, "B(x1*x_j1, x2*x_j2) with 2 <= j2 < j1"};
    if (i1 == 1 && i2 == 3 && j2 == 3 && j1 > 3)
      return {Family::degree2_borel, true, "B(x1*x_j1, x3^2) with 3 < j1"};
  }
  return {Family::degree2_borel, false, "no two-generator degree-2 Freiman shape matched"};
}

namespace detail {

// x1^(d-r) x2^(r-1) x_i with i >= 2, the one-directional multi-generator family
inline bool main2_shape(const Monomial& u) {
  const int d = u.deg();
  const int a = u.exp(1);
  const int b = (u.n() >= 2) ? u.exp(2) : 0;
  auto tail = tail_support(u);
  if (tail.empty()) return a + b == d && b >= 1;
  return tail.size() == 1 && tail[0].second == 1 && a + b == d - 1;
}

}  // namespace detail

// Multi-generator Borel ideals of degree >= 3. Two catalogued cases: every
// generator divisible by x1^(d-2) reduces to the degree-2 classification by
// dividing out the common factor (an if and only if); or every generator has
// the x1^(d-r) x2^(r-1) x_i shape, which forces Freiman (one direction only).
inline ClassVerdict classify_main2_family(const std::vector<Monomial>& gens, int n = 0) {
  auto minimal = minimal_borel_generators(gens);
  if (minimal.size() != gens.size())
    throw std::invalid_argument("classify_main2_family: generators are not minimal");
  if (minimal.size() < 2)
    throw std::invalid_argument("classify_main2_family: need at least two generators");
  const int d = minimal.front().deg();
  if (d < 3)
    throw std::invalid_argument("classify_main2_family: degree must be at least 3");

  bool common_x1 = true;
  for (const auto& g : minimal)
    if (g.exp(1) < d - 2) {
      common_x1 = false;
      break;
    }
  if (common_x1) {
    std::vector<Monomial> quotients;
    for (const auto& g : minimal) {
      std::vector<int> e = g.exps();
      e[0] -= d - 2;
      quotients.emplace_back(std::move(e));
    }
    auto qmin = minimal_borel_generators(quotients);
    ClassVerdict inner = (qmin.size() == 1) ? classify_principal_borel(qmin[0], n)
                                            : classify_degree2_borel(qmin, n);
    return {Family::remark_rek1, inner.freiman_predicted,
            "common factor x1^(d-2) divided out: " + inner.matched_clause};
  }

  bool all_main2 = true;
  for (const auto& g : minimal)
    if (!detail::main2_shape(g)) {
      all_main2 = false;
      break;
    }
  if (all_main2)
    return {Family::main2_family, true,
            "every generator is x1^(d-r) * x2^(r-1) * x_i with i >= 2"};
  return {Family::outside_scope, std::nullopt,
          "no catalogued multi-generator family matched"};
}

namespace detail {

// the three exponent-2 families whose 2-bounded closure is Freiman at degree
// d >= 5; none is divisible by x1^2
inline std::vector<Monomial> degree_ge5_2bounded_freiman_list(int d) {
  auto build = [](const std::vector<int>& e) { return Monomial(e); };
  std::vector<Monomial> out;
  if (d % 2 == 0) {
    const int m = d / 2;
    std::vector<int> f1(m + 1, 2), f2(m + 2, 2), f3(m + 1, 2);
    f1[0] = 1;
    f1[m] = 1;  // x1 x2^2..x_m^2 x_{m+1}
    f2[0] = 1;
    f2[m] = 0;
    f2[m + 1] = 1;  // x1 x2^2..x_m^2 x_{m+2}
    f3[0] = 1;
    f3[m - 1] = 1;  // x1 x2^2..x_{m-1}^2 x_m x_{m+1}^2
    out = {build(f1), build(f2), build(f3)};
  } else {
    const int m = (d - 1) / 2;
    std::vector<int> f1(m + 1, 2), f2(m + 2, 2), f3(m + 2, 2);
    f1[0] = 1;  // x1 x2^2..x_{m+1}^2
    f2[0] = 1;
    f2[m] = 1;
    f2[m + 1] = 1;  // x1 x2^2..x_m^2 x_{m+1} x_{m+2}
    f3[0] = 1;
    f3[m] = 0;  // x1 x2^2..x_m^2 x_{m+2}^2
    out = {build(f1), build(f2), build(f3)};
  }
  return out;
}

}  // namespace detail

// Classification of bounded-exponent closures B_k(u) of a single k-bounded
// monomial. Factors of x1^k are divided out first (the shift map preserves
// the verdict), then the catalogued cases by k and degree apply.
inline ClassVerdict classify_kborel(const Monomial& u, int k, int n = 0) {
  if (k < 1) throw std::invalid_argument("classify_kborel: k must be positive");
  if (!u.is_k_bounded(k))
    throw std::invalid_argument("classify_kborel: monomial is not k-bounded");
  if (u.deg() < 2)
    throw std::invalid_argument("classify_kborel: degree must be at least 2");
  if (k == 1)
    return {Family::outside_scope, std::nullopt,
            "squarefree closures (k = 1) are not catalogued"};

  Monomial w = u;
  while (w.n() >= 2 && w.exp(1) == k && w.deg() >= k + 2) w = shift_psi(w, k);
  const int d = w.deg();

  if (k >= d) {
    ClassVerdict inner = classify_principal_borel(w, n);
    inner.matched_clause += " (exponent bound at or above the degree: bounded closure equals the full closure)";
    return inner;
  }
  if (k == d - 1) {
    ClassVerdict inner = classify_principal_borel(w, n);
    return {Family::kborel_k_eq_dminus1, inner.freiman_predicted,
            "(d-1)-bounded closure is Freiman iff the full closure is: " + inner.matched_clause};
  }
  if (k == 2) {
    if (d == 4) {
      bool hit = w.same_exponents(parse_monomial("x1*x2*x3^2")) ||
                 w.same_exponents(parse_monomial("x2^2*x3^2"));
      if (!hit && w.exp(1) == 1 && w.n() >= 2 && w.exp(2) == 2) {
        auto tail = detail::tail_support(w);
        hit = tail.size() == 1 && tail[0].second == 1;  // x1 x2^2 x_i
      }
      return {Family::kborel_k2_d4, hit,
              hit ? "degree-4 2-bounded Freiman shape (x1*x2*x3^2, x2^2*x3^2 or x1*x2^2*x_i)"
                  : "no degree-4 2-bounded Freiman shape matched"};
    }
    // d >= 5; x1^2 cannot divide w after the shift loop
    for (const auto& f : detail::degree_ge5_2bounded_freiman_list(d))
      if (w.same_exponents(f))
        return {Family::kborel_k2_dge5, true,
                "2-bounded Freiman shape at degree " + std::to_string(d)};
    return {Family::kborel_k2_dge5, false,
            "no 2-bounded Freiman shape at degree " + std::to_string(d)};
  }
  // 3 <= k <= d-2: a Freiman full closure forces a Freiman bounded closure,
  // nothing is catalogued in the other direction
  ClassVerdict inner = classify_principal_borel(w, n);
  if (inner.freiman_predicted == true)
    return {Family::principal_borel, true,
            "full closure is Freiman, which carries over to the bounded closure: " +
                inner.matched_clause};
  return {Family::outside_scope, std::nullopt,
          "one-directional criterion inconclusive: full closure is not a Freiman shape"};
}

// Routes a generator list to the catalogued classification, minimalizing
// first. Returns outside_scope when no catalogued family applies.
inline ClassVerdict predict_freiman(const BorelSpec& spec) {
  auto gens = minimal_borel_generators(spec.gens);
  if (spec.k) {
    if (gens.size() > 1)
      return {Family::outside_scope, std::nullopt,
              "bounded closures with several generators are not catalogued"};
    if (gens[0].deg() < 2)
      return {Family::outside_scope, std::nullopt, "degree below 2"};
    return classify_kborel(gens[0], *spec.k, spec.n);
  }
  if (gens[0].deg() < 2)
    return {Family::outside_scope, std::nullopt, "degree below 2"};
  if (gens.size() == 1) return classify_principal_borel(gens[0], spec.n);
  if (gens[0].deg() == 2) return classify_degree2_borel(gens, spec.n);
  return classify_main2_family(gens, spec.n);
}

}  // namespace freiman
