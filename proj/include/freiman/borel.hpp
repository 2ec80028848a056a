#pragma once

#include <climits>
#include <optional>
#include <set>
#include <vector>

#include "freiman/genset.hpp"
#include "freiman/monomial.hpp"

namespace freiman {

// v lies in the principal Borel ideal of u (same degree): the sorted index
// sequence of v is dominated entrywise by that of u
inline bool borel_leq(const Monomial& v, const Monomial& u) {
  if (v.deg() != u.deg())
    throw std::invalid_argument("borel_leq: degrees differ");
  auto sv = v.index_seq(), su = u.index_seq();
  for (std::size_t t = 0; t < sv.size(); ++t)
    if (sv[t] > su[t]) return false;
  return true;
}

// Generator data for a (possibly exponent-bounded) Borel ideal. k absent
// means the plain Borel closure; k present caps every exponent at k.
struct BorelSpec {
  std::vector<Monomial> gens;
  std::optional<int> k;
  int n = 0;
};

inline BorelSpec make_borel_spec(std::vector<Monomial> gens,
                                 std::optional<int> k = std::nullopt,
                                 std::optional<int> n = std::nullopt) {
  if (gens.empty()) throw std::invalid_argument("make_borel_spec: no generators");
  int need = 0;
  for (const auto& g : gens) need = std::max(need, g.n());
  int amb = n ? *n : need;
  if (amb < need)
    throw std::invalid_argument("make_borel_spec: n smaller than a generator index");
  int d = gens.front().deg();
  for (auto& g : gens) {
    if (g.deg() != d) throw std::invalid_argument("make_borel_spec: mixed degrees");
    if (g.n() < amb) g = g.extended(amb);
  }
  if (k) {
    if (*k < 1) throw std::invalid_argument("make_borel_spec: k must be positive");
    for (const auto& g : gens)
      if (!g.is_k_bounded(*k))
        throw std::invalid_argument("make_borel_spec: generator exceeds the exponent bound");
  }
  return BorelSpec{std::move(gens), k, amb};
}

namespace detail {

// Walks every nondecreasing index sequence dominated by cap, never letting an
// index repeat more than run_bound times in a row. Sequences are emitted as
// exponent vectors of length n.
inline void dominated_seqs(const std::vector<int>& cap, int run_bound, int n,
                           std::size_t t, std::vector<int>& seq,
                           std::set<std::vector<int>>& out) {
  if (t == cap.size()) {
    std::vector<int> e(n, 0);
    for (int i : seq) ++e[i - 1];
    out.insert(std::move(e));
    return;
  }
  int start = (t == 0) ? 1 : seq[t - 1];
  for (int j = start; j <= cap[t]; ++j) {
    if (j == start && t > 0) {
      int run = 1;
      for (std::size_t back = t; back-- > 0 && seq[back] == j;) ++run;
      if (run > run_bound) continue;
    }
    seq.push_back(j);
    dominated_seqs(cap, run_bound, n, t + 1, seq, out);
    seq.pop_back();
  }
}

inline GenSet closure_impl(const std::vector<Monomial>& gens, int run_bound, int n) {
  if (gens.empty()) throw std::invalid_argument("closure: no generators");
  std::set<std::vector<int>> acc;
  for (const auto& g : gens) {
    if (g.n() > n) throw std::invalid_argument("closure: generator index exceeds n");
    std::vector<int> seq;
    seq.reserve(g.deg());
    dominated_seqs(g.extended(n).index_seq(), run_bound, n, 0, seq, acc);
  }
  std::vector<Monomial> out;
  out.reserve(acc.size());
  for (const auto& e : acc) out.emplace_back(e);
  return GenSet::of(std::move(out));
}

}  // namespace detail

inline GenSet borel_closure(const std::vector<Monomial>& gens, int n) {
  return detail::closure_impl(gens, INT_MAX, n);
}
inline GenSet borel_closure(const Monomial& u) {
  return borel_closure({u}, u.n());
}

// closure inside the k-bounded part of the ring; every generator must itself
// be k-bounded
inline GenSet k_borel_closure(const std::vector<Monomial>& gens, int k, int n) {
  if (k < 1) throw std::invalid_argument("k_borel_closure: k must be positive");
  for (const auto& g : gens)
    if (!g.is_k_bounded(k))
      throw std::invalid_argument("k_borel_closure: generator exceeds the exponent bound");
  return detail::closure_impl(gens, k, n);
}
inline GenSet k_borel_closure(const Monomial& u, int k) {
  return k_borel_closure({u}, k, u.n());
}

inline GenSet closure(const BorelSpec& spec) {
  return spec.k ? k_borel_closure(spec.gens, *spec.k, spec.n)
                : borel_closure(spec.gens, spec.n);
}

// drops duplicates and generators already inside another generator's closure
inline std::vector<Monomial> minimal_borel_generators(std::vector<Monomial> gens) {
  if (gens.empty()) throw std::invalid_argument("minimal_borel_generators: empty list");
  int need = 0;
  for (const auto& g : gens) need = std::max(need, g.n());
  for (auto& g : gens)
    if (g.n() < need) g = g.extended(need);
  int d = gens.front().deg();
  for (const auto& g : gens)
    if (g.deg() != d)
      throw std::invalid_argument("minimal_borel_generators: mixed degrees");
  std::sort(gens.begin(), gens.end(), lex_greater);
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  std::vector<Monomial> kept;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    bool dominated = false;
    for (std::size_t j = 0; j < gens.size() && !dominated; ++j)
      if (j != i && borel_leq(gens[i], gens[j])) dominated = true;
    if (!dominated) kept.push_back(gens[i]);
  }
  return kept;
}

// exchange test: moving any variable of any generator to a smaller index must
// land back inside the set
inline bool is_borel_ideal(const GenSet& g) {
  for (const auto& u : g)
    for (int j = 2; j <= g.n(); ++j) {
      if (u.exp(j) == 0) continue;
      for (int i = 1; i < j; ++i) {
        std::vector<int> e = u.exps();
        --e[j - 1];
        ++e[i - 1];
        if (!g.contains(Monomial(std::move(e)))) return false;
      }
    }
  return true;
}

// same exchange test, but only exchanges that respect the exponent cap count
inline bool is_k_borel_ideal(const GenSet& g, int k) {
  if (k < 1) throw std::invalid_argument("is_k_borel_ideal: k must be positive");
  for (const auto& u : g) {
    if (!u.is_k_bounded(k)) return false;
    for (int j = 2; j <= g.n(); ++j) {
      if (u.exp(j) == 0) continue;
      for (int i = 1; i < j; ++i) {
        if (u.exp(i) + 1 > k) continue;
        std::vector<int> e = u.exps();
        --e[j - 1];
        ++e[i - 1];
        if (!g.contains(Monomial(std::move(e)))) return false;
      }
    }
  }
  return true;
}

// A minimal degree-2 Borel generator list is a chain x_{i_1}x_{j_1}, ...,
// x_{i_m}x_{j_m} with i_1 < ... < i_m <= j_m < ... < j_1. The closure then
// splits into products of two variable intervals, one block per generator:
// [x_{i_{t-1}+1}..x_{i_t}] * [x_{i_{t-1}+1}..x_{j_t}].
struct IntervalProduct {
  std::pair<int, int> first;   // inclusive index range of the short factor
  std::pair<int, int> second;  // inclusive index range of the long factor
  friend bool operator==(const IntervalProduct&, const IntervalProduct&) = default;
};

inline std::vector<IntervalProduct> interval_decomposition(std::vector<Monomial> gens) {
  auto minimal = minimal_borel_generators(gens);
  if (minimal.size() != gens.size())
    throw std::invalid_argument("interval_decomposition: generators are not minimal");
  std::vector<std::pair<int, int>> pairs;
  for (const auto& g : minimal) {
    if (g.deg() != 2)
      throw std::invalid_argument("interval_decomposition: generators must have degree 2");
    auto seq = g.index_seq();
    pairs.emplace_back(seq[0], seq[1]);
  }
  std::sort(pairs.begin(), pairs.end());
  for (std::size_t t = 1; t < pairs.size(); ++t)
    if (pairs[t].first <= pairs[t - 1].first || pairs[t].second >= pairs[t - 1].second)
      throw std::logic_error("interval_decomposition: minimal list is not a chain");
  if (pairs.back().first > pairs.back().second)
    throw std::logic_error("interval_decomposition: minimal list is not a chain");
  std::vector<IntervalProduct> out;
  int lo = 1;
  for (const auto& [i, j] : pairs) {
    out.push_back({{lo, i}, {lo, j}});
    lo = i + 1;
  }
  return out;
}

// divides out the full x1 block of a k-bounded monomial with exp(1) = k and
// shifts every remaining variable down by one
inline Monomial shift_psi(const Monomial& u, int k) {
  if (k < 1) throw std::invalid_argument("shift_psi: k must be positive");
  if (!u.is_k_bounded(k))
    throw std::invalid_argument("shift_psi: monomial is not k-bounded");
  if (u.exp(1) != k)
    throw std::invalid_argument("shift_psi: exponent of x1 must equal k exactly");
  if (u.n() < 2)
    throw std::invalid_argument("shift_psi: no variable left after the shift");
  std::vector<int> e(u.exps().begin() + 1, u.exps().end());
  return Monomial(std::move(e));
}

}  // namespace freiman
