#pragma once

#include <cassert>
#include <cstddef>
#include <unordered_set>
#include <utility>
#include <vector>

#include "freiman/monomial.hpp"

namespace freiman {

namespace detail {

struct ExpVecHash {
  std::size_t operator()(const std::vector<int>& v) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (int x : v) {
      h ^= static_cast<std::size_t>(x) + 0x9e3779b9;
      h *= 1099511628211ull;
    }
    return h;
  }
};

}  // namespace detail

// The minimal generating set of an equigenerated monomial ideal: distinct
// monomials of one degree in one ring, kept in descending lexicographic
// order. Since all generators share a degree, distinctness already implies
// minimality (no strict divisibility at equal degree).
class GenSet {
 public:
  static GenSet of(std::vector<Monomial> gens) {
    if (gens.empty()) throw std::invalid_argument("GenSet: empty generator list");
    int n = gens.front().n();
    int d = gens.front().deg();
    for (const auto& g : gens) {
      if (g.n() != n) throw std::invalid_argument("GenSet: mixed ambient rings");
      if (g.deg() != d) throw std::invalid_argument("GenSet: mixed degrees");
    }
    std::sort(gens.begin(), gens.end(), lex_greater);
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    return GenSet(std::move(gens), n, d);
  }

  int n() const { return n_; }
  int deg() const { return deg_; }
  std::size_t size() const { return gens_.size(); }
  long long mu() const { return static_cast<long long>(gens_.size()); }

  const Monomial& operator[](std::size_t i) const { return gens_[i]; }
  const std::vector<Monomial>& gens() const { return gens_; }
  auto begin() const { return gens_.begin(); }
  auto end() const { return gens_.end(); }

  bool contains(const Monomial& m) const {
    if (m.n() != n_ || m.deg() != deg_) return false;
    auto it = std::lower_bound(gens_.begin(), gens_.end(), m, lex_greater);
    return it != gens_.end() && *it == m;
  }

  std::optional<std::size_t> index_of(const Monomial& m) const {
    if (m.n() != n_ || m.deg() != deg_) return std::nullopt;
    auto it = std::lower_bound(gens_.begin(), gens_.end(), m, lex_greater);
    if (it == gens_.end() || !(*it == m)) return std::nullopt;
    return static_cast<std::size_t>(it - gens_.begin());
  }

  friend bool operator==(const GenSet& a, const GenSet& b) {
    return a.gens_ == b.gens_;
  }

 private:
  GenSet(std::vector<Monomial> gens, int n, int d)
      : gens_(std::move(gens)), n_(n), deg_(d) {}

  std::vector<Monomial> gens_;
  int n_ = 0;
  int deg_ = 0;
};

// products of all generator pairs (a in lhs, b in rhs), deduplicated
inline GenSet genset_product(const GenSet& lhs, const GenSet& rhs) {
  if (lhs.n() != rhs.n())
    throw std::invalid_argument("genset_product: mixed ambient rings");
  std::unordered_set<std::vector<int>, detail::ExpVecHash> seen;
  seen.reserve(lhs.size() * rhs.size());
  for (const auto& a : lhs)
    for (const auto& b : rhs) {
      std::vector<int> e(a.exps());
      for (int i = 0; i < rhs.n(); ++i) e[i] += b.exps()[i];
      seen.insert(std::move(e));
    }
  std::vector<Monomial> out;
  out.reserve(seen.size());
  for (const auto& e : seen) out.emplace_back(e);
  return GenSet::of(std::move(out));
}

// G(I^k), built one factor at a time. Deduplication is all that minimality
// needs here: the products share degree k*deg, so none can strictly divide
// another. Debug builds double-check that.
inline GenSet ideal_power(const GenSet& g, int k) {
  if (k < 1) throw std::invalid_argument("ideal_power: exponent must be positive");
  GenSet p = g;
  for (int j = 2; j <= k; ++j) p = genset_product(p, g);
#ifndef NDEBUG
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 1; j < p.size(); ++j)
      assert(!p[i].divides(p[j]) && !p[j].divides(p[i]));
#endif
  return p;
}

}  // namespace freiman
