#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "freiman/genset.hpp"
#include "freiman/monomial.hpp"

namespace freiman {

// Merge the index sequences of u and v and deal the result alternately: the
// 1st, 3rd, 5th... entries rebuild the first output, the rest the second.
// The product u*v is preserved. Symmetric in its arguments.
inline std::pair<Monomial, Monomial> sort_pair(const Monomial& u, const Monomial& v) {
  if (u.n() != v.n())
    throw std::invalid_argument("sort_pair: operands live in different rings");
  if (u.deg() != v.deg())
    throw std::invalid_argument("sort_pair: degrees differ");
  auto a = u.index_seq(), b = v.index_seq();
  std::vector<int> merged(a.size() + b.size());
  std::merge(a.begin(), a.end(), b.begin(), b.end(), merged.begin());
  std::vector<int> odd, even;
  for (std::size_t t = 0; t < merged.size(); ++t)
    (t % 2 == 0 ? odd : even).push_back(merged[t]);
  return {Monomial::from_index_seq(odd, u.n()), Monomial::from_index_seq(even, u.n())};
}

inline bool is_sorted_pair(const Monomial& u, const Monomial& v) {
  auto [a, b] = sort_pair(u, v);
  return (a == u && b == v) || (a == v && b == u);
}

struct SortCheck {
  bool sortable = false;
  // a pair whose sort leaves the generating set, when not sortable
  std::optional<std::pair<Monomial, Monomial>> witness;
};

// a set is sortable when sorting any two members stays inside the set
inline SortCheck is_sortable(const GenSet& g) {
  for (std::size_t i = 0; i < g.size(); ++i)
    for (std::size_t j = i + 1; j < g.size(); ++j) {
      auto [a, b] = sort_pair(g[i], g[j]);
      if (!g.contains(a) || !g.contains(b))
        return {false, std::make_pair(g[i], g[j])};
    }
  return {true, std::nullopt};
}

// vertices are the generators, edges join distinct sorted pairs
struct SortedGraph {
  GenSet vertices;
  std::vector<std::pair<int, int>> edges;  // index pairs i < j, ascending
};

inline SortedGraph sorted_graph(const GenSet& g) {
  SortedGraph sg{g, {}};
  for (std::size_t i = 0; i < g.size(); ++i)
    for (std::size_t j = i + 1; j < g.size(); ++j)
      if (is_sorted_pair(g[i], g[j]))
        sg.edges.emplace_back(static_cast<int>(i), static_cast<int>(j));
  return sg;
}

}  // namespace freiman
