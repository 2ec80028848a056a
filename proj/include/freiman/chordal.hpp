#pragma once

#include <array>
#include <deque>
#include <optional>
#include <string>
#include <vector>

#include "freiman/sorting.hpp"

namespace freiman {

// Small simple undirected graph with optional vertex labels. Adjacency lists
// stay sorted; parallel edges and loops are rejected or ignored.
class UGraph {
 public:
  UGraph() = default;
  explicit UGraph(int vcount) : adj_(check_count(vcount)) {}
  UGraph(int vcount, const std::vector<std::pair<int, int>>& edges)
      : adj_(check_count(vcount)) {
    for (auto [a, b] : edges) add_edge(a, b);
  }

  void add_edge(int a, int b) {
    check_vertex(a);
    check_vertex(b);
    if (a == b) throw std::invalid_argument("UGraph: loops are not allowed");
    if (has_edge(a, b)) return;
    insert_sorted(adj_[a], b);
    insert_sorted(adj_[b], a);
  }

  bool has_edge(int a, int b) const {
    check_vertex(a);
    check_vertex(b);
    return std::binary_search(adj_[a].begin(), adj_[a].end(), b);
  }

  int vcount() const { return static_cast<int>(adj_.size()); }
  const std::vector<int>& neighbors(int v) const {
    check_vertex(v);
    return adj_[v];
  }

  std::vector<std::pair<int, int>> edge_list() const {
    std::vector<std::pair<int, int>> out;
    for (int v = 0; v < vcount(); ++v)
      for (int w : adj_[v])
        if (v < w) out.emplace_back(v, w);
    return out;
  }

  std::vector<std::string> labels;

 private:
  static int check_count(int n) {
    if (n < 0) throw std::invalid_argument("UGraph: negative vertex count");
    return n;
  }
  void check_vertex(int v) const {
    if (v < 0 || v >= vcount()) throw std::out_of_range("UGraph: vertex out of range");
  }
  static void insert_sorted(std::vector<int>& vec, int x) {
    vec.insert(std::lower_bound(vec.begin(), vec.end(), x), x);
  }

  std::vector<std::vector<int>> adj_;
};

inline UGraph to_ugraph(const SortedGraph& sg) {
  UGraph g(static_cast<int>(sg.vertices.size()), sg.edges);
  for (const auto& v : sg.vertices) g.labels.push_back(format_monomial(v));
  return g;
}

struct ChordalityResult {
  bool chordal = false;
  // perfect elimination order (vertex ids, eliminated left to right) when chordal
  std::vector<int> order;
  // a vertex with two non-adjacent later neighbors otherwise: (v, w, y)
  std::array<int, 3> violation{-1, -1, -1};
};

// Maximum cardinality search plus the standard one-pass elimination check.
// Ties break toward the lowest vertex id, so the result is deterministic.
inline ChordalityResult is_chordal(const UGraph& g) {
  const int n = g.vcount();
  ChordalityResult res;
  if (n == 0) {
    res.chordal = true;
    return res;
  }
  std::vector<int> weight(n, 0), pos(n, -1), order(n, -1);
  for (int p = n - 1; p >= 0; --p) {
    int best = -1;
    for (int v = 0; v < n; ++v)
      if (pos[v] < 0 && (best < 0 || weight[v] > weight[best])) best = v;
    pos[best] = p;
    order[p] = best;
    for (int w : g.neighbors(best))
      if (pos[w] < 0) ++weight[w];
  }
  // each vertex's later neighbors must form a clique; checking them against
  // the earliest one suffices
  for (int p = 0; p < n; ++p) {
    int v = order[p];
    int w = -1;
    for (int nb : g.neighbors(v))
      if (pos[nb] > p && (w < 0 || pos[nb] < pos[w])) w = nb;
    if (w < 0) continue;
    for (int nb : g.neighbors(v))
      if (nb != w && pos[nb] > pos[w] && !g.has_edge(w, nb)) {
        res.chordal = false;
        res.violation = {v, w, nb};
        return res;
      }
  }
  res.chordal = true;
  res.order = std::move(order);
  return res;
}

inline bool is_valid_induced_cycle(const UGraph& g, const std::vector<int>& cycle,
                                   int min_len = 4) {
  const int len = static_cast<int>(cycle.size());
  if (len < min_len || len < 4) return false;
  std::vector<int> sorted(cycle);
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
  for (int i = 0; i < len; ++i)
    for (int j = i + 1; j < len; ++j) {
      bool consecutive = (j == i + 1) || (i == 0 && j == len - 1);
      if (g.has_edge(cycle[i], cycle[j]) != consecutive) return false;
    }
  return true;
}

namespace detail {

// Induced cycle through v, x, y where x,y are non-adjacent neighbors of v:
// a shortest x-y path avoiding v and all other neighbors of v is induced, and
// closing it through v stays induced.
inline std::optional<std::vector<int>> cycle_via(const UGraph& g, int v, int x, int y) {
  const int n = g.vcount();
  std::vector<char> allowed(n, 1);
  allowed[v] = 0;
  for (int w : g.neighbors(v)) allowed[w] = 0;
  allowed[x] = allowed[y] = 1;
  std::vector<int> parent(n, -2);
  std::deque<int> queue{x};
  parent[x] = -1;
  while (!queue.empty()) {
    int cur = queue.front();
    queue.pop_front();
    if (cur == y) break;
    for (int w : g.neighbors(cur))
      if (allowed[w] && parent[w] == -2) {
        parent[w] = cur;
        queue.push_back(w);
      }
  }
  if (parent[y] == -2) return std::nullopt;
  std::vector<int> cycle{v};
  for (int cur = y; cur != -1; cur = parent[cur]) cycle.push_back(cur);
  std::reverse(cycle.begin() + 1, cycle.end());  // v, x, ..., y
  if (!is_valid_induced_cycle(g, cycle)) return std::nullopt;
  return cycle;
}

// exhaustive search for a chordless cycle of length >= min_len; exponential
// in the worst case, meant for small graphs
inline bool long_cycle_dfs(const UGraph& g, int s, std::vector<int>& path,
                           std::vector<char>& on_path, int min_len,
                           std::vector<int>& out) {
  int last = path.back();
  for (int w : g.neighbors(last)) {
    if (w <= s || on_path[w]) continue;
    bool chord = false, closes = false;
    for (std::size_t t = 0; t + 1 < path.size(); ++t) {
      if (!g.has_edge(w, path[t])) continue;
      if (t == 0)
        closes = true;  // edge back to the start
      else
        chord = true;
    }
    if (chord) continue;
    if (closes) {
      if (static_cast<int>(path.size()) + 1 >= min_len) {
        out = path;
        out.push_back(w);
        return true;
      }
      continue;  // any extension through w would keep the chord to s
    }
    path.push_back(w);
    on_path[w] = 1;
    if (long_cycle_dfs(g, s, path, on_path, min_len, out)) return true;
    on_path[w] = 0;
    path.pop_back();
  }
  return false;
}

}  // namespace detail

// Finds a chordless cycle with at least min_len vertices, or nullopt if none
// exists. For min_len = 4 this is the certificate companion of is_chordal and
// returns a shortest such cycle.
inline std::optional<std::vector<int>> find_induced_cycle(const UGraph& g, int min_len = 4) {
  if (min_len < 4) throw std::invalid_argument("find_induced_cycle: min_len must be at least 4");
  if (min_len == 4) {
    if (is_chordal(g).chordal) return std::nullopt;
    // a shortest cycle through some vertex and two non-adjacent neighbors is
    // a shortest chordless cycle overall
    std::optional<std::vector<int>> best;
    for (int v = 0; v < g.vcount(); ++v) {
      const auto& nb = g.neighbors(v);
      for (std::size_t i = 0; i < nb.size(); ++i)
        for (std::size_t j = i + 1; j < nb.size(); ++j) {
          if (g.has_edge(nb[i], nb[j])) continue;
          auto c = detail::cycle_via(g, v, nb[i], nb[j]);
          if (c && (!best || c->size() < best->size())) {
            best = std::move(c);
            if (best->size() == 4) return best;
          }
        }
    }
    return best;  // nonempty whenever is_chordal said no
  }
  for (int s = 0; s < g.vcount(); ++s) {
    std::vector<int> path{s}, out;
    std::vector<char> on_path(g.vcount(), 0);
    on_path[s] = 1;
    if (detail::long_cycle_dfs(g, s, path, on_path, min_len, out)) return out;
  }
  return std::nullopt;
}

// Three stacked cliques A, B, C of size p each; a_i meets b_j and b_i meets
// c_j exactly when i <= j, and A never meets C. Chordal for every p.
inline UGraph lemma_chordal_graph(int p) {
  if (p < 1) throw std::invalid_argument("lemma_chordal_graph: p must be positive");
  UGraph g(3 * p);
  auto a = [](int i) { return i; };
  auto b = [p](int i) { return p + i; };
  auto c = [p](int i) { return 2 * p + i; };
  for (int i = 0; i < p; ++i)
    for (int j = i + 1; j < p; ++j) {
      g.add_edge(a(i), a(j));
      g.add_edge(b(i), b(j));
      g.add_edge(c(i), c(j));
    }
  for (int i = 0; i < p; ++i)
    for (int j = i; j < p; ++j) {
      g.add_edge(a(i), b(j));
      g.add_edge(b(i), c(j));
    }
  g.labels.resize(3 * p);
  for (int i = 0; i < p; ++i) {
    g.labels[a(i)] = "a" + std::to_string(i + 1);
    g.labels[b(i)] = "b" + std::to_string(i + 1);
    g.labels[c(i)] = "c" + std::to_string(i + 1);
  }
  return g;
}

inline std::string to_dot(const UGraph& g) {
  auto escape = [](const std::string& s) {
    std::string out;
    for (char c : s) {
      if (c == '"' || c == '\\') out += '\\';
      out += c;
    }
    return out;
  };
  std::string dot = "graph G {\n";
  const bool labeled = !g.labels.empty();
  for (int v = 0; v < g.vcount(); ++v) {
    dot += "  " + std::to_string(v);
    if (labeled && v < static_cast<int>(g.labels.size()))
      dot += " [label=\"" + escape(g.labels[v]) + "\"]";
    dot += ";\n";
  }
  for (auto [a, b] : g.edge_list())
    dot += "  " + std::to_string(a) + " -- " + std::to_string(b) + ";\n";
  dot += "}\n";
  return dot;
}

}  // namespace freiman
