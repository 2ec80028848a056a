#pragma once

#include <atomic>
#include <chrono>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "freiman/borel.hpp"
#include "freiman/chordal.hpp"
#include "freiman/classify.hpp"
#include "freiman/fiber.hpp"
#include "freiman/sorting.hpp"

namespace freiman {

enum class Theorem {
  main1,
  main2,
  sort,
  judge_crosscheck,
  kborel_theorem,
  degreed,
  d4,
  general_main3,
  isomorphic,
  power_bounds,
};

inline const char* theorem_name(Theorem t) {
  switch (t) {
    case Theorem::main1: return "main1";
    case Theorem::main2: return "main2";
    case Theorem::sort: return "sort";
    case Theorem::judge_crosscheck: return "judge_crosscheck";
    case Theorem::kborel_theorem: return "kborel_theorem";
    case Theorem::degreed: return "degreed";
    case Theorem::d4: return "d4";
    case Theorem::general_main3: return "general_main3";
    case Theorem::isomorphic: return "isomorphic";
    case Theorem::power_bounds: return "power_bounds";
  }
  return "?";
}

inline std::optional<Theorem> theorem_from_name(const std::string& name) {
  for (Theorem t : {Theorem::main1, Theorem::main2, Theorem::sort,
                    Theorem::judge_crosscheck, Theorem::kborel_theorem,
                    Theorem::degreed, Theorem::d4, Theorem::general_main3,
                    Theorem::isomorphic, Theorem::power_bounds})
    if (name == theorem_name(t)) return t;
  return std::nullopt;
}

// Sweep configuration. n_max = 0 picks a per-theorem default sized for a
// desk-scale exhaustive run; d and k narrow the instance family where the
// theorem leaves them free.
struct SweepSpec {
  Theorem theorem = Theorem::main1;
  int n_max = 0;
  std::optional<int> d;
  std::optional<int> k;
  long long limit = 100000;
  int jobs = 1;
};

struct Mismatch {
  std::string input;
  std::string predicted;
  std::string computed;
  friend bool operator==(const Mismatch&, const Mismatch&) = default;
};

struct SweepReport {
  std::string theorem;
  long long instances = 0;
  std::vector<Mismatch> mismatches;
  long long elapsed_ms = 0;
  bool pass = true;
  // informational findings (rank-based ell disagreements, equality patterns,
  // truncation); never affect pass
  std::vector<std::string> notes;
};

inline std::string format_borel_spec(const BorelSpec& s) {
  std::string out = "B";
  if (s.k) out += "_" + std::to_string(*s.k);
  out += "(";
  for (std::size_t i = 0; i < s.gens.size(); ++i) {
    if (i) out += ",";
    out += format_monomial(s.gens[i]);
  }
  out += ")";
  return out;
}

inline SweepSpec with_defaults(SweepSpec s) {
  if (s.n_max == 0) {
    switch (s.theorem) {
      case Theorem::main1: s.n_max = 7; break;
      case Theorem::main2: s.n_max = 6; break;
      case Theorem::sort: s.n_max = 5; break;
      case Theorem::judge_crosscheck: s.n_max = 6; break;
      case Theorem::kborel_theorem: s.n_max = 5; break;
      case Theorem::degreed: s.n_max = 6; break;
      case Theorem::d4: s.n_max = 6; break;
      case Theorem::general_main3: s.n_max = 6; break;
      case Theorem::isomorphic: s.n_max = 6; break;
      case Theorem::power_bounds: s.n_max = 7; break;
    }
  }
  if (s.n_max < 3)
    throw std::invalid_argument("SweepSpec: n_max must be at least 3");
  if (s.limit <= 0) s.limit = 100000;
  if (s.jobs < 1) s.jobs = 1;
  return s;
}

namespace detail {

// all monomials of degree d on x1..xn with every exponent <= bound,
// descending lexicographic order
inline void bounded_monomials_rec(int n, int rem, int bound, int pos,
                                  std::vector<int>& e, std::vector<Monomial>& out) {
  if (pos == n - 1) {
    if (rem <= bound) {
      e[pos] = rem;
      out.emplace_back(e);
      e[pos] = 0;
    }
    return;
  }
  for (int v = std::min(bound, rem); v >= 0; --v) {
    e[pos] = v;
    bounded_monomials_rec(n, rem - v, bound, pos + 1, e, out);
  }
  e[pos] = 0;
}

inline std::vector<Monomial> bounded_monomials(int d, int n, int bound) {
  if (d < 1 || n < 1 || bound < 1)
    throw std::invalid_argument("bounded_monomials: arguments must be positive");
  std::vector<Monomial> out;
  std::vector<int> e(n, 0);
  bounded_monomials_rec(n, d, bound, 0, e, out);
  return out;
}

// minimal degree-2 chains x_{i_t} x_{j_t}, i_1 < ... < i_m <= j_m < ... < j_1
inline void degree2_chains_rec(int n_max, int last_i, int last_j,
                               std::vector<std::pair<int, int>>& acc,
                               std::vector<std::vector<std::pair<int, int>>>& out) {
  for (int i = last_i + 1; i <= n_max; ++i)
    for (int j = last_j - 1; j >= i; --j) {
      acc.emplace_back(i, j);
      if (acc.size() >= 2) out.push_back(acc);
      degree2_chains_rec(n_max, i, j, acc, out);
      acc.pop_back();
    }
}

inline Monomial pair_monomial(int i, int j, int n) {
  std::vector<int> e(n, 0);
  ++e[i - 1];
  ++e[j - 1];
  return Monomial(std::move(e));
}

inline void strict_tuples_rec(int lo, int hi, int len, std::vector<int>& acc,
                              std::vector<std::vector<int>>& out) {
  if (static_cast<int>(acc.size()) == len) {
    out.push_back(acc);
    return;
  }
  for (int v = lo; v <= hi; ++v) {
    acc.push_back(v);
    strict_tuples_rec(v + 1, hi, len, acc, out);
    acc.pop_back();
  }
}

inline void all_tuples_rec(int lo, int hi, int len, std::vector<int>& acc,
                           std::vector<std::vector<int>>& out) {
  if (static_cast<int>(acc.size()) == len) {
    out.push_back(acc);
    return;
  }
  for (int v = lo; v <= hi; ++v) {
    acc.push_back(v);
    all_tuples_rec(lo, hi, len, acc, out);
    acc.pop_back();
  }
}

}  // namespace detail

inline std::vector<BorelSpec> enumerate_instances(const SweepSpec& raw) {
  auto s = with_defaults(raw);
  std::vector<BorelSpec> out;
  switch (s.theorem) {
    case Theorem::main1: {
      std::vector<std::vector<std::pair<int, int>>> chains;
      std::vector<std::pair<int, int>> acc;
      detail::degree2_chains_rec(s.n_max, 0, s.n_max + 1, acc, chains);
      for (const auto& chain : chains) {
        std::vector<Monomial> gens;
        for (auto [i, j] : chain)
          gens.push_back(detail::pair_monomial(i, j, s.n_max));
        out.push_back(make_borel_spec(std::move(gens)));
      }
      break;
    }
    case Theorem::main2: {
      std::vector<int> dlist = s.d ? std::vector<int>{*s.d}
                                   : std::vector<int>{3, 4, 5};
      for (int d : dlist) {
        if (d < 3) throw std::invalid_argument("main2 sweep needs d >= 3");
        for (int m = 2; m <= d; ++m) {
          std::vector<std::vector<int>> rs, is;
          std::vector<int> acc;
          detail::strict_tuples_rec(1, d, m, acc, rs);
          detail::all_tuples_rec(2, s.n_max, m, acc, is);
          for (const auto& r : rs)
            for (const auto& iv : is) {
              std::vector<Monomial> gens;
              for (int t = 0; t < m; ++t) {
                std::vector<int> e(std::max(2, iv[t]), 0);
                e[0] = d - r[t];
                e[1] = r[t] - 1;
                ++e[iv[t] - 1];
                gens.emplace_back(std::move(e));
              }
              out.push_back(make_borel_spec(std::move(gens)));
            }
        }
      }
      break;
    }
    case Theorem::sort: {
      std::vector<int> dlist = s.d ? std::vector<int>{*s.d}
                                   : std::vector<int>{1, 2, 3, 4, 5};
      for (int d : dlist) {
        std::vector<int> klist;
        if (s.k)
          klist = {*s.k};
        else
          for (int k = 1; k <= d; ++k) klist.push_back(k);
        for (int k : klist)
          for (const auto& u : detail::bounded_monomials(d, s.n_max, std::min(k, d)))
            out.push_back(make_borel_spec({u}, k));
      }
      break;
    }
    case Theorem::judge_crosscheck: {
      std::vector<int> dlist = s.d ? std::vector<int>{*s.d}
                                   : std::vector<int>{1, 2, 3, 4};
      for (int d : dlist)
        for (const auto& u : detail::bounded_monomials(d, s.n_max, d))
          out.push_back(make_borel_spec({u}));
      break;
    }
    case Theorem::kborel_theorem: {
      std::vector<int> dlist = s.d ? std::vector<int>{*s.d}
                                   : std::vector<int>{2, 3, 4};
      for (int d : dlist) {
        std::vector<int> klist;
        if (s.k)
          klist = {*s.k};
        else
          for (int k = 1; k <= d; ++k) klist.push_back(k);
        for (int k : klist)
          for (const auto& u : detail::bounded_monomials(d, s.n_max, std::min(k, d)))
            out.push_back(make_borel_spec({u}, k));
      }
      break;
    }
    case Theorem::degreed: {
      std::vector<int> dlist = s.d ? std::vector<int>{*s.d}
                                   : std::vector<int>{3, 4, 5};
      for (int d : dlist) {
        if (d < 2) throw std::invalid_argument("degreed sweep needs d >= 2");
        for (const auto& u : detail::bounded_monomials(d, s.n_max, d - 1))
          out.push_back(make_borel_spec({u}, d - 1));
      }
      break;
    }
    case Theorem::d4: {
      for (const auto& u : detail::bounded_monomials(4, s.n_max, 2))
        out.push_back(make_borel_spec({u}, 2));
      break;
    }
    case Theorem::general_main3: {
      std::vector<int> dlist = s.d ? std::vector<int>{*s.d}
                                   : std::vector<int>{5, 6};
      for (int d : dlist) {
        if (d < 5) throw std::invalid_argument("general_main3 sweep needs d >= 5");
        int cap = std::min(s.n_max, d);
        for (const auto& u : detail::bounded_monomials(d, cap, 2))
          if (u.exp(1) <= 1) out.push_back(make_borel_spec({u}, 2));
      }
      break;
    }
    case Theorem::isomorphic: {
      if (s.d && *s.d != 5)
        throw std::invalid_argument("isomorphic sweep is stated for d = 5");
      if (s.k && *s.k != 2)
        throw std::invalid_argument("isomorphic sweep is stated for k = 2");
      for (const auto& u : detail::bounded_monomials(5, s.n_max, 2))
        if (u.exp(1) == 2) out.push_back(make_borel_spec({u}, 2));
      break;
    }
    case Theorem::power_bounds: {
      const std::pair<Theorem, int> feeders[] = {
          {Theorem::main1, 7},          {Theorem::main2, 6},
          {Theorem::sort, 5},           {Theorem::judge_crosscheck, 6},
          {Theorem::d4, 6},             {Theorem::general_main3, 6},
          {Theorem::degreed, 6},
      };
      for (auto [t, n_def] : feeders) {
        SweepSpec fs;
        fs.theorem = t;
        fs.n_max = std::min(n_def, s.n_max);
        auto part = enumerate_instances(fs);
        out.insert(out.end(), part.begin(), part.end());
      }
      break;
    }
  }
  return out;
}

namespace detail {

struct Outcome {
  std::vector<Mismatch> mismatches;
  std::vector<std::string> notes;
};

inline std::string bool_word(bool b) { return b ? "true" : "false"; }

// Prediction vs brute force, and (when the set is sortable) chordality vs
// brute force. Chordality disagreements are hard failures only on Borel
// closures, where the spread certificate is exact; elsewhere they are noted.
inline void generic_crosscheck(const BorelSpec& inst, const GenSet& g,
                               const FreimanReport& rep, Outcome& out) {
  const std::string label = format_borel_spec(inst);
  auto pred = predict_freiman(inst);
  if (pred.freiman_predicted && *pred.freiman_predicted != rep.freiman)
    out.mismatches.push_back(
        {label, "freiman=" + bool_word(*pred.freiman_predicted) + " [" + pred.matched_clause + "]",
         "freiman=" + bool_word(rep.freiman) + " [defect " + std::to_string(rep.defect) + "]"});
  auto sc = is_sortable(g);
  if (sc.sortable) {
    bool chordal = is_chordal(to_ugraph(sorted_graph(g))).chordal;
    if (chordal != rep.freiman) {
      std::string found = "chordal=" + bool_word(chordal) + " vs freiman=" + bool_word(rep.freiman);
      if (rep.ell_method == EllMethod::borel_max_index)
        out.mismatches.push_back({label, "chordal iff freiman", found});
      else
        out.notes.push_back(label + ": " + found + " (rank-based ell, informational)");
    }
  }
}

inline Outcome check_instance(Theorem t, const BorelSpec& inst, int power_k_max) {
  Outcome out;
  const std::string label = format_borel_spec(inst);
  switch (t) {
    case Theorem::main1:
    case Theorem::main2:
    case Theorem::d4:
    case Theorem::general_main3: {
      auto g = closure(inst);
      auto rep = freiman_report(g);
      generic_crosscheck(inst, g, rep, out);
      break;
    }
    case Theorem::sort: {
      auto g = closure(inst);
      auto sc = is_sortable(g);
      if (!sc.sortable)
        out.mismatches.push_back(
            {label, "sortable",
             "sorting (" + format_monomial(sc.witness->first) + ", " +
                 format_monomial(sc.witness->second) + ") leaves the set"});
      break;
    }
    case Theorem::judge_crosscheck: {
      auto g = closure(inst);
      auto rep = freiman_report(g);
      auto sc = is_sortable(g);
      if (!sc.sortable) {
        out.mismatches.push_back({label, "sortable (Borel closures sort)", "not sortable"});
        break;
      }
      generic_crosscheck(inst, g, rep, out);
      break;
    }
    case Theorem::kborel_theorem: {
      auto full = freiman_report(borel_closure(inst.gens, inst.n));
      if (full.freiman) {
        auto rep = freiman_report(closure(inst));
        if (!rep.freiman)
          out.mismatches.push_back({label, "freiman (the full closure is Freiman)",
                                    "defect " + std::to_string(rep.defect)});
      }
      break;
    }
    case Theorem::degreed: {
      auto g = closure(inst);
      auto rep = freiman_report(g);
      auto full = freiman_report(borel_closure(inst.gens, inst.n));
      if (rep.freiman != full.freiman)
        out.mismatches.push_back(
            {label, "freiman=" + bool_word(full.freiman) + " (same as the full closure)",
             "freiman=" + bool_word(rep.freiman)});
      generic_crosscheck(inst, g, rep, out);
      break;
    }
    case Theorem::isomorphic: {
      const int k = inst.k.value_or(2);
      Monomial v = shift_psi(inst.gens[0], k);
      auto g1 = closure(inst);
      auto g2 = k_borel_closure(v, k);
      auto r1 = freiman_report(g1);
      auto r2 = freiman_report(g2);
      if (r1.freiman != r2.freiman)
        out.mismatches.push_back({label, "verdict preserved by the shift",
                                  "freiman=" + bool_word(r1.freiman) + " vs shifted " +
                                      bool_word(r2.freiman)});
      if (g1.size() != g2.size()) {
        out.mismatches.push_back({label, "equal generator counts",
                                  std::to_string(g1.size()) + " vs " + std::to_string(g2.size())});
        break;
      }
      bool bijection = true;
      for (std::size_t i = 0; i < g1.size(); ++i)
        if (!(shift_psi(g1[i], k) == g2[i])) {
          bijection = false;
          break;
        }
      if (!bijection) {
        out.mismatches.push_back({label, "shift maps the generators in order", "bijection broken"});
        break;
      }
      if (sorted_graph(g1).edges != sorted_graph(g2).edges)
        out.mismatches.push_back({label, "identical sorted-graph edge sets", "edge sets differ"});
      break;
    }
    case Theorem::power_bounds: {
      auto g = closure(inst);
      auto rep = freiman_report(g);
      auto rows = check_power_bounds(g, power_k_max);
      const bool defect_zero = (rep.defect == 0);
      for (const auto& row : rows) {
        if (row.mu_k < row.bound)
          out.mismatches.push_back(
              {label, "mu(I^" + std::to_string(row.k) + ") >= " + std::to_string(row.bound),
               std::to_string(row.mu_k)});
        if (row.k == 2) {
          if (row.tight != defect_zero)
            out.mismatches.push_back({label, "tight at k=2 iff defect 0",
                                      "tight=" + bool_word(row.tight) + ", defect " +
                                          std::to_string(rep.defect)});
        } else if (row.tight != defect_zero) {
          out.notes.push_back(label + ": k=" + std::to_string(row.k) + " tight=" +
                              bool_word(row.tight) + " with defect " +
                              std::to_string(rep.defect) + " (equality pattern, informational)");
        }
      }
      break;
    }
  }
  return out;
}

}  // namespace detail

inline SweepReport verify_theorem(const SweepSpec& raw) {
  auto spec = with_defaults(raw);
  auto t0 = std::chrono::steady_clock::now();
  auto instances = enumerate_instances(spec);
  SweepReport rep;
  rep.theorem = theorem_name(spec.theorem);
  bool truncated = false;
  if (static_cast<long long>(instances.size()) > spec.limit) {
    instances.resize(static_cast<std::size_t>(spec.limit));
    truncated = true;
  }
  rep.instances = static_cast<long long>(instances.size());
  const int power_k_max = spec.k.value_or(3);
  if (spec.theorem == Theorem::power_bounds && power_k_max < 2)
    throw std::invalid_argument("power_bounds sweep needs k >= 2");

  std::vector<detail::Outcome> outcomes(instances.size());
  auto run_one = [&](std::size_t i) {
    try {
      outcomes[i] = detail::check_instance(spec.theorem, instances[i], power_k_max);
    } catch (const std::exception& e) {
      outcomes[i].mismatches.push_back(
          {format_borel_spec(instances[i]), "no exception", e.what()});
    }
  };
  int jobs = spec.jobs;
  if (jobs > static_cast<int>(instances.size()))
    jobs = std::max(1, static_cast<int>(instances.size()));
  if (jobs <= 1) {
    for (std::size_t i = 0; i < instances.size(); ++i) run_one(i);
  } else {
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
      for (;;) {
        std::size_t i = next.fetch_add(1);
        if (i >= instances.size()) return;
        run_one(i);
      }
    };
    std::vector<std::thread> pool;
    pool.reserve(jobs);
    for (int j = 0; j < jobs; ++j) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  // merge in canonical instance order so parallelism never changes the report
  for (auto& o : outcomes) {
    rep.mismatches.insert(rep.mismatches.end(), o.mismatches.begin(), o.mismatches.end());
    rep.notes.insert(rep.notes.end(), o.notes.begin(), o.notes.end());
  }
  if (truncated)
    rep.notes.push_back("instance limit " + std::to_string(spec.limit) +
                        " reached; enumeration truncated");
  rep.pass = rep.mismatches.empty();
  rep.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                       std::chrono::steady_clock::now() - t0)
                       .count();
  return rep;
}

// Fixed constants reproduced from scratch: the worked 11-generator example,
// the two closed-form chain families, and three reference graphs.
inline SweepReport golden_examples() {
  auto t0 = std::chrono::steady_clock::now();
  SweepReport rep;
  rep.theorem = "golden";
  auto expect = [&rep](bool ok, const std::string& input, const std::string& predicted,
                       const std::string& computed) {
    ++rep.instances;
    if (!ok) rep.mismatches.push_back({input, predicted, computed});
  };

  {
    auto spec = make_borel_spec({parse_monomial("x1*x3^2"), parse_monomial("x2^2*x4")});
    auto r = freiman_report(closure(spec));
    expect(r.mu == 11 && r.ell == 4 && r.mu_sq == 41 && r.defect == 3 && !r.freiman,
           "B(x1*x3^2,x2^2*x4)", "mu=11 ell=4 mu_sq=41 defect=3 freiman=false",
           "mu=" + std::to_string(r.mu) + " ell=" + std::to_string(r.ell) +
               " mu_sq=" + std::to_string(r.mu_sq) + " defect=" + std::to_string(r.defect));
  }

  for (int j1 = 3; j1 <= 12; ++j1)
    for (int j2 = 2; j2 < j1; ++j2) {
      auto spec = make_borel_spec(
          {detail::pair_monomial(1, j1, j1), detail::pair_monomial(2, j2, j1)});
      auto r = freiman_report(closure(spec));
      long long want_mu = j1 + j2 - 1;
      long long want_sq = binomial(j1, 2) + static_cast<long long>(j1) * j2;
      expect(r.mu == want_mu && r.mu_sq == want_sq && r.ell == j1 && r.freiman,
             format_borel_spec(spec),
             "mu=" + std::to_string(want_mu) + " mu_sq=" + std::to_string(want_sq) +
                 " ell=" + std::to_string(j1) + " freiman=true",
             "mu=" + std::to_string(r.mu) + " mu_sq=" + std::to_string(r.mu_sq) +
                 " ell=" + std::to_string(r.ell) + " freiman=" + detail::bool_word(r.freiman));
    }

  for (int j1 = 4; j1 <= 12; ++j1) {
    auto spec = make_borel_spec(
        {detail::pair_monomial(1, j1, j1), detail::pair_monomial(3, 3, j1)});
    auto r = freiman_report(closure(spec));
    long long want_mu = j1 + 3;
    long long want_sq = static_cast<long long>(j1) * (j1 + 7) / 2;
    expect(r.mu == want_mu && r.mu_sq == want_sq && r.ell == j1 && r.freiman,
           format_borel_spec(spec),
           "mu=" + std::to_string(want_mu) + " mu_sq=" + std::to_string(want_sq) +
               " ell=" + std::to_string(j1) + " freiman=true",
           "mu=" + std::to_string(r.mu) + " mu_sq=" + std::to_string(r.mu_sq) +
               " ell=" + std::to_string(r.ell) + " freiman=" + detail::bool_word(r.freiman));
  }

  {
    auto g = to_ugraph(sorted_graph(k_borel_closure(parse_monomial("x2*x3*x4"), 1)));
    bool complete = g.vcount() == 4 && static_cast<int>(g.edge_list().size()) == 6;
    expect(complete && is_chordal(g).chordal, "B_1(x2*x3*x4) sorted graph",
           "4 vertices, complete, chordal",
           std::to_string(g.vcount()) + " vertices, " +
               std::to_string(g.edge_list().size()) + " edges");
  }
  {
    auto g = to_ugraph(sorted_graph(k_borel_closure(parse_monomial("x1*x2*x3^2"), 2)));
    expect(g.vcount() == 5 && is_chordal(g).chordal, "B_2(x1*x2*x3^2) sorted graph",
           "5 vertices, chordal", std::to_string(g.vcount()) + " vertices");
  }
  {
    auto g = to_ugraph(sorted_graph(k_borel_closure(parse_monomial("x2^2*x3^2"), 2)));
    expect(g.vcount() == 6 && is_chordal(g).chordal, "B_2(x2^2*x3^2) sorted graph",
           "6 vertices, chordal", std::to_string(g.vcount()) + " vertices");
  }

  rep.pass = rep.mismatches.empty();
  rep.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                       std::chrono::steady_clock::now() - t0)
                       .count();
  return rep;
}

}  // namespace freiman
