#pragma once

#include <CLI11.hpp>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "freiman/borel.hpp"
#include "freiman/chordal.hpp"
#include "freiman/classify.hpp"
#include "freiman/fiber.hpp"
#include "freiman/genset.hpp"
#include "freiman/json_io.hpp"
#include "freiman/sorting.hpp"
#include "freiman/verify.hpp"

namespace freiman {

namespace detail {

// top-level comma split; commas inside [..] exponent vectors do not separate
inline std::vector<std::string> split_gens(const std::string& raw) {
  std::vector<std::string> parts;
  std::string cur;
  int depth = 0;
  for (char c : raw) {
    if (c == '[') ++depth;
    if (c == ']') --depth;
    if (c == ',' && depth == 0) {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  parts.push_back(cur);
  for (auto& p : parts) {
    while (!p.empty() && p.front() == ' ') p.erase(p.begin());
    while (!p.empty() && p.back() == ' ') p.pop_back();
    if (p.empty())
      throw std::invalid_argument("--gens: empty entry in the monomial list");
  }
  return parts;
}

inline BorelSpec build_spec(const std::string& raw, std::optional<int> n,
                            std::optional<int> k) {
  std::vector<Monomial> gens;
  for (const auto& part : split_gens(raw)) gens.push_back(parse_monomial(part));
  return make_borel_spec(std::move(gens), k, n);
}

inline void print_genset(const GenSet& g, const std::string& format, std::ostream& out) {
  if (format == "json") {
    out << genset_json(g).dump() << "\n";
    return;
  }
  for (const auto& m : g) out << format_monomial(m) << "\n";
}

inline void print_report(const FreimanReport& r, const std::string& format,
                         std::ostream& out) {
  if (format == "json") {
    out << to_json(r).dump() << "\n";
    return;
  }
  out << "mu " << r.mu << "\n"
      << "ell " << r.ell << "\n"
      << "mu_sq " << r.mu_sq << "\n"
      << "defect " << r.defect << "\n"
      << "freiman " << (r.freiman ? "true" : "false") << "\n"
      << "ell_method " << ell_method_name(r.ell_method) << "\n";
}

inline void print_sweep(const SweepReport& r, const std::string& format,
                        std::ostream& out) {
  if (format == "json") {
    out << to_json(r).dump() << "\n";
    return;
  }
  out << "theorem " << r.theorem << "\n"
      << "instances " << r.instances << "\n"
      << "mismatches " << r.mismatches.size() << "\n";
  for (const auto& m : r.mismatches)
    out << "mismatch " << m.input << " | expected " << m.predicted << " | got "
        << m.computed << "\n";
  for (const auto& n : r.notes) out << "note " << n << "\n";
  out << "elapsed_ms " << r.elapsed_ms << "\n"
      << "pass " << (r.pass ? "true" : "false") << "\n";
}

}  // namespace detail

// Full command-line front end, usable in-process for tests. Returns the
// process exit code: 0 success/pass, 1 verification mismatch or internal
// inconsistency, 2 usage error.
inline int run_cli(const std::vector<std::string>& args, std::ostream& out,
                   std::ostream& err) {
  CLI::App app{"Borel and bounded-exponent monomial ideals: closures, Freiman "
               "reports, sorted graphs, chordality, classification, sweeps",
               "freiman"};
  app.require_subcommand(0, 1);

  std::string gens_raw, format = "text", theorem_arg;
  std::optional<int> n_opt, k_opt, d_opt, nmax_opt;
  int exp_val = 2;
  long long limit_val = 100000;
  int jobs_val = 1;

  auto add_gens = [&](CLI::App* sub, bool with_k) {
    sub->add_option("--gens", gens_raw, "comma-separated monomials, e.g. \"x1*x3^2,x2^2*x4\"")
        ->required();
    sub->add_option("--n", n_opt, "ambient variable count (default: largest index used)");
    if (with_k)
      sub->add_option("--k", k_opt, "exponent bound; omit for the plain Borel closure");
  };
  auto add_format = [&](CLI::App* sub, bool with_dot) {
    std::vector<std::string> allowed = {"text", "json"};
    if (with_dot) allowed.push_back("dot");
    sub->add_option("--format", format, "output format")
        ->check(CLI::IsMember(allowed));
  };

  auto* sub_closure = app.add_subcommand("closure", "minimal generators of the closure");
  add_gens(sub_closure, true);
  add_format(sub_closure, false);

  auto* sub_mu = app.add_subcommand("mu", "number of minimal generators");
  add_gens(sub_mu, true);
  add_format(sub_mu, false);

  auto* sub_power = app.add_subcommand("power", "minimal generators of a power of the closure");
  add_gens(sub_power, true);
  sub_power->add_option("--exp", exp_val, "power exponent")
      ->required()
      ->check(CLI::PositiveNumber);
  add_format(sub_power, false);

  auto* sub_spread = app.add_subcommand("spread", "analytic spread of the closure");
  add_gens(sub_spread, true);
  add_format(sub_spread, false);

  auto* sub_freiman = app.add_subcommand("freiman", "full Freiman report for the closure");
  add_gens(sub_freiman, true);
  add_format(sub_freiman, false);

  auto* sub_graph = app.add_subcommand("sorted-graph", "sorted graph of the closure");
  add_gens(sub_graph, true);
  add_format(sub_graph, true);

  auto* sub_chordal = app.add_subcommand("chordal", "chordality of the sorted graph, with certificate");
  add_gens(sub_chordal, true);
  add_format(sub_chordal, false);

  auto* sub_classify = app.add_subcommand("classify", "catalogued family and Freiman prediction");
  add_gens(sub_classify, true);
  add_format(sub_classify, false);

  auto* sub_verify = app.add_subcommand("verify", "exhaustive theorem sweep");
  sub_verify->add_option("--theorem", theorem_arg, "sweep name")
      ->required()
      ->check(CLI::IsMember({"main1", "main2", "sort", "judge_crosscheck",
                             "kborel_theorem", "degreed", "d4", "general_main3",
                             "isomorphic", "power_bounds"}));
  sub_verify->add_option("--n-max", nmax_opt, "largest variable index (default per theorem)");
  sub_verify->add_option("--d", d_opt, "restrict to one degree");
  sub_verify->add_option("--k", k_opt, "restrict to one exponent bound");
  sub_verify->add_option("--limit", limit_val, "instance cap");
  sub_verify->add_option("--jobs", jobs_val, "worker threads");
  add_format(sub_verify, false);

  auto* sub_golden = app.add_subcommand("golden", "fixed worked-example battery");
  add_format(sub_golden, false);

  // bare `freiman --gens ...` behaves like the freiman subcommand
  app.add_option("--gens", gens_raw, "comma-separated monomials");
  app.add_option("--n", n_opt, "ambient variable count");
  app.add_option("--k", k_opt, "exponent bound");
  add_format(&app, false);

  std::vector<const char*> argv;
  argv.push_back("freiman");
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  const bool no_sub = app.get_subcommands().empty();
  try {
    if (*sub_closure) {
      detail::print_genset(closure(detail::build_spec(gens_raw, n_opt, k_opt)), format, out);
      return 0;
    }
    if (*sub_mu) {
      auto g = closure(detail::build_spec(gens_raw, n_opt, k_opt));
      if (format == "json")
        out << nlohmann::ordered_json{{"mu", g.mu()}}.dump() << "\n";
      else
        out << g.mu() << "\n";
      return 0;
    }
    if (*sub_power) {
      auto g = closure(detail::build_spec(gens_raw, n_opt, k_opt));
      detail::print_genset(ideal_power(g, exp_val), format, out);
      return 0;
    }
    if (*sub_spread) {
      auto g = closure(detail::build_spec(gens_raw, n_opt, k_opt));
      auto sp = analytic_spread(g);
      if (format == "json") {
        nlohmann::ordered_json j;
        j["ell"] = sp.ell;
        j["method"] = ell_method_name(sp.method);
        out << j.dump() << "\n";
      } else {
        out << sp.ell << "\n" << "method " << ell_method_name(sp.method) << "\n";
      }
      return 0;
    }
    if (*sub_freiman || (no_sub && !gens_raw.empty())) {
      detail::print_report(freiman_report(closure(detail::build_spec(gens_raw, n_opt, k_opt))),
                           format, out);
      return 0;
    }
    if (*sub_graph) {
      auto sg = sorted_graph(closure(detail::build_spec(gens_raw, n_opt, k_opt)));
      if (format == "dot") {
        out << to_dot(to_ugraph(sg));
      } else if (format == "json") {
        out << to_json(sg).dump() << "\n";
      } else {
        out << "vertices " << sg.vertices.size() << "\n";
        for (std::size_t i = 0; i < sg.vertices.size(); ++i)
          out << i << " " << format_monomial(sg.vertices[i]) << "\n";
        out << "edges " << sg.edges.size() << "\n";
        for (auto [a, b] : sg.edges) out << a << " -- " << b << "\n";
      }
      return 0;
    }
    if (*sub_chordal) {
      auto g = closure(detail::build_spec(gens_raw, n_opt, k_opt));
      auto sc = is_sortable(g);
      auto ug = to_ugraph(sorted_graph(g));
      auto res = is_chordal(ug);
      auto label = [&](int v) { return ug.labels[static_cast<std::size_t>(v)]; };
      if (format == "json") {
        nlohmann::ordered_json j;
        j["sortable"] = sc.sortable;
        j["chordal"] = res.chordal;
        if (res.chordal) {
          auto arr = nlohmann::ordered_json::array();
          for (int v : res.order) arr.push_back(label(v));
          j["elimination_order"] = arr;
        } else {
          auto cyc = find_induced_cycle(ug);
          auto arr = nlohmann::ordered_json::array();
          if (cyc)
            for (int v : *cyc) arr.push_back(label(v));
          j["induced_cycle"] = arr;
        }
        out << j.dump() << "\n";
      } else {
        out << "sortable " << (sc.sortable ? "true" : "false") << "\n";
        out << "chordal " << (res.chordal ? "true" : "false") << "\n";
        if (res.chordal) {
          out << "elimination_order";
          for (int v : res.order) out << " " << label(v);
          out << "\n";
        } else if (auto cyc = find_induced_cycle(ug)) {
          out << "induced_cycle";
          for (int v : *cyc) out << " " << label(v);
          out << "\n";
        }
      }
      return 0;
    }
    if (*sub_classify) {
      auto spec = detail::build_spec(gens_raw, n_opt, k_opt);
      auto v = predict_freiman(spec);
      if (format == "json") {
        out << to_json(v, spec.n).dump() << "\n";
      } else {
        out << "family " << family_name(v.family) << "\n";
        out << "freiman_predicted "
            << (v.freiman_predicted ? (*v.freiman_predicted ? "true" : "false") : "unknown")
            << "\n";
        out << "matched_clause " << v.matched_clause << "\n";
        out << "n " << spec.n << "\n";
      }
      return 0;
    }
    if (*sub_verify) {
      SweepSpec spec;
      spec.theorem = *theorem_from_name(theorem_arg);
      if (nmax_opt) spec.n_max = *nmax_opt;
      spec.d = d_opt;
      spec.k = k_opt;
      spec.limit = limit_val;
      spec.jobs = jobs_val;
      auto rep = verify_theorem(spec);
      detail::print_sweep(rep, format, out);
      return rep.pass ? 0 : 1;
    }
    if (*sub_golden) {
      auto rep = golden_examples();
      detail::print_sweep(rep, format, out);
      return rep.pass ? 0 : 1;
    }
    err << "error: no subcommand given and no --gens for the default report; see --help\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace freiman
