#pragma once

#include <json.hpp>

#include "freiman/classify.hpp"
#include "freiman/fiber.hpp"
#include "freiman/genset.hpp"
#include "freiman/sorting.hpp"
#include "freiman/verify.hpp"

namespace freiman {

// ordered_json keeps insertion order, so every schema below is stable

inline nlohmann::ordered_json to_json(const FreimanReport& r) {
  nlohmann::ordered_json j;
  j["mu"] = r.mu;
  j["ell"] = r.ell;
  j["mu_sq"] = r.mu_sq;
  j["defect"] = r.defect;
  j["freiman"] = r.freiman;
  return j;
}

inline nlohmann::ordered_json genset_json(const GenSet& g) {
  nlohmann::ordered_json j;
  j["n"] = g.n();
  j["deg"] = g.deg();
  j["mu"] = g.mu();
  auto arr = nlohmann::ordered_json::array();
  for (const auto& m : g) arr.push_back(format_monomial(m));
  j["gens"] = arr;
  return j;
}

inline nlohmann::ordered_json to_json(const ClassVerdict& v, int effective_n) {
  nlohmann::ordered_json j;
  j["family"] = family_name(v.family);
  if (v.freiman_predicted)
    j["freiman_predicted"] = *v.freiman_predicted;
  else
    j["freiman_predicted"] = nullptr;
  j["matched_clause"] = v.matched_clause;
  j["n"] = effective_n;
  return j;
}

inline nlohmann::ordered_json to_json(const SortedGraph& sg) {
  nlohmann::ordered_json j;
  auto verts = nlohmann::ordered_json::array();
  for (const auto& m : sg.vertices) verts.push_back(format_monomial(m));
  j["vertices"] = verts;
  auto edges = nlohmann::ordered_json::array();
  for (auto [a, b] : sg.edges) edges.push_back(nlohmann::ordered_json::array({a, b}));
  j["edges"] = edges;
  return j;
}

inline nlohmann::ordered_json to_json(const SweepReport& r) {
  nlohmann::ordered_json j;
  j["theorem"] = r.theorem;
  j["instances"] = r.instances;
  auto arr = nlohmann::ordered_json::array();
  for (const auto& m : r.mismatches) {
    nlohmann::ordered_json mj;
    mj["input"] = m.input;
    mj["predicted"] = m.predicted;
    mj["computed"] = m.computed;
    arr.push_back(mj);
  }
  j["mismatches"] = arr;
  j["elapsed_ms"] = r.elapsed_ms;
  j["pass"] = r.pass;
  return j;
}

}  // namespace freiman
