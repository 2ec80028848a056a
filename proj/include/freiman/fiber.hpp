#pragma once

#include <optional>
#include <string>
#include <vector>

#include "freiman/binomial.hpp"
#include "freiman/borel.hpp"
#include "freiman/exact_rank.hpp"
#include "freiman/genset.hpp"

namespace freiman {

enum class EllMethod { borel_max_index, exponent_rank, override_value };

inline const char* ell_method_name(EllMethod m) {
  switch (m) {
    case EllMethod::borel_max_index: return "borel_max_index";
    case EllMethod::exponent_rank: return "exponent_rank";
    case EllMethod::override_value: return "override";
  }
  return "?";
}

struct SpreadResult {
  int ell = 0;
  EllMethod method = EllMethod::exponent_rank;
};

// Analytic spread of an equigenerated monomial ideal: the rank of the
// exponent matrix of its generators. For Borel ideals this equals the
// largest variable index appearing in any generator; both are computed and
// must agree, the cheaper certificate wins the method tag.
inline SpreadResult analytic_spread(const GenSet& g, bool hint_is_borel = false) {
  std::vector<std::vector<long long>> m;
  m.reserve(g.size());
  for (const auto& u : g)
    m.emplace_back(u.exps().begin(), u.exps().end());
  int rank = exact_rank(std::move(m));
  if (hint_is_borel || is_borel_ideal(g)) {
    int max_idx = 0;
    for (const auto& u : g) max_idx = std::max(max_idx, u.max_index());
    if (max_idx != rank)
      throw std::logic_error("analytic_spread: max index and exponent rank disagree on a Borel set");
    return {max_idx, EllMethod::borel_max_index};
  }
  return {rank, EllMethod::exponent_rank};
}

struct FreimanReport {
  long long mu = 0;
  int ell = 0;
  EllMethod ell_method = EllMethod::exponent_rank;
  long long mu_sq = 0;
  long long defect = 0;  // mu_sq - ell*mu + C(ell,2), zero exactly when Freiman
  bool freiman = false;
};

inline FreimanReport freiman_report(const GenSet& g,
                                    std::optional<int> ell_override = std::nullopt) {
  FreimanReport r;
  r.mu = g.mu();
  if (ell_override) {
    r.ell = *ell_override;
    r.ell_method = EllMethod::override_value;
  } else {
    auto s = analytic_spread(g);
    r.ell = s.ell;
    r.ell_method = s.method;
  }
  r.mu_sq = ideal_power(g, 2).mu();
  r.defect = r.mu_sq - static_cast<long long>(r.ell) * r.mu + binomial(r.ell, 2);
  r.freiman = (r.defect == 0);
  return r;
}

// lower bound for mu(I^k) in terms of mu(I) and the analytic spread
inline long long boroczky_bound(long long mu, int ell, int k) {
  if (mu < 1 || ell < 1 || k < 1)
    throw std::invalid_argument("boroczky_bound: arguments must be positive");
  __int128 v = static_cast<__int128>(binomial(ell + k - 2, k - 1)) * mu -
               static_cast<__int128>(k - 1) * binomial(ell + k - 2, k);
  if (v > (static_cast<__int128>(1) << 62) || v < -(static_cast<__int128>(1) << 62))
    throw std::overflow_error("boroczky_bound: value too large");
  return static_cast<long long>(v);
}

struct PowerBound {
  int k = 0;
  long long mu_k = 0;
  long long bound = 0;
  bool tight = false;
  friend bool operator==(const PowerBound&, const PowerBound&) = default;
};

// mu(I^k) against its lower bound for 2 <= k <= k_max
inline std::vector<PowerBound> check_power_bounds(const GenSet& g, int k_max) {
  if (k_max < 2) throw std::invalid_argument("check_power_bounds: k_max must be at least 2");
  auto sp = analytic_spread(g);
  std::vector<PowerBound> rows;
  GenSet p = g;
  for (int k = 2; k <= k_max; ++k) {
    p = genset_product(p, g);
    long long mu_k = p.mu();
    long long bound = boroczky_bound(g.mu(), sp.ell, k);
    rows.push_back({k, mu_k, bound, mu_k == bound});
  }
  return rows;
}

}  // namespace freiman
