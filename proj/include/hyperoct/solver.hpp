#pragma once

// Weight and radius feasibility for 5- and 7-designs supported on at most
// three orbits, decided by the sign pattern of G and the radius relation Q.
// A direct route (positive kernel vectors of the raw criterion rows) handles
// larger index sets and serves as an independent check of the clauses.

#include "hyperoct/linalg.hpp"
#include "hyperoct/orbit.hpp"
#include "hyperoct/rational.hpp"
#include "hyperoct/strength.hpp"
#include "hyperoct/tight.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace hyperoct {

using RadiusMap = std::map<int, Rational>;  // k -> r_k^2

/// Which case of the classification decided a question: the number of
/// distinct norms, the number of orbits and the target strength.
struct Clause {
  int spheres = 0;
  int layers = 0;
  int t = 0;

  std::string tag() const {
    return "R" + std::to_string(spheres) + "-J" + std::to_string(layers) + "-t" + std::to_string(t);
  }
  friend bool operator==(const Clause&, const Clause&) = default;
};

struct FeasibilityResult {
  bool feasible = false;
  Clause clause;
  std::string reason;
  std::optional<DesignConfig> solution;
};

namespace detail {

inline std::vector<int> checked_index_set(int n, std::vector<int> J) {
  if (n < 3) throw std::invalid_argument("n must be at least 3");
  std::sort(J.begin(), J.end());
  if (J.empty()) throw std::invalid_argument("J must be nonempty");
  if (std::adjacent_find(J.begin(), J.end()) != J.end()) throw std::invalid_argument("J has repeated entries");
  if (J.front() < 1 || J.back() > n) throw std::invalid_argument("J must be a subset of 1..n");
  return J;
}

inline std::vector<Rational> radii_for(const std::vector<int>& J, const RadiusMap& r2) {
  std::vector<Rational> out;
  for (int k : J) {
    auto it = r2.find(k);
    if (it == r2.end()) throw std::invalid_argument("missing r_squared for k=" + std::to_string(k));
    if (it->second <= 0) throw std::invalid_argument("r_squared must be positive");
    out.push_back(it->second);
  }
  return out;
}

inline int distinct_count(const std::vector<Rational>& v) {
  return static_cast<int>(std::set<Rational>(v.begin(), v.end()).size());
}

/// w_k from u_k = w_k 2^(k+1) C(n-1,k-1) / k^3.
inline Rational weight_from_u(int n, int k, const Rational& u) {
  return u * Rational(static_cast<long long>(k) * k * k) / Rational(pow2(static_cast<unsigned>(k + 1)) * binomial(n - 1, k - 1));
}

inline DesignConfig make_config(int n, const std::vector<int>& J, const std::vector<Rational>& r2,
                                std::vector<Rational> w) {
  const Rational scale = w.front();
  DesignConfig cfg{n, {}};
  for (std::size_t i = 0; i < J.size(); ++i) cfg.layers.push_back({J[i], r2[i], w[i] / scale});
  return cfg;
}

inline void check_solution(const DesignConfig& cfg, int t) {
  for (const auto& l : cfg.layers)
    if (l.weight <= 0) throw std::logic_error("solver produced a non-positive weight");
  if (classify(cfg).strength < t) throw std::logic_error("solver produced a configuration below the target strength");
}

/// 3k vs n+2: negative when k < (n+2)/3.
inline int side(int n, int k) { return (3 * k > n + 2) - (3 * k < n + 2); }

}  // namespace detail

/// True iff some positive weights make the orbit union a 5-design, for any
/// radii: the f_{4,2} coefficients take both signs, or J = {(n+2)/3}.
inline bool five_design_possible(int n, const std::vector<int>& J) {
  bool below = false, above = false, zero = false;
  for (int k : J) {
    const int s = detail::side(n, k);
    below |= s < 0;
    above |= s > 0;
    zero |= s == 0;
  }
  return (below && above) || (zero && J.size() == 1);
}

/// 5-design feasibility for one or two orbits. Weights are normalized so the
/// smallest k carries weight 1.
inline FeasibilityResult solve_t5(int n, const std::vector<int>& J_in, const RadiusMap& r2_in) {
  const auto J = detail::checked_index_set(n, J_in);
  if (J.size() > 2) throw std::invalid_argument("solve_t5: |J| must be 1 or 2");
  const auto r2 = detail::radii_for(J, r2_in);
  FeasibilityResult res;
  res.clause = Clause{detail::distinct_count(r2), static_cast<int>(J.size()), 5};
  if (J.size() == 1) {
    res.feasible = detail::side(n, J[0]) == 0;
    res.reason = res.feasible ? "k = (n+2)/3 with n = 1 mod 3; any weight works"
                              : (n % 3 != 1 ? "n is not 1 mod 3" : "k differs from (n+2)/3");
    if (res.feasible) res.solution = detail::make_config(n, J, r2, {Rational{1}});
    return res;
  }
  res.feasible = detail::side(n, J[0]) < 0 && detail::side(n, J[1]) > 0;
  if (!res.feasible) {
    res.reason = "need k1 < (n+2)/3 < k2";
    return res;
  }
  const auto& eq = criterion_equations().front();
  const Rational a1 = equation_coefficient(eq, n, J[0], r2[0]);
  const Rational a2 = equation_coefficient(eq, n, J[1], r2[1]);
  res.reason = "k1 < (n+2)/3 < k2; one-parameter weight family";
  res.solution = detail::make_config(n, J, r2, {Rational{1}, -a1 / a2});
  detail::check_solution(*res.solution, 5);
  return res;
}

/// c_i = k_i (n+2-3k_i)(k_{i+1}-k_{i+2}) G(k_{i+1},k_{i+2}), indices mod 3.
/// The three coefficients always sum to zero.
inline std::array<BigInt, 3> q_coefficients(int n, const std::array<int, 3>& k) {
  std::array<BigInt, 3> c;
  for (std::size_t i = 0; i < 3; ++i) {
    const int a = k[(i + 1) % 3];
    const int b = k[(i + 2) % 3];
    c[i] = BigInt(k[i]) * (n + 2 - 3 * k[i]) * (a - b) * BigInt(G(n, a, b));
  }
  return c;
}

/// sum_i c_i / r_i^2.
inline Rational q_residual(int n, const std::array<int, 3>& k, const std::array<Rational, 3>& r2) {
  const auto c = q_coefficients(n, k);
  Rational s{0};
  for (std::size_t i = 0; i < 3; ++i) s += Rational(c[i]) / r2[i];
  return s;
}

enum class QStatus { solved, absent, degenerate };

struct QSolution {
  QStatus status = QStatus::absent;
  int k = 0;  // the index whose radius was solved for
  std::optional<Rational> r_squared;
};

/// Solves Q for the one radius of the triple not present in `known`.
inline QSolution solve_radius_Q(int n, const std::array<int, 3>& k, const RadiusMap& known) {
  int unknown = -1;
  for (int i = 0; i < 3; ++i) {
    if (!known.count(k[static_cast<std::size_t>(i)])) {
      if (unknown != -1) throw std::invalid_argument("solve_radius_Q: exactly two radii must be given");
      unknown = i;
    }
  }
  if (unknown == -1) throw std::invalid_argument("solve_radius_Q: exactly two radii must be given");
  const auto c = q_coefficients(n, k);
  QSolution sol;
  sol.k = k[static_cast<std::size_t>(unknown)];
  Rational rhs{0};
  for (std::size_t i = 0; i < 3; ++i) {
    if (static_cast<int>(i) == unknown) continue;
    const Rational& r2 = known.at(k[i]);
    if (r2 <= 0) throw std::invalid_argument("solve_radius_Q: radii must be positive");
    rhs -= Rational(c[i]) / r2;
  }
  const Rational cu(c[static_cast<std::size_t>(unknown)]);
  if (cu == 0) {
    sol.status = QStatus::degenerate;
    return sol;
  }
  const Rational inv = rhs / cu;  // 1 / r_u^2
  if (inv <= 0) return sol;
  sol.status = QStatus::solved;
  sol.r_squared = 1 / inv;
  return sol;
}

/// 7-design feasibility for one to three orbits.
inline FeasibilityResult solve_t7(int n, const std::vector<int>& J_in, const RadiusMap& r2_in) {
  const auto J = detail::checked_index_set(n, J_in);
  if (J.size() > 3) throw std::invalid_argument("solve_t7: |J| must be at most 3");
  const auto r2 = detail::radii_for(J, r2_in);
  FeasibilityResult res;
  res.clause = Clause{detail::distinct_count(r2), static_cast<int>(J.size()), 7};
  if (J.size() == 1) {
    res.reason = "no k has p_k = q_k = 0";
    return res;
  }
  if (J.size() == 2) {
    if (r2[0] != r2[1]) {
      res.reason = "two orbits need equal radii";
      return res;
    }
    if (G(n, J[0], J[1]) != 0) {
      res.reason = "G(k1,k2) is nonzero";
      return res;
    }
    const PQ a = pq(n, J[0]);
    const PQ b = pq(n, J[1]);
    res.feasible = true;
    res.reason = "equal radii and G(k1,k2) = 0";
    res.solution = detail::make_config(
        n, J, r2, {detail::weight_from_u(n, J[0], Rational{1}), detail::weight_from_u(n, J[1], -a.p / b.p)});
    detail::check_solution(*res.solution, 7);
    return res;
  }
  const int k1 = J[0], k2 = J[1], k3 = J[2];
  const auto g12 = G(n, k1, k2), g13 = G(n, k1, k3), g23 = G(n, k2, k3);
  const bool signs = g12 > 0 && g23 > 0 && g13 < 0;
  switch (res.clause.spheres) {
    case 1:
      res.feasible = signs;
      res.reason = signs ? "G(k1,k2) > 0, G(k2,k3) > 0, G(k1,k3) < 0" : "sign pattern of G fails";
      break;
    case 2:
      if (detail::side(n, k2) != 0) {
        res.reason = "two norms need k2 = (n+2)/3";
      } else if (r2[0] != r2[2]) {
        res.reason = "two norms need r_{k1} = r_{k3}";
      } else if (g13 >= 0) {
        res.reason = "G(k1,k3) is not negative";
      } else {
        res.feasible = true;
        res.reason = "k2 = (n+2)/3, r_{k1} = r_{k3}, G(k1,k3) < 0";
      }
      break;
    default:
      if (!signs) {
        res.reason = "sign pattern of G fails";
      } else if (q_residual(n, {k1, k2, k3}, {r2[0], r2[1], r2[2]}) != 0) {
        res.reason = "radius relation Q fails";
      } else {
        res.feasible = true;
        res.reason = "sign pattern of G holds and Q is satisfied";
      }
      break;
  }
  if (!res.feasible) return res;
  const Rational r1_6 = pow(r2[0], 3);
  const Rational u2 = Rational(k1 - k3, k3 - k2) * Rational(g13, g23) * r1_6 / pow(r2[1], 3);
  const Rational u3 = Rational(k2 - k1, k3 - k2) * Rational(g12, g23) * r1_6 / pow(r2[2], 3);
  res.solution = detail::make_config(n, J, r2,
                                     {detail::weight_from_u(n, k1, Rational{1}), detail::weight_from_u(n, k2, u2),
                                      detail::weight_from_u(n, k3, u3)});
  detail::check_solution(*res.solution, 7);
  return res;
}

/// Positive weights solving every criterion equation of strength t for the
/// given orbits and radii, found as a positive kernel vector. Normalized so
/// the smallest k has weight 1.
inline std::optional<DesignConfig> solve_weights_direct(int n, const std::vector<int>& J_in, const RadiusMap& r2_in,
                                                        int t) {
  const auto J = detail::checked_index_set(n, J_in);
  const auto r2 = detail::radii_for(J, r2_in);
  Matrix rows;
  for (const auto& eq : criterion_equations()) {
    if (eq.t != t || !equation_applies(eq, n)) continue;
    std::vector<Rational> row;
    for (std::size_t i = 0; i < J.size(); ++i) row.push_back(equation_coefficient(eq, n, J[i], r2[i]));
    rows.push_back(std::move(row));
  }
  if (rows.empty() && t > 3) throw std::invalid_argument("solve_weights_direct: t must be 3, 5, 7 or 9");
  std::optional<std::vector<Rational>> w;
  if (rows.empty()) {
    w = std::vector<Rational>(J.size(), Rational{1});
  } else {
    w = positive_kernel_vector(rows, J.size());
  }
  if (!w) return std::nullopt;
  return detail::make_config(n, J, r2, *w);
}

/// The 7-design clause for one to three orbits, decided over all radius
/// assignments with exactly p distinct norms.
inline bool seven_design_possible(int n, const std::vector<int>& J, int p) {
  if (J.size() == 2) return p == 1 && G(n, J[0], J[1]) == 0;
  if (J.size() != 3) return false;
  const bool signs = G(n, J[0], J[1]) > 0 && G(n, J[1], J[2]) > 0 && G(n, J[0], J[2]) < 0;
  switch (p) {
    case 1:
      return signs;
    case 2:
      return detail::side(n, J[1]) == 0 && G(n, J[0], J[2]) < 0;
    case 3:
      // Q has pairwise distinct positive solutions iff no c_i vanishes.
      return signs && std::none_of(J.begin(), J.end(), [&](int k) { return detail::side(n, k) == 0; });
    default:
      return false;
  }
}

/// Maximum strength over radius assignments with p distinct norms, for
/// |J| <= 3, by the classification.
inline int max_strength_clauses(int n, const std::vector<int>& J_in, int p) {
  const auto J = detail::checked_index_set(n, J_in);
  if (J.size() > 3) throw std::invalid_argument("max_strength_clauses: |J| must be at most 3");
  if (p < 1 || p > static_cast<int>(J.size())) throw std::invalid_argument("p must lie in 1..|J|");
  if (seven_design_possible(n, J, p)) return 7;
  return five_design_possible(n, J) ? 5 : 3;
}

struct TauResult {
  int strength = 3;
  std::vector<int> witness;
};

/// Largest strength of a union of j orbits on p spheres, with a witness J.
inline TauResult tau(int n, int p, int j) {
  if (n < 3) throw std::invalid_argument("tau: n must be at least 3");
  if (p < 1 || p > j || j > 3 || j > n) throw std::invalid_argument("tau: need 1 <= p <= j <= min(3, n)");
  TauResult best{0, {}};
  for (const auto& J : increasing_maps(n, j)) {
    const int s = max_strength_clauses(n, J, p);
    if (s > best.strength) best = TauResult{s, J};
  }
  return best;
}

struct TableEntry {
  std::vector<int> J;
  BigInt size{0};
  int p = 1;
  int strength = 3;
  std::string method;                    // "clauses" or "grid"
  std::optional<DesignConfig> witness;   // grid entries only
  std::optional<bool> spherical;         // p = 1: constant weight reaches the strength
  bool tight = false;                    // size equals N(n, p, strength)
};

struct TableOptions {
  std::vector<Rational> grid{1, 2, 3, 4, 9};
  int max_n = 6;
};

namespace detail {

/// Best strength for |J| >= 4 over radius assignments drawn from the grid
/// with exactly p distinct values. A lower bound; 7 is also the ceiling.
inline TableEntry grid_entry(int n, const std::vector<int>& J, int p, const std::vector<Rational>& grid) {
  TableEntry e;
  e.method = "grid";
  e.strength = 0;
  std::vector<std::size_t> pick(J.size(), 0);
  const std::size_t g = grid.size();
  while (true) {
    std::vector<Rational> vals;
    for (auto i : pick) vals.push_back(grid[i]);
    if (distinct_count(vals) == p) {
      RadiusMap r2;
      for (std::size_t i = 0; i < J.size(); ++i) r2[J[i]] = vals[i];
      for (int t : {7, 5, 3}) {
        if (t <= e.strength) break;
        if (auto cfg = solve_weights_direct(n, J, r2, t)) {
          e.strength = t;
          e.witness = std::move(cfg);
          break;
        }
      }
      if (e.strength == 7) break;
    }
    std::size_t pos = 0;
    while (pos < pick.size() && ++pick[pos] == g) pick[pos++] = 0;
    if (pos == pick.size()) break;
  }
  return e;
}

}  // namespace detail

/// Maximum strength for every nonempty J and every sphere count p <= |J|.
/// Entries with |J| <= 3 come from the classification, larger ones from a
/// radius grid search.
inline std::vector<TableEntry> strength_table(int n, const TableOptions& opt = {}) {
  if (n < 3 || n > opt.max_n) throw std::invalid_argument("strength_table: n must lie in 3.." + std::to_string(opt.max_n));
  std::vector<TableEntry> out;
  for (int j = 1; j <= n; ++j) {
    for (const auto& J : increasing_maps(n, j)) {
      for (int p = 1; p <= j; ++p) {
        TableEntry e;
        if (j <= 3) {
          e.method = "clauses";
          e.strength = max_strength_clauses(n, J, p);
        } else {
          e = detail::grid_entry(n, J, p, opt.grid);
        }
        e.J = J;
        e.p = p;
        e.size = orbit_union_size(n, J);
        if (p == 1) {
          DesignConfig flat{n, {}};
          for (int k : J) flat.layers.push_back({k, Rational{1}, Rational{1}});
          e.spherical = classify(flat).strength == e.strength;
        }
        e.tight = e.size == fisher_bound(n, p, e.strength).value;
        out.push_back(std::move(e));
      }
    }
  }
  return out;
}

}  // namespace hyperoct
