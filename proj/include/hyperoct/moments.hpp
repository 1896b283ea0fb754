#pragma once

// Ground-truth design verification straight from the definition: weighted
// point sums compared with sphere averages, monomial by monomial.

#include "hyperoct/orbit.hpp"
#include "hyperoct/polynomial.hpp"
#include "hyperoct/rational.hpp"

#include <cstddef>
#include <map>
#include <mutex>
#include <optional>
#include <span>
#include <stdexcept>
#include <tuple>
#include <vector>

namespace hyperoct {

/// Average of x^alpha over the sphere of squared radius r_squared in R^n:
/// 0 if some exponent is odd, otherwise
///   r^|alpha| prod_i (alpha_i - 1)!! / prod_{j < |alpha|/2} (n + 2j).
inline Rational sphere_monomial_average(int n, std::span<const unsigned> exponents, const Rational& r_squared) {
  if (n < 2) throw std::invalid_argument("sphere_monomial_average: n must be at least 2");
  unsigned degree = 0;
  BigInt num{1};
  for (unsigned a : exponents) {
    if (a % 2 != 0) return Rational{0};
    degree += a;
    num *= double_factorial(static_cast<std::int64_t>(a) - 1);
  }
  BigInt den{1};
  for (unsigned j = 0; j < degree / 2; ++j) den *= (n + 2 * static_cast<int>(j));
  return Rational(num, den) * pow(r_squared, degree / 2);
}

inline Rational sphere_average(const Polynomial& f, const Rational& r_squared) {
  Rational sum{0};
  for (const auto& [e, c] : f.terms()) sum += c * sphere_monomial_average(static_cast<int>(f.nvars()), e, r_squared);
  return sum;
}

namespace detail {

/// Memoized sums of monomials over unscaled orbits. Only ever grows; guarded
/// so concurrent verifiers can share it.
class OrbitMomentCache {
public:
  static OrbitMomentCache& instance() {
    static OrbitMomentCache cache;
    return cache;
  }

  BigInt sum(int n, int k, const Exponents& e, std::uint64_t cap) {
    std::lock_guard lock(mutex_);
    auto key = std::make_tuple(n, k, e);
    if (auto it = sums_.find(key); it != sums_.end()) return it->second;
    auto& pts = points(n, k, cap);
    std::int64_t total = 0;
    for (const auto& p : pts) {
      int v = 1;
      for (std::size_t i = 0; i < e.size() && v != 0; ++i) {
        if (e[i] == 0) continue;
        if (p[i] == 0) {
          v = 0;
        } else if (e[i] % 2 != 0) {
          v *= p[i];
        }
      }
      total += v;
    }
    BigInt result(total);
    sums_.emplace(std::move(key), result);
    return result;
  }

private:
  const std::vector<std::vector<int>>& points(int n, int k, std::uint64_t cap) {
    auto key = std::make_pair(n, k);
    if (auto it = orbits_.find(key); it != orbits_.end()) return it->second;
    std::vector<std::vector<int>> pts;
    for (auto& p : enumerate_orbit(n, k, cap)) pts.push_back(std::move(p.coords));
    return orbits_.emplace(key, std::move(pts)).first->second;
  }

  std::mutex mutex_;
  std::map<std::pair<int, int>, std::vector<std::vector<int>>> orbits_;
  std::map<std::tuple<int, int, Exponents>, BigInt> sums_;
};

}  // namespace detail

/// Sum of x^e over the unscaled orbit I^n_k, by enumeration.
inline BigInt orbit_monomial_sum(int n, int k, const Exponents& e, std::uint64_t cap = kDefaultOrbitCap) {
  return detail::OrbitMomentCache::instance().sum(n, k, e, cap);
}

/// Sum over the unscaled orbit I^n_k of f, by enumeration.
inline Rational orbit_polynomial_sum(int n, int k, const Polynomial& f, std::uint64_t cap = kDefaultOrbitCap) {
  Rational s{0};
  for (const auto& [e, c] : f.terms()) s += c * Rational(orbit_monomial_sum(n, k, e, cap));
  return s;
}

/// sum_x w(x) f(x) - sum_r W_r avg_{S_r} f. Zero exactly when the design
/// identity holds for f. Layers with equal r^2 share one sphere.
inline Rational design_residual(const DesignConfig& cfg, const Polynomial& f, std::uint64_t cap = kDefaultOrbitCap) {
  cfg.validate();
  if (static_cast<int>(f.nvars()) != cfg.n) throw std::invalid_argument("design_residual: variable count differs from n");
  std::map<Rational, Rational> sphere_weight;
  Rational point_sum{0};
  for (const auto& layer : cfg.layers) {
    sphere_weight[layer.r_squared] += layer.weight * Rational(orbit_size(cfg.n, layer.k));
    const Rational scale = layer.point_scale();
    for (const auto& [e, c] : f.terms()) {
      const unsigned d = total_degree(e);
      if (d % 2 != 0) continue;  // antipodal layer: odd-degree sums vanish
      point_sum += layer.weight * c * pow(scale, d / 2) * Rational(orbit_monomial_sum(cfg.n, layer.k, e, cap));
    }
  }
  Rational sphere_sum{0};
  for (const auto& [r2, w] : sphere_weight) sphere_sum += w * sphere_average(f, r2);
  return point_sum - sphere_sum;
}

/// A general finite weighted point set with rational coordinates.
struct WeightedPoint {
  std::vector<Rational> x;
  Rational weight{1};
};

struct PointSet {
  int n = 3;
  std::vector<WeightedPoint> points;
};

inline Rational design_residual(const PointSet& set, const Polynomial& f) {
  if (static_cast<int>(f.nvars()) != set.n) throw std::invalid_argument("design_residual: variable count differs from n");
  std::map<Rational, Rational> sphere_weight;
  Rational point_sum{0};
  for (const auto& p : set.points) {
    if (static_cast<int>(p.x.size()) != set.n) throw std::invalid_argument("design_residual: point dimension differs from n");
    if (p.weight <= 0) throw std::invalid_argument("design_residual: weights must be positive");
    Rational r2{0};
    for (const auto& c : p.x) r2 += c * c;
    if (r2 == 0) throw std::invalid_argument("design_residual: the origin is not allowed");
    sphere_weight[r2] += p.weight;
    point_sum += p.weight * f.evaluate(p.x);
  }
  Rational sphere_sum{0};
  for (const auto& [r2, w] : sphere_weight) sphere_sum += w * sphere_average(f, r2);
  return point_sum - sphere_sum;
}

struct Violation {
  Exponents monomial;
  Rational residual;
};

/// First monomial of total degree <= t (ascending degree, graded-lex within a
/// degree) whose design identity fails, if any.
template <class Design>
std::optional<Violation> find_violation(const Design& design, int t, int from_degree = 0) {
  if (t < 0) throw std::invalid_argument("find_violation: t must be non-negative");
  std::optional<Violation> found;
  for (int d = from_degree; d <= t && !found; ++d) {
    for_each_monomial(static_cast<std::size_t>(design.n), static_cast<unsigned>(d), [&](const Exponents& e) {
      if (found) return;
      Rational res = design_residual(design, Polynomial::monomial(e));
      if (res != 0) found = Violation{e, res};
    });
  }
  return found;
}

/// True iff the design identity holds for every polynomial of degree <= t.
/// Monomials span Pol_t, so checking them is equivalent to the definition.
template <class Design>
bool verify_strength(const Design& design, int t) {
  return !find_violation(design, t).has_value();
}

/// Largest t <= t_max with verify_strength(design, t). A return value equal
/// to t_max means "at least t_max".
template <class Design>
int max_strength_oracle(const Design& design, int t_max = 11) {
  if (t_max < 0) throw std::invalid_argument("max_strength_oracle: t_max must be non-negative");
  for (int d = 0; d <= t_max; ++d) {
    if (find_violation(design, d, d)) return d - 1;
  }
  return t_max;
}

}  // namespace hyperoct
