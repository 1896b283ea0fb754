#pragma once

// Closed-form strength classification for unions of scaled hyperoctahedral
// orbits. Every layer sum used here is cross-checked against enumeration in
// the test suite.

#include "hyperoct/moments.hpp"
#include "hyperoct/orbit.hpp"
#include "hyperoct/rational.hpp"

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace hyperoct {

struct GValue {
  int n = 0;
  int k1 = 0;
  int k2 = 0;
  std::int64_t value = 0;
};

/// G(k1,k2) = (n+2-3k1)(n+2-3k2) + 6(k1-1)(k2-1) + 2(n-1).
inline GValue g_function(int n, int k1, int k2) {
  if (n < 1 || n > 1'000'000) throw std::invalid_argument("g_function: n out of range");
  if (k1 < 1 || k1 > n || k2 < 1 || k2 > n) throw std::invalid_argument("g_function: need 1 <= k1, k2 <= n");
  const std::int64_t a = n + 2 - 3 * static_cast<std::int64_t>(k1);
  const std::int64_t b = n + 2 - 3 * static_cast<std::int64_t>(k2);
  const std::int64_t v = a * b + 6 * static_cast<std::int64_t>(k1 - 1) * (k2 - 1) + 2 * static_cast<std::int64_t>(n - 1);
  return GValue{n, k1, k2, v};
}

inline std::int64_t G(int n, int k1, int k2) { return g_function(n, k1, k2).value; }

/// First zero of G in lexicographic order over 1 <= k1 <= k2 <= n.
inline std::optional<std::pair<int, int>> property_g(int n) {
  if (n < 1) throw std::invalid_argument("property_g: n must be positive");
  for (int k1 = 1; k1 <= n; ++k1)
    for (int k2 = k1; k2 <= n; ++k2)
      if (G(n, k1, k2) == 0) return std::make_pair(k1, k2);
  return std::nullopt;
}

struct PQ {
  int k = 0;
  Rational p;
  Rational q;
};

/// p_k = k(1 - 3(k-1)/(n-1)),
/// q_k = 3(1 - 15(k-1)/(n-1) + 30(k-1)(k-2)/((n-1)(n-2))). Needs n >= 3.
inline PQ pq(int n, int k) {
  if (n < 3) throw std::invalid_argument("pq: n must be at least 3");
  const Rational a(k - 1, n - 1);
  const Rational b(static_cast<std::int64_t>(k - 1) * (k - 2), static_cast<std::int64_t>(n - 1) * (n - 2));
  return PQ{k, Rational(k) * (1 - 3 * a), 3 * (1 - 15 * a + 30 * b)};
}

namespace detail {

inline void check_layer(int n, int k) {
  if (k < 1 || k > n) throw std::invalid_argument("layer sum: need 1 <= k <= n");
}

inline Rational binomial_form(int n, int k, std::initializer_list<long long> coeffs) {
  BigInt s{0};
  int shift = 1;
  for (long long c : coeffs) {
    s += BigInt(c) * binomial(n - shift, k - shift);
    ++shift;
  }
  return Rational(pow2(static_cast<unsigned>(k)) * s);
}

}  // namespace detail

/// Sum of f_{4,2}(x1, x2) over I^n_k.
inline Rational layer_sum_f42(int n, int k) {
  detail::check_layer(n, k);
  return detail::binomial_form(n, k, {2, -6});
}

/// Sum of f_{6,3}(x1, x2, x3) over I^n_k.
inline Rational layer_sum_f63(int n, int k) {
  detail::check_layer(n, k);
  return detail::binomial_form(n, k, {6, -90, 180});
}

/// Sum of f_{8,2}(x1, x2) over I^n_k. Strictly positive for every k.
inline Rational layer_sum_f82(int n, int k) {
  detail::check_layer(n, k);
  return detail::binomial_form(n, k, {2, 14});
}

/// Sum of f_{8,4}(x1, .., x4) over I^n_k, n >= 4. Fitted from enumeration.
inline Rational layer_sum_f84(int n, int k) {
  if (n < 4) throw std::invalid_argument("layer_sum_f84: n must be at least 4");
  detail::check_layer(n, k);
  return detail::binomial_form(n, k, {12, -336, 2520, -3780});
}

enum class Method { closed_form, oracle };

inline const char* to_string(Method m) { return m == Method::closed_form ? "closed-form" : "oracle"; }

struct Residual {
  std::string id;
  Rational value;
};

struct StrengthReport {
  int strength = 3;
  std::vector<Residual> residuals;  // in equation order
  Method method = Method::closed_form;
  std::string violated_9;  // first 9-design equation that fails

  const Rational* residual(const std::string& id) const {
    for (const auto& r : residuals)
      if (r.id == id) return &r.value;
    return nullptr;
  }
};

/// One equation of the criteria: a harmonic of degree `degree` multiplied by
/// |x|^(2 s), summed over the weighted configuration.
struct CriterionEquation {
  const char* id;
  int t;  // the design strength this equation belongs to
  int degree;
  int s;
  Rational (*layer_sum)(int, int);
};

inline const std::vector<CriterionEquation>& criterion_equations() {
  static const std::vector<CriterionEquation> eqs{
      {"t5.f42", 5, 4, 0, &layer_sum_f42},    {"t7.f42.r0", 7, 4, 0, &layer_sum_f42},
      {"t7.f42.r2", 7, 4, 1, &layer_sum_f42}, {"t7.f63", 7, 6, 0, &layer_sum_f63},
      {"t9.f42.r0", 9, 4, 0, &layer_sum_f42}, {"t9.f42.r2", 9, 4, 1, &layer_sum_f42},
      {"t9.f42.r4", 9, 4, 2, &layer_sum_f42}, {"t9.f63.r0", 9, 6, 0, &layer_sum_f63},
      {"t9.f63.r2", 9, 6, 1, &layer_sum_f63}, {"t9.f82", 9, 8, 0, &layer_sum_f82},
      {"t9.f84", 9, 8, 0, &layer_sum_f84},
  };
  return eqs;
}

/// Coefficient of w_k in an equation: (r^2/k)^(degree/2) (r^2)^s LayerSum(n,k).
inline Rational equation_coefficient(const CriterionEquation& eq, int n, int k, const Rational& r_squared) {
  return pow(r_squared / k, static_cast<unsigned>(eq.degree / 2)) * pow(r_squared, static_cast<unsigned>(eq.s)) *
         eq.layer_sum(n, k);
}

inline bool equation_applies(const CriterionEquation& eq, int n) {
  return !(n < 4 && std::string(eq.id) == "t9.f84");
}

inline Rational equation_residual(const CriterionEquation& eq, const DesignConfig& cfg) {
  Rational sum{0};
  for (const auto& l : cfg.layers) sum += l.weight * equation_coefficient(eq, cfg.n, l.k, l.r_squared);
  return sum;
}

/// Strength of a weighted orbit union from the closed-form criteria. The
/// result is 3, 5 or 7; a configuration passing all 9-design equations would
/// contradict the f_{8,2} positivity and raises logic_error.
inline StrengthReport classify(const DesignConfig& cfg) {
  cfg.validate();
  StrengthReport report;
  bool ok5 = true;
  bool ok7 = true;
  bool ok9 = true;
  for (const auto& eq : criterion_equations()) {
    if (!equation_applies(eq, cfg.n)) continue;
    Rational r = equation_residual(eq, cfg);
    if (r != 0) {
      if (eq.t == 5) ok5 = false;
      if (eq.t == 7) ok7 = false;
      if (eq.t == 9 && ok9) {
        ok9 = false;
        report.violated_9 = eq.id;
      }
    }
    report.residuals.push_back({eq.id, std::move(r)});
  }
  if (ok9) throw std::logic_error("classify: all 9-design equations vanish");
  report.strength = !ok5 ? 3 : (!ok7 ? 5 : 7);
  return report;
}

/// Same report, but with the strength taken from the monomial oracle.
inline StrengthReport classify_with_oracle(const DesignConfig& cfg, int t_max = 11) {
  StrengthReport report = classify(cfg);
  report.strength = max_strength_oracle(cfg, t_max);
  report.method = Method::oracle;
  return report;
}

}  // namespace hyperoct
