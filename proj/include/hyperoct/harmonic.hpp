#pragma once

// Harmonic polynomial bases: the full Gegenbauer product basis of Harm_s(R^n),
// its fully even part, and the compact criterion bases for s = 2, 4, 6, 8.

#include "hyperoct/gegenbauer.hpp"
#include "hyperoct/polynomial.hpp"
#include "hyperoct/rational.hpp"

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace hyperoct {

/// dim Harm_s(R^n) = C(n+s-1, n-1) - C(n+s-3, n-1).
inline BigInt harmonic_dimension(int n, int s) {
  return binomial(n + s - 1, n - 1) - binomial(n + s - 3, n - 1);
}

/// dim of the fully even harmonics of even degree s: C(n + s/2 - 2, n - 2).
inline BigInt fully_even_dimension(int n, int s) {
  if (s % 2 != 0) return BigInt{0};
  return binomial(n + s / 2 - 2, n - 2);
}

struct BasisElement {
  std::vector<int> m;  // m_0 = s >= m_1 >= ... >= m_{n-2} >= 0
  int mu = 1;          // 1 <= mu <= min(2, m_{n-2} + 1)
  Polynomial poly;
};

struct BasisLimits {
  int max_n = 6;
  int max_s = 8;
};

/// f_{m_0,...,m_{n-2},mu} = h_mu(x_{n-1}, x_n) * prod_{k=0}^{n-3} g_k.
inline Polynomial gegenbauer_basis_polynomial(int n, const std::vector<int>& m, int mu) {
  if (static_cast<int>(m.size()) != n - 1) throw std::invalid_argument("basis index must have n-1 entries");
  Polynomial f = planar_harmonic(m.back(), mu, n);
  for (int k = 0; k <= n - 3; ++k) {
    f = f * building_block_g(k, m[static_cast<std::size_t>(k)], m[static_cast<std::size_t>(k) + 1], n);
  }
  return f;
}

/// The Gegenbauer product basis of Harm_s(R^n).
inline std::vector<BasisElement> full_basis(int n, int s, BasisLimits limits = {}) {
  if (n < 3 || n > limits.max_n) {
    throw std::invalid_argument("full_basis: n must lie in 3.." + std::to_string(limits.max_n));
  }
  if (s < 1 || s > limits.max_s) {
    throw std::invalid_argument("full_basis: s must lie in 1.." + std::to_string(limits.max_s));
  }
  std::vector<BasisElement> out;
  std::vector<int> m(static_cast<std::size_t>(n - 1));
  m[0] = s;
  auto rec = [&](auto&& self, std::size_t i) -> void {
    if (i == m.size()) {
      const int top = std::min(2, m.back() + 1);
      for (int mu = 1; mu <= top; ++mu) {
        out.push_back(BasisElement{m, mu, gegenbauer_basis_polynomial(n, m, mu)});
      }
      return;
    }
    for (int v = m[i - 1]; v >= 0; --v) {
      m[i] = v;
      self(self, i + 1);
    }
  };
  rec(rec, 1);
  return out;
}

/// Elements whose indices m_i are all even and mu = 1; these span the fully
/// even harmonics of degree s.
inline std::vector<BasisElement> fully_even_subset(const std::vector<BasisElement>& basis) {
  std::vector<BasisElement> out;
  for (const auto& b : basis) {
    if (b.m.front() % 2 != 0) throw std::invalid_argument("fully_even_subset: degree must be even");
    bool even = std::all_of(b.m.begin(), b.m.end(), [](int v) { return v % 2 == 0; });
    if (even && b.mu == 1) out.push_back(b);
  }
  return out;
}

namespace detail {

struct Term {
  std::initializer_list<unsigned> exps;
  long long coeff;
};

inline Polynomial from_terms(std::size_t nvars, std::initializer_list<Term> terms) {
  Polynomial p(nvars);
  for (const auto& t : terms) p.add_term(Exponents(t.exps), Rational(t.coeff));
  return p;
}

}  // namespace detail

// The fixed criterion polynomials. Each one is harmonic and fully even.

inline Polynomial f_4_2() {
  return detail::from_terms(2, {{{4, 0}, 1}, {{2, 2}, -6}, {{0, 4}, 1}});
}

inline Polynomial f_6_2() {
  return detail::from_terms(2, {{{6, 0}, 1}, {{4, 2}, -15}, {{2, 4}, 15}, {{0, 6}, -1}});
}

inline Polynomial f_6_3() {
  return detail::from_terms(3, {{{6, 0, 0}, 2},   {{0, 6, 0}, 2},   {{0, 0, 6}, 2},
                                {{4, 2, 0}, -15}, {{2, 4, 0}, -15}, {{4, 0, 2}, -15},
                                {{2, 0, 4}, -15}, {{0, 4, 2}, -15}, {{0, 2, 4}, -15},
                                {{2, 2, 2}, 180}});
}

inline Polynomial f_8_2() {
  return detail::from_terms(2, {{{8, 0}, 1}, {{6, 2}, -28}, {{4, 4}, 70}, {{2, 6}, -28}, {{0, 8}, 1}});
}

/// Skew under x1 <-> x2.
inline Polynomial f_8_3_1() {
  return detail::from_terms(3, {{{8, 0, 0}, 1},
                                {{0, 8, 0}, -1},
                                {{2, 6, 0}, 14},
                                {{0, 6, 2}, 14},
                                {{6, 2, 0}, -14},
                                {{6, 0, 2}, -14},
                                {{4, 2, 2}, 210},
                                {{2, 4, 2}, -210}});
}

/// Skew under x1 <-> x3.
inline Polynomial f_8_3_2() {
  return detail::from_terms(3, {{{8, 0, 0}, 1},
                                {{0, 0, 8}, -1},
                                {{2, 0, 6}, 14},
                                {{0, 2, 6}, 14},
                                {{6, 0, 2}, -14},
                                {{6, 2, 0}, -14},
                                {{4, 2, 2}, 210},
                                {{2, 2, 4}, -210}});
}

/// 3 sum x_i^8 - 28 sum_{i != j} x_i^6 x_j^2 + 210 sum x_i^4 x_j^2 x_k^2
/// - 3780 x1^2 x2^2 x3^2 x4^2, the middle sum over distinct i and {j < k}.
inline Polynomial f_8_4() {
  Polynomial p(4);
  for (std::size_t i = 0; i < 4; ++i) {
    Exponents e(4, 0);
    e[i] = 8;
    p.add_term(e, Rational{3});
    for (std::size_t j = 0; j < 4; ++j) {
      if (j == i) continue;
      Exponents f(4, 0);
      f[i] = 6;
      f[j] = 2;
      p.add_term(f, Rational{-28});
    }
    Exponents g(4, 2);
    g[i] = 4;
    for (std::size_t skip = 0; skip < 4; ++skip) {
      if (skip == i) continue;
      Exponents h = g;
      h[skip] = 0;
      p.add_term(h, Rational{210});
    }
  }
  p.add_term(Exponents(4, 2), Rational{-3780});
  return p;
}

struct CriterionElement {
  std::string label;     // e.g. "f_{6,3}"
  std::vector<int> map;  // the increasing map used for embedding
  Polynomial poly;
};

struct CriterionBasis {
  int n = 0;
  int s = 0;
  std::vector<CriterionElement> elements;

  std::vector<Polynomial> polynomials() const {
    std::vector<Polynomial> out;
    out.reserve(elements.size());
    for (const auto& e : elements) out.push_back(e.poly);
    return out;
  }
  std::size_t size() const { return elements.size(); }
};

/// F_2, F_4, F_6 or F_8: coordinate-embedded copies of the fixed criterion
/// polynomials. For n = 3 the f_{8,4} orbit is empty.
inline CriterionBasis criterion_basis(int n, int s) {
  if (s != 2 && s != 4 && s != 6 && s != 8) throw std::invalid_argument("criterion_basis: s must be 2, 4, 6 or 8");
  if (n < 3) throw std::invalid_argument("criterion_basis: n must be at least 3");
  CriterionBasis basis{n, s, {}};
  const auto nv = static_cast<std::size_t>(n);
  if (s == 2) {
    for (int i = 1; i < n; ++i) {
      basis.elements.push_back({"x_i^2 - x_n^2", {i, n}, sum_of_squares(nv, static_cast<std::size_t>(i), static_cast<std::size_t>(i)) -
                                                            sum_of_squares(nv, nv, nv)});
    }
    return basis;
  }
  auto add_orbit = [&](const std::string& label, const Polynomial& f) {
    for (const auto& g : increasing_maps(n, static_cast<int>(f.nvars()))) {
      basis.elements.push_back({label, g, embed(f, g, nv)});
    }
  };
  switch (s) {
    case 4:
      add_orbit("f_{4,2}", f_4_2());
      break;
    case 6:
      add_orbit("f_{6,2}", f_6_2());
      add_orbit("f_{6,3}", f_6_3());
      break;
    default:
      add_orbit("f_{8,2}", f_8_2());
      add_orbit("f_{8,3,1}", f_8_3_1());
      add_orbit("f_{8,3,2}", f_8_3_2());
      add_orbit("f_{8,4}", f_8_4());
      break;
  }
  return basis;
}

}  // namespace hyperoct
