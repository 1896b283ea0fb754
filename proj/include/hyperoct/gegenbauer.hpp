#pragma once

// Gegenbauer (ultraspherical) polynomials in exact arithmetic and the
// one-variable tooling around them: Sturm root counting and the homogeneous
// building blocks used for harmonic bases.

#include "hyperoct/polynomial.hpp"
#include "hyperoct/rational.hpp"

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

namespace hyperoct {

/// Dense univariate polynomial, coefficient i multiplies x^i. Trailing zeros
/// are trimmed, so the zero polynomial has no coefficients.
class UPoly {
public:
  UPoly() = default;
  explicit UPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

  static UPoly x() { return UPoly({Rational{0}, Rational{1}}); }

  const std::vector<Rational>& coefficients() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  Rational coefficient(std::size_t i) const { return i < c_.size() ? c_[i] : Rational{0}; }
  Rational leading() const { return c_.empty() ? Rational{0} : c_.back(); }

  Rational operator()(const Rational& at) const {
    Rational v{0};
    for (std::size_t i = c_.size(); i-- > 0;) v = v * at + c_[i];
    return v;
  }

  UPoly derivative() const {
    std::vector<Rational> d;
    for (std::size_t i = 1; i < c_.size(); ++i) d.push_back(c_[i] * static_cast<unsigned>(i));
    return UPoly(std::move(d));
  }

  friend UPoly operator+(const UPoly& a, const UPoly& b) {
    std::vector<Rational> r(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = a.coefficient(i) + b.coefficient(i);
    return UPoly(std::move(r));
  }
  friend UPoly operator-(const UPoly& a) {
    std::vector<Rational> r = a.c_;
    for (auto& v : r) v = -v;
    return UPoly(std::move(r));
  }
  friend UPoly operator-(const UPoly& a, const UPoly& b) { return a + (-b); }
  friend UPoly operator*(const UPoly& a, const UPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rational> r(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    return UPoly(std::move(r));
  }
  friend UPoly operator*(const Rational& s, const UPoly& a) {
    std::vector<Rational> r = a.c_;
    for (auto& v : r) v *= s;
    return UPoly(std::move(r));
  }
  friend bool operator==(const UPoly& a, const UPoly& b) { return a.c_ == b.c_; }

  /// Euclidean remainder of a by b (b nonzero).
  friend UPoly operator%(UPoly a, const UPoly& b) {
    if (b.is_zero()) throw std::domain_error("UPoly: remainder by zero polynomial");
    while (!a.is_zero() && a.degree() >= b.degree()) {
      Rational factor = a.leading() / b.leading();
      std::size_t shift = static_cast<std::size_t>(a.degree() - b.degree());
      for (std::size_t i = 0; i < b.c_.size(); ++i) a.c_[i + shift] -= factor * b.c_[i];
      a.trim();
    }
    return a;
  }

private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }

  std::vector<Rational> c_;
};

/// Number of distinct real roots of `p` in the open interval (a, b), a < b,
/// counted with a Sturm sequence over the rationals.
inline int count_distinct_roots(UPoly p, const Rational& a, const Rational& b) {
  if (p.is_zero()) throw std::domain_error("count_distinct_roots: zero polynomial");
  if (!(a < b)) throw std::invalid_argument("count_distinct_roots: need a < b");
  // Deflate roots sitting exactly on an endpoint; Sturm's count needs p(a), p(b) != 0.
  for (const Rational& end : {a, b}) {
    while (p.degree() > 0 && p(end) == 0) {
      // Synthetic division by (x - end).
      const auto& c = p.coefficients();
      std::vector<Rational> q(c.size() - 1);
      Rational carry{0};
      for (std::size_t i = c.size(); i-- > 1;) {
        carry = c[i] + carry * end;
        q[i - 1] = carry;
      }
      p = UPoly(std::move(q));
    }
  }
  std::vector<UPoly> chain{p, p.derivative()};
  while (!chain.back().is_zero()) {
    UPoly r = chain[chain.size() - 2] % chain.back();
    chain.push_back(-r);
  }
  chain.pop_back();
  auto variations = [&](const Rational& at) {
    int changes = 0;
    int last = 0;
    for (const auto& s : chain) {
      int sg = sign(s(at));
      if (sg == 0) continue;
      if (last != 0 && sg != last) ++changes;
      last = sg;
    }
    return changes;
  };
  return variations(a) - variations(b);
}

/// Gegenbauer polynomial of degree s and parameter alpha (> -1), in the
/// normalization
///   P(x) = (-1)^s / (2^s s! (1-x^2)^(alpha-1/2)) d^s/dx^s (1-x^2)^(alpha+s-1/2).
struct GegenbauerPoly {
  int degree = 0;
  Rational alpha;
  UPoly poly;

  const std::vector<Rational>& coefficients() const { return poly.coefficients(); }
  Rational operator()(const Rational& x) const { return poly(x); }
};

inline GegenbauerPoly gegenbauer(int s, const Rational& alpha) {
  if (s < 0) throw std::invalid_argument("gegenbauer: degree must be non-negative");
  if (alpha <= -1) throw std::invalid_argument("gegenbauer: alpha must exceed -1");
  // d/dx[(1-x^2)^g Q] = (1-x^2)^(g-1) [-2 g x Q + (1-x^2) Q'], so after s steps
  // the derivative is (1-x^2)^(alpha-1/2) times a polynomial Q.
  const UPoly one_minus_x2({Rational{1}, Rational{0}, Rational{-1}});
  UPoly q({Rational{1}});
  Rational g = alpha + s - Rational(1, 2);
  for (int step = 0; step < s; ++step) {
    q = (Rational{-2} * g) * (UPoly::x() * q) + one_minus_x2 * q.derivative();
    g -= 1;
  }
  Rational scale = Rational(s % 2 == 0 ? 1 : -1) / Rational(pow2(static_cast<unsigned>(s)) * factorial(static_cast<unsigned>(s)));
  return GegenbauerPoly{s, alpha, scale * q};
}

/// g_k(x_{k+1},...,x_n) = r_k^d P_d^lambda(x_{k+1}/r_k), expanded as a genuine
/// polynomial in n variables, where d = m_k - m_{k+1},
/// lambda = m_{k+1} + (n-k-2)/2 and r_k^2 = x_{k+1}^2 + ... + x_n^2.
/// `k` is 0-based (0 <= k <= n-3).
inline Polynomial building_block_g(int k, int m_k, int m_next, int n) {
  if (n < 3) throw std::invalid_argument("building_block_g: n must be at least 3");
  if (k < 0 || k > n - 3) throw std::invalid_argument("building_block_g: k must lie in 0..n-3");
  if (m_next < 0 || m_next > m_k) throw std::invalid_argument("building_block_g: need 0 <= m_{k+1} <= m_k");
  const int d = m_k - m_next;
  const Rational lambda = Rational(m_next) + Rational(n - k - 2, 2);
  const GegenbauerPoly p = gegenbauer(d, lambda);
  const auto nv = static_cast<std::size_t>(n);
  const std::size_t lead = static_cast<std::size_t>(k) + 1;  // x_{k+1}
  const Polynomial r2 = sum_of_squares(nv, lead, nv);
  Polynomial result(nv);
  // P_d has the parity of d, so only x^j with d - j even survive and
  // r^(d-j) = (r^2)^((d-j)/2) stays polynomial.
  for (int j = 0; j <= d; ++j) {
    const Rational c = p.poly.coefficient(static_cast<std::size_t>(j));
    if (c == 0) continue;
    Exponents e(nv, 0);
    e[lead - 1] = static_cast<unsigned>(j);
    result += Polynomial::monomial(std::move(e), c) * pow(r2, static_cast<unsigned>((d - j) / 2));
  }
  return result;
}

/// h_1 = Re (x_{n-1} + i x_n)^m, h_2 = Im (x_{n-1} + i x_n)^m.
inline Polynomial planar_harmonic(int m, int mu, int n) {
  if (mu != 1 && mu != 2) throw std::invalid_argument("planar_harmonic: mu must be 1 or 2");
  if (m < 0 || n < 2) throw std::invalid_argument("planar_harmonic: bad arguments");
  const auto nv = static_cast<std::size_t>(n);
  Polynomial h(nv);
  for (int j = (mu == 1 ? 0 : 1); j <= m; j += 2) {
    Exponents e(nv, 0);
    e[nv - 2] = static_cast<unsigned>(m - j);
    e[nv - 1] = static_cast<unsigned>(j);
    // i^j contributes (-1)^(j/2) to the real part, (-1)^((j-1)/2) to the imaginary part.
    int half = (mu == 1) ? j / 2 : (j - 1) / 2;
    Rational c(binomial(m, j));
    if (half % 2 != 0) c = -c;
    h.add_term(std::move(e), c);
  }
  return h;
}

}  // namespace hyperoct
