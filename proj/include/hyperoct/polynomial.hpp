#pragma once

// Sparse multivariate polynomials with exact rational coefficients over the
// variables x1..xn.

#include "hyperoct/rational.hpp"

#include <algorithm>
#include <cstddef>
#include <map>
#include <numeric>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace hyperoct {

/// Exponent vector of a monomial; entry i is the power of x_{i+1}.
using Exponents = std::vector<unsigned>;

inline unsigned total_degree(const Exponents& e) {
  return std::accumulate(e.begin(), e.end(), 0U);
}

/// Graded lexicographic order, largest first: higher total degree wins, ties
/// go to the lexicographically larger exponent vector (x1 before x2).
struct GradedLexGreater {
  bool operator()(const Exponents& a, const Exponents& b) const {
    unsigned da = total_degree(a);
    unsigned db = total_degree(b);
    if (da != db) return da > db;
    return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
  }
};

/// Calls `visit(exponents)` for every exponent vector in `nvars` variables
/// with total degree exactly `degree`, in graded-lex order.
template <class Visit>
void for_each_monomial(std::size_t nvars, unsigned degree, Visit&& visit) {
  Exponents e(nvars, 0);
  if (nvars == 0) {
    if (degree == 0) visit(static_cast<const Exponents&>(e));
    return;
  }
  auto rec = [&](auto&& self, std::size_t i, unsigned remaining) -> void {
    if (i + 1 == nvars) {
      e[i] = remaining;
      visit(static_cast<const Exponents&>(e));
      return;
    }
    for (unsigned a = remaining + 1; a-- > 0;) {
      e[i] = a;
      self(self, i + 1, remaining - a);
    }
    e[i] = 0;
  };
  rec(rec, 0, degree);
}

class Polynomial {
public:
  using Terms = std::map<Exponents, Rational, GradedLexGreater>;

  explicit Polynomial(std::size_t nvars = 0) : nvars_(nvars) {}

  static Polynomial constant(std::size_t nvars, const Rational& c) {
    Polynomial p(nvars);
    p.add_term(Exponents(nvars, 0), c);
    return p;
  }

  /// x_index, 1-based.
  static Polynomial variable(std::size_t nvars, std::size_t index) {
    if (index < 1 || index > nvars) throw std::out_of_range("Polynomial::variable: bad index");
    Exponents e(nvars, 0);
    e[index - 1] = 1;
    Polynomial p(nvars);
    p.add_term(std::move(e), Rational{1});
    return p;
  }

  static Polynomial monomial(Exponents e, const Rational& c = Rational{1}) {
    Polynomial p(e.size());
    p.add_term(std::move(e), c);
    return p;
  }

  std::size_t nvars() const { return nvars_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  void add_term(Exponents e, const Rational& c) {
    if (e.size() != nvars_) throw std::invalid_argument("Polynomial: exponent length mismatch");
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(std::move(e), c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  Rational coefficient(const Exponents& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rational{0} : it->second;
  }

  /// Highest total degree; 0 for the zero polynomial.
  unsigned degree() const { return terms_.empty() ? 0 : total_degree(terms_.begin()->first); }

  bool is_homogeneous() const {
    if (terms_.empty()) return true;
    unsigned d = degree();
    return std::all_of(terms_.begin(), terms_.end(),
                       [d](const auto& t) { return total_degree(t.first) == d; });
  }

  /// Every variable carries an even exponent in every term, i.e. the
  /// polynomial is invariant under each sign flip x_i -> -x_i.
  bool is_fully_even() const {
    return std::all_of(terms_.begin(), terms_.end(), [](const auto& t) {
      return std::all_of(t.first.begin(), t.first.end(), [](unsigned a) { return a % 2 == 0; });
    });
  }

  Rational evaluate(std::span<const Rational> point) const {
    if (point.size() != nvars_) {
      throw std::invalid_argument("Polynomial::evaluate: point has " + std::to_string(point.size()) +
                                  " coordinates, polynomial has " + std::to_string(nvars_) +
                                  " variables");
    }
    Rational sum{0};
    for (const auto& [e, c] : terms_) {
      Rational term = c;
      for (std::size_t i = 0; i < nvars_ && term != 0; ++i) {
        if (e[i] != 0) term *= pow(point[i], e[i]);
      }
      sum += term;
    }
    return sum;
  }

  /// Partial derivative with respect to x_index (1-based).
  Polynomial derivative(std::size_t index) const {
    if (index < 1 || index > nvars_) throw std::out_of_range("Polynomial::derivative: bad index");
    Polynomial d(nvars_);
    for (const auto& [e, c] : terms_) {
      unsigned a = e[index - 1];
      if (a == 0) continue;
      Exponents f = e;
      --f[index - 1];
      d.add_term(std::move(f), c * a);
    }
    return d;
  }

  /// Substitutes x_i -> -x_i (1-based).
  Polynomial flip_sign(std::size_t index) const {
    Polynomial r(nvars_);
    for (const auto& [e, c] : terms_) r.add_term(e, e[index - 1] % 2 == 0 ? c : Rational(-c));
    return r;
  }

  /// Exchanges x_i and x_j (1-based).
  Polynomial swap_variables(std::size_t i, std::size_t j) const {
    Polynomial r(nvars_);
    for (const auto& [e, c] : terms_) {
      Exponents f = e;
      std::swap(f[i - 1], f[j - 1]);
      r.add_term(std::move(f), c);
    }
    return r;
  }

  Polynomial& operator+=(const Polynomial& o) {
    check_compatible(o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }

  Polynomial& operator-=(const Polynomial& o) {
    check_compatible(o);
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }

  Polynomial& operator*=(const Rational& s) {
    if (s == 0) {
      terms_.clear();
      return *this;
    }
    for (auto& [e, c] : terms_) c *= s;
    return *this;
  }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const Rational& s) { return a *= s; }
  friend Polynomial operator*(const Rational& s, Polynomial a) { return a *= s; }
  friend Polynomial operator-(Polynomial a) { return a *= Rational{-1}; }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    a.check_compatible(b);
    Polynomial r(a.nvars_);
    for (const auto& [ea, ca] : a.terms_) {
      for (const auto& [eb, cb] : b.terms_) {
        Exponents e(a.nvars_);
        for (std::size_t i = 0; i < a.nvars_; ++i) e[i] = ea[i] + eb[i];
        r.add_term(std::move(e), ca * cb);
      }
    }
    return r;
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }

  /// Canonical rendering, terms in graded-lex order, e.g.
  /// "x1^4 - 6*x1^2*x2^2 + x2^4".
  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [e, c] : terms_) {
      bool negative = c < 0;
      Rational magnitude = negative ? Rational(-c) : c;
      if (first) {
        if (negative) out << "-";
      } else {
        out << (negative ? " - " : " + ");
      }
      first = false;
      bool has_vars = total_degree(e) != 0;
      bool wrote = false;
      if (magnitude != 1 || !has_vars) {
        out << hyperoct::to_string(magnitude);
        wrote = true;
      }
      for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0) continue;
        if (wrote) out << "*";
        out << "x" << (i + 1);
        if (e[i] != 1) out << "^" << e[i];
        wrote = true;
      }
    }
    return out.str();
  }

private:
  void check_compatible(const Polynomial& o) const {
    if (o.nvars_ != nvars_) throw std::invalid_argument("Polynomial: variable count mismatch");
  }

  std::size_t nvars_;
  Terms terms_;
};

inline Polynomial pow(const Polynomial& base, unsigned e) {
  Polynomial result = Polynomial::constant(base.nvars(), Rational{1});
  for (unsigned i = 0; i < e; ++i) result = result * base;
  return result;
}

/// Sum of the pure second partials.
inline Polynomial laplacian(const Polynomial& p) {
  Polynomial result(p.nvars());
  for (const auto& [e, c] : p.terms()) {
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] < 2) continue;
      Exponents f = e;
      f[i] -= 2;
      result.add_term(std::move(f), c * (e[i] * (e[i] - 1)));
    }
  }
  return result;
}

inline Rational evaluate(const Polynomial& p, std::span<const Rational> point) {
  return p.evaluate(point);
}

/// Sum of x_from^2 + ... + x_to^2 (1-based, inclusive) in `nvars` variables.
inline Polynomial sum_of_squares(std::size_t nvars, std::size_t from, std::size_t to) {
  Polynomial r(nvars);
  for (std::size_t i = from; i <= to; ++i) {
    Exponents e(nvars, 0);
    e[i - 1] = 2;
    r.add_term(std::move(e), Rational{1});
  }
  return r;
}

/// f^g: renames variable i of `f` to x_{g[i]} inside an n-variable ring.
/// `g` is 1-based and must be strictly increasing with g.back() <= n.
inline Polynomial embed(const Polynomial& f, std::span<const int> g, std::size_t n) {
  if (g.size() != f.nvars()) {
    throw std::invalid_argument("embed: map length must equal the polynomial's variable count");
  }
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (g[i] < 1 || static_cast<std::size_t>(g[i]) > n) {
      throw std::invalid_argument("embed: target index out of range 1..n");
    }
    if (i > 0 && g[i] <= g[i - 1]) throw std::invalid_argument("embed: map must be strictly increasing");
  }
  Polynomial r(n);
  for (const auto& [e, c] : f.terms()) {
    Exponents f_e(n, 0);
    for (std::size_t i = 0; i < g.size(); ++i) f_e[static_cast<std::size_t>(g[i]) - 1] = e[i];
    r.add_term(std::move(f_e), c);
  }
  return r;
}

/// All strictly increasing maps {1..j} -> {1..n}, in lexicographic order.
inline std::vector<std::vector<int>> increasing_maps(int n, int j) {
  std::vector<std::vector<int>> out;
  if (j < 0 || j > n) return out;
  std::vector<int> g(static_cast<std::size_t>(j));
  std::iota(g.begin(), g.end(), 1);
  while (true) {
    out.push_back(g);
    int i = j - 1;
    while (i >= 0 && g[static_cast<std::size_t>(i)] == n - j + i + 1) --i;
    if (i < 0) break;
    ++g[static_cast<std::size_t>(i)];
    for (int l = i + 1; l < j; ++l) g[static_cast<std::size_t>(l)] = g[static_cast<std::size_t>(l - 1)] + 1;
  }
  return out;
}

}  // namespace hyperoct
