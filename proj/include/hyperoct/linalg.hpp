#pragma once

// Exact linear algebra over the rationals: rank, kernels, and positive
// solutions of small homogeneous systems.

#include "hyperoct/polynomial.hpp"
#include "hyperoct/rational.hpp"

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace hyperoct {

using Matrix = std::vector<std::vector<Rational>>;

/// Reduced row echelon form in place; returns the pivot column of each
/// nonzero row.
inline std::vector<std::size_t> row_reduce(Matrix& m) {
  std::vector<std::size_t> pivots;
  if (m.empty()) return pivots;
  const std::size_t cols = m.front().size();
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < m.size(); ++col) {
    std::size_t sel = row;
    while (sel < m.size() && m[sel][col] == 0) ++sel;
    if (sel == m.size()) continue;
    std::swap(m[row], m[sel]);
    const Rational inv = 1 / m[row][col];
    for (auto& v : m[row]) v *= inv;
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == row || m[r][col] == 0) continue;
      const Rational f = m[r][col];
      for (std::size_t c = col; c < cols; ++c) m[r][c] -= f * m[row][c];
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

inline std::size_t exact_rank(Matrix m) { return row_reduce(m).size(); }

/// Rank of the integer matrix obtained by clearing each row's denominators,
/// reduced modulo a fixed 61-bit prime. It never exceeds the rational rank,
/// so a full modular rank certifies independence over Q.
inline std::size_t rank_mod_prime(const Matrix& m) {
  using u64 = std::uint64_t;
  using u128 = unsigned __int128;
  constexpr u64 prime = (u64{1} << 61) - 1;
  if (m.empty()) return 0;
  const std::size_t cols = m.front().size();
  const BigInt big_prime(prime);
  std::vector<std::vector<u64>> a;
  a.reserve(m.size());
  for (const auto& row : m) {
    BigInt lcm{1};
    for (const auto& v : row) {
      const BigInt d = denominator(v);
      lcm = lcm / boost::multiprecision::gcd(lcm, d) * d;
    }
    std::vector<u64> r(cols);
    for (std::size_t c = 0; c < cols; ++c) {
      BigInt z = numerator(row[c]) * (lcm / denominator(row[c]));
      z %= big_prime;
      if (z < 0) z += big_prime;
      r[c] = static_cast<u64>(z);
    }
    a.push_back(std::move(r));
  }
  auto mul = [](u64 x, u64 y) { return static_cast<u64>((static_cast<u128>(x) * y) % prime); };
  auto inverse = [&](u64 x) {
    u64 result = 1;
    u64 e = prime - 2;
    while (e != 0) {
      if ((e & 1U) != 0) result = mul(result, x);
      x = mul(x, x);
      e >>= 1U;
    }
    return result;
  };
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < a.size(); ++col) {
    std::size_t sel = row;
    while (sel < a.size() && a[sel][col] == 0) ++sel;
    if (sel == a.size()) continue;
    std::swap(a[row], a[sel]);
    const u64 inv = inverse(a[row][col]);
    for (std::size_t c = col; c < cols; ++c) a[row][c] = mul(a[row][c], inv);
    for (std::size_t r = row + 1; r < a.size(); ++r) {
      const u64 f = a[r][col];
      if (f == 0) continue;
      for (std::size_t c = col; c < cols; ++c) {
        a[r][c] = (a[r][c] + prime - mul(f, a[row][c])) % prime;
      }
    }
    ++row;
  }
  return row;
}

/// Rows = polynomials, columns = the union of their monomials.
inline Matrix coefficient_matrix(const std::vector<Polynomial>& polys) {
  std::map<Exponents, std::size_t, GradedLexGreater> column;
  for (const auto& p : polys)
    for (const auto& [e, c] : p.terms()) column.try_emplace(e, 0);
  std::size_t idx = 0;
  for (auto& [e, i] : column) i = idx++;
  Matrix m(polys.size(), std::vector<Rational>(column.size()));
  for (std::size_t r = 0; r < polys.size(); ++r)
    for (const auto& [e, c] : polys[r].terms()) m[r][column.at(e)] = c;
  return m;
}

/// Exact independence test. The modular rank is tried first; only when it is
/// deficient is the rational elimination run to settle the question.
inline bool linearly_independent(const std::vector<Polynomial>& polys) {
  if (polys.empty()) return true;
  const Matrix m = coefficient_matrix(polys);
  if (m.front().size() < polys.size()) return false;
  if (rank_mod_prime(m) == polys.size()) return true;
  return exact_rank(m) == polys.size();
}

/// Basis of {x : m x = 0}; `cols` is needed when m has no rows.
inline std::vector<std::vector<Rational>> kernel_basis(Matrix m, std::size_t cols) {
  if (!m.empty() && m.front().size() != cols) throw std::invalid_argument("kernel_basis: column mismatch");
  const auto pivots = row_reduce(m);
  std::vector<bool> is_pivot(cols, false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<std::vector<Rational>> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Rational> v(cols);
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m[r][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

/// Finds y with a_i . y >= b_i for all i by Fourier-Motzkin elimination, or
/// nothing if the system is infeasible. Intended for a handful of variables.
inline std::optional<std::vector<Rational>> solve_inequalities(
    const std::vector<std::pair<std::vector<Rational>, Rational>>& constraints, std::size_t vars) {
  if (vars == 0) {
    for (const auto& [a, b] : constraints)
      if (b > 0) return std::nullopt;
    return std::vector<Rational>{};
  }
  const std::size_t last = vars - 1;
  std::vector<std::pair<std::vector<Rational>, Rational>> lower, upper, reduced;
  for (const auto& con : constraints) {
    const Rational& coef = con.first[last];
    if (coef > 0) {
      lower.push_back(con);
    } else if (coef < 0) {
      upper.push_back(con);
    } else {
      reduced.emplace_back(std::vector<Rational>(con.first.begin(), con.first.begin() + static_cast<std::ptrdiff_t>(last)),
                           con.second);
    }
  }
  // Lower: y_last >= (b - a'.y')/c (c > 0); upper: y_last <= (b - a'.y')/c (c < 0).
  for (const auto& lo : lower) {
    for (const auto& up : upper) {
      const Rational cl = lo.first[last];
      const Rational cu = -up.first[last];
      std::vector<Rational> a(last);
      for (std::size_t i = 0; i < last; ++i) a[i] = lo.first[i] * cu + up.first[i] * cl;
      reduced.emplace_back(std::move(a), lo.second * cu + up.second * cl);
    }
  }
  auto rest = solve_inequalities(reduced, last);
  if (!rest) return std::nullopt;
  auto bound = [&](const std::pair<std::vector<Rational>, Rational>& con) -> Rational {
    Rational s = con.second;
    for (std::size_t i = 0; i < last; ++i) s -= con.first[i] * (*rest)[i];
    return s / con.first[last];
  };
  std::optional<Rational> lo_best, up_best;
  for (const auto& lo : lower) {
    Rational v = bound(lo);
    if (!lo_best || v > *lo_best) lo_best = v;
  }
  for (const auto& up : upper) {
    Rational v = bound(up);
    if (!up_best || v < *up_best) up_best = v;
  }
  // Prefer an integer inside [lo, up] so witnesses stay readable.
  auto ceil_of = [](const Rational& q) -> Rational {
    BigInt f = numerator(q) / denominator(q);
    if (Rational(f) < q) ++f;
    return Rational(f);
  };
  Rational value{0};
  if (lo_best) {
    value = ceil_of(*lo_best);
    if (up_best && value > *up_best) value = (*lo_best + *up_best) / 2;
  } else if (up_best) {
    value = -ceil_of(-*up_best);
  }
  rest->push_back(value);
  return rest;
}

/// A vector u with every entry > 0 and m u = 0, if one exists.
inline std::optional<std::vector<Rational>> positive_kernel_vector(const Matrix& m, std::size_t cols) {
  const auto basis = kernel_basis(m, cols);
  if (basis.empty()) return std::nullopt;
  // u = sum_j y_j basis_j; require u_i >= 1 (equivalent to u_i > 0 up to scale).
  std::vector<std::pair<std::vector<Rational>, Rational>> cons;
  for (std::size_t i = 0; i < cols; ++i) {
    std::vector<Rational> a(basis.size());
    for (std::size_t j = 0; j < basis.size(); ++j) a[j] = basis[j][i];
    cons.emplace_back(std::move(a), Rational{1});
  }
  auto y = solve_inequalities(cons, basis.size());
  if (!y) return std::nullopt;
  std::vector<Rational> u(cols);
  for (std::size_t j = 0; j < basis.size(); ++j)
    for (std::size_t i = 0; i < cols; ++i) u[i] += (*y)[j] * basis[j][i];
  return u;
}

}  // namespace hyperoct
