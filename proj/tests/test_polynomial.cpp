#include "hyperoct/gegenbauer.hpp"
#include "hyperoct/harmonic.hpp"
#include "hyperoct/polynomial.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace hyperoct;

namespace {

Polynomial random_poly(std::mt19937& rng, std::size_t nvars, unsigned max_deg) {
  std::uniform_int_distribution<int> coef(-9, 9);
  std::uniform_int_distribution<unsigned> expo(0, max_deg);
  Polynomial p(nvars);
  for (int i = 0; i < 6; ++i) {
    Exponents e(nvars);
    for (auto& a : e) a = expo(rng);
    p.add_term(e, Rational(coef(rng), 1 + (i % 3)));
  }
  return p;
}

std::vector<Rational> pt(std::initializer_list<int> v) {
  std::vector<Rational> out;
  for (int x : v) out.emplace_back(x);
  return out;
}

}  // namespace

TEST(Evaluate, CriterionPolynomials) {
  EXPECT_EQ(f_4_2().evaluate(pt({1, 1})), -4);
  EXPECT_EQ(f_4_2().evaluate(pt({1, 0})), 1);
  // 3 * 2 - 6 * 15 + 180
  EXPECT_EQ(f_6_3().evaluate(pt({1, 1, 1})), 96);
  EXPECT_THROW(f_4_2().evaluate(pt({1, 2, 3})), std::invalid_argument);
}

TEST(Evaluate, AgreesWithHornerFreeExpansion) {
  std::mt19937 rng(3);
  std::uniform_int_distribution<int> val(-5, 5);
  for (int trial = 0; trial < 50; ++trial) {
    Polynomial p = random_poly(rng, 3, 4);
    std::vector<Rational> x{Rational(val(rng), 2), Rational(val(rng), 3), Rational(val(rng))};
    Rational expect{0};
    for (const auto& [e, c] : p.terms()) {
      Rational term = c;
      for (std::size_t i = 0; i < 3; ++i)
        for (unsigned j = 0; j < e[i]; ++j) term *= x[i];
      expect += term;
    }
    EXPECT_EQ(p.evaluate(x), expect);
  }
}

TEST(Laplacian, Examples) {
  Polynomial a = Polynomial::monomial({2, 0}) - Polynomial::monomial({0, 2});
  EXPECT_TRUE(laplacian(a).is_zero());
  EXPECT_TRUE(laplacian(f_4_2()).is_zero());
  EXPECT_EQ(laplacian(Polynomial::monomial({4})), Polynomial::monomial({2}, 12));
}

TEST(Laplacian, Linearity) {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    Polynomial p = random_poly(rng, 4, 5), q = random_poly(rng, 4, 5);
    Rational a(trial - 20, 7), b(3, trial + 1);
    EXPECT_EQ(laplacian(a * p + b * q), a * laplacian(p) + b * laplacian(q));
  }
}

TEST(Polynomial, ArithmeticAndShape) {
  Polynomial x = Polynomial::variable(2, 1), y = Polynomial::variable(2, 2);
  Polynomial p = pow(x + y, 2);
  EXPECT_EQ(p.to_string(), "x1^2 + 2*x1*x2 + x2^2");
  EXPECT_TRUE(p.is_homogeneous());
  EXPECT_FALSE(p.is_fully_even());
  EXPECT_TRUE((p - p).is_zero());
  EXPECT_EQ((x - y) * (x + y), Polynomial::monomial({2, 0}) - Polynomial::monomial({0, 2}));
  EXPECT_FALSE((p + Polynomial::constant(2, 1)).is_homogeneous());
  EXPECT_EQ(p.derivative(1), 2 * x + 2 * y);
  EXPECT_EQ(p.flip_sign(2).to_string(), "x1^2 - 2*x1*x2 + x2^2");
}

TEST(Polynomial, CanonicalText) {
  EXPECT_EQ(f_4_2().to_string(), "x1^4 - 6*x1^2*x2^2 + x2^4");
  EXPECT_EQ(Polynomial(3).to_string(), "0");
  EXPECT_EQ(Polynomial::constant(2, Rational(-3, 4)).to_string(), "-3/4");
  EXPECT_EQ(Polynomial::monomial({1, 0, 3}, Rational(1, 2)).to_string(), "1/2*x1*x3^3");
}

TEST(Embed, Renaming) {
  const std::vector<int> id{1, 2};
  EXPECT_EQ(embed(f_4_2(), id, 2), f_4_2());
  const std::vector<int> g{2, 4};
  EXPECT_EQ(embed(f_4_2(), g, 4).to_string(), "x2^4 - 6*x2^2*x4^2 + x4^4");
  const std::vector<int> h{1, 3, 4};
  Polynomial e = embed(f_6_3(), h, 4);
  EXPECT_TRUE(laplacian(e).is_zero());
  EXPECT_EQ(e.degree(), 6U);
  const std::vector<int> bad{2, 1};
  EXPECT_THROW(embed(f_4_2(), bad, 4), std::invalid_argument);
  const std::vector<int> out_of_range{3, 5};
  EXPECT_THROW(embed(f_4_2(), out_of_range, 4), std::invalid_argument);
}

TEST(Embed, IncreasingMapsCount) {
  for (int n = 1; n <= 8; ++n)
    for (int j = 0; j <= n; ++j) EXPECT_EQ(BigInt(increasing_maps(n, j).size()), binomial(n, j));
}

// Independent closed form of the Gegenbauer polynomial C_s^lambda:
//   sum_k (-1)^k (lambda)_{s-k} / (k! (s-2k)!) (2x)^{s-2k}.
// The Rodrigues polynomial must be a nonzero multiple of it.
namespace {

UPoly gegenbauer_series(int s, const Rational& lambda) {
  std::vector<Rational> c(static_cast<std::size_t>(s) + 1);
  for (int k = 0; 2 * k <= s; ++k) {
    Rational rising{1};
    for (int i = 0; i < s - k; ++i) rising *= lambda + i;
    Rational v = rising / Rational(factorial(static_cast<unsigned>(k)) * factorial(static_cast<unsigned>(s - 2 * k)));
    v *= pow(Rational(2), static_cast<unsigned>(s - 2 * k));
    if (k % 2 != 0) v = -v;
    c[static_cast<std::size_t>(s - 2 * k)] = v;
  }
  return UPoly(c);
}

bool proportional(const UPoly& a, const UPoly& b) {
  if (a.degree() != b.degree() || a.is_zero()) return false;
  const Rational ratio = a.leading() / b.leading();
  return a == ratio * b;
}

}  // namespace

TEST(Gegenbauer, LowDegrees) {
  EXPECT_EQ(gegenbauer(0, Rational(3, 2)).poly.degree(), 0);
  const auto p1 = gegenbauer(1, Rational(1, 2));
  EXPECT_EQ(p1.poly.degree(), 1);
  EXPECT_EQ(p1.poly.coefficient(0), 0);
  const auto p2 = gegenbauer(2, Rational(1, 2));
  EXPECT_TRUE(proportional(p2.poly, UPoly({Rational(-1), Rational(0), Rational(3)})));
  EXPECT_THROW(gegenbauer(2, Rational(-1)), std::invalid_argument);
  EXPECT_THROW(gegenbauer(-1, Rational(1)), std::invalid_argument);
}

TEST(Gegenbauer, MatchesSeriesFormula) {
  for (int s = 0; s <= 10; ++s)
    for (int twice = 1; twice <= 9; ++twice) {
      const Rational alpha(twice, 2);
      EXPECT_TRUE(proportional(gegenbauer(s, alpha).poly, gegenbauer_series(s, alpha))) << s << " " << alpha;
    }
}

TEST(Gegenbauer, ParityAndRoots) {
  for (int s = 0; s <= 10; ++s) {
    for (int twice = 1; twice <= 9; ++twice) {
      const auto g = gegenbauer(s, Rational(twice, 2));
      EXPECT_EQ(g.poly.degree(), s);
      for (std::size_t i = 0; i < g.coefficients().size(); ++i) {
        if ((static_cast<int>(i) - s) % 2 != 0) {
          EXPECT_EQ(g.coefficients()[i], 0);
        }
      }
      if (s > 0) {
        EXPECT_EQ(count_distinct_roots(g.poly, Rational(-1), Rational(1)), s);
      }
    }
  }
}

TEST(Sturm, KnownPolynomials) {
  // (x - 1/2)(x + 1/3)(x - 2)
  UPoly p = UPoly({Rational(-1, 2), Rational(1)}) * UPoly({Rational(1, 3), Rational(1)}) *
            UPoly({Rational(-2), Rational(1)});
  EXPECT_EQ(count_distinct_roots(p, Rational(-1), Rational(1)), 2);
  EXPECT_EQ(count_distinct_roots(p, Rational(-1), Rational(3)), 3);
  EXPECT_EQ(count_distinct_roots(p * p, Rational(-1), Rational(3)), 3);
  EXPECT_EQ(count_distinct_roots(p, Rational(1, 2), Rational(2)), 0);
  EXPECT_EQ(count_distinct_roots(UPoly({Rational(1), Rational(0), Rational(1)}), Rational(-5), Rational(5)), 0);
}

TEST(BuildingBlock, Shapes) {
  for (int n = 3; n <= 6; ++n) {
    for (int k = 0; k <= n - 3; ++k) {
      for (int mk = 0; mk <= 6; ++mk) {
        for (int mn = 0; mn <= mk; ++mn) {
          const Polynomial g = building_block_g(k, mk, mn, n);
          ASSERT_FALSE(g.is_zero());
          EXPECT_TRUE(g.is_homogeneous());
          EXPECT_EQ(g.degree(), static_cast<unsigned>(mk - mn));
          for (const auto& [e, c] : g.terms()) {
            for (int i = 0; i <= k; ++i) EXPECT_EQ(e[static_cast<std::size_t>(i)], i == k ? e[static_cast<std::size_t>(i)] : 0U);
            for (int i = k + 1; i < n; ++i) EXPECT_EQ(e[static_cast<std::size_t>(i)] % 2, 0U);
          }
        }
      }
    }
  }
  EXPECT_EQ(building_block_g(0, 3, 3, 4).degree(), 0U);
  const Polynomial lin = building_block_g(1, 4, 3, 5);
  EXPECT_EQ(lin.size(), 1U);
  EXPECT_NE(lin.coefficient({0, 1, 0, 0, 0}), 0);
  EXPECT_THROW(building_block_g(2, 3, 1, 4), std::invalid_argument);
  EXPECT_THROW(building_block_g(0, 1, 2, 4), std::invalid_argument);
}
