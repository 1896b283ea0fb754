#include "hyperoct/harmonic.hpp"
#include "hyperoct/moments.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace hyperoct;

namespace {

// Gamma(m/2) / sqrt(pi)^[m odd], as an exact rational.
Rational gamma_half(int m) {
  if (m % 2 == 0) return Rational(factorial(static_cast<unsigned>(m / 2 - 1)));
  // Gamma(h + 1/2) = (2h)! / (4^h h!) sqrt(pi)
  const auto h = static_cast<unsigned>((m - 1) / 2);
  return Rational(factorial(2 * h)) / Rational(pow(BigInt(4), h) * factorial(h));
}

// Unit-sphere average of x^alpha as
//   Gamma(n/2) prod Gamma((a_i+1)/2) / (pi^(n/2) Gamma((n+|a|)/2)).
// The sqrt(pi) factors cancel: one per coordinate upstairs, n of them in pi^(n/2),
// and Gamma(n/2), Gamma((n+|a|)/2) share their parity when |a| is even.
Rational gamma_ratio_average(int n, const Exponents& a) {
  unsigned deg = 0;
  Rational prod{1};
  for (unsigned e : a) {
    if (e % 2 != 0) return Rational{0};
    deg += e;
    prod *= gamma_half(static_cast<int>(e) + 1);
  }
  return prod * gamma_half(n) / gamma_half(n + static_cast<int>(deg));
}

std::vector<Rational> pt_from(std::initializer_list<int> v) {
  std::vector<Rational> out;
  for (int x : v) out.emplace_back(x);
  return out;
}

DesignConfig octahedron() { return DesignConfig{3, {{1, 1, 1}}}; }

// Harmonic form of the design property: sum w |x|^(2j) phi(x) = 0 for every
// harmonic phi of degree 1 <= l <= t and 0 <= j <= (t - l)/2.
bool harmonic_criterion(const DesignConfig& cfg, int t) {
  // Odd degrees vanish on every antipodal layer.
  for (int l = 2; l <= t; l += 2) {
    for (const auto& b : full_basis(cfg.n, l, BasisLimits{6, 12})) {
      for (int j = 0; 2 * j <= t - l; ++j) {
        Rational sum{0};
        for (const auto& layer : cfg.layers) {
          const Rational scale = pow(layer.point_scale(), static_cast<unsigned>(l / 2)) *
                                 pow(layer.r_squared, static_cast<unsigned>(j));
          sum += layer.weight * scale * orbit_polynomial_sum(cfg.n, layer.k, b.poly);
        }
        if (sum != 0) return false;
      }
    }
  }
  return true;
}

}  // namespace

TEST(SphereAverage, SpecExamples) {
  const std::vector<unsigned> a{2, 0, 0}, b{1, 1, 0}, c{4, 0, 0, 0};
  EXPECT_EQ(sphere_monomial_average(3, a, Rational(1)), Rational(1, 3));
  EXPECT_EQ(sphere_monomial_average(3, b, Rational(5)), 0);
  EXPECT_EQ(sphere_monomial_average(4, c, Rational(1)), Rational(1, 8));
  EXPECT_EQ(sphere_monomial_average(3, a, Rational(9, 4)), Rational(3, 4));
  EXPECT_THROW(sphere_monomial_average(1, std::vector<unsigned>{2}, Rational(1)), std::invalid_argument);
}

TEST(SphereAverage, AgreesWithGammaRatio) {
  for (int n = 2; n <= 8; ++n) {
    for (unsigned d = 0; d <= 10; d += 2) {
      for_each_monomial(static_cast<std::size_t>(n), d, [&](const Exponents& e) {
        EXPECT_EQ(sphere_monomial_average(n, e, Rational(1)), gamma_ratio_average(n, e));
      });
    }
  }
}

TEST(SphereAverage, SumOfSquaresIsRadius) {
  for (int n = 2; n <= 7; ++n) {
    const Rational r2(7, 3);
    const auto nv = static_cast<std::size_t>(n);
    EXPECT_EQ(sphere_average(sum_of_squares(nv, 1, nv), r2), r2);
    EXPECT_EQ(sphere_average(pow(sum_of_squares(nv, 1, nv), 3), r2), pow(r2, 3));
  }
}

TEST(DesignResidual, SpecExamples) {
  EXPECT_EQ(design_residual(octahedron(), Polynomial::monomial({2, 0, 0})), 0);
  const std::vector<int> g{1, 2};
  EXPECT_NE(design_residual(octahedron(), embed(f_4_2(), g, 3)), 0);
  EXPECT_EQ(design_residual(octahedron(), Polynomial::monomial({3, 0, 0})), 0);
  EXPECT_EQ(design_residual(octahedron(), Polynomial::monomial({2, 1, 0})), 0);
  EXPECT_THROW(design_residual(octahedron(), f_4_2()), std::invalid_argument);
}

TEST(DesignResidual, PartiallyOddMonomialsVanish) {
  const DesignConfig cfg{4, {{1, 1, 2}, {3, Rational(5, 2), Rational(1, 7)}, {4, 3, 1}}};
  for (unsigned d = 1; d <= 7; ++d) {
    for_each_monomial(4, d, [&](const Exponents& e) {
      bool odd = false;
      for (unsigned a : e) odd = odd || a % 2 != 0;
      if (odd) {
        EXPECT_EQ(design_residual(cfg, Polynomial::monomial(e)), 0);
      }
    });
  }
}

TEST(DesignResidual, EqualRadiiMergeIntoOneSphere) {
  // I^4_1 and I^4_4 on the unit sphere with constant weight form one sphere.
  const DesignConfig cfg{4, {{1, 1, 1}, {4, 1, 1}}};
  EXPECT_EQ(cfg.sphere_count(), 1);
  EXPECT_TRUE(verify_strength(cfg, 5));
}

TEST(DesignResidual, PointSetMatchesConfig) {
  const DesignConfig unscaled{3, {{1, 1, 1}, {3, 3, Rational(9, 32)}}};
  PointSet set{3, {}};
  for (const auto& layer : unscaled.layers) {
    for (const auto& p : enumerate_orbit(3, layer.k)) {
      // Raw +-1 coordinates, so the matching config has r^2 = k.
      WeightedPoint w{{}, layer.weight};
      for (int c : p.coords) w.x.emplace_back(c);
      set.points.push_back(w);
    }
  }
  for (unsigned d = 0; d <= 6; ++d) {
    for_each_monomial(3, d, [&](const Exponents& e) {
      const auto m = Polynomial::monomial(e);
      EXPECT_EQ(design_residual(set, m), design_residual(unscaled, m));
    });
  }
}

TEST(Oracle, SpecExamples) {
  const DesignConfig d4{4, {{2, 2, 1}}};
  EXPECT_TRUE(verify_strength(d4, 5));
  const auto v = find_violation(d4, 6);
  ASSERT_TRUE(v.has_value());
  EXPECT_EQ(total_degree(v->monomial), 6U);
  EXPECT_EQ(max_strength_oracle(d4), 5);

  EXPECT_TRUE(verify_strength(DesignConfig{3, {{2, 1, 1}}}, 3));
  EXPECT_EQ(max_strength_oracle(DesignConfig{3, {{2, 1, 1}, {3, 2, 5}}}), 3);
  EXPECT_EQ(max_strength_oracle(DesignConfig{3, {{2, 3, Rational(1, 3)}, {3, 1, 2}}}), 3);

  // +-e1 in R^3: the degree-2 moments are anisotropic.
  PointSet pair{3, {{pt_from({1, 0, 0}), Rational(1)}, {pt_from({-1, 0, 0}), Rational(1)}}};
  EXPECT_EQ(max_strength_oracle(pair), 1);
}

TEST(Oracle, MonotoneInT) {
  std::mt19937 rng(17);
  std::uniform_int_distribution<int> pick(1, 4);
  for (int trial = 0; trial < 15; ++trial) {
    DesignConfig cfg{4, {}};
    for (int k = 1; k <= 4; ++k) {
      if (pick(rng) <= 2) cfg.layers.push_back({k, Rational(pick(rng)), Rational(pick(rng), pick(rng))});
    }
    if (cfg.layers.empty()) cfg.layers.push_back({2, 1, 1});
    bool prev = true;
    for (int t = 0; t <= 9; ++t) {
      const bool now = verify_strength(cfg, t);
      if (!prev) {
        EXPECT_FALSE(now);
      }
      prev = now;
    }
  }
}

TEST(Oracle, HarmonicFormulationAgrees) {
  const std::vector<DesignConfig> configs{
      octahedron(),
      DesignConfig{3, {{1, 1, 1}, {3, 2, Rational(9, 32)}}},
      DesignConfig{3, {{1, 1, 1}, {2, 1, 1}, {3, 1, 1}}},
      DesignConfig{3, {{2, 3, 1}}},
      DesignConfig{4, {{2, 2, 1}}},
      DesignConfig{4, {{1, 1, 1}, {2, 2, Rational(1, 8)}, {4, 1, 1}}},
  };
  for (const auto& cfg : configs) {
    for (int t = 1; t <= 7; ++t) EXPECT_EQ(verify_strength(cfg, t), harmonic_criterion(cfg, t)) << t;
  }
}
