#pragma once

// Fisher-type lower bounds for antipodal designs on p concentric spheres and
// the three fully symmetric families that meet them.

#include "hyperoct/moments.hpp"
#include "hyperoct/orbit.hpp"
#include "hyperoct/rational.hpp"
#include "hyperoct/strength.hpp"

#include <optional>
#include <stdexcept>
#include <vector>

namespace hyperoct {

struct FisherBound {
  int n = 0;
  int p = 0;
  int t = 0;
  BigInt value{0};
  std::vector<BigInt> terms;  // N_1, ..., N_p
};

/// d(s) = C(s+n-1, n-1) for s >= 0 and 0 below.
inline BigInt fisher_d(int n, int s) { return s < 0 ? BigInt{0} : binomial(s + n - 1, n - 1); }

/// N(n,p,t) = sum_{k=1}^p d(floor(t/2)+2-2k) + d(floor((t-1)/2)+2-2k).
inline FisherBound fisher_bound(int n, int p, int t) {
  if (n < 2 || p < 1 || t < 0) throw std::invalid_argument("fisher_bound: need n >= 2, p >= 1, t >= 0");
  FisherBound b{n, p, t, BigInt{0}, {}};
  // floor((t-1)/2) for t = 0 is -1, not 0.
  const int half_t = t / 2;
  const int half_t1 = t == 0 ? -1 : (t - 1) / 2;
  for (int k = 1; k <= p; ++k) {
    BigInt nk = fisher_d(n, half_t + 2 - 2 * k) + fisher_d(n, half_t1 + 2 - 2 * k);
    b.value += nk;
    b.terms.push_back(std::move(nk));
  }
  return b;
}

namespace detail {

inline void check_positive(const Rational& r2, const Rational& rho2, const Rational& w) {
  if (r2 <= 0 || rho2 <= 0 || w <= 0) throw std::invalid_argument("tight family: parameters must be positive");
}

}  // namespace detail

/// Octahedron on radius r plus cube on radius rho in R^3; 14 points.
inline DesignConfig tight_5_3d(const Rational& r2, const Rational& rho2, const Rational& w = 1) {
  detail::check_positive(r2, rho2, w);
  return DesignConfig{3, {{1, r2, w}, {3, rho2, Rational(9, 8) * r2 * r2 / (rho2 * rho2) * w}}};
}

/// Three layers in R^3; 26 points.
inline DesignConfig tight_7_3d(const Rational& r2, const Rational& rho2, const Rational& w = 1) {
  detail::check_positive(r2, rho2, w);
  const Rational m = 3 * r2 + 2 * rho2;
  const Rational m3 = m * m * m;
  return DesignConfig{3,
                      {{1, r2, w},
                       {2, r2 * m / (5 * rho2), 100 * pow(rho2, 3) / m3 * w},
                       {3, m / 5, 675 * pow(r2, 3) / (8 * m3) * w}}};
}

/// D4* shells at radius r around the D4 root shell at radius rho; 48 points.
inline DesignConfig tight_7_4d(const Rational& r2, const Rational& rho2, const Rational& w = 1) {
  detail::check_positive(r2, rho2, w);
  return DesignConfig{4, {{1, r2, w}, {2, rho2, pow(r2 / rho2, 3) * w}, {4, r2, w}}};
}

struct TightnessCertificate {
  DesignConfig config;
  StrengthReport report;
  FisherBound bound;
  int t = 0;                          // strength the bound was evaluated at
  int p = 0;                          // number of distinct norms
  BigInt size{0};
  std::optional<bool> oracle_agrees;  // set when n is small enough to enumerate
  bool antipodal = true;              // orbit unions always are
  bool tight = false;
};

/// Tightness of an orbit union: size == N(n, p, t) with t the classified
/// strength, or the given t when it does not exceed that strength.
inline TightnessCertificate is_tight(const DesignConfig& cfg, std::optional<int> t = std::nullopt,
                                     int oracle_max_n = 6) {
  TightnessCertificate c;
  c.config = cfg;
  c.report = classify(cfg);
  if (cfg.n <= oracle_max_n) {
    c.oracle_agrees = max_strength_oracle(cfg, c.report.strength + 2) == c.report.strength;
  }
  c.t = t.value_or(c.report.strength);
  c.p = cfg.sphere_count();
  c.size = cfg.size();
  c.bound = fisher_bound(cfg.n, c.p, c.t);
  c.tight = c.t <= c.report.strength && c.size == c.bound.value;
  return c;
}

}  // namespace hyperoct
