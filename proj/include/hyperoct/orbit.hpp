#pragma once

// Generalized hyperoctahedra I^n_k (all vectors with exactly k entries equal
// to +-1, the rest 0) and weighted unions of scaled copies of them.

#include "hyperoct/polynomial.hpp"
#include "hyperoct/rational.hpp"

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace hyperoct {

inline constexpr std::uint64_t kDefaultOrbitCap = 1'000'000;

class OrbitSizeError : public std::length_error {
public:
  using std::length_error::length_error;
};

/// A point of I^n_k, stored unscaled with integer entries in {-1, 0, 1}.
struct OrbitPoint {
  std::vector<int> coords;
  int layer = -1;  // index of the owning layer when built from a DesignConfig

  /// 1-based indices of the nonzero coordinates.
  std::vector<int> support() const {
    std::vector<int> s;
    for (std::size_t i = 0; i < coords.size(); ++i)
      if (coords[i] != 0) s.push_back(static_cast<int>(i) + 1);
    return s;
  }
  int k() const { return static_cast<int>(support().size()); }
  int squared_norm() const {
    int s = 0;
    for (int c : coords) s += c * c;
    return s;
  }
  friend bool operator==(const OrbitPoint&, const OrbitPoint&) = default;
};

/// |I^n_k| = 2^k C(n, k).
inline BigInt orbit_size(int n, int k) {
  if (k < 0 || k > n) return BigInt{0};
  return pow2(static_cast<unsigned>(k)) * binomial(n, k);
}

/// All points of I^n_k: supports in lexicographic order, and for each
/// support the sign patterns with + before -.
inline std::vector<OrbitPoint> enumerate_orbit(int n, int k, std::uint64_t cap = kDefaultOrbitCap) {
  if (n < 1 || k < 1 || k > n) throw std::invalid_argument("enumerate_orbit: need 1 <= k <= n");
  const BigInt size = orbit_size(n, k);
  if (size > cap) {
    throw OrbitSizeError("enumerate_orbit: |I^" + std::to_string(n) + "_" + std::to_string(k) + "| = " +
                         size.str() + " exceeds the cap of " + std::to_string(cap));
  }
  std::vector<OrbitPoint> out;
  out.reserve(static_cast<std::size_t>(size));
  for (const auto& supp : increasing_maps(n, k)) {
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << k); ++mask) {
      OrbitPoint p{std::vector<int>(static_cast<std::size_t>(n), 0), -1};
      for (int j = 0; j < k; ++j) {
        p.coords[static_cast<std::size_t>(supp[static_cast<std::size_t>(j)] - 1)] =
            ((mask >> (k - 1 - j)) & 1U) != 0 ? -1 : 1;
      }
      out.push_back(std::move(p));
    }
  }
  return out;
}

/// Sum over k in J of 2^k C(n, k).
inline BigInt orbit_union_size(int n, const std::vector<int>& J) {
  BigInt total{0};
  for (int k : std::set<int>(J.begin(), J.end())) {
    if (k < 1 || k > n) throw std::invalid_argument("orbit_union_size: J must be a subset of 1..n");
    total += orbit_size(n, k);
  }
  return total;
}

/// Checks that {0} and I^n_1, ..., I^n_n partition {-1,0,1}^n: every one of
/// the 3^n vectors is hit exactly once by the enumerated orbits.
inline bool partition_check(int n) {
  if (n < 1 || n > 12) throw std::invalid_argument("partition_check: n must lie in 1..12");
  std::size_t total = 1;
  for (int i = 0; i < n; ++i) total *= 3;
  std::vector<unsigned char> hits(total, 0);
  auto index_of = [&](const std::vector<int>& v) {
    std::size_t idx = 0;
    for (int c : v) idx = idx * 3 + static_cast<std::size_t>(c + 1);
    return idx;
  };
  hits[index_of(std::vector<int>(static_cast<std::size_t>(n), 0))] += 1;
  for (int k = 1; k <= n; ++k) {
    for (const auto& p : enumerate_orbit(n, k)) {
      if (p.squared_norm() != k) return false;
      hits[index_of(p.coords)] += 1;
    }
  }
  return std::all_of(hits.begin(), hits.end(), [](unsigned char h) { return h == 1; });
}

/// One scaled orbit (r/sqrt(k)) I^n_k, carried as the squared radius r^2 so
/// every quantity stays rational.
struct Layer {
  int k = 1;
  Rational r_squared{1};
  Rational weight{1};

  /// Squared scale applied to each unscaled orbit point: r^2 / k.
  Rational point_scale() const { return r_squared / k; }
  friend bool operator==(const Layer&, const Layer&) = default;
};

/// X(J) = union over layers of (r_k / sqrt(k)) I^n_k with weight w_k on each
/// point. Antipodal and fully symmetric by construction.
struct DesignConfig {
  int n = 3;
  std::vector<Layer> layers;

  void validate() const {
    if (n < 3) throw std::invalid_argument("DesignConfig: n must be at least 3");
    if (layers.empty()) throw std::invalid_argument("DesignConfig: at least one layer is required");
    std::set<int> seen;
    for (const auto& l : layers) {
      if (l.k < 1 || l.k > n) {
        throw std::invalid_argument("DesignConfig: layer k=" + std::to_string(l.k) + " outside 1..n");
      }
      if (!seen.insert(l.k).second) {
        throw std::invalid_argument("DesignConfig: duplicate layer k=" + std::to_string(l.k));
      }
      if (l.r_squared <= 0) throw std::invalid_argument("DesignConfig: r_squared must be positive");
      if (l.weight <= 0) throw std::invalid_argument("DesignConfig: weights must be positive");
    }
  }

  std::vector<int> J() const {
    std::vector<int> out;
    for (const auto& l : layers) out.push_back(l.k);
    std::sort(out.begin(), out.end());
    return out;
  }

  /// Distinct squared radii, ascending.
  std::vector<Rational> norm_spectrum() const {
    std::vector<Rational> r;
    for (const auto& l : layers) r.push_back(l.r_squared);
    std::sort(r.begin(), r.end());
    r.erase(std::unique(r.begin(), r.end()), r.end());
    return r;
  }

  int sphere_count() const { return static_cast<int>(norm_spectrum().size()); }

  BigInt size() const { return orbit_union_size(n, J()); }

  const Layer* find_layer(int k) const {
    for (const auto& l : layers)
      if (l.k == k) return &l;
    return nullptr;
  }

  friend bool operator==(const DesignConfig&, const DesignConfig&) = default;
};

}  // namespace hyperoct
