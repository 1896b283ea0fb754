#include "hyperoct/harmonic.hpp"
#include "hyperoct/linalg.hpp"

#include <gtest/gtest.h>

#include <cstdlib>
#include <fstream>
#include <sstream>

using namespace hyperoct;

namespace {

// Set HYPEROCT_UPDATE_GOLDEN=1 to rewrite the files instead of comparing.
void check_golden(const std::string& name, const std::string& text) {
  const std::string path = std::string(HYPEROCT_GOLDEN_DIR) + "/" + name;
  if (std::getenv("HYPEROCT_UPDATE_GOLDEN") != nullptr) {
    std::ofstream(path) << text;
    return;
  }
  std::ifstream in(path);
  ASSERT_TRUE(in) << "missing golden file " << path;
  std::stringstream buf;
  buf << in.rdbuf();
  EXPECT_EQ(buf.str(), text) << name;
}

std::size_t expected_criterion_size(int n, int s) {
  switch (s) {
    case 2:
      return static_cast<std::size_t>(n - 1);
    case 4:
      return static_cast<std::size_t>(binomial(n, 2));
    case 6:
      return static_cast<std::size_t>(binomial(n, 2) + binomial(n, 3));
    default:
      return static_cast<std::size_t>(binomial(n, 2) + 2 * binomial(n, 3) + binomial(n, 4));
  }
}

}  // namespace

TEST(FullBasis, SpecSizes) {
  EXPECT_EQ(full_basis(3, 2).size(), 5U);
  EXPECT_EQ(full_basis(3, 1).size(), 3U);
  EXPECT_EQ(full_basis(4, 4).size(), 25U);
}

TEST(FullBasis, DimensionHarmonicityIndependence) {
  for (int n = 3; n <= 5; ++n) {
    for (int s = 1; s <= 8; ++s) {
      const auto basis = full_basis(n, s);
      EXPECT_EQ(BigInt(basis.size()), harmonic_dimension(n, s)) << n << "," << s;
      EXPECT_EQ(harmonic_dimension(n, s), 2 * binomial(n + s - 3, n - 2) + binomial(n + s - 3, n - 3));
      std::vector<Polynomial> polys;
      for (const auto& b : basis) {
        EXPECT_TRUE(laplacian(b.poly).is_zero());
        EXPECT_TRUE(b.poly.is_homogeneous());
        EXPECT_EQ(b.poly.degree(), static_cast<unsigned>(s));
        EXPECT_EQ(b.m.front(), s);
        polys.push_back(b.poly);
      }
      EXPECT_TRUE(linearly_independent(polys)) << n << "," << s;
    }
  }
}

TEST(FullBasis, RejectsOutOfRange) {
  EXPECT_THROW(full_basis(2, 3), std::invalid_argument);
  EXPECT_THROW(full_basis(7, 3), std::invalid_argument);
  EXPECT_THROW(full_basis(3, 0), std::invalid_argument);
  EXPECT_THROW(full_basis(3, 9), std::invalid_argument);
  EXPECT_NO_THROW(full_basis(3, 10, BasisLimits{6, 10}));
}

TEST(FullyEven, Counts) {
  EXPECT_EQ(fully_even_subset(full_basis(3, 2)).size(), 2U);
  EXPECT_EQ(fully_even_subset(full_basis(4, 4)).size(), 6U);
  EXPECT_EQ(fully_even_subset(full_basis(3, 8)).size(), 5U);
  for (int n = 3; n <= 5; ++n) {
    for (int s = 2; s <= 8; s += 2) {
      const auto sub = fully_even_subset(full_basis(n, s));
      EXPECT_EQ(BigInt(sub.size()), fully_even_dimension(n, s));
      for (const auto& b : sub) EXPECT_TRUE(b.poly.is_fully_even());
    }
  }
  EXPECT_THROW(fully_even_subset(full_basis(3, 3)), std::invalid_argument);
}

TEST(CriterionBasis, Examples) {
  const auto f2 = criterion_basis(3, 2);
  ASSERT_EQ(f2.size(), 2U);
  EXPECT_EQ(f2.elements[0].poly.to_string(), "x1^2 - x3^2");
  EXPECT_EQ(f2.elements[1].poly.to_string(), "x2^2 - x3^2");
  EXPECT_EQ(criterion_basis(4, 4).size(), 6U);
  EXPECT_EQ(criterion_basis(4, 8).size(), 15U);
  EXPECT_EQ(criterion_basis(3, 8).size(), 5U);
  EXPECT_THROW(criterion_basis(4, 5), std::invalid_argument);
  EXPECT_THROW(criterion_basis(4, 10), std::invalid_argument);
}

TEST(CriterionBasis, CardinalityHarmonicIndependent) {
  for (int n = 3; n <= 6; ++n) {
    for (int s = 2; s <= 8; s += 2) {
      const auto basis = criterion_basis(n, s);
      EXPECT_EQ(basis.size(), expected_criterion_size(n, s));
      EXPECT_EQ(BigInt(basis.size()), fully_even_dimension(n, s));
      for (const auto& e : basis.elements) {
        EXPECT_TRUE(laplacian(e.poly).is_zero()) << e.label;
        EXPECT_TRUE(e.poly.is_fully_even()) << e.label;
        EXPECT_EQ(e.poly.degree(), static_cast<unsigned>(s));
      }
      EXPECT_TRUE(linearly_independent(basis.polynomials())) << n << "," << s;
    }
  }
}

TEST(CriterionPolynomials, SkewUnderDocumentedSwap) {
  EXPECT_EQ(f_6_2().swap_variables(1, 2), -f_6_2());
  EXPECT_EQ(f_8_3_1().swap_variables(1, 2), -f_8_3_1());
  EXPECT_EQ(f_8_3_2().swap_variables(1, 3), -f_8_3_2());
  // The symmetric ones are not skew.
  EXPECT_EQ(f_4_2().swap_variables(1, 2), f_4_2());
  EXPECT_EQ(f_6_3().swap_variables(2, 3), f_6_3());
}

TEST(CriterionPolynomials, HarmonicAndEven) {
  for (const auto& f : {f_4_2(), f_6_2(), f_6_3(), f_8_2(), f_8_3_1(), f_8_3_2(), f_8_4()}) {
    EXPECT_TRUE(laplacian(f).is_zero()) << f.to_string();
    EXPECT_TRUE(f.is_fully_even());
    EXPECT_TRUE(f.is_homogeneous());
  }
}

TEST(Golden, CriterionBases) {
  for (int s : {4, 6, 8}) {
    std::string text;
    for (const auto& e : criterion_basis(4, s).elements) {
      text += e.label + " [";
      for (std::size_t i = 0; i < e.map.size(); ++i) text += (i ? "," : "") + std::to_string(e.map[i]);
      text += "] " + e.poly.to_string() + "\n";
    }
    check_golden("criterion_n4_s" + std::to_string(s) + ".txt", text);
  }
}

TEST(Golden, FullBasisN3) {
  for (int s : {2, 4}) {
    std::string text;
    for (const auto& b : full_basis(3, s)) {
      text += "(";
      for (int m : b.m) text += std::to_string(m) + ",";
      text += std::to_string(b.mu) + ") " + b.poly.to_string() + "\n";
    }
    check_golden("full_basis_n3_s" + std::to_string(s) + ".txt", text);
  }
}
