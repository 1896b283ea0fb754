// Builds the three tight families, prints their strengths and compares the
// sizes with the Fisher-type bound.

#include "hyperoct/hyperoct.hpp"

#include <iostream>

int main() {
  using namespace hyperoct;
  struct Item {
    const char* name;
    DesignConfig cfg;
  };
  const Item items[] = {
      {"octahedron + cube", tight_5_3d(1, 2)},
      {"three layers in R^3", tight_7_3d(1, Rational(8, 3))},
      {"D4 and D4* shells", tight_7_4d(1, 2)},
  };
  for (const auto& it : items) {
    const auto cert = is_tight(it.cfg);
    std::cout << it.name << ": strength " << cert.t << " on " << cert.p << " spheres, " << cert.size
              << " points, N = " << cert.bound.value << (cert.tight ? " (tight)" : "") << "\n";
    for (const auto& l : it.cfg.layers) {
      std::cout << "  k=" << l.k << "  r^2=" << to_string(l.r_squared) << "  w=" << to_string(l.weight) << "\n";
    }
  }
}
