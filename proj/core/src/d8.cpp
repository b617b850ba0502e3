#include "sbd/d8.hpp"

#include <cmath>

namespace sbd {

namespace {

// Elements encoded as a^i b^s -> i + 4*s with i in 0..3, s in 0..1.
// Multiplication uses b a = a^3 b.
int d8_mul(int x, int y) {
  const int i1 = x % 4, s1 = x / 4;
  const int i2 = y % 4, s2 = y / 4;
  const int i = s1 == 0 ? (i1 + i2) % 4 : (i1 - i2 + 4) % 4;
  const int s = (s1 + s2) % 2;
  return i + 4 * s;
}

}  // namespace

D8Example d8_example() {
  D8Example ex;

  ex.table.elements = {"e", "a", "a2", "a3", "b", "ab", "a2b", "a3b"};
  ex.table.table.assign(8, std::vector<int>(8, 0));
  for (int i = 0; i < 8; ++i) {
    for (int j = 0; j < 8; ++j) {
      ex.table.table[i][j] = d8_mul(i, j);
    }
  }
  ex.table.validate();

  ex.characters.classes = {{"e", 1}, {"a2", 1}, {"a", 2}, {"b", 2}, {"ab", 2}};
  ex.characters.characters = {
      {1, 1, 1, 1, 1},
      {1, 1, 1, -1, -1},
      {1, 1, -1, 1, -1},
      {1, 1, -1, -1, 1},
      {2, -2, 0, 0, 0},
  };
  ex.characters.irrep_dims = {1, 1, 1, 1, 2};

  ex.generators = regular_representation(ex.table, {"a", "b"});

  const Complex i(0.0, 1.0);
  auto scalar = [](Complex value) {
    Matrix m(1, 1);
    m(0, 0) = value;
    return m;
  };
  Matrix rho2_a(2, 2);
  rho2_a << i, 0.0, 0.0, -i;
  Matrix rho2_b(2, 2);
  rho2_b << 0.0, 1.0, 1.0, 0.0;

  // One-dimensional irreps read off the character values at a and b
  // (classes 2 and 3), plus the faithful two-dimensional irrep.
  std::vector<std::vector<Matrix>> irreps;
  for (std::size_t b = 0; b < 4; ++b) {
    irreps.push_back({scalar(ex.characters.characters[b][2]),
                      scalar(ex.characters.characters[b][3])});
  }
  irreps.push_back({rho2_a, rho2_b});
  ex.blocks = blockspec_from_irreps(
      irreps, multiplicities_in_regular(ex.characters), 8);

  // Columns: one eigenvector per 1D irrep, then the reshaped kernel vectors
  // of the 2D family. All entries over sqrt(8).
  const double r2 = std::sqrt(2.0);
  const Complex ir2 = i * r2;
  Matrix s(8, 8);
  s.col(0) << 1, 1, 1, 1, 1, 1, 1, 1;
  s.col(1) << 1, 1, 1, 1, -1, -1, -1, -1;
  s.col(2) << -1, 1, -1, 1, -1, 1, -1, 1;
  s.col(3) << 1, -1, 1, -1, -1, 1, -1, 1;
  s.col(4) << -ir2, r2, ir2, -r2, 0, 0, 0, 0;
  s.col(5) << 0, 0, 0, 0, -ir2, -r2, ir2, r2;
  s.col(6) << 0, 0, 0, 0, -ir2, r2, ir2, -r2;
  s.col(7) << -ir2, -r2, ir2, r2, 0, 0, 0, 0;
  ex.reference_s = s / std::sqrt(8.0);

  return ex;
}

}  // namespace sbd
