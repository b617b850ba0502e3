#pragma once

#include "sbd/group.hpp"

namespace sbd {

/// Built-in end-to-end instance: the dihedral group of order 8, generated by
/// a four-fold rotation a and a reflection b (a^4 = b^2 = (ab)^2 = e).
struct D8Example {
  /// Multiplication table in the basis {e, a, a2, a3, b, ab, a2b, a3b}.
  CayleyTable table;
  /// Five conjugacy classes, five irreps (four 1-dimensional, one
  /// 2-dimensional).
  CharacterData characters;
  /// Regular representation of a and b: two 8x8 permutation matrices.
  GeneratorSet generators;
  /// Block targets built from the irreps with multiplicities {1,1,1,1,2}.
  BlockSpec blocks;
  /// A known unitary transfer matrix taking the generators to the blocks.
  Matrix reference_s;
};

D8Example d8_example();

}  // namespace sbd
