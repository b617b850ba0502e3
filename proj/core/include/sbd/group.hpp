#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sbd/types.hpp"

namespace sbd {

/// Full multiplication table of a finite group: table[i][j] is the index of
/// elements[i] * elements[j].
struct CayleyTable {
  std::vector<std::string> elements;
  std::vector<std::vector<int>> table;
  int identity_index = -1;

  std::size_t order() const { return elements.size(); }

  /// Index of a label; throws UnknownLabelError.
  int index_of(const std::string& label) const;

  /// Element index of elements[i] * elements[j].
  int product(int i, int j) const { return table[i][j]; }

  /// Eager group-axiom checks: shape, Latin-square rows and columns,
  /// two-sided identity, associativity over all triples (O(n^3)). Fills
  /// identity_index. Throws CayleyValidationError naming the violation.
  void validate();
};

struct ConjugacyClass {
  std::string representative;
  int size = 0;
};

/// Character table: one row of complex character values per irrep, one
/// column per conjugacy class. The first class must be the identity class,
/// where each character equals the irrep dimension.
struct CharacterData {
  std::vector<ConjugacyClass> classes;
  std::vector<std::vector<Complex>> characters;  // [irrep][class]
  std::vector<int> irrep_dims;

  /// Sum of class sizes.
  int group_order() const;

  /// Throws CharacterDataError on inconsistent data (wrong row lengths,
  /// character at identity != dimension, sum of dim^2 != group order).
  void validate() const;
};

/// Permutation matrices of the left-multiplication action of the chosen
/// generators on the group elements, in the basis order of t.elements.
///
/// Convention: matrix(g) has entry 1 at (row index(h), column index(g*h)),
/// i.e. row h holds the image of basis element h. Products therefore
/// compose reversed: matrix(g) * matrix(h) = matrix(h*g).
///
/// Expects a validated table; throws UnknownLabelError for labels not in it.
GeneratorSet regular_representation(const CayleyTable& t,
                                    const std::vector<std::string>& generator_labels);

/// Multiplicity of each irrep in the regular representation, by the
/// character inner product against the regular character (group order at
/// the identity class, zero elsewhere). Each result must come out integer
/// within 1e-8 or CharacterDataError is thrown; for consistent data the
/// multiplicities equal the irrep dimensions.
std::vector<int> multiplicities_in_regular(const CharacterData& cd);

/// One block family per irrep, in the given order: dimension read off the
/// matrices, multiplicity as given. When expected_dimension is provided,
/// the multiplicity-weighted dimensions must sum to it.
/// Throws SpecDimensionError on inconsistent counts or dimension sums.
BlockSpec blockspec_from_irreps(
    const std::vector<std::vector<Matrix>>& irrep_generators,
    const std::vector<int>& multiplicities,
    std::optional<Index> expected_dimension = std::nullopt);

}  // namespace sbd
