#include "sbd/group.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <unordered_set>
#include <vector>

namespace sbd {

int CayleyTable::index_of(const std::string& label) const {
  const auto it = std::find(elements.begin(), elements.end(), label);
  if (it == elements.end()) {
    throw UnknownLabelError("unknown element label '" + label + "'");
  }
  return static_cast<int>(it - elements.begin());
}

void CayleyTable::validate() {
  const int n = static_cast<int>(elements.size());
  if (n == 0) {
    throw CayleyValidationError("table has no elements");
  }
  {
    std::unordered_set<std::string> seen;
    for (const std::string& label : elements) {
      if (!seen.insert(label).second) {
        throw CayleyValidationError("duplicate element label '" + label + "'");
      }
    }
  }
  if (static_cast<int>(table.size()) != n) {
    throw CayleyValidationError("table must have one row per element");
  }
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(table[i].size()) != n) {
      throw CayleyValidationError("row '" + elements[i] +
                                  "' has the wrong length");
    }
    for (int j = 0; j < n; ++j) {
      if (table[i][j] < 0 || table[i][j] >= n) {
        throw CayleyValidationError("row '" + elements[i] +
                                    "' contains an out-of-range index");
      }
    }
  }

  // Latin square: every row and every column is a permutation.
  for (int i = 0; i < n; ++i) {
    std::vector<bool> seen(n, false);
    for (int j = 0; j < n; ++j) {
      if (seen[table[i][j]]) {
        throw CayleyValidationError("row '" + elements[i] +
                                    "' repeats element '" +
                                    elements[table[i][j]] + "'");
      }
      seen[table[i][j]] = true;
    }
  }
  for (int j = 0; j < n; ++j) {
    std::vector<bool> seen(n, false);
    for (int i = 0; i < n; ++i) {
      if (seen[table[i][j]]) {
        throw CayleyValidationError("column '" + elements[j] +
                                    "' repeats element '" +
                                    elements[table[i][j]] + "'");
      }
      seen[table[i][j]] = true;
    }
  }

  identity_index = -1;
  for (int i = 0; i < n; ++i) {
    bool left = true;
    bool right = true;
    for (int j = 0; j < n; ++j) {
      left = left && table[i][j] == j;
      right = right && table[j][i] == j;
    }
    if (left && right) {
      identity_index = i;
      break;
    }
  }
  if (identity_index < 0) {
    throw CayleyValidationError("table has no two-sided identity element");
  }

  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      for (int k = 0; k < n; ++k) {
        if (table[table[i][j]][k] != table[i][table[j][k]]) {
          throw CayleyValidationError(
              "associativity fails on (" + elements[i] + ", " + elements[j] +
              ", " + elements[k] + ")");
        }
      }
    }
  }
}

GeneratorSet regular_representation(
    const CayleyTable& t, const std::vector<std::string>& generator_labels) {
  const Index n = static_cast<Index>(t.order());
  GeneratorSet gens;
  gens.dimension = n;
  gens.labels = generator_labels;
  gens.matrices.reserve(generator_labels.size());
  for (const std::string& label : generator_labels) {
    const int g = t.index_of(label);
    Matrix m = Matrix::Zero(n, n);
    for (int h = 0; h < static_cast<int>(n); ++h) {
      m(h, t.product(g, h)) = 1.0;
    }
    gens.matrices.push_back(std::move(m));
  }
  return gens;
}

int CharacterData::group_order() const {
  int order = 0;
  for (const ConjugacyClass& c : classes) order += c.size;
  return order;
}

void CharacterData::validate() const {
  if (classes.empty()) {
    throw CharacterDataError("character data has no classes");
  }
  if (characters.size() != irrep_dims.size()) {
    throw CharacterDataError("one character row per irrep dimension required");
  }
  for (const ConjugacyClass& c : classes) {
    if (c.size <= 0) {
      throw CharacterDataError("class '" + c.representative +
                               "' has nonpositive size");
    }
  }
  if (classes[0].size != 1) {
    throw CharacterDataError("first class must be the identity class");
  }
  long long dim_sq = 0;
  for (std::size_t b = 0; b < characters.size(); ++b) {
    if (characters[b].size() != classes.size()) {
      throw CharacterDataError("character row " + std::to_string(b) +
                               " has the wrong length");
    }
    if (irrep_dims[b] <= 0) {
      throw CharacterDataError("irrep dimension must be positive");
    }
    const Complex at_identity = characters[b][0];
    if (std::abs(at_identity - Complex(irrep_dims[b], 0.0)) > 1e-8) {
      throw CharacterDataError(
          "character at the identity must equal the irrep dimension (row " +
          std::to_string(b) + ")");
    }
    dim_sq += static_cast<long long>(irrep_dims[b]) * irrep_dims[b];
  }
  if (dim_sq != group_order()) {
    throw CharacterDataError(
        "sum of squared irrep dimensions must equal the group order");
  }
}

std::vector<int> multiplicities_in_regular(const CharacterData& cd) {
  cd.validate();
  const int order = cd.group_order();
  std::vector<int> result;
  result.reserve(cd.characters.size());
  for (std::size_t b = 0; b < cd.characters.size(); ++b) {
    // Regular character: |G| at the identity class, zero elsewhere.
    Complex sum = 0.0;
    for (std::size_t c = 0; c < cd.classes.size(); ++c) {
      const Complex regular = c == 0 ? Complex(order, 0.0) : Complex(0.0, 0.0);
      sum += static_cast<double>(cd.classes[c].size) *
             std::conj(cd.characters[b][c]) * regular;
    }
    const Complex q = sum / static_cast<double>(order);
    const double rounded = std::round(q.real());
    if (std::abs(q.real() - rounded) > 1e-8 || std::abs(q.imag()) > 1e-8) {
      throw CharacterDataError("multiplicity of irrep " + std::to_string(b) +
                               " is not an integer");
    }
    result.push_back(static_cast<int>(rounded));
  }
  return result;
}

BlockSpec blockspec_from_irreps(
    const std::vector<std::vector<Matrix>>& irrep_generators,
    const std::vector<int>& multiplicities,
    std::optional<Index> expected_dimension) {
  if (irrep_generators.size() != multiplicities.size()) {
    throw SpecDimensionError("need one multiplicity per irrep");
  }
  if (irrep_generators.empty()) {
    throw SpecDimensionError("no irreps given");
  }
  const std::size_t n_generators = irrep_generators[0].size();
  BlockSpec spec;
  spec.families.reserve(irrep_generators.size());
  for (std::size_t b = 0; b < irrep_generators.size(); ++b) {
    const auto& mats = irrep_generators[b];
    if (mats.size() != n_generators) {
      throw SpecDimensionError("irrep " + std::to_string(b) + " has " +
                               std::to_string(mats.size()) +
                               " generators, expected " +
                               std::to_string(n_generators));
    }
    if (mats.empty()) {
      throw SpecDimensionError("irrep " + std::to_string(b) +
                               " has no generators");
    }
    if (multiplicities[b] <= 0) {
      throw SpecDimensionError("multiplicity of irrep " + std::to_string(b) +
                               " must be positive");
    }
    const Index d = mats[0].rows();
    for (const Matrix& m : mats) {
      if (m.rows() != d || m.cols() != d) {
        throw SpecDimensionError("irrep " + std::to_string(b) +
                                 " mixes matrix sizes");
      }
    }
    BlockFamily family;
    family.dimension = d;
    family.multiplicity = multiplicities[b];
    family.generators = mats;
    spec.families.push_back(std::move(family));
  }
  if (expected_dimension && spec.total_dimension() != *expected_dimension) {
    throw SpecDimensionError(
        "block dimensions sum to " + std::to_string(spec.total_dimension()) +
        ", expected " + std::to_string(*expected_dimension));
  }
  return spec;
}

}  // namespace sbd
