#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "sbd/group.hpp"
#include "sbd/types.hpp"

// JSON file formats. All complex entries are written as [re, im] pairs of
// finite doubles; numbers round-trip bit-exactly, and serialization is
// deterministic (identical data gives identical bytes).
//
// Generator set           {"schemaVersion": "sbd/1", "dimension": D,
//                          "generators": [{"label": "...", "matrix": [[[re,im],...],...]}, ...]}
// Block spec              {"schemaVersion": "sbd/1",
//                          "families": [{"dimension": d, "multiplicity": q,
//                                        "generators": [{"label","matrix"}, ...]}, ...]}
// Cayley table            {"schemaVersion": "sbd/1", "elements": [...],
//                          "table": [[...], ...]}
//
// A transfer matrix is stored as a generator-set file with a single entry.

namespace sbd::io {

inline constexpr const char* kSchemaVersion = "sbd/1";

/// Throws IoError (unreadable file), SchemaError (malformed content).
GeneratorSet load_generator_set(const std::filesystem::path& path);
void save_generator_set(const std::filesystem::path& path,
                        const GeneratorSet& gens);

/// Single-matrix convenience on top of the generator-set format. Loading
/// requires exactly one entry.
Matrix load_matrix(const std::filesystem::path& path);
void save_matrix(const std::filesystem::path& path, const Matrix& m,
                 const std::string& label);

/// A block-spec file carries one label sequence, shared by every family;
/// the loader rejects families whose labels disagree.
struct BlockSpecFile {
  BlockSpec spec;
  std::vector<std::string> labels;
};
BlockSpecFile load_block_spec(const std::filesystem::path& path);
void save_block_spec(const std::filesystem::path& path, const BlockSpec& spec,
                     const std::vector<std::string>& labels);

/// Loading validates the table eagerly (group axioms), so this can throw
/// CayleyValidationError as well.
CayleyTable load_cayley_table(const std::filesystem::path& path);
void save_cayley_table(const std::filesystem::path& path,
                       const CayleyTable& t);

/// Summary printed by the solve command, one "key: value" line per field.
struct SolveReport {
  std::string status = "ok";
  double tolerance_used = 0.0;
  std::string strategy = "stacked";
  std::vector<Index> kernel_dims;
  std::vector<ColumnRange> family_columns;
  std::vector<std::string> labels;
  std::vector<double> generator_residuals;
  double max_residual = 0.0;
  double unitarity_residual = 0.0;
  double timing_ms = 0.0;

  void print(std::ostream& out) const;
};

}  // namespace sbd::io
