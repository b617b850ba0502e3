#include "sbd/io.hpp"

#include <cmath>
#include <fstream>
#include <ostream>
#include <unordered_set>

#include <json.hpp>

namespace sbd::io {

namespace {

using nlohmann::json;
using ordered_json = nlohmann::ordered_json;

json parse_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw IoError("cannot open '" + path.string() + "' for reading");
  }
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    // Covers syntax errors and out-of-range numbers alike.
    throw SchemaError("'" + path.string() + "': " + e.what());
  }
}

void write_file(const std::filesystem::path& path, const ordered_json& j) {
  std::ofstream out(path, std::ios::trunc);
  if (!out) {
    throw IoError("cannot open '" + path.string() + "' for writing");
  }
  out << j.dump(2) << '\n';
  if (!out) {
    throw IoError("failed writing '" + path.string() + "'");
  }
}

const json& require(const json& j, const char* key) {
  const auto it = j.find(key);
  if (it == j.end()) {
    throw SchemaError(std::string("missing field '") + key + "'");
  }
  return *it;
}

void check_schema_version(const json& j) {
  const json& version = require(j, "schemaVersion");
  if (!version.is_string() || version.get<std::string>() != kSchemaVersion) {
    throw SchemaError(std::string("schemaVersion must be '") + kSchemaVersion +
                      "'");
  }
}

Complex parse_entry(const json& pair) {
  if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number() ||
      !pair[1].is_number()) {
    throw SchemaError("matrix entries must be [re, im] number pairs");
  }
  const double re = pair[0].get<double>();
  const double im = pair[1].get<double>();
  if (!std::isfinite(re) || !std::isfinite(im)) {
    throw SchemaError("matrix entries must be finite");
  }
  return {re, im};
}

Matrix parse_matrix(const json& j) {
  if (!j.is_array() || j.empty()) {
    throw SchemaError("a matrix must be a nonempty array of rows");
  }
  const Index rows = static_cast<Index>(j.size());
  if (!j[0].is_array() || j[0].empty()) {
    throw SchemaError("a matrix row must be a nonempty array");
  }
  const Index cols = static_cast<Index>(j[0].size());
  Matrix m(rows, cols);
  for (Index r = 0; r < rows; ++r) {
    const json& row = j[static_cast<std::size_t>(r)];
    if (!row.is_array() || static_cast<Index>(row.size()) != cols) {
      throw SchemaError("matrix rows have inconsistent lengths");
    }
    for (Index c = 0; c < cols; ++c) {
      m(r, c) = parse_entry(row[static_cast<std::size_t>(c)]);
    }
  }
  return m;
}

ordered_json dump_matrix(const Matrix& m) {
  ordered_json rows = ordered_json::array();
  for (Index r = 0; r < m.rows(); ++r) {
    ordered_json row = ordered_json::array();
    for (Index c = 0; c < m.cols(); ++c) {
      row.push_back({m(r, c).real(), m(r, c).imag()});
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

struct LabeledMatrix {
  std::string label;
  Matrix matrix;
};

std::vector<LabeledMatrix> parse_labeled_matrices(const json& j) {
  if (!j.is_array() || j.empty()) {
    throw SchemaError("'generators' must be a nonempty array");
  }
  std::vector<LabeledMatrix> out;
  std::unordered_set<std::string> seen;
  out.reserve(j.size());
  for (const json& item : j) {
    const json& label = require(item, "label");
    if (!label.is_string()) {
      throw SchemaError("generator labels must be strings");
    }
    LabeledMatrix entry;
    entry.label = label.get<std::string>();
    if (!seen.insert(entry.label).second) {
      throw SchemaError("duplicate generator label '" + entry.label + "'");
    }
    entry.matrix = parse_matrix(require(item, "matrix"));
    out.push_back(std::move(entry));
  }
  return out;
}

ordered_json dump_labeled_matrices(const std::vector<std::string>& labels,
                                   const std::vector<Matrix>& matrices) {
  ordered_json arr = ordered_json::array();
  for (std::size_t g = 0; g < matrices.size(); ++g) {
    ordered_json item;
    item["label"] = labels[g];
    item["matrix"] = dump_matrix(matrices[g]);
    arr.push_back(std::move(item));
  }
  return arr;
}

}  // namespace

GeneratorSet load_generator_set(const std::filesystem::path& path) {
  const json j = parse_file(path);
  check_schema_version(j);
  const json& dim = require(j, "dimension");
  if (!dim.is_number_integer() || dim.get<Index>() <= 0) {
    throw SchemaError("'dimension' must be a positive integer");
  }
  GeneratorSet gens;
  gens.dimension = dim.get<Index>();
  for (LabeledMatrix& entry : parse_labeled_matrices(require(j, "generators"))) {
    if (entry.matrix.rows() != gens.dimension ||
        entry.matrix.cols() != gens.dimension) {
      throw SchemaError("generator '" + entry.label + "' is not " +
                        std::to_string(gens.dimension) + "x" +
                        std::to_string(gens.dimension));
    }
    gens.labels.push_back(std::move(entry.label));
    gens.matrices.push_back(std::move(entry.matrix));
  }
  return gens;
}

void save_generator_set(const std::filesystem::path& path,
                        const GeneratorSet& gens) {
  ordered_json j;
  j["schemaVersion"] = kSchemaVersion;
  j["dimension"] = gens.dimension;
  j["generators"] = dump_labeled_matrices(gens.labels, gens.matrices);
  write_file(path, j);
}

Matrix load_matrix(const std::filesystem::path& path) {
  const GeneratorSet gens = load_generator_set(path);
  if (gens.matrices.size() != 1) {
    throw SchemaError("'" + path.string() +
                      "' must contain exactly one matrix");
  }
  return gens.matrices[0];
}

void save_matrix(const std::filesystem::path& path, const Matrix& m,
                 const std::string& label) {
  GeneratorSet gens;
  gens.dimension = m.rows();
  gens.labels = {label};
  gens.matrices = {m};
  save_generator_set(path, gens);
}

BlockSpecFile load_block_spec(const std::filesystem::path& path) {
  const json j = parse_file(path);
  check_schema_version(j);
  const json& families = require(j, "families");
  if (!families.is_array() || families.empty()) {
    throw SchemaError("'families' must be a nonempty array");
  }
  BlockSpecFile out;
  for (const json& item : families) {
    const json& dim = require(item, "dimension");
    const json& mult = require(item, "multiplicity");
    if (!dim.is_number_integer() || dim.get<Index>() <= 0) {
      throw SchemaError("family 'dimension' must be a positive integer");
    }
    if (!mult.is_number_integer() || mult.get<Index>() <= 0) {
      throw SchemaError("family 'multiplicity' must be a positive integer");
    }
    BlockFamily family;
    family.dimension = dim.get<Index>();
    family.multiplicity = mult.get<Index>();
    std::vector<std::string> labels;
    for (LabeledMatrix& entry :
         parse_labeled_matrices(require(item, "generators"))) {
      if (entry.matrix.rows() != family.dimension ||
          entry.matrix.cols() != family.dimension) {
        throw SchemaError("family block '" + entry.label + "' is not " +
                          std::to_string(family.dimension) + "x" +
                          std::to_string(family.dimension));
      }
      labels.push_back(std::move(entry.label));
      family.generators.push_back(std::move(entry.matrix));
    }
    if (out.labels.empty()) {
      out.labels = labels;
    } else if (labels != out.labels) {
      throw SchemaError(
          "all families must list the same generator labels in the same "
          "order");
    }
    out.spec.families.push_back(std::move(family));
  }
  return out;
}

void save_block_spec(const std::filesystem::path& path, const BlockSpec& spec,
                     const std::vector<std::string>& labels) {
  ordered_json j;
  j["schemaVersion"] = kSchemaVersion;
  ordered_json families = ordered_json::array();
  for (const BlockFamily& family : spec.families) {
    ordered_json item;
    item["dimension"] = family.dimension;
    item["multiplicity"] = family.multiplicity;
    item["generators"] = dump_labeled_matrices(labels, family.generators);
    families.push_back(std::move(item));
  }
  j["families"] = std::move(families);
  write_file(path, j);
}

CayleyTable load_cayley_table(const std::filesystem::path& path) {
  const json j = parse_file(path);
  check_schema_version(j);
  const json& elements = require(j, "elements");
  if (!elements.is_array() || elements.empty()) {
    throw SchemaError("'elements' must be a nonempty array of labels");
  }
  CayleyTable t;
  for (const json& label : elements) {
    if (!label.is_string()) {
      throw SchemaError("element labels must be strings");
    }
    t.elements.push_back(label.get<std::string>());
  }
  const json& rows = require(j, "table");
  if (!rows.is_array()) {
    throw SchemaError("'table' must be an array of index rows");
  }
  for (const json& row : rows) {
    if (!row.is_array()) {
      throw SchemaError("'table' rows must be arrays of indices");
    }
    std::vector<int> indices;
    for (const json& entry : row) {
      if (!entry.is_number_integer()) {
        throw SchemaError("'table' entries must be integer indices");
      }
      indices.push_back(entry.get<int>());
    }
    t.table.push_back(std::move(indices));
  }
  t.validate();
  return t;
}

void save_cayley_table(const std::filesystem::path& path,
                       const CayleyTable& t) {
  ordered_json j;
  j["schemaVersion"] = kSchemaVersion;
  j["elements"] = t.elements;
  j["table"] = t.table;
  write_file(path, j);
}

void SolveReport::print(std::ostream& out) const {
  out << "status: " << status << '\n';
  if (status != "ok" && status != "verification-failed") return;
  out << "tolerance: " << tolerance_used << '\n';
  out << "strategy: " << strategy << '\n';
  out << "kernel-dims:";
  for (const Index d : kernel_dims) out << ' ' << d;
  out << '\n';
  out << "family-columns:";
  for (const ColumnRange& range : family_columns) {
    out << ' ' << range.offset << ':' << range.length;
  }
  out << '\n';
  for (std::size_t g = 0; g < labels.size(); ++g) {
    out << "residual[" << labels[g] << "]: " << generator_residuals[g] << '\n';
  }
  out << "max-residual: " << max_residual << '\n';
  out << "unitarity-residual: " << unitarity_residual << '\n';
  out << "timing-ms: " << timing_ms << '\n';
}

}  // namespace sbd::io
