// Command-line front end: solve an instance from files, build regular
// representations from Cayley tables, and emit the built-in example.

#include <chrono>
#include <exception>
#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "sbd/d8.hpp"
#include "sbd/errors.hpp"
#include "sbd/io.hpp"
#include "sbd/solver.hpp"

namespace {

namespace fs = std::filesystem;

namespace exit_code {
constexpr int ok = 0;
constexpr int usage = 2;
constexpr int io = 3;
constexpr int schema = 4;
constexpr int spec_mismatch = 5;
constexpr int non_unitary = 6;
constexpr int kernel_mismatch = 7;
constexpr int verification = 8;
constexpr int cayley = 9;
constexpr int unknown_example = 10;
constexpr int unknown_label = 11;
constexpr int internal = 70;
}  // namespace exit_code

constexpr const char* kExitCodeHelp =
    "Exit codes:\n"
    "  0   success\n"
    "  2   command-line usage error\n"
    "  3   file cannot be read or written\n"
    "  4   input file violates the schema\n"
    "  5   generator set and block spec do not fit together\n"
    "  6   an input matrix is not unitary\n"
    "  7   kernel dimension differs from a declared multiplicity\n"
    "  8   verification residual exceeds the threshold\n"
    "  9   Cayley table violates the group axioms\n"
    "  10  unknown example name\n"
    "  11  unknown element label\n";

int fail(int code, const std::string& status, const std::exception& e,
         bool status_line) {
  if (status_line) std::cout << "status: " << status << '\n';
  std::cerr << "error: " << e.what() << '\n';
  return code;
}

// Maps library exceptions to the documented exit codes. status_line controls
// whether a "status: <error-code>" line is emitted on stdout (the solve
// report contract).
template <typename Fn>
int guarded(bool status_line, Fn&& fn) {
  try {
    return fn();
  } catch (const sbd::KernelDimensionMismatch& e) {
    return fail(exit_code::kernel_mismatch, "kernel-dimension-mismatch", e,
                status_line);
  } catch (const sbd::NonUnitaryInput& e) {
    return fail(exit_code::non_unitary, "non-unitary-input", e, status_line);
  } catch (const sbd::SpecDimensionError& e) {
    return fail(exit_code::spec_mismatch, "spec-dimension-error", e,
                status_line);
  } catch (const sbd::SpecMismatchError& e) {
    return fail(exit_code::spec_mismatch, "spec-mismatch", e, status_line);
  } catch (const sbd::DimensionError& e) {
    return fail(exit_code::spec_mismatch, "dimension-error", e, status_line);
  } catch (const sbd::CayleyValidationError& e) {
    return fail(exit_code::cayley, "cayley-validation-error", e, status_line);
  } catch (const sbd::UnknownLabelError& e) {
    return fail(exit_code::unknown_label, "unknown-label", e, status_line);
  } catch (const sbd::CharacterDataError& e) {
    return fail(exit_code::schema, "character-data-error", e, status_line);
  } catch (const sbd::SchemaError& e) {
    return fail(exit_code::schema, "schema-error", e, status_line);
  } catch (const sbd::IoError& e) {
    return fail(exit_code::io, "io-error", e, status_line);
  } catch (const std::exception& e) {
    return fail(exit_code::internal, "internal-error", e, status_line);
  }
}

int run_solve(const fs::path& generators_path, const fs::path& blocks_path,
              const fs::path& out_path, double tolerance, bool verify,
              const std::string& strategy_name) {
  const sbd::GeneratorSet gens = sbd::io::load_generator_set(generators_path);
  const sbd::io::BlockSpecFile blocks = sbd::io::load_block_spec(blocks_path);
  if (blocks.labels != gens.labels) {
    throw sbd::SpecMismatchError(
        "generator labels in '" + blocks_path.string() +
        "' do not match those in '" + generators_path.string() +
        "' (same labels, same order required)");
  }

  sbd::SolveOptions options;
  options.tolerance = tolerance;
  options.strategy = strategy_name == "incremental"
                         ? sbd::KernelStrategy::Incremental
                         : sbd::KernelStrategy::Stacked;

  const auto start = std::chrono::steady_clock::now();
  const sbd::TransferResult result =
      sbd::assemble_transfer_matrix(gens, blocks.spec, options);
  const auto stop = std::chrono::steady_clock::now();

  sbd::io::save_matrix(out_path, result.s, "S");

  sbd::io::SolveReport report;
  report.tolerance_used = options.tolerance;
  report.strategy = strategy_name;
  report.kernel_dims = result.kernel_dims;
  report.family_columns = result.family_columns;
  report.labels = gens.labels;
  report.generator_residuals = result.generator_residuals;
  report.max_residual = result.max_residual;
  report.unitarity_residual = result.orthogonality_residual;
  report.timing_ms =
      std::chrono::duration<double, std::milli>(stop - start).count();

  const bool passed =
      result.max_residual <= options.verification_threshold() &&
      result.orthogonality_residual <= options.verification_threshold();
  report.status = !verify || passed ? "ok" : "verification-failed";
  report.print(std::cout);
  std::cout << "transfer-matrix: " << out_path.string() << '\n';

  if (verify && !passed) {
    std::cerr << "error: residuals exceed the verification threshold "
              << options.verification_threshold() << '\n';
    return exit_code::verification;
  }
  return exit_code::ok;
}

int run_regrep(const fs::path& cayley_path,
               const std::vector<std::string>& labels,
               const fs::path& out_path) {
  const sbd::CayleyTable table = sbd::io::load_cayley_table(cayley_path);
  const sbd::GeneratorSet gens = sbd::regular_representation(table, labels);
  sbd::io::save_generator_set(out_path, gens);
  std::cout << "generators: " << out_path.string() << '\n';
  return exit_code::ok;
}

int run_example(const std::string& name, const fs::path& dir) {
  if (name != "d8") {
    std::cerr << "error: unknown example '" << name
              << "' (available examples: d8)\n";
    return exit_code::unknown_example;
  }
  const sbd::D8Example ex = sbd::d8_example();
  const fs::path generators = dir / "d8_generators.json";
  const fs::path blocks = dir / "d8_blocks.json";
  const fs::path reference = dir / "d8_reference_s.json";
  sbd::io::save_generator_set(generators, ex.generators);
  sbd::io::save_block_spec(blocks, ex.blocks, ex.generators.labels);
  sbd::io::save_matrix(reference, ex.reference_s, "S");
  std::cout << "generators: " << generators.string() << '\n'
            << "blocks: " << blocks.string() << '\n'
            << "reference: " << reference.string() << '\n';
  return exit_code::ok;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Computes a unitary transfer matrix that simultaneously block "
      "diagonalizes a set of unitary matrices whose block decomposition is "
      "known."};
  app.require_subcommand(1);
  app.footer(kExitCodeHelp);

  std::string generators_path;
  std::string blocks_path;
  std::string solve_out = "transfer_matrix.json";
  double tolerance = 1e-10;
  bool verify = true;
  std::string strategy = "stacked";
  CLI::App* solve = app.add_subcommand(
      "solve", "Solve an instance given a generator file and a block-spec "
               "file; writes the transfer matrix and prints a report");
  solve->add_option("generators", generators_path, "generator-set file")
      ->required();
  solve->add_option("blocks", blocks_path, "block-spec file")->required();
  solve->add_option("--out", solve_out, "output file for the transfer matrix")
      ->capture_default_str();
  solve
      ->add_option("--tol", tolerance,
                   "relative tolerance for rank cuts and unitarity checks")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  solve->add_flag("--verify,!--no-verify", verify,
                  "fail when residuals exceed 10x the tolerance (default on)");
  solve->add_option("--strategy", strategy, "kernel computation strategy")
      ->capture_default_str()
      ->check(CLI::IsMember({"stacked", "incremental"}));

  std::string cayley_path;
  std::vector<std::string> generator_labels;
  std::string regrep_out = "generators.json";
  CLI::App* regrep = app.add_subcommand(
      "regrep", "Build regular-representation permutation matrices from a "
                "Cayley-table file");
  regrep->add_option("cayley", cayley_path, "Cayley-table file")->required();
  regrep
      ->add_option("--generators", generator_labels,
                   "comma-separated generator labels")
      ->required()
      ->delimiter(',');
  regrep->add_option("--out", regrep_out, "output generator-set file")
      ->capture_default_str();

  std::string example_name;
  std::string example_dir = ".";
  CLI::App* example = app.add_subcommand(
      "example", "Write a built-in example instance to disk");
  example->add_option("name", example_name, "example name (d8)")->required();
  example->add_option("--dir", example_dir, "output directory")
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? exit_code::ok : exit_code::usage;
  }

  if (solve->parsed()) {
    return guarded(true, [&] {
      return run_solve(generators_path, blocks_path, solve_out, tolerance,
                       verify, strategy);
    });
  }
  if (regrep->parsed()) {
    return guarded(false, [&] {
      return run_regrep(cayley_path, generator_labels, regrep_out);
    });
  }
  return guarded(false, [&] { return run_example(example_name, example_dir); });
}
