// Command-line front end: spectra, phase verdicts, Figure-style sweeps,
// weight/state evaluation, the verification suite, and kernel matrix dumps.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "cayley/chord.hpp"
#include "cayley/kernel.hpp"
#include "cayley/permutation.hpp"
#include "cayley/verify.hpp"

using json = nlohmann::ordered_json;
using namespace cayley;

namespace {

constexpr int kMatrixDumpCap = 5;

std::string format_double(double value, const char* spec = "%.12g") {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), spec, value);
  return buffer;
}

json temperature_json(const TemperaturePoint& point) {
  if (point.is_exact()) return to_string(point.exact_value());
  return point.value();
}

json multiplicity_json(const BigInt& multiplicity) {
  if (multiplicity.fits_ulong_p()) return multiplicity.get_ui();
  return to_string(multiplicity);
}

void emit(const std::string& text, const std::string& output_path) {
  if (output_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream file(output_path);
  if (!file) throw std::runtime_error("cannot open output file '" + output_path + "'");
  file << text;
}

struct GridSpec {
  double start = 0, stop = 0, step = 0;
};

GridSpec parse_grid(const std::string& text) {
  GridSpec grid;
  const size_t first = text.find(':');
  const size_t second = first == std::string::npos ? std::string::npos : text.find(':', first + 1);
  if (first == std::string::npos || second == std::string::npos)
    throw std::invalid_argument("grid must be start:stop:step, got '" + text + "'");
  try {
    size_t used = 0;
    grid.start = std::stod(text.substr(0, first), &used);
    if (used != first) throw std::invalid_argument("");
    grid.stop = std::stod(text.substr(first + 1, second - first - 1), &used);
    if (used != second - first - 1) throw std::invalid_argument("");
    grid.step = std::stod(text.substr(second + 1), &used);
    if (used != text.size() - second - 1) throw std::invalid_argument("");
  } catch (const std::exception&) {
    throw std::invalid_argument("grid must be start:stop:step, got '" + text + "'");
  }
  return grid;
}

GaussianRational parse_coefficient(const std::string& text) {
  const size_t comma = text.find(',');
  if (comma == std::string::npos)
    throw std::invalid_argument("coefficient must be re,im, got '" + text + "'");
  return {parse_rational(text.substr(0, comma)), parse_rational(text.substr(comma + 1))};
}

json verdict_json(const PhaseVerdict& verdict) {
  json value;
  value["verdict"] = to_string(verdict.phase);
  value["source"] = to_string(verdict.source);
  if (verdict.witness) value["witness"] = to_string(*verdict.witness);
  return value;
}

int run_spectrum(int n, const std::string& exp_beta, const std::string& output) {
  const TemperaturePoint point = parse_temperature(exp_beta);
  const KernelSpectrum spec = spectrum(n, point);
  json doc;
  doc["N"] = n;
  doc["exp_beta"] = temperature_json(point);
  doc["eigenvalues"] = json::array();
  for (const auto& entry : spec.entries) {
    json item;
    item["partition"] = to_string(entry.partition);
    if (spec.exact)
      item["value"] = to_string(entry.value);
    else
      item["value"] = entry.value_num;
    item["multiplicity"] = multiplicity_json(entry.multiplicity);
    doc["eigenvalues"].push_back(std::move(item));
  }
  emit(doc.dump(2) + "\n", output);
  return 0;
}

int run_phase(int n, const std::string& exp_beta, const std::string& output) {
  const TemperaturePoint point = parse_temperature(exp_beta);
  const PhaseReport report = classify_phase(n, point);
  json doc;
  doc["N"] = n;
  doc["exp_beta"] = temperature_json(point);
  doc["theorem"] = verdict_json(report.theorem);
  doc["computed"] = verdict_json(report.computed);
  if (report.min_eigenvalue)
    doc["computed"]["min_eigenvalue"] = to_string(*report.min_eigenvalue);
  else
    doc["computed"]["min_eigenvalue"] = report.min_eigenvalue_num;
  doc["agree"] = report.agree;
  emit(doc.dump(2) + "\n", output);
  return report.agree ? 0 : 1;
}

int run_sweep(int n, const std::string& grid_text, int scale_exponent,
              const std::string& output) {
  const GridSpec grid = parse_grid(grid_text);
  const auto rows = sweep_min_eigenvalue(n, make_grid(grid.start, grid.stop, grid.step),
                                         scale_exponent);
  std::string csv = "exp_beta,min_eig,scaled_min_eig\n";
  for (const auto& row : rows)
    csv += format_double(row.exp_beta, "%.10g") + "," + format_double(row.min_eigenvalue) + "," +
           format_double(row.scaled) + "\n";
  emit(csv, output);
  return 0;
}

int run_weight(int strands, const std::string& word_text, int n, const std::string& output) {
  const ChordWord word = parse_chord_word(word_text, strands);
  emit(to_string(weight_gl_n(word, n)) + "\n", output);
  return 0;
}

int run_state(int strands, int n, const std::vector<std::string>& term_texts,
              const std::string& output) {
  DiagramCombination combo(strands);
  for (const std::string& text : term_texts) {
    const size_t colon = text.find(':');
    if (colon == std::string::npos)
      throw std::invalid_argument("term must be re,im:word, got '" + text + "'");
    combo.add_term(parse_chord_word(text.substr(colon + 1), strands),
                   parse_coefficient(text.substr(0, colon)));
  }
  const GaussianRational value = state_eval(combo, combo, n);
  json doc;
  doc["strands"] = strands;
  doc["n"] = n;
  doc["value"]["re"] = to_string(value.re);
  doc["value"]["im"] = to_string(value.im);
  doc["is_nonnegative"] = value.is_real() && value.re >= 0;
  emit(doc.dump(2) + "\n", output);
  return 0;
}

int run_matrix(int n, const std::string& exp_beta, const std::string& output) {
  const TemperaturePoint point = parse_temperature(exp_beta);
  if (n > kMatrixDumpCap)
    throw std::length_error("matrix dump limited to N <= " + std::to_string(kMatrixDumpCap));
  std::string csv;
  if (point.is_exact()) {
    const auto matrix = kernel_matrix_exact(n, point.exact_value());
    for (const auto& row : matrix) {
      for (size_t col = 0; col < row.size(); ++col) {
        if (col > 0) csv += ',';
        csv += to_string(row[col]);
      }
      csv += '\n';
    }
  } else {
    const auto matrix = kernel_matrix_numeric(n, point.value());
    size_t side = 1;
    for (int k = 2; k <= n; ++k) side *= static_cast<size_t>(k);
    for (size_t row = 0; row < side; ++row) {
      for (size_t col = 0; col < side; ++col) {
        if (col > 0) csv += ',';
        csv += format_double(matrix[row * side + col], "%.17g");
      }
      csv += '\n';
    }
  }
  emit(csv, output);
  return 0;
}

int run_verify(std::uint64_t seed, int rounds, const std::string& output) {
  VerifyOptions options;
  options.seed = seed;
  options.random_rounds = rounds;
  const auto results = run_verification_suite(options);
  std::string text;
  int failures = 0;
  for (const auto& result : results) {
    text += (result.passed ? "PASS " : "FAIL ") + result.name;
    if (!result.detail.empty()) text += ": " + result.detail;
    text += '\n';
    if (!result.passed) ++failures;
  }
  text += failures == 0 ? "all " + std::to_string(results.size()) + " checks passed\n"
                        : std::to_string(failures) + " check(s) failed\n";
  emit(text, output);
  return failures == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cayley distance kernel spectra and chord-diagram weight systems"};
  app.require_subcommand(1);

  int n = 3;
  int strands = 2;
  int gl_rank = 2;
  int scale_exponent = -1;
  int rounds = 100;
  std::uint64_t seed = 20210801;
  std::string exp_beta = "2";
  std::string grid_text = "1:6:0.05";
  std::string word_text;
  std::string output;
  std::vector<std::string> terms;

  auto* spectrum_cmd = app.add_subcommand("spectrum", "eigenvalues via the character formula");
  spectrum_cmd->add_option("--N", n, "number of permuted elements")->required()->check(CLI::PositiveNumber);
  spectrum_cmd->add_option("--exp-beta", exp_beta, "exp(beta): p/q or integer for exact mode, decimal for numeric")->required();
  spectrum_cmd->add_option("--output", output, "output path (default: stdout)");

  auto* phase_cmd = app.add_subcommand("phase", "positivity phase verdicts (theorem and computed)");
  phase_cmd->add_option("--N", n, "number of permuted elements")->required()->check(CLI::PositiveNumber);
  phase_cmd->add_option("--exp-beta", exp_beta, "exp(beta)")->required();
  phase_cmd->add_option("--output", output, "output path (default: stdout)");

  auto* sweep_cmd = app.add_subcommand("sweep", "minimal eigenvalue over an exp(beta) grid, CSV");
  sweep_cmd->add_option("--N", n, "number of permuted elements")->required()->check(CLI::PositiveNumber);
  sweep_cmd->add_option("--grid", grid_text, "grid start:stop:step (inclusive)")->required();
  sweep_cmd->add_option("--scale-exponent", scale_exponent,
                        "exponent e in min_eig * exp_beta^e (default N-1)");
  sweep_cmd->add_option("--output", output, "output path (default: stdout)");

  auto* weight_cmd = app.add_subcommand("weight", "fundamental gl(n) weight of a chord word");
  weight_cmd->add_option("--strands", strands, "number of strands")->required()->check(CLI::PositiveNumber);
  weight_cmd->add_option("--word", word_text, "chord word, e.g. \"1,2 2,3 1,3\" (empty = unit)");
  weight_cmd->add_option("--n", gl_rank, "weight-system rank n")->required()->check(CLI::PositiveNumber);

  auto* state_cmd = app.add_subcommand("state", "state form of a combination against itself");
  state_cmd->add_option("--strands", strands, "number of strands")->required()->check(CLI::PositiveNumber);
  state_cmd->add_option("--n", gl_rank, "weight-system rank n")->required()->check(CLI::PositiveNumber);
  state_cmd->add_option("--term", terms, "term re,im:word with exact rational parts")->required();
  state_cmd->add_option("--output", output, "output path (default: stdout)");

  auto* verify_cmd = app.add_subcommand("verify", "run the full property suite");
  verify_cmd->add_option("--seed", seed, "random seed");
  verify_cmd->add_option("--rounds", rounds, "rounds per randomized check")->check(CLI::PositiveNumber);
  verify_cmd->add_option("--output", output, "output path (default: stdout)");

  auto* matrix_cmd = app.add_subcommand("matrix", "exact kernel matrix dump as CSV (N <= 5)");
  matrix_cmd->add_option("--N", n, "number of permuted elements")->required()->check(CLI::PositiveNumber);
  matrix_cmd->add_option("--exp-beta", exp_beta, "exp(beta), rational")->required();
  matrix_cmd->add_option("--output", output, "output path (default: stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }

  try {
    if (spectrum_cmd->parsed()) return run_spectrum(n, exp_beta, output);
    if (phase_cmd->parsed()) return run_phase(n, exp_beta, output);
    if (sweep_cmd->parsed()) return run_sweep(n, grid_text, scale_exponent, output);
    if (weight_cmd->parsed()) return run_weight(strands, word_text, gl_rank, output);
    if (state_cmd->parsed()) return run_state(strands, gl_rank, terms, output);
    if (verify_cmd->parsed()) return run_verify(seed, rounds, output);
    if (matrix_cmd->parsed()) return run_matrix(n, exp_beta, output);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
