#include <exception>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "galdiff/analysis.hpp"

namespace {

// Positional input is either an inline JSON object or a path to one.
nlohmann::json load_input(const std::string& arg) {
  if (!arg.empty() && arg.front() == '{') return nlohmann::json::parse(arg);
  std::ifstream in(arg);
  if (!in) throw std::invalid_argument("cannot open input file: " + arg);
  return nlohmann::json::parse(in);
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text << "\n";
    return;
  }
  std::ofstream out(out_path);
  if (!out) throw std::invalid_argument("cannot open output file: " + out_path);
  out << text << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Galois actions on holomorphic differentials: formulas vs explicit covers"};
  app.require_subcommand(1);

  std::string input;
  std::string out_path;
  bool as_json = false;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_flag("--json", as_json, "emit the machine-readable JSON report");
    cmd->add_option("--out", out_path, "write the report to this file instead of stdout");
  };

  auto* ramdata = app.add_subcommand(
      "ramdata", "genus, invariant dimension, and faithfulness verdict from a ramification profile");
  ramdata->add_option("input", input, "profile JSON: file path or inline object")->required();
  add_common(ramdata);

  auto* cover = app.add_subcommand("cover", "full oracle analysis of one explicit cover");
  cover->add_option("input", input, "cover JSON: file path or inline object")->required();
  add_common(cover);

  auto* sweep = app.add_subcommand("sweep", "formula-vs-oracle verification over bounded ranges");
  galdiff::SweepOptions options;
  sweep->add_option("--p", options.primes, "characteristics to sweep")->delimiter(',');
  sweep->add_option("--nmax", options.jump_max, "largest Artin-Schreier ramification jump");
  sweep->add_option("--kummer-n", options.kummer_degrees, "Kummer degrees")->delimiter(',');
  sweep->add_option("--mmax", options.kummer_branch_max, "largest Kummer branch degree");
  add_common(sweep);

  CLI11_PARSE(app, argc, argv);

  try {
    if (sweep->parsed()) {
      galdiff::SweepResult result = galdiff::run_sweep(options);
      emit(as_json ? result.to_json().dump(2) : result.to_table(), out_path);
      return result.failure_count == 0 ? 0 : 1;
    }
    galdiff::Report report = ramdata->parsed() ? galdiff::analyze_ramdata(load_input(input))
                                               : galdiff::analyze_cover(load_input(input));
    emit(as_json ? report.to_json().dump(2) : report.to_table(), out_path);
    return report.all_pass() ? 0 : 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
