#ifndef GALDIFF_ANALYSIS_HPP
#define GALDIFF_ANALYSIS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

namespace galdiff {

// One named cross-check inside a report.
struct CheckFlag {
  std::string name;
  bool pass = false;
  std::string note;
};

// Analysis result: echoed input, computed quantities, and cross-checks.
// Serializes to canonical JSON (sorted keys, fixed array orders), so byte
// output is stable across runs for identical inputs.
struct Report {
  nlohmann::json input;
  nlohmann::json values;
  std::vector<CheckFlag> checks;

  bool all_pass() const;
  nlohmann::json to_json() const;
  std::string to_table() const;
};

// Formula-layer analysis of a ramification profile
// {"n":..., "p":..., "gY":..., "branch":[{"e":..., "d":...}]}: Hurwitz genus,
// floor-pushforward degree, invariant dimension, faithfulness verdict.
Report analyze_ramdata(const nlohmann::json& input);

// Oracle analysis of an explicit cover {"kind":"as"|"kummer", "p":...,
// "f":[c0,c1,...], "n":...}: basis, action matrix, fixed dimension, kernel
// order, everything compared against the formula layer.
Report analyze_cover(const nlohmann::json& input);

struct SweepOptions {
  std::vector<int64_t> primes = {2, 3, 5, 7};
  int64_t jump_max = 12;                       // Artin-Schreier: jumps prime to p up to here
  std::vector<int64_t> kummer_degrees = {2, 3};
  int64_t kummer_branch_max = 7;               // Kummer: deg f from 2 up to here
};

struct SweepResult {
  std::vector<Report> instances;
  int64_t failure_count = 0;

  nlohmann::json to_json() const;
  std::string to_table() const;
};

// Runs every admissible instance in the given ranges: y^p - y = x^N for each
// prime and each N prime to p, and y^n = f_m(x) for each Kummer degree,
// prime, and branch degree m with gcd(n, m) = gcd(n, p) = 1.
SweepResult run_sweep(const SweepOptions& options);

// Coefficients of a canonical squarefree degree-m polynomial over F_p:
// x^m + 1 when p does not divide m, else x^m + x + 1.
std::vector<int64_t> canonical_squarefree_coeffs(int64_t p, int64_t m);

}  // namespace galdiff

#endif
