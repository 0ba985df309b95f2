#pragma once

// Verification suites shared by the CLI and the acceptance harness. Each
// suite measures a set of residuals against explicit thresholds.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "bruhat/charts.hpp"
#include "bruhat/gelfand_tsetlin.hpp"

namespace bruhat::suites {

enum class Compare { Below, Above, Equal };

struct Metric {
  std::string name;
  double value = 0.0;
  double threshold = 0.0;
  Compare compare = Compare::Below;

  bool pass() const;
};

struct SuiteResult {
  std::string name;
  std::vector<Metric> metrics;
  std::vector<std::string> notes;

  bool pass() const;
  const Metric* first_failure() const;
};

// Thresholds scale with `tol`; the defaults below correspond to tol = 1e-8.
struct SuiteConfig {
  int n = 3;
  std::uint64_t seed = 7;
  int samples = 100;
  double tol = 1e-8;
  double margin = charts::kDefaultMargin;
  std::optional<gt::IndexConvention> convention;  // pin instead of enumerating
  double flow_T = 10.0;
  double flow_dt = 1e-3;
};

// [pi_inf, pi_s] (analytic < tol, finite differences < 100 tol) and the
// Jacobi identity [pi_inf, pi_inf].
SuiteResult schouten_suite(const SuiteConfig& cfg);
// Brackets of f_1..f_n under pi_s, pi_inf and three random pencil members (< 10 tol).
SuiteResult involution_suite(const SuiteConfig& cfg);
// e_k(c) / f_k constant across points (spread < tol / 10).
SuiteResult elementary_suite(const SuiteConfig& cfg);
// pi_inf rebuilt from the Lu form through the q chart vs Theta form (< tol).
SuiteResult bruhat_form_suite(const SuiteConfig& cfg);
// Gelfand-Tsetlin identity, vanishing tails, interlacing (< tol).
SuiteResult gelfand_tsetlin_suite(const SuiteConfig& cfg);
// Lenard chains from e-sum (K = n) and x-sum.
SuiteResult lenard_suite(const SuiteConfig& cfg);
// f-family drift along f_j flows, f_1 torus periods, vertex weight table.
SuiteResult flow_suite(const SuiteConfig& cfg);

std::vector<SuiteResult> verify_all(const SuiteConfig& cfg);

nlohmann::json to_json(const SuiteResult& r);

}  // namespace bruhat::suites
