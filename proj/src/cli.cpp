#include "bruhat/cli.hpp"

#include <chrono>
#include <cstdio>
#include <iomanip>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "bruhat/error.hpp"
#include "bruhat/flows.hpp"
#include "bruhat/gelfand_tsetlin.hpp"
#include "bruhat/invariants.hpp"
#include "bruhat/json_io.hpp"
#include "bruhat/lenard.hpp"
#include "bruhat/suites.hpp"

namespace bruhat::cli {

namespace {

using nlohmann::json;

struct RunConfig {
  int n = 3;
  std::uint64_t seed = 7;
  int samples = 100;
  double tol = 1e-8;
  double margin = charts::kDefaultMargin;
  std::string output = "text";
  std::string convention;
};

void add_common(CLI::App* app, RunConfig& cfg) {
  app->add_option("--n", cfg.n, "Complex dimension of CP^n")->check(CLI::Range(1, 15));
  app->add_option("--seed", cfg.seed, "Seed for every random draw");
  app->add_option("--samples", cfg.samples, "Sample points per sweep")->check(CLI::Range(1, 1000000));
  app->add_option("--tol", cfg.tol, "Base tolerance; suite thresholds scale with it")->check(CLI::PositiveNumber);
  app->add_option("--margin", cfg.margin, "Distance kept from the simplex walls")->check(CLI::Range(0.0, 0.5));
  app->add_option("--output", cfg.output, "json, csv or text")->check(CLI::IsMember({"json", "csv", "text"}));
  app->add_option("--convention", cfg.convention,
                  "Pin a Gelfand-Tsetlin index convention (ul|lr):(desc|asc)[:rev]");
}

std::string num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string thr_num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.10g", v);
  return buf;
}

std::string short_num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

suites::SuiteConfig suite_config(const RunConfig& cfg) {
  suites::SuiteConfig s;
  s.n = cfg.n;
  s.seed = cfg.seed;
  s.samples = cfg.samples;
  s.tol = cfg.tol;
  s.margin = cfg.margin;
  if (!cfg.convention.empty()) {
    s.convention = gt::IndexConvention::parse(cfg.convention);
    if (!s.convention) throw Error(ErrorCode::InvalidArgument, "unknown convention '" + cfg.convention + "'");
  }
  return s;
}

int cmd_verify_all(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const auto t0 = std::chrono::steady_clock::now();
  const auto results = suites::verify_all(suite_config(cfg));
  bool ok = true;
  std::string failed;
  for (const auto& r : results) {
    if (!r.pass() && ok) failed = r.name;
    ok = ok && r.pass();
  }

  if (cfg.output == "json") {
    json j{{"n", cfg.n}, {"seed", cfg.seed}, {"samples", cfg.samples}, {"tol", cfg.tol}, {"pass", ok}};
    j["suites"] = json::array();
    for (const auto& r : results) j["suites"].push_back(suites::to_json(r));
    if (!ok) j["failed_suite"] = failed;
    out << j.dump(2) << "\n";
  } else if (cfg.output == "csv") {
    out << "suite,metric,value,compare,threshold,pass\n";
    for (const auto& r : results) {
      for (const auto& m : r.metrics) {
        const char* cmp = m.compare == suites::Compare::Below ? "<" : (m.compare == suites::Compare::Above ? ">" : "==");
        out << r.name << ",\"" << m.name << "\"," << num(m.value) << "," << cmp << "," << num(m.threshold) << ","
            << (m.pass() ? "true" : "false") << "\n";
      }
    }
  } else {
    for (const auto& r : results) {
      out << (r.pass() ? "PASS " : "FAIL ") << r.name << "\n";
      for (const auto& m : r.metrics) {
        const char* cmp = m.compare == suites::Compare::Below ? "<" : (m.compare == suites::Compare::Above ? ">" : "==");
        out << "  " << (m.pass() ? "ok   " : "FAIL ") << m.name << " = " << short_num(m.value) << " (" << cmp << " "
            << thr_num(m.threshold) << ")\n";
      }
      for (const auto& note : r.notes) out << "  # " << note << "\n";
    }
    out << (ok ? "all suites passed" : "failed suite: " + failed) << "\n";
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  err << "verify-all finished in " << std::fixed << std::setprecision(2) << secs << " s\n";
  if (!ok) err << "failed suite: " << failed << "\n";
  return ok ? kOk : kVerificationFailed;
}

int cmd_f_table(const RunConfig& cfg, const std::string& point_json, std::ostream& out) {
  charts::MomentumAnglePoint p;
  if (!point_json.empty()) {
    json j;
    try {
      j = json::parse(point_json);
    } catch (const json::exception& e) {
      throw Error(ErrorCode::ParseError, e.what());
    }
    p = io::point_from_json(j);
  } else {
    p = charts::random_point(cfg.n, cfg.seed, cfg.margin);
  }
  const int n = p.n();
  const auto c = charts::c_from_x(p.x);
  const auto e = invariants::elementary_sym(c);
  const auto fr = invariants::f_family_ratio(p);
  const auto fp = invariants::f_family_pairing(p);
  std::vector<double> k_ratio(n);
  std::vector<double> k_pair(n);
  for (int k = 0; k < n; ++k) {
    k_ratio[k] = e[k] / fr[k];
    k_pair[k] = e[k] / fp[k];
  }

  if (cfg.output == "json") {
    out << json{{"point", io::point_to_json(p)},
                {"c", c},
                {"e", e},
                {"f_ratio", fr},
                {"f_pairing", fp},
                {"constants_ratio", k_ratio},
                {"constants_pairing", k_pair}}
               .dump(2)
        << "\n";
  } else if (cfg.output == "csv") {
    out << "k,c,e,f_ratio,f_pairing,e_over_f_ratio,e_over_f_pairing\n";
    for (int k = 0; k < n; ++k) {
      out << k + 1 << "," << num(c[k]) << "," << num(e[k]) << "," << num(fr[k]) << "," << num(fp[k]) << ","
          << num(k_ratio[k]) << "," << num(k_pair[k]) << "\n";
    }
  } else {
    out << std::left << std::setw(4) << "k" << std::setw(14) << "c_k" << std::setw(14) << "e_k" << std::setw(14)
        << "f_k(ratio)" << std::setw(14) << "f_k(pair)" << std::setw(14) << "e/f(ratio)" << "e/f(pair)\n";
    for (int k = 0; k < n; ++k) {
      out << std::left << std::setw(4) << k + 1 << std::setw(14) << short_num(c[k]) << std::setw(14)
          << short_num(e[k]) << std::setw(14) << short_num(fr[k]) << std::setw(14) << short_num(fp[k])
          << std::setw(14) << short_num(k_ratio[k]) << short_num(k_pair[k]) << "\n";
    }
  }
  return kOk;
}

int cmd_gt_demo(const RunConfig& cfg, bool identity, std::ostream& out) {
  const int dim = cfg.n + 1;
  const auto frame = identity ? gt::identity_frame(dim) : gt::random_unitary(dim, cfg.seed);
  gt::Orientation orientation = gt::Orientation::UpperLeft;
  if (!cfg.convention.empty()) {
    const auto conv = gt::IndexConvention::parse(cfg.convention);
    if (!conv) throw Error(ErrorCode::InvalidArgument, "unknown convention '" + cfg.convention + "'");
    orientation = conv->orientation;
  }
  const auto pattern = gt::gt_pattern(gt::orbit_point(frame), orientation);
  const auto Z = gt::project_to_cpn(frame);
  std::vector<double> c;
  if (std::abs(Z.Z[0]) > 1e-12) c = charts::c_from_x(charts::momentum_from_affine(charts::affine_from_homogeneous(Z)).x);

  if (cfg.output == "json") {
    out << json{{"n", cfg.n}, {"pattern", io::pattern_to_json(pattern)}, {"c", c}}.dump(2) << "\n";
  } else if (cfg.output == "csv") {
    out << "row,index,mu\n";
    for (std::size_t k = 0; k < pattern.rows.size(); ++k) {
      for (std::size_t i = 0; i < pattern.rows[k].size(); ++i) {
        out << k + 1 << "," << i + 1 << "," << num(pattern.rows[k][i]) << "\n";
      }
    }
  } else {
    const int width = 12;
    for (std::size_t k = 0; k < pattern.rows.size(); ++k) {
      out << std::string((k + 1) * width / 2, ' ');
      for (double v : pattern.rows[k]) {
        const double shown = std::abs(v) < 5e-13 ? 0.0 : v;
        out << std::left << std::setw(width) << short_num(shown);
      }
      out << "\n";
    }
    if (!c.empty()) {
      out << "c:";
      for (double v : c) out << " " << short_num(v);
      out << "\n";
    }
  }
  return kOk;
}

ScalarField registry(const std::string& id, int n) {
  if (id == "f1" || id == "e-sum") return invariants::e_sum_field(n);
  if (id == "x-sum") return invariants::x_sum_field(n);
  auto parse_k = [&](const std::string& prefix) -> int {
    if (id.rfind(prefix, 0) != 0) return -1;
    try {
      return std::stoi(id.substr(prefix.size()));
    } catch (const std::exception&) {
      return 0;
    }
  };
  if (int k = parse_k("e_k:"); k != -1) {
    if (k < 1 || k > n) throw Error(ErrorCode::InvalidArgument, "e_k index out of range in '" + id + "'");
    return invariants::elementary_field(n, k);
  }
  if (int k = parse_k("p_k:"); k != -1) {
    if (k < 1) throw Error(ErrorCode::InvalidArgument, "p_k index out of range in '" + id + "'");
    return invariants::power_sum_field(n, k);
  }
  throw Error(ErrorCode::InvalidArgument, "unknown function id '" + id + "'");
}

int cmd_lenard_run(const RunConfig& cfg, const std::string& fn, int K, std::ostream& out) {
  const int n = cfg.n;
  if (K < 1) K = n;
  const auto seed = registry(fn, n);
  const auto pts = charts::PointSampler(n, cfg.seed, cfg.margin).take(cfg.samples);
  std::vector<std::vector<double>> xs;
  for (const auto& p : pts) xs.push_back(p.x);
  const auto chain = lenard::lenard_chain(seed, K, lenard::default_base_point(n, cfg.margin), xs);
  const auto rep = lenard::analyze_chain(chain, pts);

  if (cfg.output == "json") {
    out << io::chain_to_json(rep).dump(2) << "\n";
  } else if (cfg.output == "csv") {
    out << "step,closedness_residual,ratio\n";
    for (std::size_t j = 0; j < rep.residuals.size(); ++j) {
      out << j + 1 << "," << num(rep.residuals[j]) << "," << num(rep.ratios[j]) << "\n";
    }
  } else {
    out << "seed " << rep.seed << ", K = " << rep.K << ", rank = " << rep.rank
        << ", involution max = " << short_num(rep.involution_max) << "\n";
    for (std::size_t j = 0; j < rep.residuals.size(); ++j) {
      out << "  step " << j + 1 << ": closedness " << short_num(rep.residuals[j]) << ", ratio "
          << short_num(rep.ratios[j]) << "\n";
    }
    for (std::size_t k = 0; k < rep.reference_cosine.size(); ++k) {
      out << "  member " << k + 1 << ": cosine vs reference " << num(rep.reference_cosine[k]) << ", scale "
          << short_num(rep.reference_scale[k]) << "\n";
    }
  }
  return kOk;
}

int cmd_flow_run(const RunConfig& cfg, const std::string& ham, const std::string& structure, double T, double dt,
                 std::ostream& out) {
  const int n = cfg.n;
  const auto h = registry(ham, n);
  std::optional<poisson::BivectorField> P;
  if (structure == "pi_s") P = poisson::make_pi_s(n);
  if (structure == "pi_inf") P = poisson::make_pi_inf(n);
  if (!P) throw Error(ErrorCode::InvalidArgument, "unknown structure id '" + structure + "'");
  const auto start = charts::random_point(n, cfg.seed, cfg.margin);
  const auto traj = flows::integrate(h, *P, start, T, dt);
  if (cfg.output == "json") {
    std::vector<double> drift;
    std::vector<ScalarField> family;
    for (int k = 1; k <= n; ++k) family.push_back(invariants::elementary_field(n, k));
    out << json{{"hamiltonian", ham},
                {"structure", structure},
                {"steps", traj.size() - 1},
                {"dt", traj.dt},
                {"start", io::point_to_json(start)},
                {"end", io::point_to_json(traj.states.back())},
                {"f_family_drift", flows::conservation_report(traj, family)}}
               .dump(2)
        << "\n";
  } else {
    flows::write_csv(out, traj);
  }
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Bi-hamiltonian structures on CP^n: verification suites and data emission"};
  app.require_subcommand(1);

  RunConfig cfg;
  std::string point_json;
  bool identity = false;
  std::string fn = "e-sum";
  int K = 0;
  std::string ham = "f1";
  std::string structure = "pi_s";
  double T = 10.0;
  double dt = 1e-3;

  auto* verify = app.add_subcommand("verify-all", "Run every verification suite");
  add_common(verify, cfg);

  auto* ftable = app.add_subcommand("f-table", "Tabulate c, e_k(c) and both f_k definitions at a point");
  add_common(ftable, cfg);
  ftable->add_option("--point", point_json, "Point as JSON {n, x, phi}");

  auto* gtdemo = app.add_subcommand("gt-demo", "Gelfand-Tsetlin pattern of an orbit point");
  add_common(gtdemo, cfg);
  gtdemo->add_flag("--identity", identity, "Use A = I instead of a random frame");

  auto* lenard_cmd = app.add_subcommand("lenard-run", "Build a Lenard chain and report it");
  add_common(lenard_cmd, cfg);
  lenard_cmd->add_option("--function", fn, "Seed function id (e-sum, x-sum, f1, e_k:<k>, p_k:<k>)");
  lenard_cmd->add_option("--K", K, "Chain length including the seed (default n)");

  auto* flow = app.add_subcommand("flow-run", "Integrate a Hamiltonian flow and emit the trajectory");
  add_common(flow, cfg);
  flow->add_option("--hamiltonian", ham, "Hamiltonian id");
  flow->add_option("--structure", structure, "pi_s or pi_inf");
  flow->add_option("--T", T, "Final time")->check(CLI::NonNegativeNumber);
  flow->add_option("--dt", dt, "Time step")->check(CLI::PositiveNumber);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsageError;
  }

  try {
    if (verify->parsed()) return cmd_verify_all(cfg, out, err);
    if (ftable->parsed()) return cmd_f_table(cfg, point_json, out);
    if (gtdemo->parsed()) return cmd_gt_demo(cfg, identity, out);
    if (lenard_cmd->parsed()) return cmd_lenard_run(cfg, fn, K, out);
    if (flow->parsed()) return cmd_flow_run(cfg, ham, structure, T, dt, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    switch (e.code()) {
      case ErrorCode::InvalidArgument:
      case ErrorCode::ParseError:
      case ErrorCode::InvalidSimplexPoint:
        return kUsageError;
      default:
        return kVerificationFailed;
    }
  }
  return kUsageError;
}

}  // namespace bruhat::cli
