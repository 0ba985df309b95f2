#include "bruhat/flows.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <string>

#include "bruhat/error.hpp"

namespace bruhat::flows {

namespace {

std::vector<double> field_at(const ScalarField& h, const poisson::BivectorField& P, std::span<const double> s,
                             double fd_step) {
  return poisson::hamiltonian_vf(h, P, charts::from_state(s), fd_step);
}

}  // namespace

MomentumAnglePoint rk4_step(const ScalarField& h, const poisson::BivectorField& P, const MomentumAnglePoint& p,
                            double dt, double fd_step) {
  const auto s0 = charts::to_state(p);
  const std::size_t d = s0.size();
  std::vector<double> tmp(d);
  auto axpy = [&](const std::vector<double>& k, double a) {
    for (std::size_t i = 0; i < d; ++i) tmp[i] = s0[i] + a * k[i];
    return tmp;
  };
  const auto k1 = field_at(h, P, s0, fd_step);
  const auto k2 = field_at(h, P, axpy(k1, 0.5 * dt), fd_step);
  const auto k3 = field_at(h, P, axpy(k2, 0.5 * dt), fd_step);
  const auto k4 = field_at(h, P, axpy(k3, dt), fd_step);
  std::vector<double> s1(d);
  for (std::size_t i = 0; i < d; ++i) s1[i] = s0[i] + dt / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
  return charts::from_state(s1);
}

Trajectory integrate(const ScalarField& h, const poisson::BivectorField& P, const MomentumAnglePoint& start,
                     double T, double dt, const FlowOptions& opt) {
  if (!(dt > 0.0)) throw Error(ErrorCode::InvalidArgument, "dt must be positive");
  if (!(T >= 0.0)) throw Error(ErrorCode::InvalidArgument, "T must be non-negative");
  charts::validate(start);
  const auto steps = static_cast<long>(std::ceil(T / dt - 1e-12));
  const double step = steps > 0 ? T / static_cast<double>(steps) : dt;

  Trajectory traj;
  traj.hamiltonian = h;
  traj.structure = P;
  traj.dt = step;
  traj.times.push_back(0.0);
  traj.states.push_back(start);
  MomentumAnglePoint cur = start;
  for (long s = 1; s <= steps; ++s) {
    cur = rk4_step(h, P, cur, step, opt.fd_step);
    if (charts::simplex_clearance(cur.x) < opt.margin - 1e-9) {
      throw Error(ErrorCode::LeftDomain, "flow left the simplex at t = " + std::to_string(s * step));
    }
    traj.times.push_back(static_cast<double>(s) * step);
    traj.states.push_back(cur);
  }
  return traj;
}

double conservation_report(const Trajectory& traj, const std::vector<ScalarField>& family) {
  double worst = 0.0;
  for (const auto& f : family) {
    const double f0 = f(traj.states.front());
    for (const auto& s : traj.states) worst = std::max(worst, std::abs(f(s) - f0));
  }
  return worst;
}

PeriodReport torus_period_check(const Trajectory& traj) {
  if (!traj.structure) throw Error(ErrorCode::InvalidArgument, "trajectory carries no structure");
  const auto& start = traj.states.front();
  const int n = start.n();
  PeriodReport r;
  for (const auto& s : traj.states) {
    for (int i = 0; i < n; ++i) r.x_drift = std::max(r.x_drift, std::abs(s.x[i] - start.x[i]));
  }
  for (int i = 0; i < n; ++i) {
    const double period = 2.0 * std::numbers::pi / (n - i);
    const Trajectory t = integrate(traj.hamiltonian, *traj.structure, start, period, traj.dt);
    const double end = t.states.back().phi[i];
    double d = std::fmod(end - start.phi[i], 2.0 * std::numbers::pi);
    if (d < 0.0) d += 2.0 * std::numbers::pi;
    const double err = std::min(d, 2.0 * std::numbers::pi - d);
    r.periods.push_back(period);
    r.phase_error.push_back(err);
    r.max_phase_error = std::max(r.max_phase_error, err);
  }
  return r;
}

std::vector<VertexRow> fixed_point_table(int n) {
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "n must be >= 1");
  std::vector<VertexRow> rows;
  for (int j = 0; j <= n; ++j) {
    VertexRow row;
    row.vertex = j;
    // e_0 is the cell centre (all c_k = 1); approaching e_j (j >= 1) sends
    // |z_j| to infinity, leaving c_k = 1 for k < j and c_k = 0 for k >= j.
    row.c_limit.resize(n);
    for (int k = 1; k <= n; ++k) row.c_limit[k - 1] = (j == 0 || k < j) ? 1.0 : 0.0;
    for (double c : row.c_limit) row.e_sum += c;
    row.f1_ratio = row.e_sum / n;
    rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<int> momentum_weights(int n) {
  std::vector<int> w(n);
  for (int i = 0; i < n; ++i) w[i] = n - i;
  return w;
}

void write_csv(std::ostream& out, const Trajectory& traj) {
  const int n = traj.states.empty() ? 0 : traj.states.front().n();
  out << "t";
  for (int i = 1; i <= n; ++i) out << ",x_" << i;
  for (int i = 1; i <= n; ++i) out << ",phi_" << i;
  out << "\n";
  char buf[40];
  auto num = [&](double v) {
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
  };
  for (std::size_t s = 0; s < traj.states.size(); ++s) {
    out << num(traj.times[s]);
    for (double v : traj.states[s].x) out << ',' << num(v);
    for (double v : traj.states[s].phi) out << ',' << num(v);
    out << "\n";
  }
}

}  // namespace bruhat::flows
