#pragma once

// Hamiltonian flows dX/dt = i_{dh} P on the momentum-angle chart, integrated
// with the classical fixed-step fourth-order Runge-Kutta method.

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "bruhat/charts.hpp"
#include "bruhat/poisson.hpp"
#include "bruhat/scalar_field.hpp"

namespace bruhat::flows {

struct Trajectory {
  std::vector<double> times;
  std::vector<MomentumAnglePoint> states;
  ScalarField hamiltonian;
  std::optional<poisson::BivectorField> structure;
  double dt = 0.0;

  std::size_t size() const { return states.size(); }
};

struct FlowOptions {
  double margin = 0.0;  // states must keep c-clearance >= margin - 1e-9
  double fd_step = kDefaultFdStep;
};

// Steps of equal length T / ceil(T / dt). Throws LeftDomain when a state
// leaves the margin-shrunk simplex.
Trajectory integrate(const ScalarField& h, const poisson::BivectorField& P, const MomentumAnglePoint& start,
                     double T, double dt, const FlowOptions& opt = {});

// One RK4 step.
MomentumAnglePoint rk4_step(const ScalarField& h, const poisson::BivectorField& P, const MomentumAnglePoint& p,
                            double dt, double fd_step = kDefaultFdStep);

// max over time and family members of |f(state) - f(start)|.
double conservation_report(const Trajectory& traj, const std::vector<ScalarField>& family);

struct PeriodReport {
  std::vector<double> periods;          // 2 pi / (n + 1 - i)
  std::vector<double> phase_error;      // |phi_i(T_i) - phi_i(0)| mod 2 pi
  double max_phase_error = 0.0;
  double x_drift = 0.0;                 // max |x(t) - x(0)| along the trajectory
};

// For a trajectory of f_1 = sum c_k under pi_s: integrates from its start to
// each period 2 pi / (n+1-i) with the trajectory's step and checks that phi_i
// returns to its start.
PeriodReport torus_period_check(const Trajectory& traj);

struct VertexRow {
  int vertex = 0;                  // j for the basis point e_j = [0:..:1:..:0], Z_j = 1
  std::vector<double> c_limit;     // limit of c along the cell approaching e_j
  double e_sum = 0.0;              // c_1 + ... + c_n there
  double f1_ratio = 0.0;           // the ratio-normalised f_1 = e_sum / n
};

std::vector<VertexRow> fixed_point_table(int n);

// Gradient of f_1 = n x_1 + ... + x_n in the momentum simplex: (n, n-1, ..., 1).
std::vector<int> momentum_weights(int n);

void write_csv(std::ostream& out, const Trajectory& traj);

}  // namespace bruhat::flows
