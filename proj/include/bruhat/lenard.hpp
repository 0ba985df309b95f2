#pragma once

// Lenard recursion i_{dg_j} pi_inf = i_{dg_{j+1}} pi_s for torus-invariant
// Hamiltonians. Both structures send dx to phi-directions, so each step asks
// for a function g_{j+1}(x) with
//   d g_{j+1} / d x_i = Theta_i g_j = c_i dg_j/dx_i + sum_{a>i} x_a dg_j/dx_a.

#include <functional>
#include <span>
#include <string>
#include <vector>

#include "bruhat/charts.hpp"
#include "bruhat/scalar_field.hpp"

namespace bruhat::lenard {

inline constexpr double kClosednessTolerance = 1e-6;

// A one-form on the momentum simplex, written by its x-components.
struct XOneForm {
  int n = 0;
  std::function<std::vector<double>(std::span<const double>)> eval;

  std::vector<double> operator()(std::span<const double> x) const { return eval(x); }
};

// Theta applied to a gradient: (T(x) g)_i = c_i g_i + sum_{a>i} x_a g_a.
std::vector<double> apply_theta(std::span<const double> x, std::span<const double> grad_x);

std::vector<double> lenard_oneform(const ScalarField& g, const MomentumAnglePoint& point);
XOneForm lenard_oneform(const ScalarField& g);

// max over samples and i < j of |d alpha_i/dx_j - d alpha_j/dx_i|.
double closedness_residual(const XOneForm& alpha, const std::vector<std::vector<double>>& samples,
                           double h = kDefaultFdStep);

// g(x) = int_0^1 alpha(base + t (x - base)) . (x - base) dt, so g(base) = 0 and
// dg = alpha. Throws NotClosed when the residual on `samples` exceeds tol.
ScalarField integrate_potential(const XOneForm& alpha, std::vector<double> base_x,
                                const std::vector<std::vector<double>>& samples, std::string id = "potential",
                                double tol = kClosednessTolerance);

struct LenardChain {
  std::vector<ScalarField> members;           // members[0] is the seed
  std::vector<double> closedness_residuals;   // one per step
  MomentumAnglePoint base_point;
};

// Interior point at the expected order statistics of the sampler:
// c_k = margin + (1 - 2 margin)(n + 1 - k)/(n + 1).
MomentumAnglePoint default_base_point(int n, double margin = charts::kDefaultMargin);

// K members in total (seed included). `samples` are x-vectors used for the
// closedness certificate at each step.
LenardChain lenard_chain(const ScalarField& seed, int K, const MomentumAnglePoint& base_point,
                         const std::vector<std::vector<double>>& samples, double tol = kClosednessTolerance);

// Numerical rank (singular values above rel * max) of the K x n matrix of
// x-gradients, maximised over the points.
int independence_rank(const std::vector<ScalarField>& fields, const std::vector<MomentumAnglePoint>& points,
                      double rel = 1e-8);

// min over points of the cosine between the x-gradients of a and b.
double min_gradient_cosine(const ScalarField& a, const ScalarField& b, const std::vector<MomentumAnglePoint>& points);

struct ChainReport {
  std::string seed;
  int K = 0;
  std::vector<double> residuals;
  std::vector<double> ratios;         // X_{g_j}^{pi_inf} = ratio * X_{g_{j+1}}^{pi_s}, per step
  std::vector<double> ratio_spread;   // point-to-point variation of each ratio
  int rank = 0;
  double involution_max = 0.0;        // over member pairs, both structures
  // Only for seeds with a known closed-form chain (e-sum -> p_k, x-sum -> s^k).
  std::vector<double> reference_cosine;  // min cosine of member k against the reference
  std::vector<double> reference_scale;   // |grad member_k| / |grad reference_k|
};

ChainReport analyze_chain(const LenardChain& chain, const std::vector<MomentumAnglePoint>& points);

// Reference chain for the registered seeds, or empty.
std::vector<ScalarField> reference_chain(const std::string& seed_id, int n, int K);

}  // namespace bruhat::lenard
