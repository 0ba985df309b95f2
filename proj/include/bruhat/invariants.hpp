#pragma once

// The bi-hamiltonian family f_k attached to the pair (pi_inf, pi_s), its
// closed form through elementary symmetric polynomials of c, and the
// recursion operator N = pi_inf o omega_flat.

#include <vector>

#include <Eigen/Dense>

#include "bruhat/charts.hpp"
#include "bruhat/poisson.hpp"
#include "bruhat/scalar_field.hpp"

namespace bruhat::invariants {

// f_j = pi_inf^j ^ pi_s^(n-j) / pi_s^n for j = 1..n.
std::vector<double> f_family_ratio(const MomentumAnglePoint& p);

// f_k = <pi_inf^k, omega^k> for k = 1..n.
std::vector<double> f_family_pairing(const MomentumAnglePoint& p);
double f_pairing(const MomentumAnglePoint& p, int k);

// e_1..e_n (e_0 = 1 omitted).
std::vector<double> elementary_sym(std::span<const double> c);
double power_sum(std::span<const double> c, int k);

// Closed-form fields of x with analytic gradients.
ScalarField elementary_field(int n, int k);  // e_k(c(x))
ScalarField power_sum_field(int n, int k);   // p_k(c(x)) = sum c_i^k
ScalarField e_sum_field(int n);              // c_1 + ... + c_n = n x_1 + ... + x_n
ScalarField x_sum_field(int n);              // x_1 + ... + x_n

struct ElementaryReport {
  int n = 0;
  int samples = 0;
  std::vector<double> constants;          // e_k(c) / f_k(ratio), mean over points
  std::vector<double> spread;             // (max - min) / |mean| per k
  std::vector<double> pairing_constants;  // e_k(c) / f_k(pairing)
  std::vector<double> pairing_spread;
  bool binomial_hypothesis = false;       // constants == C(n, k)
};

// Throws NonconstantRatio when any spread exceeds tol.
ElementaryReport verify_elementary_theorem(const std::vector<MomentumAnglePoint>& points,
                                           double tol = 1e-9);

struct InvolutionReport {
  int n = 0;
  double max_bracket_s = 0.0;
  double max_bracket_b = 0.0;
  double max_bracket_pencil = 0.0;
};

// f_k evaluated as e_k(c(x)) with analytic gradients; brackets under pi_s,
// pi_inf and every pencil member in `pencils` ((alpha, beta) pairs).
InvolutionReport involution_suite(const std::vector<MomentumAnglePoint>& points,
                                  const std::vector<std::pair<double, double>>& pencils = {});

// N = pi_inf^T * Omega with Omega = (pi_s^T)^{-1}, so N reduces to the
// identity for pi_s and has eigenvalues c_1, c_1, ..., c_n, c_n.
Eigen::MatrixXd recursion_operator(const MomentumAnglePoint& p);

// tr(N^k) for k = 0..kmax.
std::vector<double> recursion_traces(const MomentumAnglePoint& p, int kmax);

}  // namespace bruhat::invariants
