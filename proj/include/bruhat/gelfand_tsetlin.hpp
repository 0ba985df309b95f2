#pragma once

// CP^n as the coadjoint orbit of B = diag(i*lambda, 0, ..., 0) in u(n+1)*,
// Gelfand-Tsetlin patterns of orbit points, and the comparison of the first
// pattern entries with the prefix sums c_k of the momentum chart.

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "bruhat/charts.hpp"

namespace bruhat::gt {

using CMatrix = Eigen::MatrixXcd;

struct UnitaryFrame {
  CMatrix A;
  int dim() const { return static_cast<int>(A.rows()); }
};

struct OrbitMatrix {
  CMatrix M;  // skew-Hermitian, -iM = lambda v v^*
  double lambda = 1.0;
};

// row k (k = 1..n) holds the descending spectrum of an (n+1-k)-dimensional
// nested principal submatrix of -iM.
struct GTPattern {
  std::vector<std::vector<double>> rows;

  // Largest violation of row_k[i] >= row_{k+1}[i] >= row_k[i+1] (0 if none).
  double interlacing_violation() const;
  bool interlaces(double slack = 1e-9) const { return interlacing_violation() <= slack; }
};

enum class Orientation { UpperLeft, LowerRight };

// Which c is compared with mu_1^k: Descending = c_{n-k+1},
// Ascending = c_k.
enum class COrder { Descending, Ascending };

// How the first column of A is laid out as homogeneous coordinates:
// AsIdentified = [a_11 : a_21 : ... : a_{n+1,1}], AffineReversed keeps
// Z_0 = a_11 and reverses the remaining entries.
enum class RowOrder { AsIdentified, AffineReversed };

struct IndexConvention {
  Orientation orientation = Orientation::UpperLeft;
  COrder c_order = COrder::Descending;
  RowOrder row_order = RowOrder::AsIdentified;

  std::string name() const;
  static std::optional<IndexConvention> parse(const std::string& s);
  friend bool operator==(const IndexConvention&, const IndexConvention&) = default;
};

// The four conventions {UL, LR} x {Descending, Ascending} on the identified rows.
std::array<IndexConvention, 4> primary_conventions();
// Primary conventions crossed with both row orders.
std::array<IndexConvention, 8> extended_conventions();

UnitaryFrame random_unitary(int dim, std::uint64_t seed);
UnitaryFrame identity_frame(int dim);

// i*lambda*v v^* with v the first column of A.
OrbitMatrix orbit_point(const UnitaryFrame& frame, double lambda = 1.0);
// A B A^{-1} formed explicitly.
OrbitMatrix orbit_point_by_conjugation(const UnitaryFrame& frame, double lambda = 1.0);

charts::HomogeneousPoint project_to_cpn(const UnitaryFrame& frame,
                                        RowOrder order = RowOrder::AsIdentified);

// Descending eigenvalues of a Hermitian matrix by cyclic Jacobi rotations on
// the real symmetric embedding [[Re, -Im], [Im, Re]].
std::vector<double> hermitian_eigenvalues(const CMatrix& H, double tol = 1e-12, int max_sweeps = 60);

GTPattern gt_pattern(const OrbitMatrix& m, Orientation orientation);

struct ConventionResidual {
  IndexConvention convention;
  double max_residual = 0.0;  // over samples and k
  bool matches = false;
};

struct MuReport {
  int n = 0;
  int samples = 0;
  int degenerate_samples = 0;              // excluded from disambiguation
  std::vector<ConventionResidual> primary;
  std::vector<ConventionResidual> extended;
  std::vector<IndexConvention> primary_matches;   // distinct up to equivalence at this n
  std::vector<IndexConvention> extended_matches;
  double max_tail_entry = 0.0;             // max |mu_r^k|, r >= 2
  double max_interlacing_violation = 0.0;
  double max_rank_one_residual = 0.0;      // row k vs lambda * (squared norm of the sub-block)
};

// Measures every convention on the given frames. Never throws for
// matching outcomes; see verify_mu_formula for the strict form.
MuReport measure_mu_conventions(const std::vector<UnitaryFrame>& frames, double lambda = 1.0,
                                double tol = 1e-8);

// Returns the unique primary convention realising mu_1^k = lambda c_sigma(k);
// throws NoConventionMatches / MultipleConventionsMatch otherwise.
IndexConvention verify_mu_formula(const std::vector<UnitaryFrame>& frames, double lambda = 1.0,
                                  double tol = 1e-8);

// Residual max_k |mu_1^k - lambda c_sigma(k)| of one convention at one frame.
double mu_residual(const UnitaryFrame& frame, double lambda, const IndexConvention& conv);

}  // namespace bruhat::gt
