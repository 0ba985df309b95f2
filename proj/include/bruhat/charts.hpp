#pragma once

// Coordinate tower on the big cell {Z_0 != 0} of CP^n:
//   homogeneous [Z_0:...:Z_n] -> affine z_i = Z_i/Z_0 -> momentum-angle (x, phi)
//   affine -> Lu coordinates y -> q_i = log(1+|y_i|^2) -> x
// and the prefix-sum coordinates c_k = x_1 + ... + x_k.
//
// Momentum-angle points are stored in the tangent basis order
// (x_1, phi_1, x_2, phi_2, ..., x_n, phi_n) when flattened to a state vector.

#include <complex>
#include <cstdint>
#include <random>
#include <span>
#include <vector>

namespace bruhat::charts {

using Complex = std::complex<double>;

inline constexpr double kDefaultMargin = 0.05;
inline constexpr double kDefaultCellEpsilon = 1e-12;

struct HomogeneousPoint {
  std::vector<Complex> Z;
  int n() const { return static_cast<int>(Z.size()) - 1; }
};

struct AffinePoint {
  std::vector<Complex> z;
  int n() const { return static_cast<int>(z.size()); }
};

struct LuPoint {
  std::vector<Complex> y;
  int n() const { return static_cast<int>(y.size()); }
};

struct QPoint {
  std::vector<double> q;
  int n() const { return static_cast<int>(q.size()); }
};

// Angles are kept unwrapped; compare with angles_equal().
struct MomentumAnglePoint {
  std::vector<double> x;
  std::vector<double> phi;
  int n() const { return static_cast<int>(x.size()); }
};

AffinePoint affine_from_homogeneous(const HomogeneousPoint& p,
                                    double epsilon = kDefaultCellEpsilon);
HomogeneousPoint homogeneous_from_affine(const AffinePoint& p);

MomentumAnglePoint momentum_from_affine(const AffinePoint& p);
AffinePoint affine_from_momentum(const MomentumAnglePoint& p);

LuPoint lu_from_affine(const AffinePoint& p);
AffinePoint affine_from_lu(const LuPoint& p);

QPoint q_from_lu(const LuPoint& p);
std::vector<double> x_from_q(const QPoint& q);

std::vector<double> c_from_x(std::span<const double> x);
std::vector<double> x_from_c(std::span<const double> c);

// True when 1 > c_1 >= ... >= c_n > 0 (strict chain when `strict`), with
// x_1 in (0, 1] and x_j <= 0 for j >= 2, all entries finite.
bool satisfies_invariants(const MomentumAnglePoint& p, bool strict = true);

// Throws InvalidSimplexPoint when satisfies_invariants(p, strict) fails.
void validate(const MomentumAnglePoint& p, bool strict = true);

// Minimum distance of the c-chain to the walls {c_1 = 1}, {c_k = c_{k+1}},
// {c_n = 0}; negative outside the closed region.
double simplex_clearance(std::span<const double> x);

bool angles_equal(double a, double b, double tol);

// Flattened state in basis order (x_1, phi_1, ..., x_n, phi_n).
std::vector<double> to_state(const MomentumAnglePoint& p);
MomentumAnglePoint from_state(std::span<const double> s);

inline constexpr int x_index(int i) { return 2 * i; }
inline constexpr int phi_index(int i) { return 2 * i + 1; }

// Seeded sampler of interior points: c drawn strictly decreasing inside
// (margin, 1 - margin), phi uniform in [0, 2 pi).
class PointSampler {
 public:
  PointSampler(int n, std::uint64_t seed, double margin = kDefaultMargin);

  MomentumAnglePoint next();
  std::vector<MomentumAnglePoint> take(int count);

  std::mt19937_64& engine() { return rng_; }

 private:
  int n_;
  double margin_;
  std::mt19937_64 rng_;
};

MomentumAnglePoint random_point(int n, std::uint64_t seed, double margin = kDefaultMargin);

}  // namespace bruhat::charts
