#pragma once

// Pointwise dense exterior algebra over a real vector space of dimension
// dim <= 30. A grade-k element stores one coefficient per strictly increasing
// index k-tuple; tuples are encoded as bitmasks and slots are ordered by
// increasing mask value (colexicographic order).

#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "bruhat/error.hpp"

namespace bruhat::exterior {

using Mask = std::uint32_t;

inline constexpr int kMaxDim = 30;
inline constexpr double kDefaultDenominatorEpsilon = 1e-12;

std::uint64_t binomial(int n, int k);

// Slot index of a mask inside its grade (colex rank).
std::size_t slot_of(Mask mask);

// All masks of the given grade in slot order.
std::vector<Mask> masks_of_grade(int dim, int grade);

// Sign of e_a ^ e_b reordered to increasing form; 0 when the masks overlap.
int merge_sign(Mask a, Mask b);

struct Contravariant {};
struct Covariant {};

template <class Role>
class Alternating {
 public:
  Alternating(int dim, int grade);

  static Alternating unit(int dim);
  // Wedge of basis elements in the given (0-based, arbitrary) order.
  static Alternating basis(int dim, std::initializer_list<int> indices);

  int dim() const noexcept { return dim_; }
  int grade() const noexcept { return grade_; }
  std::size_t size() const noexcept { return coeffs_.size(); }

  std::span<const double> coeffs() const noexcept { return coeffs_; }
  std::span<double> coeffs() noexcept { return coeffs_; }

  double operator[](std::size_t slot) const { return coeffs_[slot]; }
  double& operator[](std::size_t slot) { return coeffs_[slot]; }

  // Coefficient of the canonical element with index set `mask`.
  double at(Mask mask) const;
  double& at(Mask mask);

  // Coefficient of the single top-degree slot.
  double top() const;

  double max_abs() const;

  Alternating& operator+=(const Alternating& other);
  Alternating& operator-=(const Alternating& other);
  Alternating& operator*=(double s);

  friend Alternating operator+(Alternating a, const Alternating& b) { return a += b; }
  friend Alternating operator-(Alternating a, const Alternating& b) { return a -= b; }
  friend Alternating operator*(double s, Alternating a) { return a *= s; }

 private:
  void check_same_shape(const Alternating& other) const;

  int dim_;
  int grade_;
  std::vector<double> coeffs_;
};

using MultiVector = Alternating<Contravariant>;
using MultiForm = Alternating<Covariant>;

template <class Role>
Alternating<Role> wedge(const Alternating<Role>& a, const Alternating<Role>& b);

template <class Role>
Alternating<Role> wedge_power(const Alternating<Role>& a, int k);

// <v, a> with <e_I, e^J> = delta_IJ on canonical slots (no k! factors).
double pair(const MultiVector& v, const MultiForm& a);

// Ratio of two top-degree coefficients.
double top_ratio(const MultiVector& v, const MultiVector& w,
                 double epsilon = kDefaultDenominatorEpsilon);

// Sum_{i<j} m(i,j) e_i ^ e_j for an antisymmetric matrix m.
template <class Role>
Alternating<Role> from_antisymmetric(const Eigen::MatrixXd& m);

}  // namespace bruhat::exterior
