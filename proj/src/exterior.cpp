#include "bruhat/exterior.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <string>

namespace bruhat::exterior {

std::uint64_t binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t v = 1;
  for (int i = 0; i < k; ++i) v = v * static_cast<std::uint64_t>(n - i) / static_cast<std::uint64_t>(i + 1);
  return v;
}

std::size_t slot_of(Mask mask) {
  std::size_t rank = 0;
  int j = 0;
  while (mask != 0) {
    const int i = std::countr_zero(mask);
    ++j;
    rank += binomial(i, j);
    mask &= mask - 1;
  }
  return rank;
}

std::vector<Mask> masks_of_grade(int dim, int grade) {
  std::vector<Mask> out;
  out.reserve(binomial(dim, grade));
  if (grade == 0) {
    out.push_back(0);
    return out;
  }
  const std::uint64_t limit = std::uint64_t{1} << dim;
  std::uint64_t m = (std::uint64_t{1} << grade) - 1;
  while (m < limit) {
    out.push_back(static_cast<Mask>(m));
    // Gosper's hack: next integer with the same popcount.
    const std::uint64_t c = m & (~m + 1);
    const std::uint64_t r = m + c;
    m = (((r ^ m) >> 2) / c) | r;
  }
  return out;
}

int merge_sign(Mask a, Mask b) {
  if ((a & b) != 0) return 0;
  int inversions = 0;
  while (b != 0) {
    const int i = std::countr_zero(b);
    const Mask above = (i + 1 >= 32) ? Mask{0} : ~((Mask{1} << (i + 1)) - 1);
    inversions += std::popcount(a & above);
    b &= b - 1;
  }
  return (inversions % 2 == 0) ? 1 : -1;
}

template <class Role>
Alternating<Role>::Alternating(int dim, int grade) : dim_(dim), grade_(grade) {
  if (dim < 0 || dim > kMaxDim) {
    throw Error(ErrorCode::DimensionMismatch, "dimension " + std::to_string(dim) + " out of range");
  }
  // Grades above dim are the zero space.
  if (grade < 0) {
    throw Error(ErrorCode::GradeOverflow,
                "grade " + std::to_string(grade) + " invalid for dimension " + std::to_string(dim));
  }
  coeffs_.assign(binomial(dim, grade), 0.0);
}

template <class Role>
Alternating<Role> Alternating<Role>::unit(int dim) {
  Alternating out(dim, 0);
  out.coeffs_[0] = 1.0;
  return out;
}

template <class Role>
Alternating<Role> Alternating<Role>::basis(int dim, std::initializer_list<int> indices) {
  Alternating out = unit(dim);
  for (int i : indices) {
    if (i < 0 || i >= dim) {
      throw Error(ErrorCode::DimensionMismatch, "basis index " + std::to_string(i) + " out of range");
    }
    Alternating e(dim, 1);
    e.coeffs_[static_cast<std::size_t>(i)] = 1.0;
    out = wedge(out, e);
  }
  return out;
}

template <class Role>
double Alternating<Role>::at(Mask mask) const {
  if (std::popcount(mask) != grade_) throw Error(ErrorCode::GradeOverflow, "mask grade mismatch");
  return coeffs_[slot_of(mask)];
}

template <class Role>
double& Alternating<Role>::at(Mask mask) {
  if (std::popcount(mask) != grade_) throw Error(ErrorCode::GradeOverflow, "mask grade mismatch");
  return coeffs_[slot_of(mask)];
}

template <class Role>
double Alternating<Role>::top() const {
  if (grade_ != dim_) throw Error(ErrorCode::GradeOverflow, "top() requires grade == dim");
  return coeffs_[0];
}

template <class Role>
double Alternating<Role>::max_abs() const {
  double m = 0.0;
  for (double c : coeffs_) m = std::max(m, std::abs(c));
  return m;
}

template <class Role>
void Alternating<Role>::check_same_shape(const Alternating& other) const {
  if (dim_ != other.dim_ || grade_ != other.grade_) {
    throw Error(ErrorCode::DimensionMismatch, "operands differ in dimension or grade");
  }
}

template <class Role>
Alternating<Role>& Alternating<Role>::operator+=(const Alternating& other) {
  check_same_shape(other);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  return *this;
}

template <class Role>
Alternating<Role>& Alternating<Role>::operator-=(const Alternating& other) {
  check_same_shape(other);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
  return *this;
}

template <class Role>
Alternating<Role>& Alternating<Role>::operator*=(double s) {
  for (double& c : coeffs_) c *= s;
  return *this;
}

template <class Role>
Alternating<Role> wedge(const Alternating<Role>& a, const Alternating<Role>& b) {
  if (a.dim() != b.dim()) throw Error(ErrorCode::DimensionMismatch, "wedge of different dimensions");
  if (a.grade() + b.grade() > a.dim()) {
    throw Error(ErrorCode::GradeOverflow, "wedge grade exceeds dimension");
  }
  Alternating<Role> out(a.dim(), a.grade() + b.grade());
  const auto ma = masks_of_grade(a.dim(), a.grade());
  const auto mb = masks_of_grade(b.dim(), b.grade());
  for (std::size_t i = 0; i < ma.size(); ++i) {
    const double ca = a[i];
    if (ca == 0.0) continue;
    for (std::size_t j = 0; j < mb.size(); ++j) {
      const double cb = b[j];
      if (cb == 0.0) continue;
      const int s = merge_sign(ma[i], mb[j]);
      if (s == 0) continue;
      out[slot_of(ma[i] | mb[j])] += s * ca * cb;
    }
  }
  return out;
}

template <class Role>
Alternating<Role> wedge_power(const Alternating<Role>& a, int k) {
  if (k < 0) throw Error(ErrorCode::GradeOverflow, "negative wedge power");
  if (k * a.grade() > a.dim()) throw Error(ErrorCode::GradeOverflow, "wedge power exceeds dimension");
  Alternating<Role> out = Alternating<Role>::unit(a.dim());
  for (int i = 0; i < k; ++i) out = wedge(out, a);
  return out;
}

double pair(const MultiVector& v, const MultiForm& a) {
  if (v.dim() != a.dim() || v.grade() != a.grade()) {
    throw Error(ErrorCode::DimensionMismatch, "pairing requires equal dimension and grade");
  }
  double s = 0.0;
  for (std::size_t i = 0; i < v.size(); ++i) s += v[i] * a[i];
  return s;
}

double top_ratio(const MultiVector& v, const MultiVector& w, double epsilon) {
  if (v.dim() != w.dim()) throw Error(ErrorCode::DimensionMismatch, "top_ratio dimension mismatch");
  const double den = w.top();
  const double num = v.top();
  if (std::abs(den) <= epsilon) {
    throw Error(ErrorCode::DegenerateDenominator, "top-degree denominator below epsilon");
  }
  return num / den;
}

template <class Role>
Alternating<Role> from_antisymmetric(const Eigen::MatrixXd& m) {
  if (m.rows() != m.cols()) throw Error(ErrorCode::DimensionMismatch, "matrix not square");
  const int dim = static_cast<int>(m.rows());
  Alternating<Role> out(dim, 2);
  for (int i = 0; i < dim; ++i) {
    for (int j = i + 1; j < dim; ++j) out.at((Mask{1} << i) | (Mask{1} << j)) = m(i, j);
  }
  return out;
}

template class Alternating<Contravariant>;
template class Alternating<Covariant>;
template MultiVector wedge(const MultiVector&, const MultiVector&);
template MultiForm wedge(const MultiForm&, const MultiForm&);
template MultiVector wedge_power(const MultiVector&, int);
template MultiForm wedge_power(const MultiForm&, int);
template MultiVector from_antisymmetric<Contravariant>(const Eigen::MatrixXd&);
template MultiForm from_antisymmetric<Covariant>(const Eigen::MatrixXd&);

}  // namespace bruhat::exterior
