#include "bruhat/gelfand_tsetlin.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "bruhat/error.hpp"

namespace bruhat::gt {

using Complex = std::complex<double>;

double GTPattern::interlacing_violation() const {
  double worst = 0.0;
  for (std::size_t k = 0; k + 1 < rows.size(); ++k) {
    const auto& upper = rows[k];
    const auto& lower = rows[k + 1];
    for (std::size_t i = 0; i < lower.size(); ++i) {
      worst = std::max(worst, lower[i] - upper[i]);
      worst = std::max(worst, upper[i + 1] - lower[i]);
    }
  }
  return worst;
}

std::string IndexConvention::name() const {
  std::string s = (orientation == Orientation::UpperLeft) ? "ul" : "lr";
  s += (c_order == COrder::Descending) ? ":desc" : ":asc";
  if (row_order == RowOrder::AffineReversed) s += ":rev";
  return s;
}

std::optional<IndexConvention> IndexConvention::parse(const std::string& s) {
  for (const auto& c : extended_conventions()) {
    if (c.name() == s) return c;
  }
  return std::nullopt;
}

std::array<IndexConvention, 4> primary_conventions() {
  return {IndexConvention{Orientation::UpperLeft, COrder::Descending, RowOrder::AsIdentified},
          IndexConvention{Orientation::UpperLeft, COrder::Ascending, RowOrder::AsIdentified},
          IndexConvention{Orientation::LowerRight, COrder::Descending, RowOrder::AsIdentified},
          IndexConvention{Orientation::LowerRight, COrder::Ascending, RowOrder::AsIdentified}};
}

std::array<IndexConvention, 8> extended_conventions() {
  std::array<IndexConvention, 8> out;
  const auto p = primary_conventions();
  for (std::size_t i = 0; i < 4; ++i) {
    out[i] = p[i];
    out[i + 4] = p[i];
    out[i + 4].row_order = RowOrder::AffineReversed;
  }
  return out;
}

UnitaryFrame random_unitary(int dim, std::uint64_t seed) {
  if (dim < 1) throw Error(ErrorCode::InvalidArgument, "frame dimension must be >= 1");
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  CMatrix g(dim, dim);
  for (int j = 0; j < dim; ++j) {
    for (int i = 0; i < dim; ++i) {
      const double re = gauss(rng);
      const double im = gauss(rng);
      g(i, j) = Complex(re, im);
    }
  }
  Eigen::HouseholderQR<CMatrix> qr(g);
  CMatrix q = qr.householderQ() * CMatrix::Identity(dim, dim);
  const CMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int j = 0; j < dim; ++j) {
    const double a = std::abs(r(j, j));
    if (a > 0.0) q.col(j) *= r(j, j) / a;
  }
  return UnitaryFrame{q};
}

UnitaryFrame identity_frame(int dim) { return UnitaryFrame{CMatrix::Identity(dim, dim)}; }

OrbitMatrix orbit_point(const UnitaryFrame& frame, double lambda) {
  if (!(lambda > 0.0)) throw Error(ErrorCode::InvalidArgument, "lambda must be positive");
  const Eigen::VectorXcd v = frame.A.col(0);
  return OrbitMatrix{Complex(0.0, lambda) * v * v.adjoint(), lambda};
}

OrbitMatrix orbit_point_by_conjugation(const UnitaryFrame& frame, double lambda) {
  if (!(lambda > 0.0)) throw Error(ErrorCode::InvalidArgument, "lambda must be positive");
  const int d = frame.dim();
  CMatrix B = CMatrix::Zero(d, d);
  B(0, 0) = Complex(0.0, lambda);
  return OrbitMatrix{frame.A * B * frame.A.inverse(), lambda};
}

charts::HomogeneousPoint project_to_cpn(const UnitaryFrame& frame, RowOrder order) {
  const int d = frame.dim();
  charts::HomogeneousPoint p;
  p.Z.resize(d);
  p.Z[0] = frame.A(0, 0);
  for (int i = 1; i < d; ++i) {
    const int row = (order == RowOrder::AsIdentified) ? i : d - i;
    p.Z[i] = frame.A(row, 0);
  }
  return p;
}

std::vector<double> hermitian_eigenvalues(const CMatrix& H, double tol, int max_sweeps) {
  const int m = static_cast<int>(H.rows());
  const int d = 2 * m;
  Eigen::MatrixXd a(d, d);
  a.topLeftCorner(m, m) = H.real();
  a.topRightCorner(m, m) = -H.imag();
  a.bottomLeftCorner(m, m) = H.imag();
  a.bottomRightCorner(m, m) = H.real();
  a = 0.5 * (a + a.transpose());

  const double scale = std::max(1.0, a.norm());
  bool converged = false;
  for (int sweep = 0; sweep < max_sweeps; ++sweep) {
    double off = 0.0;
    for (int p = 0; p < d; ++p) {
      for (int q = p + 1; q < d; ++q) off += a(p, q) * a(p, q);
    }
    if (std::sqrt(off) <= tol * scale) {
      converged = true;
      break;
    }
    for (int p = 0; p < d; ++p) {
      for (int q = p + 1; q < d; ++q) {
        const double apq = a(p, q);
        if (apq == 0.0) continue;
        const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
        const double t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (int k = 0; k < d; ++k) {
          const double akp = a(k, p);
          const double akq = a(k, q);
          a(k, p) = c * akp - s * akq;
          a(k, q) = s * akp + c * akq;
        }
        for (int k = 0; k < d; ++k) {
          const double apk = a(p, k);
          const double aqk = a(q, k);
          a(p, k) = c * apk - s * aqk;
          a(q, k) = s * apk + c * aqk;
        }
      }
    }
  }
  if (!converged) throw Error(ErrorCode::EigenNoConvergence, "Jacobi sweeps exhausted");

  std::vector<double> all(d);
  for (int i = 0; i < d; ++i) all[i] = a(i, i);
  std::sort(all.begin(), all.end(), std::greater<>());
  // Each eigenvalue of H appears twice in the embedding.
  std::vector<double> out(m);
  for (int i = 0; i < m; ++i) out[i] = 0.5 * (all[2 * i] + all[2 * i + 1]);
  return out;
}

GTPattern gt_pattern(const OrbitMatrix& m, Orientation orientation) {
  const int d = static_cast<int>(m.M.rows());
  const CMatrix h = Complex(0.0, -1.0) * m.M;
  GTPattern pat;
  for (int k = 1; k < d; ++k) {
    const int size = d - k;
    const int start = (orientation == Orientation::UpperLeft) ? 0 : d - size;
    pat.rows.push_back(hermitian_eigenvalues(h.block(start, start, size, size)));
  }
  return pat;
}

namespace {

// Comparison target lambda * c_sigma(k) for k = 1..n, or nullopt outside the big cell.
std::optional<std::vector<double>> c_of_frame(const UnitaryFrame& frame, RowOrder order) {
  const auto Z = project_to_cpn(frame, order);
  if (std::abs(Z.Z[0]) <= 1e-12) return std::nullopt;
  const auto z = charts::affine_from_homogeneous(Z);
  return charts::c_from_x(charts::momentum_from_affine(z).x);
}

double residual_from(const GTPattern& pat, const std::vector<double>& c, double lambda, COrder order) {
  const int n = static_cast<int>(c.size());
  double worst = 0.0;
  for (int k = 1; k <= n; ++k) {
    const int idx = (order == COrder::Descending) ? n - k : k - 1;
    worst = std::max(worst, std::abs(pat.rows[k - 1][0] - lambda * c[idx]));
  }
  return worst;
}

IndexConvention canonical(IndexConvention c, int n) {
  if (n == 1) {
    c.c_order = COrder::Descending;
    c.row_order = RowOrder::AsIdentified;
  }
  return c;
}

bool degenerate(const std::vector<double>& c, double tol) {
  const std::size_t n = c.size();
  double d = 0.0;
  for (std::size_t k = 0; k < n; ++k) d = std::max(d, std::abs(c[k] - c[n - 1 - k]));
  return n > 1 && d < tol;
}

}  // namespace

double mu_residual(const UnitaryFrame& frame, double lambda, const IndexConvention& conv) {
  const auto c = c_of_frame(frame, conv.row_order);
  if (!c) throw Error(ErrorCode::OutsideBigCell, "frame projects outside the big cell");
  return residual_from(gt_pattern(orbit_point(frame, lambda), conv.orientation), *c, lambda, conv.c_order);
}

MuReport measure_mu_conventions(const std::vector<UnitaryFrame>& frames, double lambda, double tol) {
  if (frames.empty()) throw Error(ErrorCode::InvalidArgument, "need at least one frame");
  MuReport r;
  r.n = frames.front().dim() - 1;
  r.samples = static_cast<int>(frames.size());
  const auto all = extended_conventions();
  std::vector<double> worst(all.size(), 0.0);

  for (const auto& f : frames) {
    const OrbitMatrix om = orbit_point(f, lambda);
    const GTPattern ul = gt_pattern(om, Orientation::UpperLeft);
    const GTPattern lr = gt_pattern(om, Orientation::LowerRight);

    const Eigen::VectorXcd v = f.A.col(0);
    for (const GTPattern* pat : {&ul, &lr}) {
      const bool upper = (pat == &ul);
      r.max_interlacing_violation = std::max(r.max_interlacing_violation, pat->interlacing_violation());
      for (std::size_t k = 0; k < pat->rows.size(); ++k) {
        const int size = static_cast<int>(pat->rows[k].size());
        const int start = upper ? 0 : f.dim() - size;
        const double s = v.segment(start, size).squaredNorm();
        r.max_rank_one_residual = std::max(r.max_rank_one_residual, std::abs(pat->rows[k][0] - lambda * s));
        for (std::size_t i = 1; i < pat->rows[k].size(); ++i) {
          r.max_tail_entry = std::max(r.max_tail_entry, std::abs(pat->rows[k][i]));
        }
      }
    }

    const auto c_id = c_of_frame(f, RowOrder::AsIdentified);
    const auto c_rev = c_of_frame(f, RowOrder::AffineReversed);
    if (!c_id || !c_rev || degenerate(*c_id, tol)) {
      ++r.degenerate_samples;
      continue;
    }
    for (std::size_t i = 0; i < all.size(); ++i) {
      const auto& conv = all[i];
      const auto& c = (conv.row_order == RowOrder::AsIdentified) ? *c_id : *c_rev;
      const auto& pat = (conv.orientation == Orientation::UpperLeft) ? ul : lr;
      worst[i] = std::max(worst[i], residual_from(pat, c, lambda, conv.c_order));
    }
  }

  const bool usable = r.degenerate_samples < r.samples;
  auto add_match = [&](std::vector<IndexConvention>& list, const IndexConvention& conv) {
    const auto canon = canonical(conv, r.n);
    if (std::find(list.begin(), list.end(), canon) == list.end()) list.push_back(canon);
  };
  for (std::size_t i = 0; i < all.size(); ++i) {
    ConventionResidual cr{all[i], worst[i], usable && worst[i] < tol};
    if (all[i].row_order == RowOrder::AsIdentified) {
      r.primary.push_back(cr);
      if (cr.matches) add_match(r.primary_matches, all[i]);
    }
    r.extended.push_back(cr);
    if (cr.matches) add_match(r.extended_matches, all[i]);
  }
  return r;
}

IndexConvention verify_mu_formula(const std::vector<UnitaryFrame>& frames, double lambda, double tol) {
  const MuReport r = measure_mu_conventions(frames, lambda, tol);
  if (r.primary_matches.empty()) {
    throw Error(ErrorCode::NoConventionMatches, "no index convention realises mu_1^k = lambda c");
  }
  if (r.primary_matches.size() > 1) {
    throw Error(ErrorCode::MultipleConventionsMatch, "several index conventions realise mu_1^k = lambda c");
  }
  return r.primary_matches.front();
}

}  // namespace bruhat::gt
