#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "bruhat/charts.hpp"
#include "bruhat/error.hpp"
#include "bruhat/gelfand_tsetlin.hpp"

using namespace bruhat;
using namespace bruhat::gt;

namespace {

std::vector<double> oracle_spectrum(const CMatrix& H) {
  Eigen::SelfAdjointEigenSolver<CMatrix> es(H);
  std::vector<double> v(es.eigenvalues().data(), es.eigenvalues().data() + H.rows());
  std::sort(v.rbegin(), v.rend());
  return v;
}

std::vector<UnitaryFrame> frames(int dim, int count, std::uint64_t base) {
  std::vector<UnitaryFrame> out;
  for (int i = 0; i < count; ++i) out.push_back(random_unitary(dim, base + i));
  return out;
}

}  // namespace

TEST_CASE("random unitary frames") {
  for (int dim = 2; dim <= 6; ++dim) {
    const auto f = random_unitary(dim, 10 + dim);
    const CMatrix I = CMatrix::Identity(dim, dim);
    CHECK((f.A.adjoint() * f.A - I).norm() < 1e-12);
    CHECK(std::abs(std::abs(f.A.determinant()) - 1.0) < 1e-10);
    CHECK(f.A.col(0).norm() == doctest::Approx(1.0).epsilon(1e-14));
    CHECK((random_unitary(dim, 10 + dim).A - f.A).norm() == 0.0);
  }
}

TEST_CASE("orbit points") {
  const auto m = orbit_point(identity_frame(3), 2.0);
  CMatrix expect = CMatrix::Zero(3, 3);
  expect(0, 0) = std::complex<double>(0, 2.0);
  CHECK((m.M - expect).norm() == 0.0);
  for (int dim = 2; dim <= 6; ++dim) {
    const auto f = random_unitary(dim, 70 + dim);
    const auto a = orbit_point(f, 1.5);
    const auto b = orbit_point_by_conjugation(f, 1.5);
    CHECK((a.M - b.M).norm() < 1e-12);
    CHECK((a.M + a.M.adjoint()).norm() < 1e-14);
    const CMatrix H = std::complex<double>(0, -1) * a.M;
    CHECK(H.trace().real() == doctest::Approx(1.5));
    const auto eig = oracle_spectrum(H);
    CHECK(eig[0] == doctest::Approx(1.5));
    for (int i = 1; i < dim; ++i) CHECK(std::abs(eig[i]) < 1e-10);
  }
}

TEST_CASE("projection to CP^n") {
  const auto Z = project_to_cpn(identity_frame(3)).Z;
  CHECK(Z[0] == std::complex<double>(1.0, 0.0));
  CHECK(std::abs(Z[1]) + std::abs(Z[2]) == 0.0);

  auto f = random_unitary(4, 5);
  const auto a = charts::affine_from_homogeneous(project_to_cpn(f));
  double norm = 0.0;
  for (auto z : project_to_cpn(f).Z) norm += std::norm(z);
  CHECK(norm == doctest::Approx(1.0).epsilon(1e-14));
  f.A.col(0) *= std::polar(1.0, 0.7);
  const auto b = charts::affine_from_homogeneous(project_to_cpn(f));
  for (int i = 0; i < 3; ++i) CHECK(std::abs(a.z[i] - b.z[i]) < 1e-14);

  const auto r = project_to_cpn(f, RowOrder::AffineReversed).Z;
  CHECK(r[0] == f.A(0, 0));
  CHECK(r[1] == f.A(3, 0));
  CHECK(r[3] == f.A(1, 0));
}

TEST_CASE("Jacobi eigenvalues against a reference solver") {
  std::mt19937_64 rng(1);
  std::normal_distribution<double> g;
  for (int dim = 1; dim <= 9; ++dim) {
    CMatrix X(dim, dim);
    for (int i = 0; i < dim; ++i)
      for (int j = 0; j < dim; ++j) X(i, j) = {g(rng), g(rng)};
    const CMatrix H = X + X.adjoint();
    const auto a = hermitian_eigenvalues(H);
    const auto b = oracle_spectrum(H);
    REQUIRE(a.size() == b.size());
    for (int i = 0; i < dim; ++i) CHECK(a[i] == doctest::Approx(b[i]).epsilon(1e-11));
  }
  CHECK_THROWS_AS(hermitian_eigenvalues(CMatrix::Random(3, 3) * 1e3, 1e-300, 1), Error);
}

TEST_CASE("patterns") {
  auto p = gt_pattern(orbit_point(identity_frame(3)), Orientation::UpperLeft);
  REQUIRE(p.rows.size() == 2);
  CHECK(p.rows[0].size() == 2);
  CHECK(p.rows[0][0] == doctest::Approx(1.0));
  CHECK(std::abs(p.rows[0][1]) < 1e-15);
  CHECK(p.rows[1][0] == doctest::Approx(1.0));

  for (int n = 1; n <= 5; ++n) {
    for (const auto& f : frames(n + 1, 20, 100 * n)) {
      const auto m = orbit_point(f);
      const CMatrix H = std::complex<double>(0, -1) * m.M;
      for (auto o : {Orientation::UpperLeft, Orientation::LowerRight}) {
        const auto pat = gt_pattern(m, o);
        REQUIRE(pat.rows.size() == static_cast<std::size_t>(n));
        CHECK(pat.interlaces());
        for (int k = 1; k <= n; ++k) {
          const int size = n + 1 - k;
          const int off = o == Orientation::UpperLeft ? 0 : k;
          const auto ref = oracle_spectrum(H.block(off, off, size, size));
          double s = 0.0;
          for (int i = 0; i < size; ++i) s += std::norm(f.A(off + i, 0));
          CHECK(pat.rows[k - 1][0] == doctest::Approx(s).epsilon(1e-12));
          for (int i = 0; i < size; ++i) CHECK(pat.rows[k - 1][i] == doctest::Approx(ref[i]).epsilon(1e-11));
          for (int i = 1; i < size; ++i) CHECK(std::abs(pat.rows[k - 1][i]) < 1e-8);
        }
      }
    }
  }
  GTPattern bad{{{1.0, 0.5}, {0.2}}};
  CHECK_FALSE(bad.interlaces());
  CHECK(bad.interlacing_violation() == doctest::Approx(0.3));
}

TEST_CASE("convention names") {
  CHECK(primary_conventions().size() == 4);
  CHECK(extended_conventions().size() == 8);
  for (const auto& c : extended_conventions()) {
    const auto back = IndexConvention::parse(c.name());
    REQUIRE(back.has_value());
    CHECK(*back == c);
  }
  CHECK(IndexConvention::parse("ul:desc")->c_order == COrder::Descending);
  CHECK_FALSE(IndexConvention::parse("diag:asc").has_value());
}

TEST_CASE("first pattern entries against prefix sums") {
  // Oracle: with sum |Z_i|^2 = 1, c_k = |Z_0|^2 + sum_{i>k} |Z_i|^2 and the
  // upper-left row k equals sum_{i < n+1-k} |Z_i|^2.
  for (int n = 1; n <= 5; ++n) {
    for (const auto& f : frames(n + 1, 10, 500 + n)) {
      const auto p = charts::momentum_from_affine(charts::affine_from_homogeneous(project_to_cpn(f)));
      const auto c = charts::c_from_x(p.x);
      for (int k = 1; k <= n; ++k) {
        double ck = std::norm(f.A(0, 0));
        for (int i = k + 1; i <= n; ++i) ck += std::norm(f.A(i, 0));
        CHECK(c[k - 1] == doctest::Approx(ck).epsilon(1e-12));
      }
    }
  }

  // A = I has c = (1, ..., 1): the upper-left conventions all match, the
  // lower-right blocks miss the only nonzero entry.
  for (const auto& conv : extended_conventions()) {
    const double r = mu_residual(identity_frame(4), 1.0, conv);
    if (conv.orientation == Orientation::UpperLeft)
      CHECK(r < 1e-12);
    else
      CHECK(r == doctest::Approx(1.0));
  }

  for (int n = 1; n <= 5; ++n) {
    const auto r = measure_mu_conventions(frames(n + 1, 50, 900 + 10 * n));
    CHECK(r.max_tail_entry < 1e-8);
    CHECK(r.max_interlacing_violation < 1e-9);
    CHECK(r.max_rank_one_residual < 1e-10);
    REQUIRE(r.extended_matches.size() == 1);
    CHECK(mu_residual(random_unitary(n + 1, 3), 1.0, *IndexConvention::parse("ul:asc:rev")) < 1e-12);
    if (n >= 2) CHECK(r.extended_matches[0].name() == "ul:asc:rev");
    if (n == 1) {
      CHECK(r.primary_matches.size() == 1);
      CHECK_NOTHROW(verify_mu_formula(frames(2, 50, 1)));
    } else {
      CHECK(r.primary_matches.empty());
      try {
        verify_mu_formula(frames(n + 1, 50, 1));
        FAIL("expected NoConventionMatches");
      } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::NoConventionMatches);
      }
    }
  }
}

TEST_CASE("lambda scaling") {
  const auto f = random_unitary(4, 3);
  const auto conv = *IndexConvention::parse("ul:asc:rev");
  CHECK(mu_residual(f, 2.5, conv) < 1e-12);
  const auto a = gt_pattern(orbit_point(f, 1.0), Orientation::UpperLeft);
  const auto b = gt_pattern(orbit_point(f, 2.5), Orientation::UpperLeft);
  for (std::size_t k = 0; k < a.rows.size(); ++k) CHECK(b.rows[k][0] == doctest::Approx(2.5 * a.rows[k][0]));
}
