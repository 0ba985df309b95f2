#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "bruhat/charts.hpp"
#include "bruhat/error.hpp"
#include "bruhat/invariants.hpp"
#include "bruhat/lenard.hpp"
#include "bruhat/poisson.hpp"

using namespace bruhat;
using namespace bruhat::lenard;
using charts::MomentumAnglePoint;

namespace {

std::vector<std::vector<double>> xs_of(const std::vector<MomentumAnglePoint>& pts) {
  std::vector<std::vector<double>> out;
  for (const auto& p : pts) out.push_back(p.x);
  return out;
}

// Oracle: x-gradient of p_k(c(x)), d/dx_a = k sum_{i >= a} c_i^{k-1}.
std::vector<double> grad_power_sum(const std::vector<double>& x, int k) {
  const auto c = charts::c_from_x(x);
  const int n = static_cast<int>(x.size());
  std::vector<double> g(n, 0.0);
  for (int a = 0; a < n; ++a)
    for (int i = a; i < n; ++i) g[a] += k * std::pow(c[i], k - 1);
  return g;
}

// Oracle: rank by modified Gram-Schmidt with column pivoting.
int gram_schmidt_rank(std::vector<std::vector<double>> rows, double rel) {
  double scale = 0.0;
  for (const auto& r : rows) {
    double s = 0.0;
    for (double v : r) s += v * v;
    scale = std::max(scale, std::sqrt(s));
  }
  int rank = 0;
  std::vector<std::vector<double>> basis;
  while (!rows.empty()) {
    std::size_t best = 0;
    double best_norm = -1.0;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      double s = 0.0;
      for (double v : rows[i]) s += v * v;
      if (s > best_norm) {
        best_norm = s;
        best = i;
      }
    }
    if (std::sqrt(best_norm) <= rel * scale) break;
    auto q = rows[best];
    rows.erase(rows.begin() + static_cast<long>(best));
    const double nq = std::sqrt(best_norm);
    for (double& v : q) v /= nq;
    for (auto& r : rows) {
      double d = 0.0;
      for (std::size_t j = 0; j < r.size(); ++j) d += r[j] * q[j];
      for (std::size_t j = 0; j < r.size(); ++j) r[j] -= d * q[j];
    }
    ++rank;
  }
  return rank;
}

int oracle_rank(const std::vector<ScalarField>& fields, const std::vector<MomentumAnglePoint>& pts) {
  int best = 0;
  for (const auto& p : pts) {
    std::vector<std::vector<double>> rows;
    for (const auto& f : fields) rows.push_back(f.x_grad(p));
    best = std::max(best, gram_schmidt_rank(rows, 1e-8));
  }
  return best;
}

XOneForm form(int n, std::function<std::vector<double>(std::span<const double>)> f) { return {n, std::move(f)}; }

}  // namespace

TEST_CASE("Theta applied to gradients") {
  const auto g = torus_field("x", 1, [](std::span<const double> x) { return x[0]; },
                             [](std::span<const double>) { return std::vector<double>{1.0}; });
  const MomentumAnglePoint p{{0.37}, {0.0}};
  CHECK(lenard_oneform(g, p)[0] == doctest::Approx(0.37));

  const auto c = torus_field("const", 3, [](std::span<const double>) { return 2.0; });
  for (double v : lenard_oneform(c, charts::random_point(3, 1))) CHECK(v == 0.0);

  const auto q = charts::random_point(2, 2);
  const auto a = lenard_oneform(invariants::e_sum_field(2), q);
  const auto cs = charts::c_from_x(q.x);
  CHECK(a[0] == doctest::Approx(2 * cs[0] + q.x[1]));
  CHECK(a[1] == doctest::Approx(cs[1]));

  // alpha_j is the phi_j component of the pi_inf field of g
  for (int n = 2; n <= 5; ++n) {
    const auto r = charts::random_point(n, 10 + n);
    const auto al = lenard_oneform(invariants::e_sum_field(n), r);
    const auto V = poisson::hamiltonian_vf(invariants::e_sum_field(n), poisson::make_pi_inf(n), r);
    for (int j = 0; j < n; ++j) CHECK(al[j] == doctest::Approx(V[2 * j + 1]).epsilon(1e-13));
  }

  try {
    lenard_oneform(coordinate_phi(2, 0), q);
    FAIL("expected NotTorusInvariant");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotTorusInvariant);
  }
}

TEST_CASE("closedness") {
  const auto pts = xs_of(charts::PointSampler(2, 3).take(20));
  CHECK(closedness_residual(form(2, [](std::span<const double> x) { return std::vector<double>{x[1], 0.0}; }), pts) ==
        doctest::Approx(1.0).epsilon(1e-8));
  CHECK(closedness_residual(form(2, [](std::span<const double>) { return std::vector<double>{0.0, 0.0}; }), pts) == 0.0);
  CHECK(closedness_residual(lenard_oneform(invariants::e_sum_field(2)), pts) < 1e-6);
  for (int n = 1; n <= 5; ++n) {
    const auto s = xs_of(charts::PointSampler(n, 30 + n).take(20));
    for (int k = 1; k <= 3; ++k) CHECK(closedness_residual(lenard_oneform(invariants::power_sum_field(n, k)), s) < 1e-6);
  }
}

TEST_CASE("potentials") {
  const std::vector<std::vector<double>> line{{0.2}, {0.5}, {0.9}};
  const auto g = integrate_potential(form(1, [](std::span<const double> x) { return std::vector<double>{x[0]}; }),
                                     {0.0}, line);
  for (double x : {0.1, 0.4, 0.77}) CHECK(g(MomentumAnglePoint{{x}, {0.0}}) == doctest::Approx(x * x / 2).epsilon(1e-12));
  CHECK(g.torus_invariant);

  const auto zero = integrate_potential(form(1, [](std::span<const double>) { return std::vector<double>{0.0}; }),
                                        {0.3}, line);
  CHECK(zero(MomentumAnglePoint{{0.6}, {0.0}}) == 0.0);

  try {
    integrate_potential(form(2, [](std::span<const double> x) { return std::vector<double>{x[1], 0.0}; }), {0.5, -0.2},
                        xs_of(charts::PointSampler(2, 3).take(5)));
    FAIL("expected NotClosed");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotClosed);
  }

  // build a random cubic potential, recover it from its gradient
  std::mt19937_64 rng(4);
  std::uniform_real_distribution<double> u(-1, 1);
  for (int n = 1; n <= 4; ++n) {
    std::vector<double> a(n), b(n * n), d(n);
    for (auto& v : a) v = u(rng);
    for (auto& v : b) v = u(rng);
    for (auto& v : d) v = u(rng);
    auto pot = [=](std::span<const double> x) {
      double s = 0.0;
      for (int i = 0; i < n; ++i) {
        s += a[i] * x[i] + d[i] * x[i] * x[i] * x[i];
        for (int j = 0; j < n; ++j) s += b[i * n + j] * x[i] * x[j];
      }
      return s;
    };
    auto grad = [=](std::span<const double> x) {
      std::vector<double> g(n);
      for (int i = 0; i < n; ++i) {
        g[i] = a[i] + 3 * d[i] * x[i] * x[i];
        for (int j = 0; j < n; ++j) g[i] += (b[i * n + j] + b[j * n + i]) * x[j];
      }
      return g;
    };
    const auto pts = charts::PointSampler(n, 60 + n).take(20);
    const auto base = default_base_point(n);
    const auto rec = integrate_potential(form(n, grad), base.x, xs_of(pts));
    CHECK(rec(base) == doctest::Approx(0.0));
    for (const auto& p : pts) {
      CHECK(rec(p) == doctest::Approx(pot(p.x) - pot(base.x)).epsilon(1e-10));
      const auto gr = rec.x_grad(p);
      const auto ex = grad(p.x);
      const auto fd = rec.fd_grad(p);
      for (int i = 0; i < n; ++i) {
        CHECK(gr[i] == doctest::Approx(ex[i]).epsilon(1e-12));
        CHECK(fd[2 * i] == doctest::Approx(ex[i]).epsilon(1e-6));
      }
    }
  }
}

TEST_CASE("base point") {
  for (int n = 1; n <= 6; ++n) {
    const auto b = default_base_point(n);
    CHECK(charts::satisfies_invariants(b));
    const auto c = charts::c_from_x(b.x);
    for (int k = 1; k <= n; ++k) CHECK(c[k - 1] == doctest::Approx(0.05 + 0.9 * (n + 1 - k) / (n + 1.0)));
  }
}

TEST_CASE("chain from the sum of the c_k") {
  {
    const auto pts = charts::PointSampler(1, 5).take(20);
    const auto base = default_base_point(1);
    const auto ch = lenard_chain(invariants::e_sum_field(1), 2, base, xs_of(pts));
    REQUIRE(ch.members.size() == 2);
    CHECK(ch.members[0].id == "e-sum");
    for (const auto& p : pts)
      CHECK(ch.members[1](p) == doctest::Approx((p.x[0] * p.x[0] - base.x[0] * base.x[0]) / 2).epsilon(1e-10));
  }
  for (int n = 1; n <= 4; ++n) {
    const auto pts = charts::PointSampler(n, 80 + n).take(50);
    const auto ch = lenard_chain(invariants::e_sum_field(n), n, default_base_point(n), xs_of(pts));
    REQUIRE(ch.members.size() == static_cast<std::size_t>(n));
    CHECK(ch.closedness_residuals.size() == static_cast<std::size_t>(n - 1));
    for (double r : ch.closedness_residuals) CHECK(r < 1e-6);
    for (int k = 1; k <= n; ++k) {
      for (const auto& p : pts) {
        const auto g = ch.members[k - 1].x_grad(p);
        const auto ref = grad_power_sum(p.x, k);
        double dot = 0, ng = 0, nr = 0;
        for (int i = 0; i < n; ++i) {
          dot += g[i] * ref[i];
          ng += g[i] * g[i];
          nr += ref[i] * ref[i];
        }
        CHECK(dot / std::sqrt(ng * nr) > 1 - 1e-8);
        // g_k = p_k / k up to a constant
        for (int i = 0; i < n; ++i) CHECK(g[i] == doctest::Approx(ref[i] / k).epsilon(1e-8));
      }
    }
    CHECK(independence_rank(ch.members, pts) == n);
    CHECK(oracle_rank(ch.members, pts) == n);

    const auto rep = analyze_chain(ch, pts);
    CHECK(rep.rank == n);
    CHECK(rep.involution_max < 1e-7);
    for (double r : rep.ratios) CHECK(r == doctest::Approx(1.0).epsilon(1e-8));
    for (double c : rep.reference_cosine) CHECK(c > 1 - 1e-8);
    for (int k = 1; k <= n; ++k) CHECK(rep.reference_scale[k - 1] == doctest::Approx(1.0 / k).epsilon(1e-8));
  }
}

TEST_CASE("degenerate chain from the sum of the x_i") {
  for (int n = 2; n <= 4; ++n) {
    const auto pts = charts::PointSampler(n, 90 + n).take(50);
    const auto ch = lenard_chain(invariants::x_sum_field(n), n, default_base_point(n), xs_of(pts));
    CHECK(independence_rank(ch.members, pts) == 1);
    CHECK(oracle_rank(ch.members, pts) == 1);
    for (int k = 1; k <= n; ++k) {
      for (const auto& p : pts) {
        double s = 0.0;
        for (double v : p.x) s += v;
        const auto g = ch.members[k - 1].x_grad(p);
        // d/dx_a (s^k / k) = s^(k-1)
        for (int i = 0; i < n; ++i) CHECK(g[i] == doctest::Approx(std::pow(s, k - 1)).epsilon(1e-8));
      }
    }
  }
}

TEST_CASE("independence rank") {
  for (int n = 1; n <= 5; ++n) {
    const auto pts = charts::PointSampler(n, 7 * n).take(20);
    std::vector<ScalarField> e;
    for (int k = 1; k <= n; ++k) e.push_back(invariants::elementary_field(n, k));
    CHECK(independence_rank(e, pts) == n);
    CHECK(oracle_rank(e, pts) == n);
    auto twice = e;
    twice.push_back(invariants::elementary_field(n, 1));
    CHECK(independence_rank(twice, pts) == n);
  }
  CHECK(min_gradient_cosine(invariants::e_sum_field(3), invariants::elementary_field(3, 1),
                            charts::PointSampler(3, 1).take(5)) == doctest::Approx(1.0));
}

TEST_CASE("reference chains") {
  CHECK(reference_chain("e-sum", 3, 3).size() == 3);
  CHECK(reference_chain("x-sum", 3, 2).size() == 2);
  CHECK(reference_chain("p_k:2", 3, 3).empty());
}
