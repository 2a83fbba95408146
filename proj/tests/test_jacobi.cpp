#include <cmath>

#include "doctest.h"
#include "sjlab/jacobi.hpp"
#include "sjlab/rng.hpp"
#include "sjlab/suites.hpp"

using namespace sjlab;

namespace {

RealMatrix scalar(double v) {
  RealMatrix m(1, 1);
  m(0, 0) = v;
  return m;
}

}  // namespace

TEST_CASE("heisenberg constraint is enforced") {
  // kappa + mu t(lambda) must be symmetric; for m = 2 pick one that is not.
  RealMatrix lambda(2, 1), mu(2, 1), kappa(2, 2);
  lambda(0, 0) = 1.0;
  mu(1, 0) = 1.0;
  kappa(0, 1) = 0.7;  // asymmetric and not repaired by mu t(lambda)
  CHECK_THROWS_AS(HeisenbergElement(lambda, mu, kappa), InvariantViolation);
  kappa(1, 0) = 0.7 - 1.0;  // mu t(lambda) has (1,0) entry 1: now symmetric
  CHECK_NOTHROW(HeisenbergElement(lambda, mu, kappa));
}

TEST_CASE("heisenberg group law on scalars") {
  // (l, u; k)(l', u'; k') = (l+l', u+u'; k+k'+l u' - u l')
  const HeisenbergElement a(scalar(1.0), scalar(2.0), scalar(0.5));
  const HeisenbergElement b(scalar(-0.5), scalar(1.0), scalar(0.25));
  const HeisenbergElement p = heisenberg_mul(a, b);
  CHECK(p.lambda()(0, 0) == doctest::Approx(0.5));
  CHECK(p.mu()(0, 0) == doctest::Approx(3.0));
  CHECK(p.kappa()(0, 0) == doctest::Approx(0.5 + 0.25 + 1.0 * 1.0 - 2.0 * (-0.5)));
}

TEST_CASE("pure heisenberg translation of the base point") {
  // (I, (l, u; 0)) . (iI, 0) = (iI, u + i l).
  const JacobiElement g(SymplecticElement::identity(1),
                        HeisenbergElement(scalar(0.4), scalar(-0.2), scalar(0.0)));
  const SiegelJacobiPoint moved = jacobi_act(g, SiegelJacobiPoint::base_point(1, 1));
  CHECK(moved.u()(0, 0) == doctest::Approx(-0.2));
  CHECK(moved.v()(0, 0) == doctest::Approx(0.4));
  CHECK(moved.omega().x()(0, 0) == doctest::Approx(0.0));
  CHECK(moved.omega().y()(0, 0) == doctest::Approx(1.0));
}

TEST_CASE("group laws hold for all supported sizes") {
  for (const auto& [n, m] : std::vector<std::pair<int, int>>{{1, 1}, {2, 1}, {1, 2}}) {
    for (int i = 0; i < 10; ++i) {
      const JacobiElement g1 = random_jacobi(subseed(1000 * n + m, i), n, m);
      const JacobiElement g2 = random_jacobi(subseed(2000 * n + m, i), n, m);
      const JacobiElement g3 = random_jacobi(subseed(3000 * n + m, i), n, m);
      const JacobiElement lhs = jacobi_mul(jacobi_mul(g1, g2), g3);
      const JacobiElement rhs = jacobi_mul(g1, jacobi_mul(g2, g3));
      CHECK(max_abs_diff(lhs.m.m(), rhs.m.m()) < 1e-12);
      CHECK(max_abs_diff(lhs.h.kappa(), rhs.h.kappa()) < 1e-12);

      const JacobiElement inv = jacobi_inverse_numeric(g1);
      const JacobiElement e = jacobi_mul(g1, inv);
      CHECK(max_abs_diff(e.m.m(), RealMatrix::identity(2 * n)) < 1e-10);
      CHECK(e.h.lambda().norm_inf() < 1e-10);
      CHECK(e.h.mu().norm_inf() < 1e-10);
      CHECK(e.h.kappa().norm_inf() < 1e-10);
    }
  }
}

TEST_CASE("action compatibility with multiplication") {
  const int n = 2, m = 1;
  for (int i = 0; i < 10; ++i) {
    const JacobiElement g1 = random_jacobi(subseed(77, 2 * i), n, m);
    const JacobiElement g2 = random_jacobi(subseed(77, 2 * i + 1), n, m);
    const SiegelJacobiPoint p = random_jacobi_point(subseed(78, i), n, m);
    const SiegelJacobiPoint lhs = jacobi_act(jacobi_mul(g1, g2), p);
    const SiegelJacobiPoint rhs = jacobi_act(g1, jacobi_act(g2, p));
    CHECK(max_abs_diff(lhs.z(), rhs.z()) < 1e-11);
    CHECK(max_abs_diff(lhs.omega().y(), rhs.omega().y()) < 1e-11);
  }
}

TEST_CASE("chart round trip") {
  const SiegelJacobiPoint p = random_jacobi_point(91, 2, 2);
  const std::vector<double> c = jacobi_to_chart(p);
  CHECK(static_cast<int>(c.size()) == jacobi_chart_dim(2, 2));
  const SiegelJacobiPoint q = jacobi_from_chart(2, 2, c);
  CHECK(max_abs_diff(p.z(), q.z()) == 0.0);
  CHECK(max_abs_diff(p.omega().x(), q.omega().x()) == 0.0);
}

TEST_CASE("metric quadratic at the base point") {
  // At (iI, 0) the V-dependent terms vanish: A |dOmega|^2 + B |dZ|^2 on the
  // diagonal entries.
  const SiegelJacobiPoint p = SiegelJacobiPoint::base_point(1, 1);
  const JacobiTangent t{SiegelTangent(scalar(0.2), scalar(0.1)),
                        ComplexMatrix(scalar(0.3), scalar(-0.4))};
  const double q = jacobi_metric_quadratic(p, t, {2.0, 3.0});
  CHECK(q == doctest::Approx(2.0 * (0.04 + 0.01) + 3.0 * (0.09 + 0.16)));
}

TEST_CASE("metric tensor matches the quadratic form") {
  const SiegelJacobiPoint p = random_jacobi_point(95, 1, 1);
  const RealMatrix g = metric_tensor_jacobi(p, {1.5, 0.5});
  std::vector<double> tc = {0.1, -0.2, 0.3, 0.05};
  const JacobiTangent t = jacobi_tangent_from_chart(1, 1, tc);
  double q = 0.0;
  for (size_t i = 0; i < tc.size(); ++i)
    for (size_t j = 0; j < tc.size(); ++j) q += g(i, j) * tc[i] * tc[j];
  CHECK(q == doctest::Approx(jacobi_metric_quadratic(p, t, {1.5, 0.5})).epsilon(1e-12));
}

TEST_CASE("invariant operators on reference fields (n = m = 1, V = 0)") {
  RealMatrix y(1, 1);
  y(0, 0) = 1.7;
  const SiegelJacobiPoint p(SiegelPoint(RealMatrix(1, 1), y), ComplexMatrix(1, 1));

  const JacobiField f_v2 = [](const SiegelJacobiPoint& q) {
    const double v = q.v()(0, 0);
    return v * v;
  };
  const JacobiField f_y2 = [](const SiegelJacobiPoint& q) {
    const double yy = q.omega().y()(0, 0);
    return yy * yy;
  };

  CHECK(m2_apply(f_v2, p) == doctest::Approx(1.7 / 2.0).epsilon(1e-6));
  CHECK(m1_apply(f_v2, p) == doctest::Approx(0.0).epsilon(1e-6));
  CHECK(m1_apply(f_y2, p) == doctest::Approx(1.7 * 1.7 / 2.0).epsilon(1e-6));
  CHECK(m2_apply(f_y2, p) == doctest::Approx(0.0).epsilon(1e-6));
  // Full operator: (4/A) M1 + (4/B) M2.
  CHECK(jacobi_laplacian_apply(f_v2, p, {1.0, 2.0}) ==
        doctest::Approx(4.0 / 2.0 * 1.7 / 2.0).epsilon(1e-7));
}

TEST_CASE("operator invariance under a random group element") {
  const SuiteConfig cfg;
  const JacobiElement g = random_jacobi(515, 1, 1);
  const SiegelJacobiPoint p = random_jacobi_point(516, 1, 1);
  const JacobiField f = [](const SiegelJacobiPoint& q) {
    double s = 0.0;
    for (const complex& z : q.z().data()) s += std::norm(z);
    return s / (1.0 + q.omega().y().trace());
  };
  const JacobiField composed = [&](const SiegelJacobiPoint& q) {
    return f(jacobi_act(g, q));
  };
  CHECK(m1_apply(composed, p) ==
        doctest::Approx(m1_apply(f, jacobi_act(g, p))).epsilon(1e-5));
  CHECK(m2_apply(composed, p) ==
        doctest::Approx(m2_apply(f, jacobi_act(g, p))).epsilon(1e-5));
}
