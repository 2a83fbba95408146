#include <cmath>

#include "doctest.h"
#include "sjlab/rng.hpp"
#include "sjlab/siegel.hpp"

using namespace sjlab;

TEST_CASE("point validation") {
  CHECK_THROWS_AS(SiegelPoint(RealMatrix(1, 1), RealMatrix(1, 1)), NumericError);  // Y = 0
  RealMatrix x(2, 2);
  x(0, 1) = 1.0;  // not symmetric
  CHECK_THROWS_AS(SiegelPoint(x, RealMatrix::identity(2)), InvariantViolation);
}

TEST_CASE("symplectic validation and blocks") {
  CHECK_THROWS_AS(SymplecticElement(2.0 * RealMatrix::identity(2)), InvariantViolation);
  const SymplecticElement j = SymplecticElement::j(2);
  CHECK(max_abs_diff(j.block_b(), RealMatrix::identity(2)) == 0.0);
  CHECK(max_abs_diff(j.block_c(), -1.0 * RealMatrix::identity(2)) == 0.0);
  CHECK(max_abs_diff((j * j).m(), -1.0 * RealMatrix::identity(4)) == 0.0);
}

TEST_CASE("chart round trip") {
  for (int n = 1; n <= 3; ++n) {
    const SiegelPoint p = random_siegel_point(5 + n, n);
    const std::vector<double> c = siegel_to_chart(p);
    CHECK(static_cast<int>(c.size()) == siegel_chart_dim(n));
    const SiegelPoint q = siegel_from_chart(n, c);
    CHECK(max_abs_diff(p.x(), q.x()) == 0.0);
    CHECK(max_abs_diff(p.y(), q.y()) == 0.0);
    CHECK(siegel_chart_admissible(n, c));
  }
}

TEST_CASE("identity acts trivially; J inverts iI") {
  const SiegelPoint p = random_siegel_point(11, 2);
  const SiegelPoint q = sp_act(SymplecticElement::identity(2), p);
  CHECK(max_abs_diff(p.x(), q.x()) < 1e-14);
  CHECK(max_abs_diff(p.y(), q.y()) < 1e-14);
  // J . Omega = -Omega^{-1}; at Omega = iI this is iI again.
  const SiegelPoint fixed = sp_act(SymplecticElement::j(2), SiegelPoint::i_identity(2));
  CHECK(fixed.x().norm_inf() < 1e-14);
  CHECK(max_abs_diff(fixed.y(), RealMatrix::identity(2)) < 1e-14);
}

TEST_CASE("action is a left action") {
  for (int n = 1; n <= 3; ++n) {
    const SymplecticElement m1 = random_symplectic(21 + n, n);
    const SymplecticElement m2 = random_symplectic(31 + n, n);
    const SiegelPoint p = random_siegel_point(41 + n, n);
    const SiegelPoint lhs = sp_act(m1 * m2, p);
    const SiegelPoint rhs = sp_act(m1, sp_act(m2, p));
    CHECK(max_abs_diff(lhs.x(), rhs.x()) < 1e-11);
    CHECK(max_abs_diff(lhs.y(), rhs.y()) < 1e-11);
  }
}

TEST_CASE("metric quadratic on the upper half plane: A (dx^2 + dy^2) / y^2") {
  RealMatrix y(1, 1);
  y(0, 0) = 2.0;
  const SiegelPoint p(RealMatrix(1, 1), y);
  RealMatrix dx(1, 1), dy(1, 1);
  dx(0, 0) = 0.3;
  dy(0, 0) = -0.5;
  const double q = siegel_metric_quadratic(p, SiegelTangent(dx, dy), {2.5});
  CHECK(q == doctest::Approx(2.5 * (0.09 + 0.25) / 4.0));
}

TEST_CASE("metric quadratic is invariant under the action") {
  const int n = 2;
  const SiegelMetricParams par{1.7};
  const SiegelPoint p = random_siegel_point(51, n);
  const SymplecticElement m = random_symplectic(52, n);
  Rng rng(53);
  const SiegelTangent t(rng.symmetric(n, -0.3, 0.3), rng.symmetric(n, -0.3, 0.3));
  // Push the tangent forward by FD through the chart action map.
  const std::vector<double> c0 = siegel_to_chart(p);
  const std::vector<double> tc = siegel_tangent_to_chart(t);
  const double h = 1e-6;
  std::vector<double> cp = c0, cm = c0;
  for (size_t k = 0; k < c0.size(); ++k) {
    cp[k] += h * tc[k];
    cm[k] -= h * tc[k];
  }
  const std::vector<double> ip = siegel_to_chart(sp_act(m, siegel_from_chart(n, cp)));
  const std::vector<double> im = siegel_to_chart(sp_act(m, siegel_from_chart(n, cm)));
  std::vector<double> pushed(c0.size());
  for (size_t k = 0; k < c0.size(); ++k) pushed[k] = (ip[k] - im[k]) / (2.0 * h);
  const double q0 = siegel_metric_quadratic(p, t, par);
  const double q1 = siegel_metric_quadratic(sp_act(m, p),
                                            siegel_tangent_from_chart(n, pushed), par);
  CHECK(q1 == doctest::Approx(q0).epsilon(1e-7));
}

TEST_CASE("metric tensor matches the quadratic form") {
  const SiegelPoint p = random_siegel_point(61, 2);
  const RealMatrix g = metric_tensor_siegel(p, {1.0});
  Rng rng(62);
  const SiegelTangent t(rng.symmetric(2, -1.0, 1.0), rng.symmetric(2, -1.0, 1.0));
  const std::vector<double> tc = siegel_tangent_to_chart(t);
  double q = 0.0;
  for (size_t i = 0; i < tc.size(); ++i)
    for (size_t j = 0; j < tc.size(); ++j) q += g(i, j) * tc[i] * tc[j];
  CHECK(q == doctest::Approx(siegel_metric_quadratic(p, t, {1.0})).epsilon(1e-12));
}

TEST_CASE("laplacian eigenfunctions y^s on the upper half plane") {
  // (4/A) tr-form reduces to (1/A) y^2 (f_xx + f_yy); on y^s this gives
  // s(s-1)/A y^s.
  for (double s : {2.0, 0.5, -1.0}) {
    for (double a : {1.0, 3.0}) {
      const SiegelField f = [s](const SiegelPoint& q) { return std::pow(q.y()(0, 0), s); };
      RealMatrix y(1, 1);
      y(0, 0) = 1.3;
      const SiegelPoint p(RealMatrix(1, 1), y);
      const double expect = s * (s - 1.0) / a * std::pow(1.3, s);
      CHECK(siegel_laplacian_apply(f, p, {a}) == doctest::Approx(expect).epsilon(1e-6));
    }
  }
}

TEST_CASE("volume density") {
  RealMatrix y(2, 2);
  y(0, 0) = 2.0;
  y(1, 1) = 3.0;
  CHECK(volume_density(SiegelPoint(RealMatrix(2, 2), y)) ==
        doctest::Approx(std::pow(6.0, -3.0)));
}

TEST_CASE("cross ratio: zero at coincident points, 1/9 for (i, 2i)") {
  const SiegelPoint p = random_siegel_point(71, 2);
  CHECK(cross_ratio(p, p).norm_inf() < 1e-14);
  RealMatrix y2(1, 1);
  y2(0, 0) = 2.0;
  const ComplexMatrix r =
      cross_ratio(SiegelPoint::i_identity(1), SiegelPoint(RealMatrix(1, 1), y2));
  CHECK(std::abs(r(0, 0) - complex(1.0 / 9.0, 0.0)) < 1e-14);
}

TEST_CASE("distance oracles") {
  RealMatrix y2(1, 1);
  y2(0, 0) = 2.0;
  const SiegelPoint pi = SiegelPoint::i_identity(1);
  const SiegelPoint p2i(RealMatrix(1, 1), y2);
  CHECK(siegel_distance(pi, p2i) == doctest::Approx(std::log(2.0)).epsilon(1e-12));
  CHECK(siegel_distance(pi, pi) == doctest::Approx(0.0));

  // n = 2: iI -> i e^{1/sqrt(2)} I lies on a normalized special geodesic.
  RealMatrix ye(2, 2);
  ye(0, 0) = ye(1, 1) = std::exp(1.0 / std::sqrt(2.0));
  CHECK(siegel_distance(SiegelPoint::i_identity(2), SiegelPoint(RealMatrix(2, 2), ye)) ==
        doctest::Approx(1.0).epsilon(1e-12));

  for (int i = 0; i < 25; ++i) {
    const SiegelPoint a = random_siegel_point(100 + i, 1);
    const SiegelPoint b = random_siegel_point(200 + i, 1);
    CHECK(siegel_distance(a, b) == doctest::Approx(poincare_distance(a, b)).epsilon(1e-11));
    CHECK(siegel_distance(a, b) == doctest::Approx(siegel_distance(b, a)).epsilon(1e-11));
  }
}

TEST_CASE("special geodesic requires normalized exponents") {
  CHECK_THROWS_AS(special_geodesic({2.0, 2.0}, 0.5), NormalizationViolated);
  const SiegelPoint p = special_geodesic({std::exp(1.0)}, 0.5);
  CHECK(p.y()(0, 0) == doctest::Approx(std::exp(0.5)));
}

TEST_CASE("random instances satisfy their invariants") {
  for (int i = 0; i < 20; ++i) {
    const SymplecticElement m = random_symplectic(300 + i, 2);
    const RealMatrix j = SymplecticElement::j_matrix(2);
    CHECK(max_abs_diff(m.m().transpose() * j * m.m(), j) < 1e-10);
    const SiegelPoint p = random_siegel_point(400 + i, 3);
    CHECK(is_positive_definite(p.y()));
  }
}
