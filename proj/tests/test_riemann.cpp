#include <cmath>

#include "doctest.h"
#include "sjlab/riemann.hpp"
#include "sjlab/rng.hpp"
#include "sjlab/siegel.hpp"
#include "sjlab/spaces.hpp"

using namespace sjlab;

TEST_CASE("euclidean space is flat and geodesics are straight lines") {
  const MetricField g = euclidean_metric_field(3);
  const std::vector<double> x0 = {0.1, -0.3, 0.7};
  const std::vector<double> v0 = {1.0, 0.5, -0.25};

  const Tensor3 gamma = christoffel(g, x0);
  double worst = 0.0;
  for (double v : gamma.a) worst = std::max(worst, std::abs(v));
  CHECK(worst < 1e-10);

  const GeodesicPath path = geodesic_integrate(g, x0, v0, 2.0, 64);
  for (int k = 0; k < 3; ++k)
    CHECK(path.points.back()[k] == doctest::Approx(x0[k] + 2.0 * v0[k]).epsilon(1e-10));

  const std::vector<double> x1 = {1.1, 0.2, 0.7};
  const ShootingResult shot = geodesic_shoot_bvp(g, x0, x1);
  double expect = 0.0;
  for (int k = 0; k < 3; ++k) expect += (x1[k] - x0[k]) * (x1[k] - x0[k]);
  CHECK(shot.distance == doctest::Approx(std::sqrt(expect)).epsilon(1e-9));

  const CurvatureReport rep = curvature(g, x0);
  worst = 0.0;
  for (double v : rep.riemann.a) worst = std::max(worst, std::abs(v));
  CHECK(worst < 1e-8);
  CHECK(rep.scalar == doctest::Approx(0.0).epsilon(1e-8));

  const ScalarField f = [](const std::vector<double>& x) { return x[1] * x[1]; };
  CHECK(laplace_beltrami(g, f, x0) == doctest::Approx(2.0).epsilon(1e-8));
}

TEST_CASE("euclidean plane as complex line is trivially Kahler") {
  MetricField g = euclidean_metric_field(2);
  g.complex_pairs = {{0, 1}};
  const KahlerResiduals r = kahler_check(g, {0.3, 0.4});
  CHECK(r.compatibility < 1e-12);
  CHECK(r.d_omega < 1e-10);
}

TEST_CASE("upper half plane christoffel symbols") {
  // ds^2 = (dx^2 + dy^2)/y^2: Gamma^x_xy = -1/y, Gamma^y_xx = 1/y,
  // Gamma^y_yy = -1/y. Chart order (x, y).
  const MetricField g = siegel_metric_field(1, {1.0});
  const double y = 0.8;
  const Tensor3 gamma = christoffel(g, {0.3, y});
  CHECK(gamma.at(0, 0, 1) == doctest::Approx(-1.0 / y).epsilon(1e-8));
  CHECK(gamma.at(0, 1, 0) == doctest::Approx(-1.0 / y).epsilon(1e-8));
  CHECK(gamma.at(1, 0, 0) == doctest::Approx(1.0 / y).epsilon(1e-8));
  CHECK(gamma.at(1, 1, 1) == doctest::Approx(-1.0 / y).epsilon(1e-8));
  CHECK(gamma.at(0, 0, 0) == doctest::Approx(0.0).epsilon(1e-8));
}

TEST_CASE("upper half plane curvature") {
  const MetricField g = siegel_metric_field(1, {1.0});
  const CurvatureReport rep = curvature(g, {0.1, 1.4});
  CHECK(rep.scalar == doctest::Approx(-2.0).epsilon(1e-6));
  CHECK(rep.convention == "trace-ricci");
  // Ric = -g for this metric: einstein constant -1, residual ~ 0.
  CHECK(rep.einstein_constant == doctest::Approx(-1.0).epsilon(1e-6));
  CHECK(rep.einstein_residual < 1e-6);
}

TEST_CASE("upper half plane vertical geodesic") {
  // From (0, 1) with velocity (0, 1): alpha(t) = (0, e^t).
  const MetricField g = siegel_metric_field(1, {1.0});
  const GeodesicPath path = geodesic_integrate(g, {0.0, 1.0}, {0.0, 1.0}, 1.0, 96);
  CHECK(path.points.back()[0] == doctest::Approx(0.0).epsilon(1e-10));
  CHECK(path.points.back()[1] == doctest::Approx(std::exp(1.0)).epsilon(1e-9));
}

TEST_CASE("shooting matches the closed-form distance on the upper half plane") {
  const MetricField g = siegel_metric_field(1, {1.0});
  for (int i = 0; i < 5; ++i) {
    const SiegelPoint p0 = random_siegel_point(600 + i, 1);
    const SiegelPoint p1 = random_siegel_point(700 + i, 1);
    const ShootingResult shot =
        geodesic_shoot_bvp(g, siegel_to_chart(p0), siegel_to_chart(p1));
    CHECK(shot.distance == doctest::Approx(poincare_distance(p0, p1)).epsilon(1e-6));
    // Endpoint replay from the recovered initial velocity.
    const GeodesicPath path =
        geodesic_integrate(g, siegel_to_chart(p0), shot.initial_velocity, 1.0, 96);
    CHECK(std::abs(path.points.back()[0] - p1.x()(0, 0)) < 1e-6);
    CHECK(std::abs(path.points.back()[1] - p1.y()(0, 0)) < 1e-6);
  }
}

TEST_CASE("laplace-beltrami reproduces y^s eigenfunctions") {
  const MetricField g = siegel_metric_field(1, {1.0});
  for (double s : {2.0, 0.5}) {
    const ScalarField f = [s](const std::vector<double>& x) { return std::pow(x[1], s); };
    CHECK(laplace_beltrami(g, f, {0.2, 1.1}) ==
          doctest::Approx(s * (s - 1.0) * std::pow(1.1, s)).epsilon(1e-6));
  }
}

TEST_CASE("geodesics that leave the chart domain raise StepOverflow") {
  const MetricField g = siegel_metric_field(1, {1.0});
  // Straight-down velocity large enough to cross y = 0 within the step budget
  // of the integrator's domain guard.
  CHECK_THROWS_AS(geodesic_integrate(g, {0.0, 1e-4}, {0.0, -50.0}, 1.0, 64),
                  StepOverflow);
}

TEST_CASE("shooting reports no convergence for unreachable targets") {
  MetricField g = euclidean_metric_field(2);
  // A domain wall between the endpoints makes every damped step fail.
  g.admissible = [](const std::vector<double>& x) { return std::abs(x[0]) < 0.2; };
  CHECK_THROWS_AS(geodesic_shoot_bvp(g, {0.0, 0.0}, {0.39, 0.0}, 8), NumericError);
}

TEST_CASE("metric field gates non-spd evaluations") {
  MetricField g = euclidean_metric_field(2);
  g.g = [](const std::vector<double>&) {
    RealMatrix m(2, 2);
    m(0, 0) = 1.0;
    m(1, 1) = -1.0;
    return m;
  };
  CHECK_THROWS_AS(g.eval({0.0, 0.0}), NotPositiveDefinite);
}
