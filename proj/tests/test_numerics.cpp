#include <cmath>

#include "doctest.h"
#include "sjlab/fd.hpp"
#include "sjlab/linalg.hpp"
#include "sjlab/rng.hpp"

using namespace sjlab;

TEST_CASE("cholesky factors a positive definite matrix") {
  RealMatrix s(2, 2);
  s(0, 0) = 4.0;
  s(0, 1) = s(1, 0) = 2.0;
  s(1, 1) = 3.0;
  const RealMatrix l = cholesky(s);
  CHECK(l(0, 0) == doctest::Approx(2.0));
  CHECK(l(0, 1) == doctest::Approx(0.0));
  CHECK(l(1, 0) == doctest::Approx(1.0));
  CHECK(l(1, 1) == doctest::Approx(std::sqrt(2.0)));
  CHECK(max_abs_diff(l * l.transpose(), s) < 1e-14);
}

TEST_CASE("cholesky rejects indefinite input") {
  RealMatrix s(2, 2);
  s(0, 0) = 1.0;
  s(0, 1) = s(1, 0) = 2.0;
  s(1, 1) = 1.0;
  CHECK_THROWS_AS(cholesky(s), NotPositiveDefinite);
  CHECK_FALSE(is_positive_definite(s));
}

TEST_CASE("cholesky rejects asymmetric input") {
  RealMatrix s(2, 2);
  s(0, 0) = s(1, 1) = 1.0;
  s(0, 1) = 0.5;
  CHECK_THROWS_AS(cholesky(s), InvariantViolation);
}

TEST_CASE("linear_solve round-trips random systems") {
  Rng rng(7);
  for (int trial = 0; trial < 10; ++trial) {
    const RealMatrix a = rng.matrix(3, 3, -1.0, 1.0) + 3.0 * RealMatrix::identity(3);
    const RealMatrix x = rng.matrix(3, 2, -1.0, 1.0);
    const RealMatrix solved = linear_solve(a, a * x);
    CHECK(max_abs_diff(solved, x) < 1e-12);

    const ComplexMatrix ca(rng.matrix(3, 3, -1.0, 1.0) + 3.0 * RealMatrix::identity(3),
                           rng.matrix(3, 3, -0.5, 0.5));
    const ComplexMatrix cx(rng.matrix(3, 2, -1.0, 1.0), rng.matrix(3, 2, -1.0, 1.0));
    CHECK(max_abs_diff(linear_solve(ca, ca * cx), cx) < 1e-12);
  }
}

TEST_CASE("linear_solve detects singular systems") {
  RealMatrix a(2, 2);
  a(0, 0) = 1.0;
  a(0, 1) = 2.0;
  a(1, 0) = 2.0;
  a(1, 1) = 4.0;
  CHECK_THROWS_AS(linear_solve(a, RealMatrix::identity(2)), Singular);
}

TEST_CASE("determinants") {
  RealMatrix a(2, 2);
  a(0, 0) = 4.0;
  a(0, 1) = a(1, 0) = 2.0;
  a(1, 1) = 3.0;
  CHECK(determinant(a) == doctest::Approx(8.0));
  CHECK(spd_determinant(a) == doctest::Approx(8.0));
  RealMatrix p(2, 2);  // permutation: det -1
  p(0, 1) = p(1, 0) = 1.0;
  CHECK(determinant(p) == doctest::Approx(-1.0));
}

TEST_CASE("small eigenvalues: triangular and rotation matrices") {
  ComplexMatrix t(2, 2);
  t(0, 0) = 2.0;
  t(0, 1) = 1.0;
  t(1, 1) = 3.0;
  auto ev = small_complex_eigenvalues(t);
  CHECK(std::abs(ev[0] - complex(2.0, 0.0)) < 1e-10);
  CHECK(std::abs(ev[1] - complex(3.0, 0.0)) < 1e-10);

  ComplexMatrix rot(2, 2);  // eigenvalues +-i
  rot(0, 1) = -1.0;
  rot(1, 0) = 1.0;
  ev = small_complex_eigenvalues(rot);
  CHECK(std::abs(ev[0] - complex(0.0, -1.0)) < 1e-10);
  CHECK(std::abs(ev[1] - complex(0.0, 1.0)) < 1e-10);
}

TEST_CASE("norm estimate on a diagonal matrix") {
  ComplexMatrix d(2, 2);
  d(0, 0) = 3.0;
  d(1, 1) = 1.0;
  CHECK(estimate_norm2(d) == doctest::Approx(3.0));
}

TEST_CASE("trace series: scalar oracle value (log 2)^2 at R = 1/9") {
  ComplexMatrix r(1, 1);
  r(0, 0) = 1.0 / 9.0;
  const long k = series_terms_for_tolerance(r, 1e-14);
  const SeriesResult s = truncated_matrix_series(r, k);
  // 4 r (sum r^k/(2k+1))^2 = (2 atanh(1/3))^2 = (log 2)^2
  CHECK(s.value == doctest::Approx(std::log(2.0) * std::log(2.0)).epsilon(1e-12));
  CHECK(s.tail_bound < 1e-13);
  CHECK(s.imag_residual == 0.0);
}

TEST_CASE("trace series diverges at unit spectral radius") {
  ComplexMatrix r(1, 1);
  r(0, 0) = 1.0;
  CHECK_THROWS_AS(series_terms_for_tolerance(r, 1e-12), Diverges);
  CHECK_THROWS_AS(truncated_matrix_series(r, 10), Diverges);
}

TEST_CASE("finite differences with Richardson extrapolation") {
  const ScalarField f = [](const std::vector<double>& x) {
    return std::sin(x[0]) * x[1] * x[1];
  };
  const std::vector<double> at = {0.3, 0.7};
  FDConfig cfg;
  CHECK(fd_partial(f, at, 0, cfg) == doctest::Approx(std::cos(0.3) * 0.49).epsilon(1e-10));
  CHECK(fd_second_partial(f, at, 0, 0, cfg) ==
        doctest::Approx(-std::sin(0.3) * 0.49).epsilon(1e-8));
  CHECK(fd_second_partial(f, at, 0, 1, cfg) ==
        doctest::Approx(std::cos(0.3) * 1.4).epsilon(1e-8));
  const RealMatrix h = fd_hessian(f, at, cfg);
  CHECK(symmetry_residual(h) < 1e-10);
  const std::vector<double> g = fd_gradient(f, at, cfg);
  CHECK(g[1] == doctest::Approx(std::sin(0.3) * 1.4).epsilon(1e-10));
}

TEST_CASE("fd config validation") {
  FDConfig bad{0.0, 2};
  CHECK_THROWS_AS(bad.validate(), InvariantViolation);
  FDConfig levels{1e-4, 9};
  CHECK_THROWS_AS(levels.validate(), InvariantViolation);
}

TEST_CASE("subseed decorrelates neighbouring indices") {
  CHECK(subseed(42, 0) != subseed(42, 1));
  CHECK(subseed(42, 0) != subseed(43, 0));
  CHECK(subseed(42, 5) == subseed(42, 5));
}
