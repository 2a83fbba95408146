#include "doctest.h"
#include "sjlab/json_io.hpp"
#include "sjlab/rng.hpp"

using namespace sjlab;

TEST_CASE("real matrix round trip") {
  Rng rng(5);
  const RealMatrix m = rng.matrix(2, 3, -1.0, 1.0);
  const json j = matrix_to_json(m);
  CHECK(j.at("rows") == 2);
  CHECK(j.at("cols") == 3);
  CHECK_FALSE(j.contains("im"));
  CHECK(max_abs_diff(real_matrix_from_json(j), m) == 0.0);
}

TEST_CASE("complex matrix omits a zero imaginary part") {
  const ComplexMatrix real_only = ComplexMatrix::from_real(RealMatrix::identity(2));
  CHECK_FALSE(matrix_to_json(real_only).contains("im"));

  ComplexMatrix c(2, 2);
  c(0, 1) = complex(0.0, 1.5);
  const json j = matrix_to_json(c);
  CHECK(j.contains("im"));
  CHECK(max_abs_diff(complex_matrix_from_json(j), c) == 0.0);
  // Parsing without "im" yields a real matrix.
  CHECK(max_abs_diff(complex_matrix_from_json(matrix_to_json(real_only)), real_only) == 0.0);
}

TEST_CASE("matrix JSON validates entry counts") {
  json j{{"rows", 2}, {"cols", 2}, {"re", {1.0, 2.0, 3.0}}};
  CHECK_THROWS_AS(real_matrix_from_json(j), InvariantViolation);
}

TEST_CASE("siegel point round trip and n consistency") {
  const SiegelPoint p = random_siegel_point(9, 2);
  json j = siegel_point_to_json(p);
  CHECK(j.at("n") == 2);
  const SiegelPoint q = siegel_point_from_json(j);
  CHECK(max_abs_diff(p.x(), q.x()) == 0.0);
  j["n"] = 3;
  CHECK_THROWS_AS(siegel_point_from_json(j), InvariantViolation);
}

TEST_CASE("group element round trips") {
  const SymplecticElement m = random_symplectic(11, 2);
  CHECK(max_abs_diff(symplectic_from_json(symplectic_to_json(m)).m(), m.m()) == 0.0);

  const JacobiElement g = random_jacobi(12, 2, 1);
  const JacobiElement g2 = jacobi_element_from_json(jacobi_element_to_json(g));
  CHECK(max_abs_diff(g.m.m(), g2.m.m()) == 0.0);
  CHECK(max_abs_diff(g.h.kappa(), g2.h.kappa()) == 0.0);

  const SiegelJacobiPoint p = random_jacobi_point(13, 1, 2);
  const SiegelJacobiPoint p2 = jacobi_point_from_json(jacobi_point_to_json(p));
  CHECK(max_abs_diff(p.z(), p2.z()) == 0.0);
}

TEST_CASE("round_significant trims to 12 significant digits recursively") {
  json j{{"a", 0.12345678901234567}, {"b", {1.0 / 3.0, json{{"c", 2.0}}}}};
  round_significant(j);
  CHECK(j.at("a").get<double>() == doctest::Approx(0.123456789012).epsilon(1e-15));
  CHECK(j.at("b")[0].get<double>() == doctest::Approx(0.333333333333).epsilon(1e-15));
  CHECK(j.at("b")[1].at("c").get<double>() == 2.0);
  // Integers are untouched.
  json k = 7;
  round_significant(k);
  CHECK(k == 7);
}
