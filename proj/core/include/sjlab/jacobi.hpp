#pragma once

#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

#include "sjlab/siegel.hpp"

namespace sjlab {

/// (lambda, mu; kappa) with lambda, mu real m x n, kappa real m x m and
/// kappa + mu t(lambda) symmetric.
class HeisenbergElement {
 public:
  HeisenbergElement(RealMatrix lambda, RealMatrix mu, RealMatrix kappa);

  int degree() const { return n_; }
  int index() const { return m_; }
  const RealMatrix& lambda() const { return lambda_; }
  const RealMatrix& mu() const { return mu_; }
  const RealMatrix& kappa() const { return kappa_; }

  static HeisenbergElement identity(int n, int m) {
    return HeisenbergElement(RealMatrix(m, n), RealMatrix(m, n), RealMatrix(m, m));
  }

 private:
  int n_, m_;
  RealMatrix lambda_, mu_, kappa_;
};

/// Element (M, h) of the Jacobi group Sp(n,R) x| H^{(n,m)}.
struct JacobiElement {
  SymplecticElement m;
  HeisenbergElement h;

  JacobiElement(SymplecticElement m_in, HeisenbergElement h_in)
      : m(std::move(m_in)), h(std::move(h_in)) {
    if (m.degree() != h.degree())
      throw InvariantViolation("JacobiElement: degrees of M and h disagree");
  }

  static JacobiElement identity(int n, int mm) {
    return JacobiElement(SymplecticElement::identity(n), HeisenbergElement::identity(n, mm));
  }
};

/// A point (Omega, Z) of the Siegel-Jacobi space, Z complex m x n.
class SiegelJacobiPoint {
 public:
  SiegelJacobiPoint(SiegelPoint omega, ComplexMatrix z);

  int degree() const { return omega_.degree(); }
  int index() const { return z_.rows(); }
  const SiegelPoint& omega() const { return omega_; }
  const ComplexMatrix& z() const { return z_; }
  RealMatrix u() const { return z_.real(); }
  RealMatrix v() const { return z_.imag(); }

  static SiegelJacobiPoint base_point(int n, int m) {
    return SiegelJacobiPoint(SiegelPoint::i_identity(n), ComplexMatrix(m, n));
  }

 private:
  SiegelPoint omega_;
  ComplexMatrix z_;
};

struct JacobiMetricParams {
  double scale_a = 1.0;
  double scale_b = 1.0;

  void validate() const {
    if (!(scale_a > 0.0) || !(scale_b > 0.0))
      throw InvariantViolation("JacobiMetricParams: A, B must be > 0");
  }
};

/// Coordinate tangent (dOmega, dZ).
struct JacobiTangent {
  SiegelTangent d_omega;
  ComplexMatrix dz;
};

using JacobiField = std::function<double(const SiegelJacobiPoint&)>;

// ---- chart ---------------------------------------------------------------
//
// Chart order: (x_ij)_{i<=j}, (y_ij)_{i<=j}, (u_kl) row-major, (v_kl)
// row-major. Dimension n(n+1) + 2mn.

int jacobi_chart_dim(int n, int m);
std::vector<double> jacobi_to_chart(const SiegelJacobiPoint& p);
SiegelJacobiPoint jacobi_from_chart(int n, int m, const std::vector<double>& c);
std::vector<double> jacobi_tangent_to_chart(const JacobiTangent& t);
JacobiTangent jacobi_tangent_from_chart(int n, int m, const std::vector<double>& c);
bool jacobi_chart_admissible(int n, int m, const std::vector<double>& c);

// ---- operations ----------------------------------------------------------

HeisenbergElement heisenberg_mul(const HeisenbergElement& h1, const HeisenbergElement& h2);
JacobiElement jacobi_mul(const JacobiElement& g1, const JacobiElement& g2);

/// (M, (lambda, mu; kappa)) . (Omega, Z) =
///   (M . Omega, (Z + lambda Omega + mu)(C Omega + D)^{-1}).
SiegelJacobiPoint jacobi_act(const JacobiElement& g, const SiegelJacobiPoint& p);

/// Full five-term invariant quadratic form; real part of the trace sum.
double jacobi_metric_quadratic(const SiegelJacobiPoint& p, const JacobiTangent& t,
                               const JacobiMetricParams& par);

RealMatrix metric_tensor_jacobi(const SiegelJacobiPoint& p, const JacobiMetricParams& par);

/// The two invariant operators of the Laplacian decomposition.
double m1_apply(const JacobiField& f, const SiegelJacobiPoint& p, const FDConfig& cfg = {});
double m2_apply(const JacobiField& f, const SiegelJacobiPoint& p, const FDConfig& cfg = {});

/// (4/A) M1 + (4/B) M2.
double jacobi_laplacian_apply(const JacobiField& f, const SiegelJacobiPoint& p,
                              const JacobiMetricParams& par, const FDConfig& cfg = {});

HeisenbergElement random_heisenberg(uint64_t seed, int n, int m);
JacobiElement random_jacobi(uint64_t seed, int n, int m);
SiegelJacobiPoint random_jacobi_point(uint64_t seed, int n, int m);

}  // namespace sjlab
