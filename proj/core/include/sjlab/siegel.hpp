#pragma once

#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

#include "sjlab/fd.hpp"
#include "sjlab/linalg.hpp"
#include "sjlab/matrix.hpp"

namespace sjlab {

/// A point Omega = X + iY of the degree-n Siegel upper half space:
/// X, Y real symmetric and Y positive definite.
class SiegelPoint {
 public:
  SiegelPoint(RealMatrix x, RealMatrix y);

  int degree() const { return n_; }
  const RealMatrix& x() const { return x_; }
  const RealMatrix& y() const { return y_; }
  ComplexMatrix omega() const { return ComplexMatrix(x_, y_); }

  static SiegelPoint i_identity(int n) {
    return SiegelPoint(RealMatrix(n, n), RealMatrix::identity(n));
  }

 private:
  int n_;
  RealMatrix x_, y_;
};

/// Real 2n x 2n matrix M with t(M) J M = J, in named n x n blocks.
class SymplecticElement {
 public:
  explicit SymplecticElement(RealMatrix m);

  int degree() const { return n_; }
  const RealMatrix& m() const { return m_; }
  RealMatrix block_a() const { return block(0, 0); }
  RealMatrix block_b() const { return block(0, 1); }
  RealMatrix block_c() const { return block(1, 0); }
  RealMatrix block_d() const { return block(1, 1); }

  static SymplecticElement identity(int n) {
    return SymplecticElement(RealMatrix::identity(2 * n));
  }
  /// The standard symplectic form J_n = [[0, I], [-I, 0]] (itself symplectic).
  static SymplecticElement j(int n);
  static RealMatrix j_matrix(int n);

  static SymplecticElement from_blocks(const RealMatrix& a, const RealMatrix& b,
                                       const RealMatrix& c, const RealMatrix& d);

  friend SymplecticElement operator*(const SymplecticElement& a, const SymplecticElement& b) {
    return SymplecticElement(a.m_ * b.m_);
  }

 private:
  RealMatrix block(int bi, int bj) const;
  int n_;
  RealMatrix m_;
};

struct SiegelMetricParams {
  double scale_a = 1.0;  // the A of ds^2_{n;A}

  void validate() const {
    if (!(scale_a > 0.0)) throw InvariantViolation("SiegelMetricParams: A must be > 0");
  }
};

/// Coordinate tangent dOmega = dX + i dY, both blocks symmetric.
struct SiegelTangent {
  RealMatrix dx, dy;

  SiegelTangent(RealMatrix dx_in, RealMatrix dy_in);
  ComplexMatrix d_omega() const { return ComplexMatrix(dx, dy); }
};

using SiegelField = std::function<double(const SiegelPoint&)>;

// ---- chart <-> matrix packing -------------------------------------------
//
// Chart order: (x_ij)_{i<=j} row-wise, then (y_ij)_{i<=j}. Dimension n(n+1).

int siegel_chart_dim(int n);
std::vector<double> siegel_to_chart(const SiegelPoint& p);
SiegelPoint siegel_from_chart(int n, const std::vector<double>& c);
std::vector<double> siegel_tangent_to_chart(const SiegelTangent& t);
SiegelTangent siegel_tangent_from_chart(int n, const std::vector<double>& c);
bool siegel_chart_admissible(int n, const std::vector<double>& c);

// ---- operations ----------------------------------------------------------

/// Moebius action M . Omega = (A Omega + B)(C Omega + D)^{-1}.
SiegelPoint sp_act(const SymplecticElement& m, const SiegelPoint& p);

/// Weighted matrix Wirtinger derivatives (d/dOmega f, d/dOmegaBar f); the
/// diagonal carries weight 1, off-diagonal entries weight 1/2.
std::pair<ComplexMatrix, ComplexMatrix> wirtinger_matrix_apply(const SiegelField& f,
                                                               const SiegelPoint& p,
                                                               const FDConfig& cfg = {});

/// A * Re tr(Y^{-1} dOmega Y^{-1} dOmegaBar).
double siegel_metric_quadratic(const SiegelPoint& p, const SiegelTangent& t,
                               const SiegelMetricParams& par);

/// Chart metric tensor (dimension n(n+1)) by polarization of the quadratic.
RealMatrix metric_tensor_siegel(const SiegelPoint& p, const SiegelMetricParams& par);

/// Invariant Laplacian (4/A) tr(Y t(Y d/dOmegaBar) d/dOmega) f via FD
/// Wirtinger second derivatives.
double siegel_laplacian_apply(const SiegelField& f, const SiegelPoint& p,
                              const SiegelMetricParams& par, const FDConfig& cfg = {});

/// Invariant volume density det(Y)^{-(n+1)}.
double volume_density(const SiegelPoint& p);

/// Matrix cross-ratio R(Omega0, Omega1).
ComplexMatrix cross_ratio(const SiegelPoint& p0, const SiegelPoint& p1);

/// Geodesic distance for ds^2_{n;1}, from the cross-ratio trace series.
double siegel_distance(const SiegelPoint& p0, const SiegelPoint& p1);

/// Closed-form hyperbolic distance on the upper half plane (n = 1); the
/// independent oracle for siegel_distance.
double poincare_distance(const SiegelPoint& p0, const SiegelPoint& p1);

/// alpha(t) = i diag(a_k^t); requires sum (log a_k)^2 = 1.
SiegelPoint special_geodesic(const std::vector<double>& a, double t);

SymplecticElement random_symplectic(uint64_t seed, int n);
SiegelPoint random_siegel_point(uint64_t seed, int n);

}  // namespace sjlab
