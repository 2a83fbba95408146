#pragma once

#include <vector>

#include "sjlab/matrix.hpp"

namespace sjlab {

/// Cholesky factor L with L * t(L) = S. Throws NotPositiveDefinite when a
/// pivot drops below 1e-12 relative scale; this is the project-wide
/// positive-definiteness oracle.
RealMatrix cholesky(const RealMatrix& s);

inline bool is_positive_definite(const RealMatrix& s) {
  try {
    cholesky(s);
    return true;
  } catch (const NumericError&) {
    return false;
  }
}

/// Solves A X = B by partial-pivot LU. Throws Singular when the pivot
/// magnitude falls below 1e-13 * |A|.
ComplexMatrix linear_solve(const ComplexMatrix& a, const ComplexMatrix& b);
RealMatrix linear_solve(const RealMatrix& a, const RealMatrix& b);

inline ComplexMatrix inverse(const ComplexMatrix& a) {
  return linear_solve(a, ComplexMatrix::identity(a.rows()));
}
inline RealMatrix inverse(const RealMatrix& a) {
  return linear_solve(a, RealMatrix::identity(a.rows()));
}

/// det(Y) for symmetric positive definite Y, via the Cholesky diagonal.
double spd_determinant(const RealMatrix& y);

/// General determinant by partial-pivot LU (used for FD Jacobians).
double determinant(const RealMatrix& a);

/// Eigenvalues (with multiplicity) of a complex matrix of dimension <= 4:
/// characteristic polynomial by Faddeev-LeVerrier, roots by simultaneous
/// (Durand-Kerner) iteration. Sorted by (re, im).
std::vector<complex> small_complex_eigenvalues(const ComplexMatrix& a);

/// Operator 2-norm estimate by power iteration on t(conj(A)) A.
double estimate_norm2(const ComplexMatrix& a, int steps = 20);

struct SeriesResult {
  double value = 0.0;       // Re tr( 4 R (sum_{k<=K} R^k/(2k+1))^2 )
  double tail_bound = 0.0;  // geometric bound on the truncation error
  double imag_residual = 0.0;
};

/// Truncated evaluation of the geodesic-length trace series. The spectral
/// proxy is estimate_norm2(R); values >= 1 - 1e-9 throw Diverges.
SeriesResult truncated_matrix_series(const ComplexMatrix& r, long k_terms);

/// Smallest K whose tail bound is <= tol, capped at 10^6 terms.
long series_terms_for_tolerance(const ComplexMatrix& r, double tol);

}  // namespace sjlab
