#include "sjlab/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace sjlab {

RealMatrix cholesky(const RealMatrix& s) {
  if (s.rows() != s.cols()) throw InvariantViolation("cholesky: matrix not square");
  const int n = s.rows();
  const double scale = 1.0 + s.norm_inf();
  if (symmetry_residual(s) > 1e-12 * scale)
    throw InvariantViolation("cholesky: matrix not symmetric");

  RealMatrix l(n, n);
  const double tol = 1e-12 * scale;
  for (int j = 0; j < n; ++j) {
    double d = s(j, j);
    for (int k = 0; k < j; ++k) d -= l(j, k) * l(j, k);
    if (!(d > tol)) throw NotPositiveDefinite("cholesky pivot below tolerance");
    l(j, j) = std::sqrt(d);
    for (int i = j + 1; i < n; ++i) {
      double v = s(i, j);
      for (int k = 0; k < j; ++k) v -= l(i, k) * l(j, k);
      l(i, j) = v / l(j, j);
    }
  }
  return l;
}

double spd_determinant(const RealMatrix& y) {
  const RealMatrix l = cholesky(y);
  double d = 1.0;
  for (int i = 0; i < l.rows(); ++i) d *= l(i, i);
  return d * d;
}

double determinant(const RealMatrix& a) {
  if (a.rows() != a.cols()) throw InvariantViolation("determinant: matrix not square");
  const int n = a.rows();
  RealMatrix lu = a;
  double det = 1.0;
  for (int col = 0; col < n; ++col) {
    int piv = col;
    double best = std::abs(lu(col, col));
    for (int i = col + 1; i < n; ++i)
      if (std::abs(lu(i, col)) > best) {
        best = std::abs(lu(i, col));
        piv = i;
      }
    if (best == 0.0) return 0.0;
    if (piv != col) {
      for (int j = 0; j < n; ++j) std::swap(lu(col, j), lu(piv, j));
      det = -det;
    }
    det *= lu(col, col);
    for (int i = col + 1; i < n; ++i) {
      const double f = lu(i, col) / lu(col, col);
      for (int j = col + 1; j < n; ++j) lu(i, j) -= f * lu(col, j);
    }
  }
  return det;
}

namespace {

template <typename Mat, typename Scalar>
Mat lu_solve(const Mat& a, const Mat& b) {
  if (a.rows() != a.cols()) throw InvariantViolation("linear_solve: A not square");
  if (a.rows() != b.rows()) throw InvariantViolation("linear_solve: B not conformable");
  const int n = a.rows();
  const int m = b.cols();
  Mat lu = a;
  Mat x = b;
  const double pivot_tol = 1e-13 * std::max(a.norm_inf(), 1e-300);

  for (int col = 0; col < n; ++col) {
    int piv = col;
    double best = std::abs(lu(col, col));
    for (int i = col + 1; i < n; ++i) {
      const double v = std::abs(lu(i, col));
      if (v > best) {
        best = v;
        piv = i;
      }
    }
    if (best < pivot_tol) throw Singular("linear_solve: pivot below tolerance");
    if (piv != col) {
      for (int j = 0; j < n; ++j) std::swap(lu(col, j), lu(piv, j));
      for (int j = 0; j < m; ++j) std::swap(x(col, j), x(piv, j));
    }
    const Scalar inv_p = Scalar(1.0) / lu(col, col);
    for (int i = col + 1; i < n; ++i) {
      const Scalar f = lu(i, col) * inv_p;
      if (f == Scalar(0.0)) continue;
      lu(i, col) = f;
      for (int j = col + 1; j < n; ++j) lu(i, j) -= f * lu(col, j);
      for (int j = 0; j < m; ++j) x(i, j) -= f * x(col, j);
    }
  }
  for (int col = n - 1; col >= 0; --col) {
    const Scalar inv_p = Scalar(1.0) / lu(col, col);
    for (int j = 0; j < m; ++j) x(col, j) *= inv_p;
    for (int i = 0; i < col; ++i) {
      const Scalar f = lu(i, col);
      if (f == Scalar(0.0)) continue;
      for (int j = 0; j < m; ++j) x(i, j) -= f * x(col, j);
    }
  }
  return x;
}

}  // namespace

ComplexMatrix linear_solve(const ComplexMatrix& a, const ComplexMatrix& b) {
  return lu_solve<ComplexMatrix, complex>(a, b);
}

RealMatrix linear_solve(const RealMatrix& a, const RealMatrix& b) {
  return lu_solve<RealMatrix, double>(a, b);
}

namespace {

// Monic characteristic polynomial coefficients c[0..n], c[n] = 1, by
// Faddeev-LeVerrier.
std::vector<complex> char_poly(const ComplexMatrix& a) {
  const int n = a.rows();
  std::vector<complex> c(n + 1);
  c[n] = 1.0;
  ComplexMatrix m = ComplexMatrix::identity(n);  // M_0
  for (int k = 1; k <= n; ++k) {
    m = a * m;
    const complex ck = -m.trace() / static_cast<double>(k);
    c[n - k] = ck;
    for (int i = 0; i < n; ++i) m(i, i) += ck;
  }
  return c;
}

complex poly_eval(const std::vector<complex>& c, complex z) {
  complex v = 0.0;
  for (int k = static_cast<int>(c.size()) - 1; k >= 0; --k) v = v * z + c[k];
  return v;
}

}  // namespace

std::vector<complex> small_complex_eigenvalues(const ComplexMatrix& a) {
  if (a.rows() != a.cols()) throw InvariantViolation("eigenvalues: matrix not square");
  const int n = a.rows();
  if (n > 4) throw InvariantViolation("eigenvalues: dimension > 4 not supported");
  const std::vector<complex> c = char_poly(a);

  // Durand-Kerner simultaneous root iteration.
  std::vector<complex> z(n);
  const complex seed(0.4, 0.9);
  complex p = 1.0;
  for (int i = 0; i < n; ++i) {
    p *= seed;
    z[i] = p;
  }
  const double scale = 1.0 + a.norm_inf();
  bool converged = false;
  for (int iter = 0; iter < 1000 && !converged; ++iter) {
    double step = 0.0;
    for (int i = 0; i < n; ++i) {
      complex denom = 1.0;
      for (int j = 0; j < n; ++j)
        if (j != i) denom *= z[i] - z[j];
      if (denom == complex(0.0)) denom = complex(1e-30, 0.0);
      const complex dz = poly_eval(c, z[i]) / denom;
      z[i] -= dz;
      step = std::max(step, std::abs(dz));
    }
    converged = step < 1e-14 * scale;
  }

  // Residual gate: |det(A - z I)| = |p(z)| per root.
  const double tol = 1e-8 * std::pow(scale, n);
  for (const complex& root : z)
    if (std::abs(poly_eval(c, root)) > tol)
      throw NoConvergence("eigenvalue residual above tolerance");

  std::sort(z.begin(), z.end(), [](const complex& x, const complex& y) {
    if (x.real() != y.real()) return x.real() < y.real();
    return x.imag() < y.imag();
  });
  return z;
}

double estimate_norm2(const ComplexMatrix& a, int steps) {
  const int n = a.cols();
  const ComplexMatrix ah = a.conj().transpose();
  // Fixed deterministic start vector.
  ComplexMatrix v(n, 1);
  for (int i = 0; i < n; ++i) v(i, 0) = complex(1.0 + 0.1 * i, 0.05 * (i + 1));
  double lambda = 0.0;
  for (int s = 0; s < steps; ++s) {
    ComplexMatrix w = ah * (a * v);
    double nrm = 0.0;
    for (int i = 0; i < n; ++i) nrm += std::norm(w(i, 0));
    nrm = std::sqrt(nrm);
    if (nrm == 0.0) return 0.0;
    double vn = 0.0;
    for (int i = 0; i < n; ++i) vn += std::norm(v(i, 0));
    lambda = nrm / std::max(std::sqrt(vn), 1e-300);
    v = w *= complex(1.0 / nrm, 0.0);
  }
  return std::sqrt(lambda);
}

namespace {

// Convergence rate proxy. The series argument is diagonalizable with real
// spectrum, so the spectral radius is the honest rate; it is computed
// exactly for dimension <= 4 and replaced by the (possibly pessimistic)
// 2-norm estimate otherwise.
double series_rate(const ComplexMatrix& r) {
  if (r.rows() <= 4) {
    try {
      double rho = 0.0;
      for (const complex& ev : small_complex_eigenvalues(r))
        rho = std::max(rho, std::abs(ev));
      return rho;
    } catch (const NoConvergence&) {
      // fall through to the norm estimate
    }
  }
  return estimate_norm2(r);
}

double series_tail_bound(int n, double r, long k_terms) {
  if (r <= 0.0) return 0.0;
  if (r >= 1.0) return std::numeric_limits<double>::infinity();
  const double sum_bound = std::atanh(std::sqrt(r)) / std::sqrt(r);
  const double ds = std::pow(r, static_cast<double>(k_terms + 1)) /
                    ((2.0 * k_terms + 3.0) * (1.0 - r));
  return 4.0 * n * r * (2.0 * sum_bound + ds) * ds;
}

}  // namespace

SeriesResult truncated_matrix_series(const ComplexMatrix& r, long k_terms) {
  if (r.rows() != r.cols()) throw InvariantViolation("series: matrix not square");
  const int n = r.rows();
  const double rho = series_rate(r);
  if (rho >= 1.0 - 1e-9) throw Diverges("series: spectral proxy >= 1");

  ComplexMatrix s = ComplexMatrix::identity(n);
  ComplexMatrix p = ComplexMatrix::identity(n);
  for (long k = 1; k <= k_terms; ++k) {
    p = p * r;
    s += p * complex(1.0 / (2.0 * k + 1.0), 0.0);
  }
  const complex tr = (r * s * s).trace() * 4.0;
  SeriesResult out;
  out.value = tr.real();
  out.imag_residual = std::abs(tr.imag());
  out.tail_bound = series_tail_bound(n, rho, k_terms);
  return out;
}

long series_terms_for_tolerance(const ComplexMatrix& r, double tol) {
  const int n = r.rows();
  const double rho = series_rate(r);
  if (rho >= 1.0 - 1e-9) throw Diverges("series: spectral proxy >= 1");
  const long cap = 1000000;
  long k = 8;
  while (k < cap && series_tail_bound(n, rho, k) > tol) k *= 2;
  return std::min(k, cap);
}

}  // namespace sjlab
