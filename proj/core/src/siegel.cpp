#include "sjlab/siegel.hpp"

#include <cmath>

#include "sjlab/rng.hpp"

namespace sjlab {

SiegelPoint::SiegelPoint(RealMatrix x, RealMatrix y)
    : n_(x.rows()), x_(std::move(x)), y_(std::move(y)) {
  if (x_.rows() != x_.cols() || y_.rows() != y_.cols() || x_.rows() != y_.rows())
    throw InvariantViolation("SiegelPoint: X, Y must be square of equal degree");
  if (symmetry_residual(x_) > 1e-12 || symmetry_residual(y_) > 1e-12)
    throw InvariantViolation("SiegelPoint: X, Y must be symmetric");
  if (!x_.is_finite() || !y_.is_finite())
    throw InvariantViolation("SiegelPoint: entries must be finite");
  cholesky(y_);  // Im Omega > 0
}

SymplecticElement::SymplecticElement(RealMatrix m) : m_(std::move(m)) {
  if (m_.rows() != m_.cols() || m_.rows() % 2 != 0)
    throw InvariantViolation("SymplecticElement: matrix must be square of even degree");
  n_ = m_.rows() / 2;
  const RealMatrix jn = j_matrix(n_);
  if (max_abs_diff(m_.transpose() * jn * m_, jn) > 1e-10)
    throw InvariantViolation("SymplecticElement: t(M) J M != J");
}

RealMatrix SymplecticElement::j_matrix(int n) {
  RealMatrix j(2 * n, 2 * n);
  for (int i = 0; i < n; ++i) {
    j(i, n + i) = 1.0;
    j(n + i, i) = -1.0;
  }
  return j;
}

SymplecticElement SymplecticElement::j(int n) { return SymplecticElement(j_matrix(n)); }

RealMatrix SymplecticElement::block(int bi, int bj) const {
  RealMatrix b(n_, n_);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) b(i, j) = m_(bi * n_ + i, bj * n_ + j);
  return b;
}

SymplecticElement SymplecticElement::from_blocks(const RealMatrix& a, const RealMatrix& b,
                                                 const RealMatrix& c, const RealMatrix& d) {
  const int n = a.rows();
  RealMatrix m(2 * n, 2 * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      m(i, j) = a(i, j);
      m(i, n + j) = b(i, j);
      m(n + i, j) = c(i, j);
      m(n + i, n + j) = d(i, j);
    }
  return SymplecticElement(std::move(m));
}

SiegelTangent::SiegelTangent(RealMatrix dx_in, RealMatrix dy_in)
    : dx(std::move(dx_in)), dy(std::move(dy_in)) {
  if (symmetry_residual(dx) > 1e-12 || symmetry_residual(dy) > 1e-12)
    throw InvariantViolation("SiegelTangent: blocks must be symmetric");
}

// ---- chart packing -------------------------------------------------------

namespace {

// Index of the (i,j), i<=j, pair in row-wise upper-triangular order.
int pair_index(int n, int i, int j) {
  if (i > j) std::swap(i, j);
  return i * n - i * (i - 1) / 2 + (j - i);
}

int x_index(int n, int i, int j) { return pair_index(n, i, j); }
int y_index(int n, int i, int j) { return n * (n + 1) / 2 + pair_index(n, i, j); }

RealMatrix sym_from_chart(int n, const std::vector<double>& c, int offset) {
  RealMatrix m(n, n);
  int k = offset;
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) m(i, j) = m(j, i) = c[k++];
  return m;
}

void sym_to_chart(const RealMatrix& m, std::vector<double>& c) {
  for (int i = 0; i < m.rows(); ++i)
    for (int j = i; j < m.cols(); ++j) c.push_back(m(i, j));
}

double wirtinger_weight(int i, int j) { return i == j ? 1.0 : 0.5; }

}  // namespace

int siegel_chart_dim(int n) { return n * (n + 1); }

std::vector<double> siegel_to_chart(const SiegelPoint& p) {
  std::vector<double> c;
  c.reserve(siegel_chart_dim(p.degree()));
  sym_to_chart(p.x(), c);
  sym_to_chart(p.y(), c);
  return c;
}

SiegelPoint siegel_from_chart(int n, const std::vector<double>& c) {
  return SiegelPoint(sym_from_chart(n, c, 0), sym_from_chart(n, c, n * (n + 1) / 2));
}

std::vector<double> siegel_tangent_to_chart(const SiegelTangent& t) {
  std::vector<double> c;
  sym_to_chart(t.dx, c);
  sym_to_chart(t.dy, c);
  return c;
}

SiegelTangent siegel_tangent_from_chart(int n, const std::vector<double>& c) {
  return SiegelTangent(sym_from_chart(n, c, 0), sym_from_chart(n, c, n * (n + 1) / 2));
}

bool siegel_chart_admissible(int n, const std::vector<double>& c) {
  return is_positive_definite(sym_from_chart(n, c, n * (n + 1) / 2));
}

// ---- operations ----------------------------------------------------------

SiegelPoint sp_act(const SymplecticElement& m, const SiegelPoint& p) {
  if (m.degree() != p.degree()) throw InvariantViolation("sp_act: degree mismatch");
  const ComplexMatrix om = p.omega();
  const ComplexMatrix num =
      ComplexMatrix::from_real(m.block_a()) * om + ComplexMatrix::from_real(m.block_b());
  const ComplexMatrix den =
      ComplexMatrix::from_real(m.block_c()) * om + ComplexMatrix::from_real(m.block_d());
  // num * den^{-1} via the transposed system.
  const ComplexMatrix res =
      symmetrize(linear_solve(den.transpose(), num.transpose()).transpose());
  return SiegelPoint(res.real(), res.imag());
}

std::pair<ComplexMatrix, ComplexMatrix> wirtinger_matrix_apply(const SiegelField& f,
                                                               const SiegelPoint& p,
                                                               const FDConfig& cfg) {
  const int n = p.degree();
  const ScalarField cf = [n, &f](const std::vector<double>& c) {
    return f(siegel_from_chart(n, c));
  };
  const std::vector<double> c0 = siegel_to_chart(p);
  ComplexMatrix d_om(n, n), d_om_bar(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      const double gx = fd_partial(cf, c0, x_index(n, i, j), cfg);
      const double gy = fd_partial(cf, c0, y_index(n, i, j), cfg);
      const double w = wirtinger_weight(i, j);
      const complex dw = 0.5 * w * complex(gx, -gy);
      const complex dwb = 0.5 * w * complex(gx, gy);
      d_om(i, j) = d_om(j, i) = dw;
      d_om_bar(i, j) = d_om_bar(j, i) = dwb;
    }
  return {d_om, d_om_bar};
}

double siegel_metric_quadratic(const SiegelPoint& p, const SiegelTangent& t,
                               const SiegelMetricParams& par) {
  par.validate();
  const ComplexMatrix yinv = ComplexMatrix::from_real(inverse(p.y()));
  const ComplexMatrix dom = t.d_omega();
  return par.scale_a * (yinv * dom * yinv * dom.conj()).trace().real();
}

namespace {

// Polarization of any quadratic form q over chart basis vectors.
RealMatrix polarize(int dim, const std::function<double(const std::vector<double>&)>& q) {
  std::vector<double> qe(dim);
  std::vector<double> e(dim, 0.0);
  for (int i = 0; i < dim; ++i) {
    e[i] = 1.0;
    qe[i] = q(e);
    e[i] = 0.0;
  }
  RealMatrix g(dim, dim);
  for (int i = 0; i < dim; ++i) {
    g(i, i) = qe[i];
    for (int j = i + 1; j < dim; ++j) {
      e[i] = e[j] = 1.0;
      g(i, j) = g(j, i) = 0.5 * (q(e) - qe[i] - qe[j]);
      e[i] = e[j] = 0.0;
    }
  }
  return g;
}

}  // namespace

RealMatrix metric_tensor_siegel(const SiegelPoint& p, const SiegelMetricParams& par) {
  const int n = p.degree();
  return polarize(siegel_chart_dim(n), [&](const std::vector<double>& c) {
    return siegel_metric_quadratic(p, siegel_tangent_from_chart(n, c), par);
  });
}

double siegel_laplacian_apply(const SiegelField& f, const SiegelPoint& p,
                              const SiegelMetricParams& par, const FDConfig& cfg) {
  par.validate();
  const int n = p.degree();
  const ScalarField cf = [n, &f](const std::vector<double>& c) {
    return f(siegel_from_chart(n, c));
  };
  const RealMatrix h = fd_hessian(cf, siegel_to_chart(p), cfg);
  const RealMatrix& y = p.y();

  // tr(Y t(Y dOmegaBar) dOmega) with coefficients frozen at the point:
  // sum over a,b,c,d of Y_ab Y_cd (dOmegaBar)_db (dOmega)_ca.
  complex acc = 0.0;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        for (int d = 0; d < n; ++d) {
          const double coef = y(a, b) * y(c, d);
          if (coef == 0.0) continue;
          const int xdb = x_index(n, d, b), ydb = y_index(n, d, b);
          const int xca = x_index(n, c, a), yca = y_index(n, c, a);
          const complex t2(h(xdb, xca) + h(ydb, yca), h(ydb, xca) - h(xdb, yca));
          acc += coef * wirtinger_weight(d, b) * wirtinger_weight(c, a) * 0.25 * t2;
        }
  return 4.0 / par.scale_a * acc.real();
}

double volume_density(const SiegelPoint& p) {
  return std::pow(spd_determinant(p.y()), -(p.degree() + 1));
}

ComplexMatrix cross_ratio(const SiegelPoint& p0, const SiegelPoint& p1) {
  if (p0.degree() != p1.degree()) throw InvariantViolation("cross_ratio: degree mismatch");
  const int n = p0.degree();
  const ComplexMatrix om0 = p0.omega();
  const ComplexMatrix om1 = p1.omega();
  if (max_abs_diff(om0, om1) == 0.0) return ComplexMatrix(n, n);
  const ComplexMatrix f1 = om0 - om1;
  const ComplexMatrix f2 = om0 - om1.conj();
  const ComplexMatrix f3 = om0.conj() - om1.conj();
  const ComplexMatrix f4 = om0.conj() - om1;
  return f1 * linear_solve(f2, f3) * inverse(f4);
}

double siegel_distance(const SiegelPoint& p0, const SiegelPoint& p1) {
  const ComplexMatrix r = cross_ratio(p0, p1);
  if (r.norm_inf() == 0.0) return 0.0;
  try {
    const long k = series_terms_for_tolerance(r, 1e-12);
    const SeriesResult s = truncated_matrix_series(r, k);
    return std::sqrt(std::max(s.value, 0.0));
  } catch (const Diverges& e) {
    throw DistanceOutOfRange(e.what());
  }
}

double poincare_distance(const SiegelPoint& p0, const SiegelPoint& p1) {
  if (p0.degree() != 1 || p1.degree() != 1)
    throw InvariantViolation("poincare_distance: degree must be 1");
  const double x1 = p0.x()(0, 0), y1 = p0.y()(0, 0);
  const double x2 = p1.x()(0, 0), y2 = p1.y()(0, 0);
  const double d2 = (x2 - x1) * (x2 - x1) + (y2 - y1) * (y2 - y1);
  return std::acosh(1.0 + d2 / (2.0 * y1 * y2));
}

SiegelPoint special_geodesic(const std::vector<double>& a, double t) {
  const int n = static_cast<int>(a.size());
  double norm = 0.0;
  for (double ak : a) {
    if (!(ak > 0.0)) throw InvariantViolation("special_geodesic: a_k must be positive");
    norm += std::log(ak) * std::log(ak);
  }
  if (std::abs(norm - 1.0) > 1e-10)
    throw NormalizationViolated("special_geodesic: sum (log a_k)^2 != 1");
  RealMatrix y(n, n);
  for (int k = 0; k < n; ++k) y(k, k) = std::pow(a[k], t);
  return SiegelPoint(RealMatrix(n, n), y);
}

SymplecticElement random_symplectic(uint64_t seed, int n) {
  Rng rng(seed);
  RealMatrix m = RealMatrix::identity(2 * n);
  for (int gen = 0; gen < 5; ++gen) {
    const int type = rng.uniform_int(0, 2);
    RealMatrix factor = RealMatrix::identity(2 * n);
    if (type == 0) {
      const RealMatrix b = rng.symmetric(n, -0.3, 0.3);
      factor = SymplecticElement::from_blocks(RealMatrix::identity(n), b, RealMatrix(n, n),
                                              RealMatrix::identity(n))
                   .m();
    } else if (type == 1) {
      // GL part; redraw until comfortably invertible.
      for (;;) {
        RealMatrix g = RealMatrix::identity(n) + 0.25 * rng.matrix(n, n, -1.0, 1.0);
        try {
          const RealMatrix gti = inverse(g).transpose();
          factor = SymplecticElement::from_blocks(gti, RealMatrix(n, n), RealMatrix(n, n), g).m();
          break;
        } catch (const Singular&) {
        }
      }
    } else {
      factor = SymplecticElement::j_matrix(n);
    }
    m = m * factor;
  }
  return SymplecticElement(std::move(m));
}

SiegelPoint random_siegel_point(uint64_t seed, int n) {
  Rng rng(seed);
  const RealMatrix x = rng.symmetric(n, -1.0, 1.0);
  const RealMatrix q = rng.matrix(n, n, -1.0, 1.0);
  RealMatrix y = q * q.transpose() + 0.1 * RealMatrix::identity(n);
  return SiegelPoint(x, symmetrize(y));
}

}  // namespace sjlab
