#include "sjlab/jacobi.hpp"

#include <cmath>

#include "sjlab/rng.hpp"

namespace sjlab {

HeisenbergElement::HeisenbergElement(RealMatrix lambda, RealMatrix mu, RealMatrix kappa)
    : n_(lambda.cols()),
      m_(lambda.rows()),
      lambda_(std::move(lambda)),
      mu_(std::move(mu)),
      kappa_(std::move(kappa)) {
  if (mu_.rows() != m_ || mu_.cols() != n_ || kappa_.rows() != m_ || kappa_.cols() != m_)
    throw InvariantViolation("HeisenbergElement: shape mismatch");
  const RealMatrix s = kappa_ + mu_ * lambda_.transpose();
  if (symmetry_residual(s) > 1e-10)
    throw InvariantViolation("HeisenbergElement: kappa + mu t(lambda) not symmetric");
}

SiegelJacobiPoint::SiegelJacobiPoint(SiegelPoint omega, ComplexMatrix z)
    : omega_(std::move(omega)), z_(std::move(z)) {
  if (z_.cols() != omega_.degree())
    throw InvariantViolation("SiegelJacobiPoint: Z must be m x n");
  if (!z_.is_finite()) throw InvariantViolation("SiegelJacobiPoint: Z must be finite");
}

// ---- chart ---------------------------------------------------------------

namespace {

int pair_index(int n, int i, int j) {
  if (i > j) std::swap(i, j);
  return i * n - i * (i - 1) / 2 + (j - i);
}

int x_index(int n, int i, int j) { return pair_index(n, i, j); }
int y_index(int n, int i, int j) { return n * (n + 1) / 2 + pair_index(n, i, j); }
int u_index(int n, int /*m*/, int k, int l) { return n * (n + 1) + k * n + l; }
int v_index(int n, int m, int k, int l) { return n * (n + 1) + m * n + k * n + l; }

double wirtinger_weight(int i, int j) { return i == j ? 1.0 : 0.5; }

}  // namespace

int jacobi_chart_dim(int n, int m) { return n * (n + 1) + 2 * m * n; }

std::vector<double> jacobi_to_chart(const SiegelJacobiPoint& p) {
  std::vector<double> c = siegel_to_chart(p.omega());
  c.reserve(jacobi_chart_dim(p.degree(), p.index()));
  const RealMatrix u = p.u(), v = p.v();
  for (int k = 0; k < p.index(); ++k)
    for (int l = 0; l < p.degree(); ++l) c.push_back(u(k, l));
  for (int k = 0; k < p.index(); ++k)
    for (int l = 0; l < p.degree(); ++l) c.push_back(v(k, l));
  return c;
}

SiegelJacobiPoint jacobi_from_chart(int n, int m, const std::vector<double>& c) {
  const std::vector<double> oc(c.begin(), c.begin() + siegel_chart_dim(n));
  RealMatrix u(m, n), v(m, n);
  for (int k = 0; k < m; ++k)
    for (int l = 0; l < n; ++l) {
      u(k, l) = c[u_index(n, m, k, l)];
      v(k, l) = c[v_index(n, m, k, l)];
    }
  return SiegelJacobiPoint(siegel_from_chart(n, oc), ComplexMatrix(u, v));
}

std::vector<double> jacobi_tangent_to_chart(const JacobiTangent& t) {
  std::vector<double> c = siegel_tangent_to_chart(t.d_omega);
  const RealMatrix du = t.dz.real(), dv = t.dz.imag();
  for (int k = 0; k < t.dz.rows(); ++k)
    for (int l = 0; l < t.dz.cols(); ++l) c.push_back(du(k, l));
  for (int k = 0; k < t.dz.rows(); ++k)
    for (int l = 0; l < t.dz.cols(); ++l) c.push_back(dv(k, l));
  return c;
}

JacobiTangent jacobi_tangent_from_chart(int n, int m, const std::vector<double>& c) {
  const std::vector<double> oc(c.begin(), c.begin() + siegel_chart_dim(n));
  RealMatrix du(m, n), dv(m, n);
  for (int k = 0; k < m; ++k)
    for (int l = 0; l < n; ++l) {
      du(k, l) = c[u_index(n, m, k, l)];
      dv(k, l) = c[v_index(n, m, k, l)];
    }
  return JacobiTangent{siegel_tangent_from_chart(n, oc), ComplexMatrix(du, dv)};
}

bool jacobi_chart_admissible(int n, int /*m*/, const std::vector<double>& c) {
  const std::vector<double> oc(c.begin(), c.begin() + siegel_chart_dim(n));
  return siegel_chart_admissible(n, oc);
}

// ---- group laws ----------------------------------------------------------

HeisenbergElement heisenberg_mul(const HeisenbergElement& h1, const HeisenbergElement& h2) {
  if (h1.degree() != h2.degree() || h1.index() != h2.index())
    throw InvariantViolation("heisenberg_mul: degree mismatch");
  const RealMatrix kappa = h1.kappa() + h2.kappa() + h1.lambda() * h2.mu().transpose() -
                           h1.mu() * h2.lambda().transpose();
  return HeisenbergElement(h1.lambda() + h2.lambda(), h1.mu() + h2.mu(), kappa);
}

JacobiElement jacobi_mul(const JacobiElement& g1, const JacobiElement& g2) {
  if (g1.m.degree() != g2.m.degree() || g1.h.index() != g2.h.index())
    throw InvariantViolation("jacobi_mul: degree mismatch");
  // (lt, mt) = (lambda, mu) M'.
  const RealMatrix lt = g1.h.lambda() * g2.m.block_a() + g1.h.mu() * g2.m.block_c();
  const RealMatrix mt = g1.h.lambda() * g2.m.block_b() + g1.h.mu() * g2.m.block_d();
  const RealMatrix kappa = g1.h.kappa() + g2.h.kappa() + lt * g2.h.mu().transpose() -
                           mt * g2.h.lambda().transpose();
  return JacobiElement(g1.m * g2.m,
                       HeisenbergElement(lt + g2.h.lambda(), mt + g2.h.mu(), kappa));
}

SiegelJacobiPoint jacobi_act(const JacobiElement& g, const SiegelJacobiPoint& p) {
  if (g.m.degree() != p.degree() || g.h.index() != p.index())
    throw InvariantViolation("jacobi_act: degree mismatch");
  const SiegelPoint om2 = sp_act(g.m, p.omega());
  const ComplexMatrix om = p.omega().omega();
  const ComplexMatrix den =
      ComplexMatrix::from_real(g.m.block_c()) * om + ComplexMatrix::from_real(g.m.block_d());
  const ComplexMatrix num = p.z() + ComplexMatrix::from_real(g.h.lambda()) * om +
                            ComplexMatrix::from_real(g.h.mu());
  const ComplexMatrix z2 = linear_solve(den.transpose(), num.transpose()).transpose();
  return SiegelJacobiPoint(om2, z2);
}

// ---- metric --------------------------------------------------------------

double jacobi_metric_quadratic(const SiegelJacobiPoint& p, const JacobiTangent& t,
                               const JacobiMetricParams& par) {
  par.validate();
  const ComplexMatrix yinv = ComplexMatrix::from_real(inverse(p.omega().y()));
  const ComplexMatrix v = ComplexMatrix::from_real(p.v());
  const ComplexMatrix dom = t.d_omega.d_omega();
  const ComplexMatrix dom_bar = dom.conj();
  const ComplexMatrix dz = t.dz;
  const ComplexMatrix dz_bar = dz.conj();

  complex acc = par.scale_a * (yinv * dom * yinv * dom_bar).trace();
  complex b_part = (yinv * v.transpose() * v * yinv * dom * yinv * dom_bar).trace();
  b_part += (yinv * dz.transpose() * dz_bar).trace();
  b_part -= (v * yinv * dom * yinv * dz_bar.transpose()).trace();
  b_part -= (v * yinv * dom_bar * yinv * dz.transpose()).trace();
  acc += par.scale_b * b_part;
  return acc.real();
}

RealMatrix metric_tensor_jacobi(const SiegelJacobiPoint& p, const JacobiMetricParams& par) {
  const int n = p.degree();
  const int m = p.index();
  const int dim = jacobi_chart_dim(n, m);
  std::vector<double> qe(dim);
  std::vector<double> e(dim, 0.0);
  auto q = [&](const std::vector<double>& c) {
    return jacobi_metric_quadratic(p, jacobi_tangent_from_chart(n, m, c), par);
  };
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

// ---- invariant operators -------------------------------------------------

namespace {

struct WirtingerHessian {
  int n, m;
  RealMatrix h;  // chart Hessian

  // dBar_omega(p,q) d_omega(r,s), with the (1+delta)/2 weights.
  complex om_bar_om(int p, int q, int r, int s) const {
    const int xpq = x_index(n, p, q), ypq = y_index(n, p, q);
    const int xrs = x_index(n, r, s), yrs = y_index(n, r, s);
    return wirtinger_weight(p, q) * wirtinger_weight(r, s) * 0.25 *
           complex(h(xpq, xrs) + h(ypq, yrs), h(ypq, xrs) - h(xpq, yrs));
  }
  // dBar_z(k,l) d_z(k2,l2), unweighted.
  complex z_bar_z(int k, int l, int k2, int l2) const {
    const int ukl = u_index(n, m, k, l), vkl = v_index(n, m, k, l);
    const int u2 = u_index(n, m, k2, l2), v2 = v_index(n, m, k2, l2);
    return 0.25 * complex(h(ukl, u2) + h(vkl, v2), h(vkl, u2) - h(ukl, v2));
  }
  // dBar_omega(p,q) d_z(k,l).
  complex om_bar_z(int p, int q, int k, int l) const {
    const int xpq = x_index(n, p, q), ypq = y_index(n, p, q);
    const int ukl = u_index(n, m, k, l), vkl = v_index(n, m, k, l);
    return wirtinger_weight(p, q) * 0.25 *
           complex(h(xpq, ukl) + h(ypq, vkl), h(ypq, ukl) - h(xpq, vkl));
  }
  // dBar_z(k,l) d_omega(p,q).
  complex z_bar_om(int k, int l, int p, int q) const {
    const int xpq = x_index(n, p, q), ypq = y_index(n, p, q);
    const int ukl = u_index(n, m, k, l), vkl = v_index(n, m, k, l);
    return wirtinger_weight(p, q) * 0.25 *
           complex(h(ukl, xpq) + h(vkl, ypq), h(vkl, xpq) - h(ukl, ypq));
  }
};

WirtingerHessian chart_hessian(const JacobiField& f, const SiegelJacobiPoint& p,
                               const FDConfig& cfg) {
  const int n = p.degree();
  const int m = p.index();
  const ScalarField cf = [n, m, &f](const std::vector<double>& c) {
    return f(jacobi_from_chart(n, m, c));
  };
  return WirtingerHessian{n, m, fd_hessian(cf, jacobi_to_chart(p), cfg)};
}

}  // namespace

double m1_apply(const JacobiField& f, const SiegelJacobiPoint& p, const FDConfig& cfg) {
  const int n = p.degree();
  const int m = p.index();
  const WirtingerHessian wh = chart_hessian(f, p, cfg);
  const RealMatrix& y = p.omega().y();
  const RealMatrix v = p.v();
  const RealMatrix yinv = inverse(y);
  const RealMatrix vyv = v * yinv * v.transpose();  // m x m

  complex acc = 0.0;
  // tr(Y t(Y dOmBar) dOm)
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        for (int d = 0; d < n; ++d) {
          const double coef = y(a, b) * y(c, d);
          if (coef != 0.0) acc += coef * wh.om_bar_om(d, b, c, a);
        }
  // tr(V Y^{-1} tV t(Y dZBar) dZ)
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) {
          const double coef = vyv(i, j) * y(k, l);
          if (coef != 0.0) acc += coef * wh.z_bar_z(j, l, i, k);
        }
  // tr(V t(Y dOmBar) dZ)
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        for (int l = 0; l < n; ++l) {
          const double coef = v(a, b) * y(c, l);
          if (coef != 0.0) acc += coef * wh.om_bar_z(l, b, a, c);
        }
  // tr(tV t(Y dZBar) dOm)
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) {
          const double coef = v(i, j) * y(k, l);
          if (coef != 0.0) acc += coef * wh.z_bar_om(i, l, k, j);
        }
  return acc.real();
}

double m2_apply(const JacobiField& f, const SiegelJacobiPoint& p, const FDConfig& cfg) {
  const int n = p.degree();
  const int m = p.index();
  const WirtingerHessian wh = chart_hessian(f, p, cfg);
  const RealMatrix& y = p.omega().y();

  complex acc = 0.0;
  // tr(Y dZ t(dZBar)): sum Y_ij d_z(k,j) dBar_z(k,i).
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < m; ++k) {
        const double coef = y(i, j);
        // d_z dBar_z is the conjugate of dBar_z d_z with swapped slots.
        if (coef != 0.0) acc += coef * std::conj(wh.z_bar_z(k, j, k, i));
      }
  return acc.real();
}

double jacobi_laplacian_apply(const JacobiField& f, const SiegelJacobiPoint& p,
                              const JacobiMetricParams& par, const FDConfig& cfg) {
  par.validate();
  return 4.0 / par.scale_a * m1_apply(f, p, cfg) + 4.0 / par.scale_b * m2_apply(f, p, cfg);
}

// ---- random instances ----------------------------------------------------

HeisenbergElement random_heisenberg(uint64_t seed, int n, int m) {
  Rng rng(seed);
  const RealMatrix lambda = rng.matrix(m, n, -0.5, 0.5);
  const RealMatrix mu = rng.matrix(m, n, -0.5, 0.5);
  const RealMatrix kappa = rng.symmetric(m, -0.5, 0.5) - mu * lambda.transpose();
  return HeisenbergElement(lambda, mu, kappa);
}

JacobiElement random_jacobi(uint64_t seed, int n, int m) {
  return JacobiElement(random_symplectic(subseed(seed, 1), n),
                       random_heisenberg(subseed(seed, 2), n, m));
}

SiegelJacobiPoint random_jacobi_point(uint64_t seed, int n, int m) {
  Rng rng(subseed(seed, 3));
  const RealMatrix u = rng.matrix(m, n, -0.5, 0.5);
  const RealMatrix v = rng.matrix(m, n, -0.5, 0.5);
  return SiegelJacobiPoint(random_siegel_point(subseed(seed, 4), n), ComplexMatrix(u, v));
}

}  // namespace sjlab
