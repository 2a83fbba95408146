#include "sjlab/riemann.hpp"

#include <cmath>

#include "sjlab/linalg.hpp"

namespace sjlab {

RealMatrix MetricField::eval(const std::vector<double>& x) const {
  const RealMatrix m = g(x);
  if (m.rows() != dim || m.cols() != dim)
    throw InvariantViolation("MetricField: evaluator returned wrong shape");
  if (symmetry_residual(m) > 1e-10)
    throw InvariantViolation("MetricField: tensor not symmetric");
  cholesky(m);  // PD gate
  return m;
}

namespace {

std::vector<RealMatrix> metric_fd_samples(const MetricField& g, const std::vector<double>& x,
                                          int i, const FDConfig& cfg) {
  std::vector<RealMatrix> d(cfg.richardson_levels);
  std::vector<double> xp = x;
  double h = cfg.step;
  for (int lvl = 0; lvl < cfg.richardson_levels; ++lvl, h *= 0.5) {
    xp[i] = x[i] + h;
    RealMatrix gp = g.eval(xp);
    xp[i] = x[i] - h;
    const RealMatrix gm = g.eval(xp);
    xp[i] = x[i];
    gp -= gm;
    gp *= 1.0 / (2.0 * h);
    d[lvl] = gp;
  }
  return d;
}

RealMatrix richardson_matrices(std::vector<RealMatrix> t) {
  const int levels = static_cast<int>(t.size());
  for (int k = 1; k < levels; ++k) {
    const double p = std::pow(4.0, k);
    for (int j = 0; j + k < levels; ++j) {
      RealMatrix next = t[j + 1];
      next *= p;
      next -= t[j];
      next *= 1.0 / (p - 1.0);
      t[j] = next;
    }
  }
  return t[0];
}

/// d g / d x_i entrywise, central difference plus Richardson.
RealMatrix metric_fd_partial(const MetricField& g, const std::vector<double>& x, int i,
                             const FDConfig& cfg) {
  return richardson_matrices(metric_fd_samples(g, x, i, cfg));
}

}  // namespace

Tensor3 christoffel(const MetricField& g, const std::vector<double>& x, const FDConfig& cfg) {
  cfg.validate();
  const int d = g.dim;
  const RealMatrix ginv = inverse(g.eval(x));
  std::vector<RealMatrix> dg;
  dg.reserve(d);
  for (int i = 0; i < d; ++i) dg.push_back(metric_fd_partial(g, x, i, cfg));

  Tensor3 gamma(d);
  for (int k = 0; k < d; ++k)
    for (int i = 0; i < d; ++i)
      for (int j = i; j < d; ++j) {
        double s = 0.0;
        for (int l = 0; l < d; ++l)
          s += ginv(k, l) * (dg[i](j, l) + dg[j](i, l) - dg[l](i, j));
        gamma.at(k, i, j) = gamma.at(k, j, i) = 0.5 * s;
      }
  return gamma;
}

namespace {

void check_in_domain(const MetricField& g, const std::vector<double>& x) {
  for (double xi : x)
    if (!std::isfinite(xi) || std::abs(xi) > 1e6)
      throw StepOverflow("geodesic left the chart bounding box");
  if (g.admissible && !g.admissible(x))
    throw StepOverflow("geodesic left the admissible cone");
}

struct State {
  std::vector<double> x, v;
};

State derivative(const MetricField& g, const State& s, const FDConfig& cfg) {
  const int d = g.dim;
  Tensor3 gamma(d);
  try {
    gamma = christoffel(g, s.x, cfg);
  } catch (const NotPositiveDefinite&) {
    // The FD stencil stepped outside the metric's domain of definition.
    throw StepOverflow("geodesic left the metric's domain");
  } catch (const Singular&) {
    throw StepOverflow("geodesic left the metric's domain");
  }
  State ds;
  ds.x = s.v;
  ds.v.assign(d, 0.0);
  for (int k = 0; k < d; ++k) {
    double a = 0.0;
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) a -= gamma.at(k, i, j) * s.v[i] * s.v[j];
    ds.v[k] = a;
  }
  return ds;
}

State axpy(const State& s, const State& ds, double h) {
  State r = s;
  for (size_t i = 0; i < r.x.size(); ++i) {
    r.x[i] += h * ds.x[i];
    r.v[i] += h * ds.v[i];
  }
  return r;
}

State rk4_step(const MetricField& g, const State& s, double h, const FDConfig& cfg) {
  const State k1 = derivative(g, s, cfg);
  const State k2 = derivative(g, axpy(s, k1, 0.5 * h), cfg);
  const State k3 = derivative(g, axpy(s, k2, 0.5 * h), cfg);
  const State k4 = derivative(g, axpy(s, k3, h), cfg);
  State r = s;
  for (size_t i = 0; i < r.x.size(); ++i) {
    r.x[i] += h / 6.0 * (k1.x[i] + 2.0 * k2.x[i] + 2.0 * k3.x[i] + k4.x[i]);
    r.v[i] += h / 6.0 * (k1.v[i] + 2.0 * k2.v[i] + 2.0 * k3.v[i] + k4.v[i]);
  }
  return r;
}

std::vector<double> integrate_endpoint(const MetricField& g, const std::vector<double>& x0,
                                       const std::vector<double>& v0, double t_final,
                                       int steps, const FDConfig& cfg) {
  State s{x0, v0};
  const double h = t_final / steps;
  for (int i = 0; i < steps; ++i) {
    s = rk4_step(g, s, h, cfg);
    check_in_domain(g, s.x);
  }
  return s.x;
}

}  // namespace

GeodesicPath geodesic_integrate(const MetricField& g, const std::vector<double>& x0,
                                const std::vector<double>& v0, double t_final, int steps,
                                const FDConfig& cfg) {
  if (steps < 64) throw InvariantViolation("geodesic_integrate: steps must be >= 64");
  check_in_domain(g, x0);
  GeodesicPath path;
  State s{x0, v0};
  path.times.push_back(0.0);
  path.points.push_back(s.x);
  path.velocities.push_back(s.v);
  const double h = t_final / steps;
  for (int i = 0; i < steps; ++i) {
    s = rk4_step(g, s, h, cfg);
    check_in_domain(g, s.x);
    path.times.push_back((i + 1) * h);
    path.points.push_back(s.x);
    path.velocities.push_back(s.v);
  }
  return path;
}

double metric_speed(const MetricField& g, const std::vector<double>& x,
                    const std::vector<double>& v) {
  const RealMatrix m = g.eval(x);
  double q = 0.0;
  for (int i = 0; i < g.dim; ++i)
    for (int j = 0; j < g.dim; ++j) q += v[i] * m(i, j) * v[j];
  return std::sqrt(std::max(q, 0.0));
}

ShootingResult geodesic_shoot_bvp(const MetricField& g, const std::vector<double>& x0,
                                  const std::vector<double>& x1, int steps,
                                  const FDConfig& cfg) {
  const int d = g.dim;
  auto endpoint_error = [&](const std::vector<double>& v) {
    const std::vector<double> xe = integrate_endpoint(g, x0, v, 1.0, steps, cfg);
    std::vector<double> e(d);
    for (int i = 0; i < d; ++i) e[i] = xe[i] - x1[i];
    return e;
  };
  auto norm_inf = [](const std::vector<double>& e) {
    double m = 0.0;
    for (double x : e) m = std::max(m, std::abs(x));
    return m;
  };

  // Euclidean chord start, shrunk until the trial path stays in the chart.
  std::vector<double> v(d);
  for (int i = 0; i < d; ++i) v[i] = x1[i] - x0[i];
  std::vector<double> err;
  bool started = false;
  for (int attempt = 0; attempt < 40 && !started; ++attempt) {
    try {
      err = endpoint_error(v);
      started = true;
    } catch (const StepOverflow&) {
      for (double& vi : v) vi *= 0.5;
    }
  }
  if (!started)
    throw NoConvergence("geodesic_shoot_bvp: no admissible starting velocity");

  const double jac_h = 1e-5;
  for (int iter = 0; iter < 100; ++iter) {
    if (norm_inf(err) <= 1e-6) {
      return ShootingResult{metric_speed(g, x0, v), v};
    }
    RealMatrix jac(d, d);
    for (int j = 0; j < d; ++j) {
      std::vector<double> vp = v, vm = v;
      vp[j] += jac_h;
      vm[j] -= jac_h;
      const std::vector<double> ep = endpoint_error(vp);
      const std::vector<double> em = endpoint_error(vm);
      for (int i = 0; i < d; ++i) jac(i, j) = (ep[i] - em[i]) / (2.0 * jac_h);
    }
    RealMatrix rhs(d, 1);
    for (int i = 0; i < d; ++i) rhs(i, 0) = err[i];
    const RealMatrix delta = linear_solve(jac, rhs);

    // Damp by halving until the endpoint error decreases.
    double step = 1.0;
    bool improved = false;
    const double base = norm_inf(err);
    while (step > 1.0 / 1024.0) {
      std::vector<double> vtry = v;
      for (int i = 0; i < d; ++i) vtry[i] -= step * delta(i, 0);
      try {
        std::vector<double> etry = endpoint_error(vtry);
        if (norm_inf(etry) < base) {
          v = vtry;
          err = std::move(etry);
          improved = true;
          break;
        }
      } catch (const StepOverflow&) {
        // shorten the step until the trial path stays in the chart
      }
      step *= 0.5;
    }
    if (!improved) break;
  }
  if (norm_inf(err) <= 1e-6) return ShootingResult{metric_speed(g, x0, v), v};
  throw NoConvergence("geodesic_shoot_bvp: Newton iteration did not converge");
}

CurvatureReport curvature(const MetricField& g, const std::vector<double>& x,
                          const FDConfig& cfg) {
  cfg.validate();
  const int d = g.dim;
  const Tensor3 gamma = christoffel(g, x, cfg);

  // d Gamma / d x_i by central difference over whole tensors.
  std::vector<Tensor3> dgamma;
  dgamma.reserve(d);
  for (int i = 0; i < d; ++i) {
    std::vector<Tensor3> samples;
    std::vector<double> xp = x;
    double h = cfg.step;
    for (int lvl = 0; lvl < cfg.richardson_levels; ++lvl, h *= 0.5) {
      xp[i] = x[i] + h;
      Tensor3 gp = christoffel(g, xp, cfg);
      xp[i] = x[i] - h;
      const Tensor3 gm = christoffel(g, xp, cfg);
      xp[i] = x[i];
      for (size_t k = 0; k < gp.a.size(); ++k) gp.a[k] = (gp.a[k] - gm.a[k]) / (2.0 * h);
      samples.push_back(std::move(gp));
    }
    for (int k = 1; k < cfg.richardson_levels; ++k) {
      const double p = std::pow(4.0, k);
      for (int j = 0; j + k < cfg.richardson_levels; ++j)
        for (size_t q = 0; q < samples[j].a.size(); ++q)
          samples[j].a[q] = (p * samples[j + 1].a[q] - samples[j].a[q]) / (p - 1.0);
    }
    dgamma.push_back(std::move(samples[0]));
  }

  CurvatureReport rep{Tensor3(d), Tensor4(d), RealMatrix(d, d)};
  for (int k = 0; k < d; ++k)
    for (int l = 0; l < d; ++l)
      for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
          double r = dgamma[i].at(k, j, l) - dgamma[j].at(k, i, l);
          for (int m = 0; m < d; ++m)
            r += gamma.at(k, i, m) * gamma.at(m, j, l) -
                 gamma.at(k, j, m) * gamma.at(m, i, l);
          rep.riemann.at(k, l, i, j) = r;
        }
  rep.christoffel = gamma;

  for (int l = 0; l < d; ++l)
    for (int j = 0; j < d; ++j) {
      double s = 0.0;
      for (int k = 0; k < d; ++k) s += rep.riemann.at(k, l, k, j);
      rep.ricci(l, j) = s;
    }

  const RealMatrix gx = g.eval(x);
  const RealMatrix ginv = inverse(gx);
  double scalar = 0.0;
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) scalar += ginv(i, j) * rep.ricci(i, j);
  rep.scalar = scalar;

  rep.einstein_constant = scalar / d;
  RealMatrix dev = symmetrize(rep.ricci) - rep.einstein_constant * gx;
  rep.einstein_residual = dev.norm_inf() / gx.norm_inf();
  return rep;
}

double laplace_beltrami(const MetricField& g, const ScalarField& f,
                        const std::vector<double>& x, const FDConfig& cfg) {
  cfg.validate();
  const int d = g.dim;
  auto flux = [&](const std::vector<double>& xp, int i) {
    const RealMatrix gx = g.eval(xp);
    const RealMatrix ginv = inverse(gx);
    const double sq = std::sqrt(spd_determinant(gx));
    double s = 0.0;
    for (int j = 0; j < d; ++j) s += ginv(i, j) * fd_partial(f, xp, j, cfg);
    return sq * s;
  };
  // Outer derivative takes a coarser step: flux is itself an FD quantity.
  const FDConfig outer{std::max(cfg.step, 1e-3), cfg.richardson_levels};
  double div = 0.0;
  for (int i = 0; i < d; ++i) {
    const ScalarField fi = [&](const std::vector<double>& xp) { return flux(xp, i); };
    div += fd_partial(fi, x, i, outer);
  }
  return div / std::sqrt(spd_determinant(g.eval(x)));
}

KahlerResiduals kahler_check(const MetricField& g, const std::vector<double>& x,
                             const FDConfig& cfg) {
  const int d = g.dim;
  if (g.complex_pairs.empty() || 2 * static_cast<int>(g.complex_pairs.size()) != d)
    throw InvariantViolation("kahler_check: chart has no declared complex pairing");

  // J in the coordinate basis.
  RealMatrix jmat(d, d);
  for (const auto& [re, im] : g.complex_pairs) {
    jmat(im, re) = 1.0;   // J e_re = e_im
    jmat(re, im) = -1.0;  // J e_im = -e_re
  }

  const RealMatrix gx = g.eval(x);
  const RealMatrix compat = jmat.transpose() * gx * jmat - gx;
  KahlerResiduals out;
  out.compatibility = compat.norm_inf();

  // omega(u, v) = g(Ju, v) as a matrix field; closedness by FD.
  const auto omega_at = [&](const std::vector<double>& xp) {
    return jmat.transpose() * g.eval(xp);
  };
  std::vector<RealMatrix> domega;
  domega.reserve(d);
  const FDConfig c2 = cfg;
  for (int i = 0; i < d; ++i) {
    std::vector<RealMatrix> samples;
    std::vector<double> xp = x;
    double h = c2.step;
    for (int lvl = 0; lvl < c2.richardson_levels; ++lvl, h *= 0.5) {
      xp[i] = x[i] + h;
      RealMatrix wp = omega_at(xp);
      xp[i] = x[i] - h;
      const RealMatrix wm = omega_at(xp);
      xp[i] = x[i];
      wp -= wm;
      wp *= 1.0 / (2.0 * h);
      samples.push_back(std::move(wp));
    }
    domega.push_back(richardson_matrices(std::move(samples)));
  }

  double dmax = 0.0;
  for (int i = 0; i < d; ++i)
    for (int j = i + 1; j < d; ++j)
      for (int k = j + 1; k < d; ++k) {
        const double comp =
            domega[i](j, k) - domega[j](i, k) + domega[k](i, j);
        dmax = std::max(dmax, std::abs(comp));
      }
  out.d_omega = dmax;
  return out;
}

}  // namespace sjlab
