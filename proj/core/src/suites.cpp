#include "sjlab/suites.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <mutex>
#include <numeric>
#include <thread>

#include "sjlab/linalg.hpp"
#include "sjlab/riemann.hpp"
#include "sjlab/rng.hpp"
#include "sjlab/spaces.hpp"

namespace sjlab {

namespace {

double tol_for(const SuiteConfig& cfg, const std::string& name, double fallback) {
  const auto it = cfg.tolerances.find(name);
  return it == cfg.tolerances.end() ? fallback : it->second;
}

int count_for(const SuiteConfig& cfg, int fallback) {
  return cfg.samples > 0 ? cfg.samples : fallback;
}

CheckResult make_check(std::string name, int samples, double residual, double tolerance,
                       std::string note = {}) {
  CheckResult c;
  c.name = std::move(name);
  c.samples = samples;
  c.max_residual = residual;
  c.tolerance = tolerance;
  c.pass = residual <= tolerance;
  c.note = std::move(note);
  return c;
}

/// Max of per-sample residuals, evaluated in parallel.
double max_over_samples(int samples, const std::function<double(int)>& residual) {
  std::vector<double> r(samples, 0.0);
  parallel_for(samples, [&](int i) { r[i] = residual(i); });
  return *std::max_element(r.begin(), r.end());
}

double norm_inf(const std::vector<double>& v) {
  double m = 0.0;
  for (double x : v) m = std::max(m, std::abs(x));
  return m;
}

/// A second point at moderate geodesic separation from p (keeps the
/// distance-series proxy well inside the unit disc).
SiegelPoint nearby_point(const SiegelPoint& p, uint64_t seed, double scale) {
  Rng rng(seed);
  const int n = p.degree();
  const RealMatrix dx = rng.symmetric(n, -scale, scale);
  const RealMatrix q = rng.matrix(n, n, -scale, scale);
  return SiegelPoint(symmetrize(p.x() + dx), symmetrize(p.y() + q * q.transpose()));
}

std::vector<double> unit_log_vector(uint64_t seed, int n) {
  Rng rng(seed);
  std::vector<double> g(n);
  double nrm = 0.0;
  do {
    nrm = 0.0;
    for (int k = 0; k < n; ++k) {
      g[k] = rng.uniform(-1.0, 1.0);
      nrm += g[k] * g[k];
    }
  } while (nrm < 1e-4);
  nrm = std::sqrt(nrm);
  std::vector<double> a(n);
  for (int k = 0; k < n; ++k) a[k] = std::exp(g[k] / nrm);
  return a;
}

using VectorMap = std::function<std::vector<double>(const std::vector<double>&)>;

RealMatrix fd_jacobian(const VectorMap& f, const std::vector<double>& x, double h) {
  const int dout = static_cast<int>(f(x).size());
  const int din = static_cast<int>(x.size());
  RealMatrix j(dout, din);
  std::vector<double> xp = x;
  for (int c = 0; c < din; ++c) {
    xp[c] = x[c] + h;
    const std::vector<double> fp = f(xp);
    xp[c] = x[c] - h;
    const std::vector<double> fm = f(xp);
    xp[c] = x[c];
    for (int r = 0; r < dout; ++r) j(r, c) = (fp[r] - fm[r]) / (2.0 * h);
  }
  return j;
}

// ---- individual suites ---------------------------------------------------

SuiteResult suite_distance_oracle(const SuiteConfig& cfg) {
  SuiteResult res{"distance-oracle", {}, true};
  const SiegelPoint pi(RealMatrix(1, 1), RealMatrix::identity(1));
  RealMatrix y2(1, 1);
  y2(0, 0) = 2.0;
  const SiegelPoint p2i(RealMatrix(1, 1), y2);
  res.checks.push_back(make_check("rho-i-2i", 1,
                                  std::abs(siegel_distance(pi, p2i) - std::log(2.0)),
                                  tol_for(cfg, "rho-i-2i", 1e-9)));

  const int samples = count_for(cfg, 100);
  const double r = max_over_samples(samples, [&](int i) {
    const SiegelPoint a = random_siegel_point(subseed(cfg.seed, 2 * i), 1);
    const SiegelPoint b = random_siegel_point(subseed(cfg.seed, 2 * i + 1), 1);
    return std::abs(siegel_distance(a, b) - poincare_distance(a, b));
  });
  res.checks.push_back(
      make_check("closed-form-agreement", samples, r, tol_for(cfg, "closed-form-agreement", 1e-9)));
  return res;
}

SuiteResult suite_distance_invariance(const SuiteConfig& cfg) {
  SuiteResult res{"distance-invariance", {}, true};
  const int samples = count_for(cfg, 100);
  for (int n = 1; n <= 3; ++n) {
    const double r = max_over_samples(samples, [&](int i) {
      const uint64_t s = subseed(cfg.seed, n * 100000 + i);
      const SiegelPoint p0 = random_siegel_point(subseed(s, 1), n);
      const SiegelPoint p1 = nearby_point(p0, subseed(s, 2), 0.3);
      const SymplecticElement m = random_symplectic(subseed(s, 3), n);
      return std::abs(siegel_distance(sp_act(m, p0), sp_act(m, p1)) -
                      siegel_distance(p0, p1));
    });
    res.checks.push_back(make_check("invariance-n" + std::to_string(n), samples, r,
                                    tol_for(cfg, "distance-invariance", 1e-8)));
  }
  return res;
}

SuiteResult suite_cross_ratio_spectrum(const SuiteConfig& cfg) {
  SuiteResult res{"cross-ratio-spectrum", {}, true};
  const int samples = count_for(cfg, 100);
  for (int n = 1; n <= 3; ++n) {
    const double r = max_over_samples(samples, [&](int i) {
      const uint64_t s = subseed(cfg.seed, n * 200000 + i);
      const SiegelPoint p0 = random_siegel_point(subseed(s, 1), n);
      const SiegelPoint p1 = nearby_point(p0, subseed(s, 2), 0.4);
      const SymplecticElement m = random_symplectic(subseed(s, 3), n);
      const auto ev0 = small_complex_eigenvalues(cross_ratio(p1, p0));
      const auto ev1 = small_complex_eigenvalues(cross_ratio(sp_act(m, p1), sp_act(m, p0)));
      double d = 0.0;
      for (int k = 0; k < n; ++k) d = std::max(d, std::abs(ev0[k] - ev1[k]));
      return d;
    });
    res.checks.push_back(make_check("spectrum-n" + std::to_string(n), samples, r,
                                    tol_for(cfg, "cross-ratio-spectrum", 1e-8)));
  }
  return res;
}

SuiteResult suite_special_geodesics(const SuiteConfig& cfg) {
  SuiteResult res{"special-geodesics", {}, true};
  const int samples = count_for(cfg, 20);
  const SiegelMetricParams par{1.0};
  for (int n = 1; n <= 3; ++n) {
    double r_speed = 0.0, r_dist = 0.0, r_rk = 0.0;
    std::vector<double> sp(samples), di(samples), rk(samples);
    parallel_for(samples, [&](int i) {
      const std::vector<double> a = unit_log_vector(subseed(cfg.seed, n * 300000 + i), n);
      // unit speed at t in {-1, 0, 2}, velocity by FD
      double worst = 0.0;
      for (double t : {-1.0, 0.0, 2.0}) {
        const double h = 1e-5;
        const std::vector<double> cp = siegel_to_chart(special_geodesic(a, t + h));
        const std::vector<double> cm = siegel_to_chart(special_geodesic(a, t - h));
        std::vector<double> vel(cp.size());
        for (size_t k = 0; k < cp.size(); ++k) vel[k] = (cp[k] - cm[k]) / (2.0 * h);
        const double q = siegel_metric_quadratic(
            special_geodesic(a, t), siegel_tangent_from_chart(n, vel), par);
        worst = std::max(worst, std::abs(q - 1.0));
      }
      sp[i] = worst;
      di[i] = std::abs(siegel_distance(special_geodesic(a, 0.0), special_geodesic(a, 1.0)) - 1.0);

      // RK geodesic from iI_n with velocity dY = diag(log a_k)
      const MetricField field = siegel_metric_field(n, par);
      RealMatrix dy(n, n);
      for (int k = 0; k < n; ++k) dy(k, k) = std::log(a[k]);
      const std::vector<double> v0 =
          siegel_tangent_to_chart(SiegelTangent(RealMatrix(n, n), dy));
      const GeodesicPath path = geodesic_integrate(
          field, siegel_to_chart(SiegelPoint::i_identity(n)), v0, 1.0, 96);
      const std::vector<double> target = siegel_to_chart(special_geodesic(a, 1.0));
      double err = 0.0;
      for (size_t k = 0; k < target.size(); ++k)
        err = std::max(err, std::abs(path.points.back()[k] - target[k]));
      rk[i] = err;
    });
    r_speed = *std::max_element(sp.begin(), sp.end());
    r_dist = *std::max_element(di.begin(), di.end());
    r_rk = *std::max_element(rk.begin(), rk.end());
    const std::string sfx = "-n" + std::to_string(n);
    res.checks.push_back(
        make_check("unit-speed" + sfx, samples, r_speed, tol_for(cfg, "unit-speed", 1e-6)));
    res.checks.push_back(
        make_check("unit-length" + sfx, samples, r_dist, tol_for(cfg, "unit-length", 1e-6)));
    res.checks.push_back(
        make_check("rk-reproduction" + sfx, samples, r_rk, tol_for(cfg, "rk-reproduction", 1e-5)));
  }
  return res;
}

SuiteResult suite_laplacian_consistency(const SuiteConfig& cfg) {
  SuiteResult res{"laplacian-consistency", {}, true};
  const int points = count_for(cfg, 3);
  for (int n = 1; n <= 2; ++n) {
    const SiegelMetricParams par{cfg.param_a};
    const MetricField field = siegel_metric_field(n, par);
    const auto fields = siegel_test_fields(n);
    double worst = 0.0;
    for (int i = 0; i < points; ++i) {
      const SiegelPoint p = random_siegel_point(subseed(cfg.seed, n * 400000 + i), n);
      for (const auto& [fname, f] : fields) {
        const double lhs = siegel_laplacian_apply(f, p, par, cfg.fd);
        const ScalarField cf = [n, &f](const std::vector<double>& c) {
          return f(siegel_from_chart(n, c));
        };
        const double rhs = laplace_beltrami(field, cf, siegel_to_chart(p), cfg.fd);
        worst = std::max(worst, std::abs(lhs - rhs));
      }
    }
    res.checks.push_back(make_check("siegel-n" + std::to_string(n), points, worst,
                                    tol_for(cfg, "laplacian-siegel", 1e-4)));
  }
  {
    const JacobiMetricParams par{cfg.param_a, cfg.param_b};
    const MetricField field = jacobi_metric_field(1, 1, par);
    const auto fields = jacobi_test_fields(1, 1);
    double worst = 0.0;
    for (int i = 0; i < points; ++i) {
      const SiegelJacobiPoint p = random_jacobi_point(subseed(cfg.seed, 450000 + i), 1, 1);
      for (const auto& [fname, f] : fields) {
        const double lhs = jacobi_laplacian_apply(f, p, par, cfg.fd);
        const ScalarField cf = [&f](const std::vector<double>& c) {
          return f(jacobi_from_chart(1, 1, c));
        };
        const double rhs = laplace_beltrami(field, cf, jacobi_to_chart(p), cfg.fd);
        worst = std::max(worst, std::abs(lhs - rhs));
      }
    }
    res.checks.push_back(
        make_check("jacobi-n1m1", points, worst, tol_for(cfg, "laplacian-jacobi", 1e-3)));
  }
  return res;
}

SuiteResult suite_operator_invariance(const SuiteConfig& cfg) {
  SuiteResult res{"operator-invariance", {}, true};
  const int samples = count_for(cfg, 20);
  const JacobiMetricParams par{cfg.param_a, cfg.param_b};
  const auto fields = jacobi_test_fields(1, 1);

  struct Op {
    std::string name;
    std::function<double(const JacobiField&, const SiegelJacobiPoint&)> apply;
  };
  const std::vector<Op> ops = {
      {"laplacian",
       [&](const JacobiField& f, const SiegelJacobiPoint& p) {
         return jacobi_laplacian_apply(f, p, par, cfg.fd);
       }},
      {"m1", [&](const JacobiField& f,
                 const SiegelJacobiPoint& p) { return m1_apply(f, p, cfg.fd); }},
      {"m2", [&](const JacobiField& f,
                 const SiegelJacobiPoint& p) { return m2_apply(f, p, cfg.fd); }},
  };

  for (const Op& op : ops) {
    const double r = max_over_samples(samples, [&](int i) {
      const uint64_t s = subseed(cfg.seed, 500000 + i);
      const JacobiElement g = random_jacobi(subseed(s, 1), 1, 1);
      const SiegelJacobiPoint p = random_jacobi_point(subseed(s, 2), 1, 1);
      double worst = 0.0;
      for (const auto& [fname, f] : fields) {
        const JacobiField composed = [&](const SiegelJacobiPoint& q) {
          return f(jacobi_act(g, q));
        };
        worst = std::max(worst,
                         std::abs(op.apply(composed, p) - op.apply(f, jacobi_act(g, p))));
      }
      return worst;
    });
    res.checks.push_back(
        make_check(op.name, samples, r, tol_for(cfg, "operator-invariance", 1e-3)));
  }
  return res;
}

SuiteResult suite_volume_invariance(const SuiteConfig& cfg) {
  SuiteResult res{"volume-invariance", {}, true};
  const int samples = count_for(cfg, 50);
  for (int n = 1; n <= 2; ++n) {
    const double r = max_over_samples(samples, [&](int i) {
      const uint64_t s = subseed(cfg.seed, n * 600000 + i);
      const SiegelPoint p = random_siegel_point(subseed(s, 1), n);
      const SymplecticElement m = random_symplectic(subseed(s, 2), n);
      const VectorMap action = [&](const std::vector<double>& c) {
        return siegel_to_chart(sp_act(m, siegel_from_chart(n, c)));
      };
      const double det_j = determinant(fd_jacobian(action, siegel_to_chart(p), 1e-5));
      const double lhs = volume_density(sp_act(m, p)) * std::abs(det_j);
      return std::abs(lhs / volume_density(p) - 1.0);
    });
    res.checks.push_back(make_check("jacobian-identity-n" + std::to_string(n), samples, r,
                                    tol_for(cfg, "volume-invariance", 1e-5)));
  }
  return res;
}

SuiteResult suite_curvature_constants(const SuiteConfig& cfg) {
  SuiteResult res{"curvature-constants", {}, true};
  const int points = count_for(cfg, 10);

  {  // Poincare Gaussian curvature -1 (scalar/2 under the trace convention)
    const MetricField field = siegel_metric_field(1, SiegelMetricParams{1.0});
    double worst = 0.0;
    for (int i = 0; i < std::min(points, 5); ++i) {
      const SiegelPoint p = random_siegel_point(subseed(cfg.seed, 700000 + i), 1);
      const CurvatureReport rep = curvature(field, siegel_to_chart(p));
      worst = std::max(worst, std::abs(rep.scalar / 2.0 + 1.0));
    }
    res.checks.push_back(make_check("poincare-gaussian", std::min(points, 5), worst,
                                    tol_for(cfg, "poincare-gaussian", 1e-4)));
  }

  // Siegel-Jacobi n = m = 1 scalar curvature across parameters.
  auto mean_scalar = [&](double a, double b, double* spread) {
    const MetricField field = jacobi_metric_field(1, 1, JacobiMetricParams{a, b});
    std::vector<double> s(points);
    parallel_for(points, [&](int i) {
      const SiegelJacobiPoint p = random_jacobi_point(subseed(cfg.seed, 710000 + i), 1, 1);
      s[i] = curvature(field, jacobi_to_chart(p)).scalar;
    });
    const double mean = std::accumulate(s.begin(), s.end(), 0.0) / points;
    double sp = 0.0;
    for (double v : s) sp = std::max(sp, std::abs(v - mean));
    *spread = sp;
    return mean;
  };

  double spread11 = 0.0, spread15 = 0.0, spread21 = 0.0;
  const double s11 = mean_scalar(1.0, 1.0, &spread11);
  const double s15 = mean_scalar(1.0, 5.0, &spread15);
  const double s21 = mean_scalar(2.0, 1.0, &spread21);

  res.checks.push_back(make_check("scalar-constant-across-points", points,
                                  std::max({spread11, spread15, spread21}),
                                  tol_for(cfg, "scalar-constant", 1e-3)));
  res.checks.push_back(make_check("scalar-B-independence", points, std::abs(s11 - s15),
                                  tol_for(cfg, "scalar-B-independence", 1e-3)));
  res.checks.push_back(make_check("scalar-A-scaling", points, std::abs(2.0 * s21 - s11),
                                  tol_for(cfg, "scalar-A-scaling", 1e-3)));

  // -3/A under whichever of the two conventions reproduces it.
  const double trace_residual = std::abs(s11 + 3.0);
  const double half_trace_residual = std::abs(s11 / 2.0 + 3.0);
  const bool trace_wins = trace_residual <= half_trace_residual;
  res.checks.push_back(make_check(
      "scalar-value-minus-3-over-A", points, std::min(trace_residual, half_trace_residual),
      tol_for(cfg, "scalar-value", 1e-3),
      trace_wins ? "matches -3/A under the trace convention"
                 : "matches -3/A under the half-trace convention"));
  return res;
}

SuiteResult suite_kahler(const SuiteConfig& cfg) {
  SuiteResult res{"kahler", {}, true};
  const int points = count_for(cfg, 10);

  {  // Siegel-Jacobi metric at (A,B) = (2,5)
    const MetricField field = jacobi_metric_field(1, 1, JacobiMetricParams{2.0, 5.0});
    std::vector<double> compat(points), closed(points);
    parallel_for(points, [&](int i) {
      const SiegelJacobiPoint p = random_jacobi_point(subseed(cfg.seed, 800000 + i), 1, 1);
      const KahlerResiduals kr = kahler_check(field, jacobi_to_chart(p));
      compat[i] = kr.compatibility;
      closed[i] = kr.d_omega;
    });
    res.checks.push_back(make_check("jacobi-compatibility", points,
                                    *std::max_element(compat.begin(), compat.end()),
                                    tol_for(cfg, "kahler-compatibility", 1e-4)));
    res.checks.push_back(make_check("jacobi-d-omega", points,
                                    *std::max_element(closed.begin(), closed.end()),
                                    tol_for(cfg, "kahler-d-omega", 1e-4)));
  }

  for (int n = 1; n <= 2; ++n) {  // Einstein proportionality for the Siegel metric
    const MetricField field = siegel_metric_field(n, SiegelMetricParams{1.0});
    std::vector<double> resid(points), cval(points);
    parallel_for(points, [&](int i) {
      const SiegelPoint p = random_siegel_point(subseed(cfg.seed, n * 810000 + i), n);
      const CurvatureReport rep = curvature(field, siegel_to_chart(p));
      resid[i] = rep.einstein_residual;
      cval[i] = rep.einstein_constant;
    });
    const double cmean = std::accumulate(cval.begin(), cval.end(), 0.0) / points;
    double cspread = 0.0;
    for (double v : cval) cspread = std::max(cspread, std::abs(v - cmean));
    res.checks.push_back(make_check("einstein-residual-n" + std::to_string(n), points,
                                    *std::max_element(resid.begin(), resid.end()),
                                    tol_for(cfg, "einstein-residual", 1e-3)));
    res.checks.push_back(make_check("einstein-constant-spread-n" + std::to_string(n), points,
                                    cspread, tol_for(cfg, "einstein-constant-spread", 1e-3),
                                    "constant ~ " + std::to_string(cmean)));
  }
  return res;
}

double heisenberg_diff(const HeisenbergElement& a, const HeisenbergElement& b) {
  return std::max({max_abs_diff(a.lambda(), b.lambda()), max_abs_diff(a.mu(), b.mu()),
                   max_abs_diff(a.kappa(), b.kappa())});
}

double jacobi_diff(const JacobiElement& a, const JacobiElement& b) {
  return std::max(max_abs_diff(a.m.m(), b.m.m()), heisenberg_diff(a.h, b.h));
}

SuiteResult suite_group_axioms(const SuiteConfig& cfg) {
  SuiteResult res{"group-axioms", {}, true};
  const int samples = count_for(cfg, 100);
  const std::vector<std::pair<int, int>> sizes = {{1, 1}, {2, 1}, {1, 2}};
  for (const auto& [n, m] : sizes) {
    double r_id = 0.0, r_h_assoc = 0.0, r_closure = 0.0, r_j_assoc = 0.0, r_act = 0.0,
           r_inv = 0.0;
    for (int i = 0; i < samples; ++i) {
      const uint64_t s = subseed(cfg.seed, (n * 10 + m) * 900000 + i);
      const HeisenbergElement h1 = random_heisenberg(subseed(s, 1), n, m);
      const HeisenbergElement h2 = random_heisenberg(subseed(s, 2), n, m);
      const HeisenbergElement h3 = random_heisenberg(subseed(s, 3), n, m);
      const HeisenbergElement e = HeisenbergElement::identity(n, m);
      r_id = std::max({r_id, heisenberg_diff(heisenberg_mul(h1, e), h1),
                       heisenberg_diff(heisenberg_mul(e, h1), h1)});
      r_h_assoc = std::max(
          r_h_assoc, heisenberg_diff(heisenberg_mul(heisenberg_mul(h1, h2), h3),
                                     heisenberg_mul(h1, heisenberg_mul(h2, h3))));
      {
        const HeisenbergElement prod = heisenberg_mul(h1, h2);
        r_closure = std::max(
            r_closure, symmetry_residual(prod.kappa() + prod.mu() * prod.lambda().transpose()));
      }
      const JacobiElement g1 = random_jacobi(subseed(s, 4), n, m);
      const JacobiElement g2 = random_jacobi(subseed(s, 5), n, m);
      const JacobiElement g3 = random_jacobi(subseed(s, 6), n, m);
      r_j_assoc = std::max(r_j_assoc, jacobi_diff(jacobi_mul(jacobi_mul(g1, g2), g3),
                                                  jacobi_mul(g1, jacobi_mul(g2, g3))));
      const SiegelJacobiPoint p = random_jacobi_point(subseed(s, 7), n, m);
      {
        const std::vector<double> lhs = jacobi_to_chart(jacobi_act(jacobi_mul(g1, g2), p));
        const std::vector<double> rhs = jacobi_to_chart(jacobi_act(g1, jacobi_act(g2, p)));
        double d = 0.0;
        for (size_t k = 0; k < lhs.size(); ++k) d = std::max(d, std::abs(lhs[k] - rhs[k]));
        r_act = std::max(r_act, d);
      }
      r_inv = std::max(r_inv, jacobi_diff(jacobi_mul(g1, jacobi_inverse_numeric(g1)),
                                          JacobiElement::identity(n, m)));
    }
    const std::string sfx = "-n" + std::to_string(n) + "m" + std::to_string(m);
    res.checks.push_back(
        make_check("heisenberg-identity" + sfx, samples, r_id, tol_for(cfg, "identity", 1e-12)));
    res.checks.push_back(make_check("heisenberg-associativity" + sfx, samples, r_h_assoc,
                                    tol_for(cfg, "heisenberg-associativity", 1e-12)));
    res.checks.push_back(make_check("constraint-closure" + sfx, samples, r_closure,
                                    tol_for(cfg, "constraint-closure", 1e-12)));
    res.checks.push_back(make_check("jacobi-associativity" + sfx, samples, r_j_assoc,
                                    tol_for(cfg, "jacobi-associativity", 1e-9)));
    res.checks.push_back(make_check("action-compatibility" + sfx, samples, r_act,
                                    tol_for(cfg, "action-compatibility", 1e-9)));
    res.checks.push_back(
        make_check("inverse-closure" + sfx, samples, r_inv, tol_for(cfg, "inverse-closure", 1e-10)));
  }
  return res;
}

SuiteResult suite_shooting_consistency(const SuiteConfig& cfg) {
  SuiteResult res{"shooting-consistency", {}, true};
  const int samples = count_for(cfg, 20);
  for (int n = 1; n <= 2; ++n) {
    const MetricField field = siegel_metric_field(n, SiegelMetricParams{1.0});
    const double r = max_over_samples(samples, [&](int i) {
      const uint64_t s = subseed(cfg.seed, n * 950000 + i);
      const SiegelPoint p0 = random_siegel_point(subseed(s, 1), n);
      const SiegelPoint p1 = nearby_point(p0, subseed(s, 2), 0.25);
      const ShootingResult shot =
          geodesic_shoot_bvp(field, siegel_to_chart(p0), siegel_to_chart(p1));
      return std::abs(shot.distance - siegel_distance(p0, p1));
    });
    res.checks.push_back(make_check("series-agreement-n" + std::to_string(n), samples, r,
                                    tol_for(cfg, "shooting-series", 1e-5)));
  }
  {
    const MetricField field = jacobi_metric_field(1, 1, JacobiMetricParams{1.0, 1.0});
    const int pairs = std::min(samples, 5);
    const double r = max_over_samples(pairs, [&](int i) {
      const uint64_t s = subseed(cfg.seed, 990000 + i);
      const SiegelJacobiPoint p0 = random_jacobi_point(subseed(s, 1), 1, 1);
      const SiegelJacobiPoint p1 = SiegelJacobiPoint(
          nearby_point(p0.omega(), subseed(s, 2), 0.25),
          p0.z() + ComplexMatrix(Rng(subseed(s, 3)).matrix(1, 1, -0.3, 0.3),
                                 Rng(subseed(s, 4)).matrix(1, 1, -0.3, 0.3)));
      const double d01 =
          geodesic_shoot_bvp(field, jacobi_to_chart(p0), jacobi_to_chart(p1)).distance;
      const double d10 =
          geodesic_shoot_bvp(field, jacobi_to_chart(p1), jacobi_to_chart(p0)).distance;
      return std::abs(d01 - d10);
    });
    res.checks.push_back(
        make_check("jacobi-symmetry", pairs, r, tol_for(cfg, "shooting-symmetry", 1e-5)));
  }
  return res;
}

}  // namespace

const std::vector<std::string>& all_suite_names() {
  static const std::vector<std::string> names = {
      "distance-oracle",      "distance-invariance", "cross-ratio-spectrum",
      "special-geodesics",    "laplacian-consistency", "operator-invariance",
      "volume-invariance",    "curvature-constants", "kahler",
      "group-axioms",         "shooting-consistency"};
  return names;
}

SuiteResult run_suite(const std::string& name, const SuiteConfig& cfg) {
  cfg.validate();
  SuiteResult res;
  if (name == "distance-oracle") res = suite_distance_oracle(cfg);
  else if (name == "distance-invariance") res = suite_distance_invariance(cfg);
  else if (name == "cross-ratio-spectrum") res = suite_cross_ratio_spectrum(cfg);
  else if (name == "special-geodesics") res = suite_special_geodesics(cfg);
  else if (name == "laplacian-consistency") res = suite_laplacian_consistency(cfg);
  else if (name == "operator-invariance") res = suite_operator_invariance(cfg);
  else if (name == "volume-invariance") res = suite_volume_invariance(cfg);
  else if (name == "curvature-constants") res = suite_curvature_constants(cfg);
  else if (name == "kahler") res = suite_kahler(cfg);
  else if (name == "group-axioms") res = suite_group_axioms(cfg);
  else if (name == "shooting-consistency") res = suite_shooting_consistency(cfg);
  else throw InvariantViolation("unknown suite: " + name);

  std::sort(res.checks.begin(), res.checks.end(),
            [](const CheckResult& a, const CheckResult& b) { return a.name < b.name; });
  for (const CheckResult& c : res.checks) res.pass = res.pass && c.pass;
  return res;
}

std::vector<SuiteResult> run_suites(const std::vector<std::string>& names,
                                    const SuiteConfig& cfg) {
  std::vector<SuiteResult> out;
  out.reserve(names.size());
  for (const std::string& n : names) out.push_back(run_suite(n, cfg));
  return out;
}

std::vector<std::pair<std::string, SiegelField>> siegel_test_fields(int n) {
  std::vector<std::pair<std::string, SiegelField>> fields;
  fields.emplace_back("tr_y", [](const SiegelPoint& p) { return p.y().trace(); });
  fields.emplace_back("det_y", [](const SiegelPoint& p) { return spd_determinant(p.y()); });
  fields.emplace_back("exp_y2", [](const SiegelPoint& p) {
    double s = 0.0;
    for (double v : p.y().data()) s += v * v;
    return std::exp(-s / 10.0);
  });
  fields.emplace_back("poly_x", [](const SiegelPoint& p) {
    double s = 0.0;
    for (double v : p.x().data()) s += v + 0.5 * v * v;
    return s;
  });
  if (n == 1)
    fields.emplace_back("y_pow_1.5",
                        [](const SiegelPoint& p) { return std::pow(p.y()(0, 0), 1.5); });
  return fields;
}

std::vector<std::pair<std::string, JacobiField>> jacobi_test_fields(int n, int m) {
  std::vector<std::pair<std::string, JacobiField>> fields;
  for (auto& [name, f] : siegel_test_fields(n))
    fields.emplace_back(name, [f = std::move(f)](const SiegelJacobiPoint& p) {
      return f(p.omega());
    });
  fields.emplace_back("tr_vtv", [](const SiegelJacobiPoint& p) {
    double s = 0.0;
    for (double v : p.v().data()) s += v * v;
    return s;
  });
  fields.emplace_back("z_mix", [](const SiegelJacobiPoint& p) {
    double s = 0.0;
    for (const complex& z : p.z().data()) s += std::norm(z);
    return s / (1.0 + p.omega().y().trace());
  });
  if (n == 1 && m == 1)
    fields.emplace_back("v_pow2", [](const SiegelJacobiPoint& p) {
      const double v = p.v()(0, 0);
      return v * v;
    });
  return fields;
}

void parallel_for(int count, const std::function<void(int)>& fn) {
  int threads = static_cast<int>(std::thread::hardware_concurrency());
  if (const char* env = std::getenv("SJLAB_THREADS")) {
    const int cap = std::atoi(env);
    if (cap >= 1) threads = std::min(threads, cap);
  }
  threads = std::max(1, std::min(threads, count));
  if (threads == 1) {
    for (int i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<int> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  std::vector<std::thread> pool;
  pool.reserve(threads);
  for (int t = 0; t < threads; ++t)
    pool.emplace_back([&] {
      for (;;) {
        const int i = next.fetch_add(1);
        if (i >= count) return;
        try {
          fn(i);
        } catch (...) {
          std::lock_guard<std::mutex> lock(error_mutex);
          if (!error) error = std::current_exception();
        }
      }
    });
  for (std::thread& t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

JacobiElement jacobi_inverse_numeric(const JacobiElement& g) {
  const SymplecticElement minv(inverse(g.m.m()));
  const RealMatrix lt = g.h.lambda() * minv.block_a() + g.h.mu() * minv.block_c();
  const RealMatrix mt = g.h.lambda() * minv.block_b() + g.h.mu() * minv.block_d();
  const RealMatrix kappa =
      -1.0 * g.h.kappa() + lt * mt.transpose() - mt * lt.transpose();
  return JacobiElement(minv, HeisenbergElement(-1.0 * lt, -1.0 * mt, kappa));
}

}  // namespace sjlab
