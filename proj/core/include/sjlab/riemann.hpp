#pragma once

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "sjlab/fd.hpp"
#include "sjlab/matrix.hpp"

namespace sjlab {

/// A chart-level metric-tensor field on R^d. `admissible` bounds the chart
/// domain (geodesics must not leave it); `complex_pairs` lists the
/// (real, imaginary) coordinate index pairs of the standard complex
/// structure when the chart carries one.
struct MetricField {
  int dim = 0;
  std::function<RealMatrix(const std::vector<double>&)> g;
  std::function<bool(const std::vector<double>&)> admissible;
  std::vector<std::pair<int, int>> complex_pairs;

  RealMatrix eval(const std::vector<double>& x) const;
};

/// Rank-3 chart tensor, e.g. Christoffel symbols Gamma^k_{ij} at a point.
struct Tensor3 {
  int dim = 0;
  std::vector<double> a;

  explicit Tensor3(int d) : dim(d), a(static_cast<size_t>(d) * d * d, 0.0) {}
  double& at(int k, int i, int j) { return a[(static_cast<size_t>(k) * dim + i) * dim + j]; }
  double at(int k, int i, int j) const {
    return a[(static_cast<size_t>(k) * dim + i) * dim + j];
  }
};

/// Rank-4 tensor R^k_{l i j}.
struct Tensor4 {
  int dim = 0;
  std::vector<double> a;

  explicit Tensor4(int d) : dim(d), a(static_cast<size_t>(d) * d * d * d, 0.0) {}
  double& at(int k, int l, int i, int j) {
    return a[((static_cast<size_t>(k) * dim + l) * dim + i) * dim + j];
  }
  double at(int k, int l, int i, int j) const {
    return a[((static_cast<size_t>(k) * dim + l) * dim + i) * dim + j];
  }
};

struct CurvatureReport {
  Tensor3 christoffel;
  Tensor4 riemann;
  RealMatrix ricci;
  double scalar = 0.0;
  // scalar = g^{ij} R_ij with R_ij = R^k_{ikj}.
  std::string convention = "trace-ricci";
  double einstein_constant = 0.0;  // fitted c in Ric ~ c g
  double einstein_residual = 0.0;  // |Ric - c g|_inf / |g|_inf
};

struct GeodesicPath {
  std::vector<double> times;
  std::vector<std::vector<double>> points;
  std::vector<std::vector<double>> velocities;
};

struct ShootingResult {
  double distance = 0.0;
  std::vector<double> initial_velocity;
};

/// FD settings tuned for second-difference work.
inline FDConfig curvature_fd_config() { return FDConfig{1e-3, 2}; }

Tensor3 christoffel(const MetricField& g, const std::vector<double>& x,
                    const FDConfig& cfg = {});

GeodesicPath geodesic_integrate(const MetricField& g, const std::vector<double>& x0,
                                const std::vector<double>& v0, double t_final, int steps,
                                const FDConfig& cfg = {});

/// Damped-Newton shooting for the two-point boundary value problem.
ShootingResult geodesic_shoot_bvp(const MetricField& g, const std::vector<double>& x0,
                                  const std::vector<double>& x1, int steps = 96,
                                  const FDConfig& cfg = {});

CurvatureReport curvature(const MetricField& g, const std::vector<double>& x,
                          const FDConfig& cfg = curvature_fd_config());

double laplace_beltrami(const MetricField& g, const ScalarField& f,
                        const std::vector<double>& x, const FDConfig& cfg = {});

struct KahlerResiduals {
  double compatibility = 0.0;  // max |g(Ju, Jv) - g(u, v)|
  double d_omega = 0.0;        // max FD exterior-derivative component of the 2-form
};

KahlerResiduals kahler_check(const MetricField& g, const std::vector<double>& x,
                             const FDConfig& cfg = {});

/// Metric speed sqrt(q(x, v)).
double metric_speed(const MetricField& g, const std::vector<double>& x,
                    const std::vector<double>& v);

}  // namespace sjlab
