#include "sjlab/fd.hpp"

#include <array>
#include <cmath>

namespace sjlab {

namespace {

// Richardson table over step halving; column 0 holds D(h/2^j), each further
// column cancels one h^2 term.
double richardson(const std::vector<double>& d0) {
  std::vector<double> t = d0;
  const int levels = static_cast<int>(t.size());
  for (int k = 1; k < levels; ++k) {
    const double p = std::pow(4.0, k);
    for (int j = 0; j + k < levels; ++j) t[j] = (p * t[j + 1] - t[j]) / (p - 1.0);
  }
  return t[0];
}

}  // namespace

double fd_partial(const ScalarField& f, const std::vector<double>& x, int i,
                  const FDConfig& cfg) {
  cfg.validate();
  std::vector<double> d(cfg.richardson_levels);
  std::vector<double> xp = x;
  double h = cfg.step;
  for (int lvl = 0; lvl < cfg.richardson_levels; ++lvl, h *= 0.5) {
    xp[i] = x[i] + h;
    const double fp = f(xp);
    xp[i] = x[i] - h;
    const double fm = f(xp);
    xp[i] = x[i];
    d[lvl] = (fp - fm) / (2.0 * h);
  }
  return richardson(d);
}

double fd_second_partial(const ScalarField& f, const std::vector<double>& x, int i, int j,
                         const FDConfig& cfg) {
  cfg.validate();
  std::vector<double> d(cfg.richardson_levels);
  std::vector<double> xp = x;
  double h = cfg.step;
  if (i == j) {
    const double f0 = f(x);
    for (int lvl = 0; lvl < cfg.richardson_levels; ++lvl, h *= 0.5) {
      xp[i] = x[i] + h;
      const double fp = f(xp);
      xp[i] = x[i] - h;
      const double fm = f(xp);
      xp[i] = x[i];
      d[lvl] = (fp - 2.0 * f0 + fm) / (h * h);
    }
  } else {
    for (int lvl = 0; lvl < cfg.richardson_levels; ++lvl, h *= 0.5) {
      double s = 0.0;
      for (int si : {1, -1})
        for (int sj : {1, -1}) {
          xp[i] = x[i] + si * h;
          xp[j] = x[j] + sj * h;
          s += si * sj * f(xp);
        }
      xp[i] = x[i];
      xp[j] = x[j];
      d[lvl] = s / (4.0 * h * h);
    }
  }
  return richardson(d);
}

RealMatrix fd_hessian(const ScalarField& f, const std::vector<double>& x,
                      const FDConfig& cfg) {
  const int d = static_cast<int>(x.size());
  RealMatrix h(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = i; j < d; ++j) h(i, j) = h(j, i) = fd_second_partial(f, x, i, j, cfg);
  return h;
}

std::vector<double> fd_gradient(const ScalarField& f, const std::vector<double>& x,
                                const FDConfig& cfg) {
  std::vector<double> g(x.size());
  for (size_t i = 0; i < x.size(); ++i) g[i] = fd_partial(f, x, static_cast<int>(i), cfg);
  return g;
}

}  // namespace sjlab
