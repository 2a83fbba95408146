#pragma once

#include <functional>
#include <vector>

#include "sjlab/errors.hpp"
#include "sjlab/matrix.hpp"

namespace sjlab {

/// Finite-difference settings shared by every numerical-derivative routine.
struct FDConfig {
  double step = 1e-4;
  int richardson_levels = 2;

  void validate() const {
    if (!(step > 0.0)) throw InvariantViolation("FDConfig.step must be > 0");
    if (richardson_levels < 1 || richardson_levels > 4)
      throw InvariantViolation("FDConfig.richardson_levels must be in [1,4]");
  }
};

using ScalarField = std::function<double(const std::vector<double>&)>;

/// Central-difference partial derivative with Richardson extrapolation,
/// error O(h^{2L}) for smooth fields.
double fd_partial(const ScalarField& f, const std::vector<double>& x, int i,
                  const FDConfig& cfg = {});

/// Second mixed partial d^2 f / dx_i dx_j, central stencils plus Richardson.
double fd_second_partial(const ScalarField& f, const std::vector<double>& x, int i, int j,
                         const FDConfig& cfg = {});

/// Full symmetric Hessian of f at x.
RealMatrix fd_hessian(const ScalarField& f, const std::vector<double>& x,
                      const FDConfig& cfg = {});

/// Gradient of f at x.
std::vector<double> fd_gradient(const ScalarField& f, const std::vector<double>& x,
                                const FDConfig& cfg = {});

}  // namespace sjlab
