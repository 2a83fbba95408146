#pragma once

#include "sjlab/jacobi.hpp"
#include "sjlab/riemann.hpp"
#include "sjlab/siegel.hpp"

namespace sjlab {

/// Chart metric field of ds^2_{n;A} with the standard complex pairing
/// (x_ij, y_ij) and the Y > 0 cone guard.
MetricField siegel_metric_field(int n, const SiegelMetricParams& par);

/// Chart metric field of the invariant Siegel-Jacobi metric.
MetricField jacobi_metric_field(int n, int m, const JacobiMetricParams& par);

/// Flat R^d (test fixture).
MetricField euclidean_metric_field(int dim);

}  // namespace sjlab
