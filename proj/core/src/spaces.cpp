#include "sjlab/spaces.hpp"

namespace sjlab {

MetricField siegel_metric_field(int n, const SiegelMetricParams& par) {
  par.validate();
  MetricField f;
  f.dim = siegel_chart_dim(n);
  f.g = [n, par](const std::vector<double>& c) {
    return metric_tensor_siegel(siegel_from_chart(n, c), par);
  };
  f.admissible = [n](const std::vector<double>& c) { return siegel_chart_admissible(n, c); };
  const int half = n * (n + 1) / 2;
  for (int k = 0; k < half; ++k) f.complex_pairs.emplace_back(k, half + k);
  return f;
}

MetricField jacobi_metric_field(int n, int m, const JacobiMetricParams& par) {
  par.validate();
  MetricField f;
  f.dim = jacobi_chart_dim(n, m);
  f.g = [n, m, par](const std::vector<double>& c) {
    return metric_tensor_jacobi(jacobi_from_chart(n, m, c), par);
  };
  f.admissible = [n, m](const std::vector<double>& c) {
    return jacobi_chart_admissible(n, m, c);
  };
  const int half = n * (n + 1) / 2;
  for (int k = 0; k < half; ++k) f.complex_pairs.emplace_back(k, half + k);
  for (int k = 0; k < m * n; ++k)
    f.complex_pairs.emplace_back(n * (n + 1) + k, n * (n + 1) + m * n + k);
  return f;
}

MetricField euclidean_metric_field(int dim) {
  MetricField f;
  f.dim = dim;
  f.g = [dim](const std::vector<double>&) { return RealMatrix::identity(dim); };
  if (dim % 2 == 0)
    for (int k = 0; k < dim / 2; ++k) f.complex_pairs.emplace_back(2 * k, 2 * k + 1);
  return f;
}

}  // namespace sjlab
