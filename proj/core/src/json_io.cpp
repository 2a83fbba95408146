#include "sjlab/json_io.hpp"

#include <cstdio>
#include <cstdlib>

namespace sjlab {

json matrix_to_json(const RealMatrix& m) {
  json j;
  j["rows"] = m.rows();
  j["cols"] = m.cols();
  j["re"] = m.data();
  return j;
}

json matrix_to_json(const ComplexMatrix& m) {
  json j;
  j["rows"] = m.rows();
  j["cols"] = m.cols();
  std::vector<double> re, im;
  re.reserve(m.data().size());
  im.reserve(m.data().size());
  bool any_im = false;
  for (const complex& v : m.data()) {
    re.push_back(v.real());
    im.push_back(v.imag());
    any_im = any_im || v.imag() != 0.0;
  }
  j["re"] = re;
  if (any_im) j["im"] = im;
  return j;
}

RealMatrix real_matrix_from_json(const json& j) {
  const int rows = j.at("rows").get<int>();
  const int cols = j.at("cols").get<int>();
  const auto re = j.at("re").get<std::vector<double>>();
  if (static_cast<int>(re.size()) != rows * cols)
    throw InvariantViolation("matrix JSON: entry count != rows*cols");
  RealMatrix m(rows, cols);
  m.data() = re;
  return m;
}

ComplexMatrix complex_matrix_from_json(const json& j) {
  const RealMatrix re = real_matrix_from_json(j);
  RealMatrix im(re.rows(), re.cols());
  if (j.contains("im")) {
    const auto iv = j.at("im").get<std::vector<double>>();
    if (iv.size() != re.data().size())
      throw InvariantViolation("matrix JSON: im length != re length");
    im.data() = iv;
  }
  return ComplexMatrix(re, im);
}

json siegel_point_to_json(const SiegelPoint& p) {
  return json{{"n", p.degree()}, {"X", matrix_to_json(p.x())}, {"Y", matrix_to_json(p.y())}};
}

SiegelPoint siegel_point_from_json(const json& j) {
  SiegelPoint p(real_matrix_from_json(j.at("X")), real_matrix_from_json(j.at("Y")));
  if (j.contains("n") && j.at("n").get<int>() != p.degree())
    throw InvariantViolation("SiegelPoint JSON: n disagrees with matrix shape");
  return p;
}

json symplectic_to_json(const SymplecticElement& m) {
  return json{{"n", m.degree()}, {"M", matrix_to_json(m.m())}};
}

SymplecticElement symplectic_from_json(const json& j) {
  SymplecticElement m(real_matrix_from_json(j.at("M")));
  if (j.contains("n") && j.at("n").get<int>() != m.degree())
    throw InvariantViolation("SymplecticElement JSON: n disagrees with matrix shape");
  return m;
}

json jacobi_point_to_json(const SiegelJacobiPoint& p) {
  return json{{"omega", siegel_point_to_json(p.omega())}, {"Z", matrix_to_json(p.z())}};
}

SiegelJacobiPoint jacobi_point_from_json(const json& j) {
  return SiegelJacobiPoint(siegel_point_from_json(j.at("omega")),
                           complex_matrix_from_json(j.at("Z")));
}

json heisenberg_to_json(const HeisenbergElement& h) {
  return json{{"lambda", matrix_to_json(h.lambda())},
              {"mu", matrix_to_json(h.mu())},
              {"kappa", matrix_to_json(h.kappa())}};
}

HeisenbergElement heisenberg_from_json(const json& j) {
  return HeisenbergElement(real_matrix_from_json(j.at("lambda")),
                           real_matrix_from_json(j.at("mu")),
                           real_matrix_from_json(j.at("kappa")));
}

json jacobi_element_to_json(const JacobiElement& g) {
  json j = heisenberg_to_json(g.h);
  j["M"] = matrix_to_json(g.m.m());
  return j;
}

JacobiElement jacobi_element_from_json(const json& j) {
  return JacobiElement(SymplecticElement(real_matrix_from_json(j.at("M"))),
                       heisenberg_from_json(j));
}

json curvature_report_to_json(const CurvatureReport& rep) {
  return json{{"scalar", rep.scalar},
              {"convention", rep.convention},
              {"ricci", matrix_to_json(rep.ricci)},
              {"einstein_constant", rep.einstein_constant},
              {"einstein_residual", rep.einstein_residual}};
}

void round_significant(json& j, int digits) {
  if (j.is_number_float()) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.*g", digits, j.get<double>());
    j = std::strtod(buf, nullptr);
  } else if (j.is_array() || j.is_object()) {
    for (auto& el : j) round_significant(el, digits);
  }
}

}  // namespace sjlab
