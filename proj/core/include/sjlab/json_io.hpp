#pragma once

#include <nlohmann/json.hpp>

#include "sjlab/jacobi.hpp"
#include "sjlab/riemann.hpp"
#include "sjlab/siegel.hpp"

namespace sjlab {

using json = nlohmann::json;

// Matrix encoding used repo-wide:
// {"rows": r, "cols": c, "re": [row-major], "im": [row-major, omitted if real]}.
json matrix_to_json(const RealMatrix& m);
json matrix_to_json(const ComplexMatrix& m);
RealMatrix real_matrix_from_json(const json& j);
ComplexMatrix complex_matrix_from_json(const json& j);

json siegel_point_to_json(const SiegelPoint& p);
SiegelPoint siegel_point_from_json(const json& j);

json symplectic_to_json(const SymplecticElement& m);
SymplecticElement symplectic_from_json(const json& j);

json jacobi_point_to_json(const SiegelJacobiPoint& p);
SiegelJacobiPoint jacobi_point_from_json(const json& j);

json heisenberg_to_json(const HeisenbergElement& h);
HeisenbergElement heisenberg_from_json(const json& j);

json jacobi_element_to_json(const JacobiElement& g);
JacobiElement jacobi_element_from_json(const json& j);

json curvature_report_to_json(const CurvatureReport& rep);

/// Rounds every number in the document to 12 significant digits, in place.
/// Applied to all CLI output so runs are byte-identical.
void round_significant(json& j, int digits = 12);

}  // namespace sjlab
