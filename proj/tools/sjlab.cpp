// Command-line surface for the library: group actions, distances, metric
// tensors, invariant Laplacians, curvature, geodesics and the seeded
// verification suites. All structured I/O is JSON, one document per line.

#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "sjlab/json_io.hpp"
#include "sjlab/linalg.hpp"
#include "sjlab/riemann.hpp"
#include "sjlab/spaces.hpp"
#include "sjlab/suites.hpp"

namespace {

using sjlab::json;

// Tolerance knobs exposed as --tol.<name>; each maps onto the check (or
// check family) of the same name in the verification suites.
const std::vector<std::string>& tolerance_names() {
  static const std::vector<std::string> names = {
      "rho-i-2i",          "closed-form-agreement", "distance-invariance",
      "cross-ratio-spectrum", "unit-speed",         "unit-length",
      "rk-reproduction",   "laplacian-siegel",      "laplacian-jacobi",
      "operator-invariance", "volume-invariance",   "poincare-gaussian",
      "scalar-constant",   "scalar-B-independence", "scalar-A-scaling",
      "scalar-value",      "kahler-compatibility",  "kahler-d-omega",
      "einstein-residual", "einstein-constant-spread", "identity",
      "heisenberg-associativity", "constraint-closure", "jacobi-associativity",
      "action-compatibility", "inverse-closure",    "shooting-series",
      "shooting-symmetry"};
  return names;
}

struct Common {
  uint64_t seed = 42;
  int samples = 0;
  std::map<std::string, double> tol_overrides;
  double fd_step = 1e-4;
  int richardson = 2;
  int n = 1;
  int m = 1;
  double a = 1.0;
  double b = 1.0;
  std::string preset;
  std::string json_mode = "compact";
};

void add_common_flags(CLI::App* cmd, Common& c) {
  cmd->add_option("--seed", c.seed, "Seed for all pseudo-random draws");
  cmd->add_option("--samples", c.samples, "Sample count override (0 = per-check default)");
  for (const std::string& name : tolerance_names())
    cmd->add_option("--tol." + name, c.tol_overrides[name],
                    "Tolerance override for the " + name + " check(s)");
  cmd->add_option("--fd-step", c.fd_step, "Base finite-difference step");
  cmd->add_option("--richardson", c.richardson, "Richardson extrapolation levels (1-4)");
  cmd->add_option("--n", c.n, "Degree n");
  cmd->add_option("--m", c.m, "Index m");
  cmd->add_option("--A", c.a, "Metric parameter A");
  cmd->add_option("--B", c.b, "Metric parameter B");
  cmd->add_option("--preset", c.preset, "Named instance: iI, pair-i-2i, special-geodesic");
  cmd->add_option("--json", c.json_mode, "Output layout")
      ->check(CLI::IsMember({"compact", "pretty"}));
}

sjlab::FDConfig fd_config(const Common& c) {
  sjlab::FDConfig cfg{c.fd_step, c.richardson};
  cfg.validate();
  return cfg;
}

std::map<std::string, double> parse_tolerances(const CLI::App* cmd, const Common& c) {
  std::map<std::string, double> out;
  for (const std::string& name : tolerance_names())
    if (cmd->count("--tol." + name) > 0) out[name] = c.tol_overrides.at(name);
  return out;
}

/// Inline JSON (first non-space char '{' or '[') or a file path.
json load_json(const std::string& arg) {
  const size_t pos = arg.find_first_not_of(" \t");
  if (pos != std::string::npos && (arg[pos] == '{' || arg[pos] == '[')) return json::parse(arg);
  std::ifstream in(arg);
  if (!in) throw sjlab::InvariantViolation("cannot open file: " + arg);
  json j;
  in >> j;
  return j;
}

void emit(json j, const Common& c) {
  sjlab::round_significant(j);
  if (c.json_mode == "pretty")
    std::cout << j.dump(2) << "\n";
  else
    std::cout << j.dump() << "\n";
}

sjlab::SiegelPoint load_siegel_point(const std::string& arg, const Common& c) {
  if (arg.empty()) {
    if (c.preset == "iI") return sjlab::SiegelPoint::i_identity(c.n);
    throw sjlab::InvariantViolation("a point argument or --preset iI is required");
  }
  return sjlab::siegel_point_from_json(load_json(arg));
}

sjlab::SiegelJacobiPoint load_jacobi_point(const std::string& arg, const Common& c) {
  if (arg.empty()) {
    if (c.preset == "iI") return sjlab::SiegelJacobiPoint::base_point(c.n, c.m);
    throw sjlab::InvariantViolation("a point argument or --preset iI is required");
  }
  return sjlab::jacobi_point_from_json(load_json(arg));
}

/// The (i, 2i) pair on the upper half plane.
std::pair<sjlab::SiegelPoint, sjlab::SiegelPoint> preset_pair_i_2i() {
  sjlab::RealMatrix y2(1, 1);
  y2(0, 0) = 2.0;
  return {sjlab::SiegelPoint::i_identity(1),
          sjlab::SiegelPoint(sjlab::RealMatrix(1, 1), y2)};
}

sjlab::MetricField metric_field_for(const std::string& space, const Common& c) {
  if (space == "siegel") return sjlab::siegel_metric_field(c.n, {c.a});
  if (space == "jacobi") return sjlab::jacobi_metric_field(c.n, c.m, {c.a, c.b});
  if (space == "euclidean")
    return sjlab::euclidean_metric_field(sjlab::siegel_chart_dim(c.n));
  throw sjlab::InvariantViolation("unknown space: " + space);
}

std::vector<double> chart_for(const std::string& space, const std::string& arg,
                              const Common& c) {
  if (space == "jacobi") return sjlab::jacobi_to_chart(load_jacobi_point(arg, c));
  return sjlab::siegel_to_chart(load_siegel_point(arg, c));
}

json suite_result_to_json(const sjlab::SuiteResult& r) {
  json checks = json::array();
  for (const sjlab::CheckResult& c : r.checks) {
    json jc{{"name", c.name},
            {"samples", c.samples},
            {"max_residual", c.max_residual},
            {"tolerance", c.tolerance},
            {"pass", c.pass}};
    if (!c.note.empty()) jc["note"] = c.note;
    checks.push_back(jc);
  }
  return json{{"suite", r.suite}, {"pass", r.pass}, {"checks", checks}};
}

int run(int argc, char** argv) {
  CLI::App app{"Geometry of the Siegel upper half space and the Siegel-Jacobi space"};
  app.require_subcommand(1);

  // act ---------------------------------------------------------------------
  Common act_c;
  std::string act_group = "sp", act_element, act_point;
  CLI::App* act = app.add_subcommand("act", "Apply a group element to a point");
  add_common_flags(act, act_c);
  act->add_option("--group", act_group)->check(CLI::IsMember({"sp", "jacobi"}));
  act->add_option("--element", act_element, "Group element, inline JSON or file")->required();
  act->add_option("--point", act_point, "Point, inline JSON or file");
  act->callback([&] {
    if (act_group == "sp") {
      const auto m = sjlab::symplectic_from_json(load_json(act_element));
      emit(sjlab::siegel_point_to_json(sjlab::sp_act(m, load_siegel_point(act_point, act_c))),
           act_c);
    } else {
      const auto g = sjlab::jacobi_element_from_json(load_json(act_element));
      emit(sjlab::jacobi_point_to_json(sjlab::jacobi_act(g, load_jacobi_point(act_point, act_c))),
           act_c);
    }
  });

  // mul ---------------------------------------------------------------------
  Common mul_c;
  std::string mul_group = "sp", mul_lhs, mul_rhs;
  CLI::App* mul = app.add_subcommand("mul", "Multiply two group elements");
  add_common_flags(mul, mul_c);
  mul->add_option("--group", mul_group)
      ->check(CLI::IsMember({"sp", "heisenberg", "jacobi"}));
  mul->add_option("--lhs", mul_lhs)->required();
  mul->add_option("--rhs", mul_rhs)->required();
  mul->callback([&] {
    const json jl = load_json(mul_lhs), jr = load_json(mul_rhs);
    if (mul_group == "sp") {
      emit(sjlab::symplectic_to_json(sjlab::symplectic_from_json(jl) *
                                     sjlab::symplectic_from_json(jr)),
           mul_c);
    } else if (mul_group == "heisenberg") {
      emit(sjlab::heisenberg_to_json(sjlab::heisenberg_mul(
               sjlab::heisenberg_from_json(jl), sjlab::heisenberg_from_json(jr))),
           mul_c);
    } else {
      emit(sjlab::jacobi_element_to_json(sjlab::jacobi_mul(
               sjlab::jacobi_element_from_json(jl), sjlab::jacobi_element_from_json(jr))),
           mul_c);
    }
  });

  // distance ----------------------------------------------------------------
  Common dist_c;
  std::string dist_p0, dist_p1;
  CLI::App* dist = app.add_subcommand("distance", "Geodesic distance from the trace series");
  add_common_flags(dist, dist_c);
  dist->add_option("--point0", dist_p0);
  dist->add_option("--point1", dist_p1);
  dist->callback([&] {
    sjlab::SiegelPoint p0 = sjlab::SiegelPoint::i_identity(1);
    sjlab::SiegelPoint p1 = p0;
    if (dist_c.preset == "pair-i-2i") {
      std::tie(p0, p1) = preset_pair_i_2i();
    } else {
      p0 = load_siegel_point(dist_p0, dist_c);
      p1 = load_siegel_point(dist_p1, dist_c);
    }
    emit(json{{"rho", sjlab::siegel_distance(p0, p1)}}, dist_c);
  });

  // cross-ratio -------------------------------------------------------------
  Common cr_c;
  std::string cr_p0, cr_p1;
  CLI::App* cr = app.add_subcommand("cross-ratio", "Matrix cross-ratio and its spectrum");
  add_common_flags(cr, cr_c);
  cr->add_option("--point0", cr_p0);
  cr->add_option("--point1", cr_p1);
  cr->callback([&] {
    sjlab::SiegelPoint p0 = sjlab::SiegelPoint::i_identity(1);
    sjlab::SiegelPoint p1 = p0;
    if (cr_c.preset == "pair-i-2i") {
      std::tie(p0, p1) = preset_pair_i_2i();
    } else {
      p0 = load_siegel_point(cr_p0, cr_c);
      p1 = load_siegel_point(cr_p1, cr_c);
    }
    const sjlab::ComplexMatrix r = sjlab::cross_ratio(p0, p1);
    json out{{"R", sjlab::matrix_to_json(r)}};
    if (r.rows() <= 4) {
      std::vector<double> re, im;
      for (const sjlab::complex& ev : sjlab::small_complex_eigenvalues(r)) {
        re.push_back(ev.real());
        im.push_back(ev.imag());
      }
      out["eigenvalues_re"] = re;
      out["eigenvalues_im"] = im;
    }
    emit(out, cr_c);
  });

  // metric ------------------------------------------------------------------
  Common met_c;
  std::string met_space = "siegel", met_point;
  CLI::App* met = app.add_subcommand("metric", "Chart metric tensor at a point");
  add_common_flags(met, met_c);
  met->add_option("--space", met_space)->check(CLI::IsMember({"siegel", "jacobi"}));
  met->add_option("--point", met_point);
  met->callback([&] {
    sjlab::RealMatrix g =
        met_space == "siegel"
            ? sjlab::metric_tensor_siegel(load_siegel_point(met_point, met_c), {met_c.a})
            : sjlab::metric_tensor_jacobi(load_jacobi_point(met_point, met_c),
                                          {met_c.a, met_c.b});
    emit(json{{"dim", g.rows()}, {"g", sjlab::matrix_to_json(g)}}, met_c);
  });

  // laplacian ---------------------------------------------------------------
  Common lap_c;
  std::string lap_op = "full", lap_field = "tr_y", lap_point;
  CLI::App* lap = app.add_subcommand("laplacian", "Invariant Laplacian of a named test field");
  add_common_flags(lap, lap_c);
  lap->add_option("--operator", lap_op)
      ->check(CLI::IsMember({"full", "m1", "m2", "siegel"}));
  lap->add_option("--field", lap_field, "Test-field name from the built-in catalog");
  lap->add_option("--point", lap_point);
  lap->callback([&] {
    double value = 0.0;
    if (lap_op == "siegel") {
      const sjlab::SiegelPoint p = load_siegel_point(lap_point, lap_c);
      bool found = false;
      for (const auto& [name, f] : sjlab::siegel_test_fields(p.degree()))
        if (name == lap_field) {
          value = sjlab::siegel_laplacian_apply(f, p, {lap_c.a}, fd_config(lap_c));
          found = true;
        }
      if (!found) throw sjlab::InvariantViolation("unknown field: " + lap_field);
    } else {
      const sjlab::SiegelJacobiPoint p = load_jacobi_point(lap_point, lap_c);
      bool found = false;
      for (const auto& [name, f] : sjlab::jacobi_test_fields(p.degree(), p.index()))
        if (name == lap_field) {
          if (lap_op == "m1")
            value = sjlab::m1_apply(f, p, fd_config(lap_c));
          else if (lap_op == "m2")
            value = sjlab::m2_apply(f, p, fd_config(lap_c));
          else
            value = sjlab::jacobi_laplacian_apply(f, p, {lap_c.a, lap_c.b}, fd_config(lap_c));
          found = true;
        }
      if (!found) throw sjlab::InvariantViolation("unknown field: " + lap_field);
    }
    emit(json{{"operator", lap_op}, {"field", lap_field}, {"value", value}}, lap_c);
  });

  // curvature ---------------------------------------------------------------
  Common cur_c;
  std::string cur_space = "siegel", cur_point;
  CLI::App* cur = app.add_subcommand("curvature", "Finite-difference curvature report");
  add_common_flags(cur, cur_c);
  cur->add_option("--space", cur_space)
      ->check(CLI::IsMember({"siegel", "jacobi", "euclidean"}));
  cur->add_option("--point", cur_point);
  cur->callback([&] {
    const sjlab::MetricField field = metric_field_for(cur_space, cur_c);
    const sjlab::CurvatureReport rep =
        sjlab::curvature(field, chart_for(cur_space, cur_point, cur_c));
    emit(sjlab::curvature_report_to_json(rep), cur_c);
  });

  // geodesic ----------------------------------------------------------------
  Common geo_c;
  std::string geo_space = "siegel", geo_point, geo_p1, geo_velocity;
  double geo_t = 1.0;
  int geo_steps = 96;
  CLI::App* geo = app.add_subcommand("geodesic", "Geodesic integration and shooting");
  add_common_flags(geo, geo_c);
  geo->add_option("--space", geo_space)->check(CLI::IsMember({"siegel", "jacobi"}));
  geo->require_subcommand(1);

  CLI::App* geo_int = geo->add_subcommand("integrate", "Integrate the initial value problem");
  geo_int->add_option("--point", geo_point, "Start point");
  geo_int->add_option("--velocity", geo_velocity, "Chart velocity, JSON array");
  geo_int->add_option("--t", geo_t, "Final time");
  geo_int->add_option("--steps", geo_steps, "RK steps");
  geo_int->callback([&] {
    const sjlab::MetricField field = metric_field_for(geo_space, geo_c);
    std::vector<double> x0, v0;
    if (geo_c.preset == "special-geodesic") {
      // alpha(t) = i diag(a_k^t) with log a_k = 1/sqrt(n): start iI_n.
      const int n = geo_c.n;
      x0 = sjlab::siegel_to_chart(sjlab::SiegelPoint::i_identity(n));
      sjlab::RealMatrix dy(n, n);
      for (int k = 0; k < n; ++k) dy(k, k) = 1.0 / std::sqrt(static_cast<double>(n));
      v0 = sjlab::siegel_tangent_to_chart(sjlab::SiegelTangent(sjlab::RealMatrix(n, n), dy));
    } else {
      x0 = chart_for(geo_space, geo_point, geo_c);
      v0 = load_json(geo_velocity).get<std::vector<double>>();
    }
    const sjlab::GeodesicPath path =
        sjlab::geodesic_integrate(field, x0, v0, geo_t, geo_steps, fd_config(geo_c));
    json out{{"t", geo_t}, {"endpoint_chart", path.points.back()}};
    if (geo_space == "siegel")
      out["endpoint"] = sjlab::siegel_point_to_json(
          sjlab::siegel_from_chart(geo_c.n, path.points.back()));
    else
      out["endpoint"] = sjlab::jacobi_point_to_json(
          sjlab::jacobi_from_chart(geo_c.n, geo_c.m, path.points.back()));
    emit(out, geo_c);
  });

  CLI::App* geo_shoot = geo->add_subcommand("shoot", "Solve the boundary value problem");
  geo_shoot->add_option("--point0", geo_point)->required();
  geo_shoot->add_option("--point1", geo_p1)->required();
  geo_shoot->add_option("--steps", geo_steps, "RK steps");
  geo_shoot->callback([&] {
    const sjlab::MetricField field = metric_field_for(geo_space, geo_c);
    const sjlab::ShootingResult r =
        sjlab::geodesic_shoot_bvp(field, chart_for(geo_space, geo_point, geo_c),
                                  chart_for(geo_space, geo_p1, geo_c), geo_steps,
                                  fd_config(geo_c));
    emit(json{{"distance", r.distance}, {"initial_velocity", r.initial_velocity}}, geo_c);
  });

  // kahler ------------------------------------------------------------------
  Common kah_c;
  std::string kah_space = "jacobi", kah_point;
  CLI::App* kah = app.add_subcommand("kahler", "Complex-structure compatibility and closedness");
  add_common_flags(kah, kah_c);
  kah->add_option("--space", kah_space)->check(CLI::IsMember({"siegel", "jacobi"}));
  kah->add_option("--point", kah_point);
  kah->callback([&] {
    const sjlab::MetricField field = metric_field_for(kah_space, kah_c);
    const sjlab::KahlerResiduals r =
        sjlab::kahler_check(field, chart_for(kah_space, kah_point, kah_c), fd_config(kah_c));
    emit(json{{"compatibility", r.compatibility}, {"d_omega", r.d_omega}}, kah_c);
  });

  // check -------------------------------------------------------------------
  Common chk_c;
  std::vector<std::string> chk_suites = {"all"};
  int chk_exit = 0;
  CLI::App* chk = app.add_subcommand("check", "Run seeded verification suites");
  add_common_flags(chk, chk_c);
  chk->add_option("--suite", chk_suites, "Suite name or 'all'; repeatable")->delimiter(',');
  chk->callback([&] {
    sjlab::SuiteConfig cfg;
    cfg.seed = chk_c.seed;
    cfg.samples = chk_c.samples;
    cfg.tolerances = parse_tolerances(chk, chk_c);
    cfg.param_a = chk_c.a;
    cfg.param_b = chk_c.b;
    cfg.fd = fd_config(chk_c);
    std::vector<std::string> names;
    for (const std::string& s : chk_suites) {
      if (s == "all") {
        names = sjlab::all_suite_names();
        break;
      }
      names.push_back(s);
    }
    bool all_pass = true;
    json suites = json::array();
    for (const sjlab::SuiteResult& r : sjlab::run_suites(names, cfg)) {
      suites.push_back(suite_result_to_json(r));
      all_pass = all_pass && r.pass;
    }
    emit(json{{"seed", chk_c.seed}, {"pass", all_pass}, {"suites", suites}}, chk_c);
    if (!all_pass) chk_exit = 1;
  });

  // report ------------------------------------------------------------------
  Common rep_c;
  std::vector<std::string> rep_inputs;
  int rep_exit = 0;
  CLI::App* rep = app.add_subcommand(
      "report", "Aggregate prior check outputs (files or stdin) into one document");
  add_common_flags(rep, rep_c);
  rep->add_option("inputs", rep_inputs, "Files of line-delimited check output; none = stdin");
  rep->callback([&] {
    std::vector<std::string> lines;
    auto slurp = [&](std::istream& in) {
      std::string line;
      while (std::getline(in, line))
        if (line.find_first_not_of(" \t") != std::string::npos) lines.push_back(line);
    };
    if (rep_inputs.empty()) {
      slurp(std::cin);
    } else {
      for (const std::string& path : rep_inputs) {
        std::ifstream in(path);
        if (!in) throw sjlab::InvariantViolation("cannot open file: " + path);
        slurp(in);
      }
    }
    json suites = json::array();
    bool all_pass = true;
    int total = 0, failed = 0;
    for (const std::string& line : lines) {
      const json doc = json::parse(line);
      for (const json& s : doc.at("suites")) {
        suites.push_back(s);
        all_pass = all_pass && s.at("pass").get<bool>();
        for (const json& c : s.at("checks")) {
          ++total;
          if (!c.at("pass").get<bool>()) ++failed;
        }
      }
    }
    emit(json{{"pass", all_pass},
              {"checks_total", total},
              {"checks_failed", failed},
              {"suites", suites}},
         rep_c);
    if (!all_pass) rep_exit = 1;
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  return chk_exit + rep_exit;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
