// Command-line front end: projections, lifts, reductions, analyses, and
// trajectory simulation with CSV output.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "dimfree/config.hpp"
#include "dimfree/dvds.hpp"
#include "dimfree/fields.hpp"
#include "dimfree/linsys.hpp"
#include "dimfree/projector.hpp"
#include "dimfree/tensor.hpp"

namespace {

using namespace dimfree;

double g_tol = kDefaultTol;  // overridable via DIMFREE_TOL

std::string fmt_vec(const Vector& v) {
  std::string out;
  char buf[64];
  for (long i = 0; i < v.size(); ++i) {
    std::snprintf(buf, sizeof buf, "%.4f", v[i]);
    if (i) out += ' ';
    out += buf;
  }
  return out;
}

void print_matrix(const Matrix& m, const std::string& name) {
  std::printf("%s =\n", name.c_str());
  for (long i = 0; i < m.rows(); ++i) {
    for (long j = 0; j < m.cols(); ++j) std::printf("%s%.6g", j ? " " : "  ", m(i, j));
    std::printf("\n");
  }
}

void write_csv(const Trajectory& traj, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ConfigError("cannot open output file: " + path);
  long max_dim = 0;
  for (const auto& s : traj.samples) max_dim = std::max(max_dim, (long)s.realized.size());
  out << "t,dim";
  for (long i = 1; i <= max_dim; ++i) out << ",x" << i;
  out << "\n";
  char buf[64];
  for (const auto& s : traj.samples) {
    std::snprintf(buf, sizeof buf, "%.17g", s.t);
    out << buf << ',' << s.state.dim();
    for (long i = 0; i < max_dim; ++i) {
      out << ',';
      if (i < s.realized.size()) {
        std::snprintf(buf, sizeof buf, "%.17g", s.realized[i]);
        out << buf;
      }
    }
    out << "\n";
  }
}

int cmd_project(const std::string& vec, const std::string& sys_path, int to) {
  if (!vec.empty()) {
    DfVector x{parse_vector_literal(vec)};
    std::printf("%s\n", fmt_vec(project(x, to).coeffs).c_str());
    return 0;
  }
  Json j = load_json_file(sys_path);
  require_keys(j, {"linear_system", "schedule"}, "project config");
  VaryingLinearSystem sys;
  if (j.contains("schedule")) {
    sys = schedule_from_json(j["schedule"]);
  } else if (j.contains("linear_system")) {
    sys.stages.push_back(linear_from_json(j["linear_system"]));
  } else {
    throw ConfigError("project config needs \"linear_system\" or \"schedule\"");
  }
  std::vector<LinearStage> proj = project_varying(sys, to);
  for (std::size_t i = 0; i < proj.size(); ++i) {
    std::string tag = proj.size() > 1 ? "_" + std::to_string(i + 1) : "";
    print_matrix(proj[i].a, "A" + tag);
    if (proj[i].b.size()) print_matrix(proj[i].b, "B" + tag);
    if (proj[i].c.size()) print_matrix(proj[i].c, "C" + tag);
  }
  return 0;
}

int cmd_analyze(const std::string& path) {
  Json j = load_json_file(path);
  require_keys(j, {"linear_system", "omega_linear", "tensor"}, "analyze config");
  Matrix a, b, c;
  if (j.contains("tensor")) {
    QuadForm q = quadform_from_json(j["tensor"]);
    std::vector<Vector> pts = points_from_json(j["tensor"], q.gen_dim);
    std::printf("riemannian=%s\n", is_riemannian_at(q, pts) ? "yes" : "no");
    bool sympl = false;
    try {
      sympl = is_symplectic_at(q, pts);
    } catch (const OddDimension&) {
    } catch (const NotSkew&) {
    }
    std::printf("symplectic=%s\n", sympl ? "yes" : "no");
    return 0;
  }
  if (j.contains("linear_system")) {
    LinearStage st = linear_from_json(j["linear_system"]);
    a = st.a;
    b = st.b;
    c = st.c;
  } else if (j.contains("omega_linear")) {
    const Json& ol = j["omega_linear"];
    require_keys(ol, {"f", "g", "h"}, "omega_linear");
    const Json& f = ol.at("f");
    require_keys(f, {"dim", "A"}, "omega_linear.f");
    int m = f.at("dim").get<int>();
    Matrix am = mat_from_json(f.at("A"));
    long q = m;
    for (const Json& g : ol.value("g", Json::array())) q = lcm_of(q, g.at("dim").get<long>());
    for (const Json& h : ol.value("h", Json::array())) q = lcm_of(q, h.at("dim").get<long>());
    a = lift_linear_vf(am, (int)(q / m));
    if (ol.contains("g")) {
      b = Matrix((long)q, (long)ol["g"].size());
      long col = 0;
      for (const Json& g : ol["g"]) {
        require_keys(g, {"dim", "b"}, "omega_linear.g");
        Vector gb = vec_from_json(g.at("b"));
        b.col(col++) = lift(DfVector{gb}, (int)(q / gb.size())).coeffs;
      }
    }
    if (ol.contains("h")) {
      c = Matrix((long)ol["h"].size(), (long)q);
      long row = 0;
      for (const Json& h : ol["h"]) {
        require_keys(h, {"dim", "c"}, "omega_linear.h");
        Eigen::RowVectorXd hc = vec_from_json(h.at("c")).transpose();
        c.row(row++) = lift_linear_function(hc, (int)q);
      }
    }
  } else {
    throw ConfigError("analyze config needs \"linear_system\", \"omega_linear\", or \"tensor\"");
  }
  long n = a.rows();
  if (b.size()) {
    int r = numeric_rank(ctrb(a, b));
    std::printf("ctrb_rank=%d\ncontrollable=%s\n", r, r == n ? "yes" : "no");
  }
  if (c.size()) {
    int r = numeric_rank(obsv(a, c));
    std::printf("obsv_rank=%d\nobservable=%s\n", r, r == n ? "yes" : "no");
  }
  return 0;
}

int cmd_check_tensor(const std::string& path) {
  Json j = load_json_file(path);
  require_keys(j, {"tensor"}, "check-tensor config");
  QuadForm q = quadform_from_json(j.at("tensor"));
  std::vector<Vector> pts = points_from_json(j.at("tensor"), q.gen_dim);
  bool sym = is_symmetric_at(q, pts);
  bool skew = is_skew_at(q, pts);
  std::printf("symmetric=%s\n", sym ? "yes" : "no");
  std::printf("skew=%s\n", skew ? "yes" : "no");
  if (skew) std::printf("closed=%s\n", is_closed(q, pts) ? "yes" : "no");
  std::printf("riemannian=%s\n", is_riemannian_at(q, pts) ? "yes" : "no");
  bool sympl = false;
  if (skew && q.gen_dim % 2 == 0) sympl = is_symplectic_at(q, pts);
  std::printf("symplectic=%s\n", sympl ? "yes" : "no");
  return 0;
}

int cmd_simulate(const std::string& path, const std::string& x0_lit, double t0, double t1,
                 double dt, const std::string& out_path) {
  Json j = load_json_file(path);
  require_keys(j, {"system", "mode", "window", "lambda", "psi", "sys1", "sys2", "target",
                   "t_start", "t_end", "dt", "xi0", "T", "z0", "steering"},
               "simulate config");
  Trajectory traj;
  if (j.contains("system")) {
    OmegaSystem sys = system_from_json(j["system"]);
    InputFn input = input_from_json(j["system"]);
    Vector x0;
    if (!x0_lit.empty()) x0 = parse_vector_literal(x0_lit);
    else if (j["system"].contains("x0")) x0 = vec_from_json(j["system"]["x0"]);
    else throw ConfigError("simulate needs --x0 or system.x0");
    traj = simulate(realize(sys, (int)x0.size(), input), DfVector{x0}, t0, t1, dt, g_tol);
  } else if (j.contains("mode") && j["mode"] == "switch") {
    SwitchConfig sw = switch_from_json(j);
    traj = switch_systems(sw.sys1, sw.x0, sw.sys2, sw.T, sw.t_end, dt > 0 ? dt : sw.dt,
                          sw.steering, sw.z0, std::max(g_tol, 1e-6));
  } else {
    DockingScenario sc = scenario_from_json(j);
    if (dt > 0) sc.dt = dt;
    traj = j.value("mode", "dock") == "dock" ? dock(sc, g_tol) : undock(sc, g_tol);
  }
  if (out_path.empty()) throw ConfigError("simulate needs --out");
  write_csv(traj, out_path);
  return 0;
}

int run(int argc, char** argv) {
  CLI::App app{"cross-dimensional vector calculus and dimension-varying system simulation"};
  app.require_subcommand(1);

  if (const char* env = std::getenv("DIMFREE_TOL")) g_tol = std::atof(env);

  std::string vec, vec_b, sys_path, out_path, x0_lit;
  int to = 1, k = 1;
  double t0 = 0, t1 = 1, dt = 1e-3;

  auto* proj = app.add_subcommand("project", "project a vector or linear system to dimension m");
  proj->add_option("--vec", vec, "vector literal, e.g. \"[1,0,-1]\"");
  proj->add_option("--system", sys_path, "linear system / schedule JSON");
  proj->add_option("--to", to, "target dimension")->required();

  auto* lift_cmd = app.add_subcommand("lift", "replicate a vector k times per coordinate");
  lift_cmd->add_option("--vec", vec, "vector literal")->required();
  lift_cmd->add_option("--k", k, "replication factor")->required();

  auto* red = app.add_subcommand("reduce", "reduce a vector to its smallest representative");
  red->add_option("--vec", vec, "vector literal")->required();

  auto* dist = app.add_subcommand("distance", "quotient-space distance between two vectors");
  dist->add_option("--a", vec, "first vector")->required();
  dist->add_option("--b", vec_b, "second vector")->required();

  auto* sim = app.add_subcommand("simulate", "integrate a system config and write CSV");
  sim->add_option("--config", sys_path, "config JSON")->required();
  sim->add_option("--x0", x0_lit, "initial state literal");
  sim->add_option("--t0", t0, "start time");
  sim->add_option("--t1", t1, "end time");
  sim->add_option("--dt", dt, "step size");
  sim->add_option("--out", out_path, "output CSV path")->required();

  auto* dock_cmd = app.add_subcommand("dock", "run a docking scenario");
  dock_cmd->add_option("--config", sys_path, "scenario JSON")->required();
  dock_cmd->add_option("--dt", dt, "step override");
  dock_cmd->add_option("--out", out_path, "output CSV path")->required();

  auto* sw = app.add_subcommand("switch", "run a switching scenario");
  sw->add_option("--config", sys_path, "scenario JSON")->required();
  sw->add_option("--dt", dt, "step override");
  sw->add_option("--out", out_path, "output CSV path")->required();

  auto* an = app.add_subcommand("analyze", "controllability/observability or tensor predicates");
  an->add_option("--config", sys_path, "config JSON")->required();

  auto* ct = app.add_subcommand("check-tensor", "quadratic-form predicates");
  ct->add_option("--config", sys_path, "tensor config JSON")->required();

  CLI11_PARSE(app, argc, argv);

  if (proj->parsed()) {
    if (vec.empty() == sys_path.empty())
      throw ConfigError("project needs exactly one of --vec / --system");
    return cmd_project(vec, sys_path, to);
  }
  if (lift_cmd->parsed()) {
    DfVector x{parse_vector_literal(vec)};
    std::printf("%s\n", fmt_vec(lift(x, k).coeffs).c_str());
    return 0;
  }
  if (red->parsed()) {
    DfVector x{parse_vector_literal(vec)};
    EquivClass cls = reduce(x, g_tol);
    std::printf("%s\n", fmt_vec(cls.rep.coeffs).c_str());
    return 0;
  }
  if (dist->parsed()) {
    std::printf("%.6g\n", distance(DfVector{parse_vector_literal(vec)},
                                   DfVector{parse_vector_literal(vec_b)}));
    return 0;
  }
  if (sim->parsed()) return cmd_simulate(sys_path, x0_lit, t0, t1, dt, out_path);
  if (dock_cmd->parsed() || sw->parsed()) {
    Json j = load_json_file(sys_path);
    Trajectory traj;
    if (sw->parsed() || j.value("mode", "") == "switch") {
      SwitchConfig swc = switch_from_json(j);
      traj = switch_systems(swc.sys1, swc.x0, swc.sys2, swc.T, swc.t_end,
                            sw->count("--dt") || dock_cmd->count("--dt") ? dt : swc.dt,
                            swc.steering, swc.z0, std::max(g_tol, 1e-6));
    } else {
      DockingScenario sc = scenario_from_json(j);
      if (dock_cmd->count("--dt")) sc.dt = dt;
      traj = j.value("mode", "dock") == "dock" ? dock(sc, g_tol) : undock(sc, g_tol);
    }
    write_csv(traj, out_path);
    return 0;
  }
  if (an->parsed()) return cmd_analyze(sys_path);
  if (ct->parsed()) return cmd_check_tensor(sys_path);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const NumericError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
