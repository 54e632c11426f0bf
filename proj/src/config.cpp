#include "dimfree/config.hpp"

#include <fstream>

namespace dimfree {

Json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file: " + path);
  Json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    throw ConfigError("invalid JSON in " + path + ": " + e.what());
  }
  return j;
}

Vector parse_vector_literal(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const std::exception&) {
    throw ConfigError("malformed vector literal: " + text);
  }
  if (!j.is_array() || j.empty()) throw ConfigError("vector literal must be a non-empty array");
  return vec_from_json(j);
}

Vector vec_from_json(const Json& j) {
  if (!j.is_array()) throw ConfigError("expected a JSON array of numbers");
  Vector v(j.size());
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (!j[i].is_number()) throw ConfigError("expected a number in vector");
    v[i] = j[i].get<double>();
  }
  return v;
}

Matrix mat_from_json(const Json& j) {
  if (!j.is_array() || j.empty() || !j[0].is_array())
    throw ConfigError("expected a JSON array of rows");
  Matrix m(j.size(), j[0].size());
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (!j[i].is_array() || j[i].size() != (std::size_t)m.cols())
      throw ConfigError("ragged matrix rows in config");
    for (std::size_t k = 0; k < j[i].size(); ++k) m(i, k) = j[i][k].get<double>();
  }
  return m;
}

void require_keys(const Json& j, std::initializer_list<const char*> allowed,
                  const std::string& context) {
  for (auto it = j.begin(); it != j.end(); ++it) {
    bool ok = false;
    for (const char* k : allowed)
      if (it.key() == k) { ok = true; break; }
    if (!ok) throw ConfigError("unknown key \"" + it.key() + "\" in " + context);
  }
}

OmegaSystem system_from_json(const Json& j) {
  require_keys(j, {"dim", "f", "input_dim", "u", "outputs", "x0"}, "system");
  if (!j.contains("dim") || !j.contains("f")) throw ConfigError("system needs \"dim\" and \"f\"");
  int dim = j["dim"].get<int>();
  int input_dim = j.value("input_dim", 0);
  std::vector<std::string> comps = j["f"].get<std::vector<std::string>>();
  if ((int)comps.size() != dim) throw ConfigError("system \"f\" must have dim components");
  OmegaSystem sys;
  sys.field = VectorField::from_exprs(parse_vector(comps, dim, input_dim));
  if (j.contains("outputs")) {
    for (const Json& o : j["outputs"]) {
      require_keys(o, {"dim", "h"}, "output");
      int hd = o["dim"].get<int>();
      sys.outputs.push_back(ScalarField::from_expr(parse(o["h"].get<std::string>(), hd), hd));
    }
  }
  return sys;
}

InputFn input_from_json(const Json& j) {
  if (!j.contains("u")) return nullptr;
  std::vector<std::string> us = j["u"].get<std::vector<std::string>>();
  ExprVector ev = parse_vector(us, 0, 0);
  return [ev](double t) { return ev.eval(Vector(), Vector(), t); };
}

LinearStage linear_from_json(const Json& j) {
  require_keys(j, {"kind", "A", "B", "C", "when"}, "linear system");
  if (!j.contains("A")) throw ConfigError("linear system needs \"A\"");
  LinearStage st;
  st.a = mat_from_json(j["A"]);
  if (j.contains("B")) st.b = mat_from_json(j["B"]);
  if (j.contains("C")) st.c = mat_from_json(j["C"]);
  return st;
}

VaryingLinearSystem schedule_from_json(const Json& j) {
  if (!j.is_array() || j.empty()) throw ConfigError("\"schedule\" must be a non-empty array");
  VaryingLinearSystem sys;
  for (const Json& s : j) sys.stages.push_back(linear_from_json(s));
  return sys;
}

TensorField tensor_from_json(const Json& j) {
  require_keys(j, {"dim", "r", "s", "gamma", "points"}, "tensor");
  TensorField tf;
  tf.gen_dim = j.at("dim").get<int>();
  tf.cov_order = j.value("r", 2);
  tf.contra_order = j.value("s", 0);
  long rows = 1, cols = 1;
  for (int i = 0; i < tf.contra_order; ++i) rows *= tf.gen_dim;
  for (int i = 0; i < tf.cov_order; ++i) cols *= tf.gen_dim;
  const Json& g = j.at("gamma");
  // a (2,0) tensor may be written as its natural m x m matrix; flattening
  // it row-major gives exactly the 1 x m^2 structure row
  bool square_form = tf.cov_order == 2 && tf.contra_order == 0 &&
                     (long)g.size() == tf.gen_dim;
  long want_rows = square_form ? tf.gen_dim : rows;
  long want_cols = square_form ? tf.gen_dim : cols;
  if ((long)g.size() != want_rows) throw ConfigError("\"gamma\" row count must be dim^s");
  for (const Json& row : g) {
    if ((long)row.size() != want_cols) throw ConfigError("\"gamma\" column count must be dim^r");
    for (const Json& e : row) tf.gamma.push_back(parse(e.get<std::string>(), tf.gen_dim));
  }
  return tf;
}

QuadForm quadform_from_json(const Json& j) {
  TensorField tf = tensor_from_json(j);
  if (tf.cov_order != 2 || tf.contra_order != 0)
    throw ConfigError("quadratic form requires r=2, s=0 and an m x m \"gamma\"");
  if ((long)tf.gamma.size() != (long)tf.gen_dim * tf.gen_dim)
    throw ConfigError("quadratic form \"gamma\" must be square m x m");
  return QuadForm{tf.gen_dim, tf.gamma};
}

std::vector<Vector> points_from_json(const Json& j, int dim) {
  std::vector<Vector> pts;
  if (j.contains("points")) {
    for (const Json& p : j["points"]) {
      Vector v = vec_from_json(p);
      if (v.size() != dim) throw ConfigError("sample point dimension mismatch");
      pts.push_back(v);
    }
  } else {
    pts.push_back(Vector::Zero(dim));  // default sample
  }
  return pts;
}

namespace {

BlendSchedule lambda_from_json(const Json& j) {
  BlendSchedule b;
  if (!j.contains("lambda")) return b;
  std::string s = j["lambda"].get<std::string>();
  if (s == "smoothstep") b.kind = BlendSchedule::Kind::Smoothstep;
  else if (s == "linear") b.kind = BlendSchedule::Kind::Linear;
  else {
    b.kind = BlendSchedule::Kind::Custom;
    b.custom = parse(s, 0, 0);
  }
  return b;
}

VirtualForce psi_from_json(const Json& j, int leaf_hint) {
  VirtualForce p;
  if (!j.contains("psi")) return p;
  const Json& pj = j["psi"];
  require_keys(pj, {"kind", "kappa", "force", "components"}, "psi");
  std::string kind = pj.value("kind", "proportional");
  if (kind == "proportional") {
    p.kind = VirtualForce::Kind::Proportional;
    p.kappa = pj.value("kappa", 1.0);
  } else if (kind == "clutch") {
    p.kind = VirtualForce::Kind::Clutch;
    p.force = pj.value("force", 1.0);
  } else if (kind == "expr") {
    p.kind = VirtualForce::Kind::Custom;
    p.custom = parse_vector(pj.at("components").get<std::vector<std::string>>(), leaf_hint, 0);
  } else {
    throw ConfigError("psi kind must be proportional, clutch, or expr");
  }
  return p;
}

}  // namespace

DockingScenario scenario_from_json(const Json& j) {
  require_keys(j, {"mode", "window", "lambda", "psi", "sys1", "sys2", "target",
                   "t_start", "t_end", "dt", "xi0"},
               "scenario");
  DockingScenario sc;
  sc.sys1 = system_from_json(j.at("sys1"));
  sc.sys2 = system_from_json(j.at("sys2"));
  sc.target = system_from_json(j.at("target"));
  sc.u1 = input_from_json(j.at("sys1"));
  sc.u2 = input_from_json(j.at("sys2"));
  sc.w = input_from_json(j.at("target"));
  const Json& win = j.at("window");
  if (!win.is_array() || win.size() != 2) throw ConfigError("\"window\" must be [T0, T1]");
  sc.T0 = win[0].get<double>();
  sc.T1 = win[1].get<double>();
  sc.t_start = j.value("t_start", sc.T0);
  sc.t_end = j.value("t_end", sc.T1);
  sc.dt = j.value("dt", 1e-3);
  std::string mode = j.value("mode", "dock");
  if (mode == "dock") {
    if (!j.at("sys1").contains("x0") || !j.at("sys2").contains("x0"))
      throw ConfigError("dock scenario needs sys1.x0 and sys2.x0");
    sc.x0_sys1 = DfVector{vec_from_json(j.at("sys1").at("x0"))};
    sc.x0_sys2 = DfVector{vec_from_json(j.at("sys2").at("x0"))};
  } else if (mode == "undock") {
    if (!j.contains("xi0")) throw ConfigError("undock scenario needs \"xi0\"");
    sc.xi0 = DfVector{vec_from_json(j.at("xi0"))};
  } else {
    throw ConfigError("scenario mode must be dock or undock");
  }
  int stack_dim = mode == "dock" ? sc.x0_sys1.dim() + sc.x0_sys2.dim()
                                 : sc.sys1.min_gen_dim() + sc.sys2.min_gen_dim();
  int base = mode == "dock" ? stack_dim : sc.xi0.dim();
  long leaf = lcm_of(lcm_of(base, stack_dim), sc.target.min_gen_dim());
  sc.lambda = lambda_from_json(j);
  sc.psi = psi_from_json(j, (int)leaf);
  return sc;
}

SwitchConfig switch_from_json(const Json& j) {
  require_keys(j, {"mode", "T", "t_end", "dt", "sys1", "sys2", "z0", "steering"}, "switch");
  SwitchConfig sw;
  if (j.contains("steering")) {
    const Json& st = j.at("steering");
    require_keys(st, {"A", "B", "target"}, "steering");
    sw.steering = SteeringSpec{mat_from_json(st.at("A")), mat_from_json(st.at("B")),
                               vec_from_json(st.at("target"))};
  }
  const Json& s1 = j.at("sys1");
  if (sw.steering && !s1.contains("f")) {
    // steered phase: dynamics come from the steering (A, B) pair
    require_keys(s1, {"x0"}, "sys1");
    Matrix a = sw.steering->a;
    sw.sys1.field = VectorField{(int)a.rows(), 0,
                                [a](const Vector& x, const Vector&, double) { return Vector(a * x); }};
  } else {
    sw.sys1 = system_from_json(s1);
  }
  sw.sys2 = system_from_json(j.at("sys2"));
  if (!s1.contains("x0")) throw ConfigError("switch needs sys1.x0");
  sw.x0 = DfVector{vec_from_json(s1.at("x0"))};
  sw.T = j.value("T", 1.0);
  sw.t_end = j.value("t_end", sw.T * 2);
  sw.dt = j.value("dt", 1e-3);
  if (j.contains("z0")) sw.z0 = DfVector{vec_from_json(j.at("z0"))};
  return sw;
}

}  // namespace dimfree
