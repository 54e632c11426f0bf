#include "dimfree/dvds.hpp"

#include <algorithm>
#include <cmath>

namespace dimfree {

int OmegaSystem::min_gen_dim() const {
  long q = field.gen_dim;
  for (const ScalarField& h : outputs) q = lcm_of(q, h.gen_dim);
  return (int)q;
}

Rhs realize(const OmegaSystem& sys, int n, InputFn input) {
  VectorField f = sys.field;
  return [f, input](double t, const Vector& z) {
    Vector u = input ? input(t) : Vector();
    return lift_vector_field(f, DfVector{z}, u, t).coeffs;
  };
}

double Trajectory::max_step_distance() const {
  double worst = 0;
  for (std::size_t i = 1; i < samples.size(); ++i)
    worst = std::max(worst, distance(samples[i - 1].state.rep, samples[i].state.rep));
  return worst;
}

namespace {

Vector rk4_step(const Rhs& rhs, double t, const Vector& x, double dt) {
  Vector k1 = rhs(t, x);
  Vector k2 = rhs(t + 0.5 * dt, x + 0.5 * dt * k1);
  Vector k3 = rhs(t + 0.5 * dt, x + 0.5 * dt * k2);
  Vector k4 = rhs(t + dt, x + dt * k3);
  return x + dt / 6.0 * (k1 + 2 * k2 + 2 * k3 + k4);
}

TrajectorySample make_sample(double t, const Vector& x, double tol) {
  DfVector v{x};
  return TrajectorySample{t, reduce(v, tol), (int)x.size(), x};
}

}  // namespace

Trajectory simulate(const Rhs& rhs, const DfVector& x0, double t0, double t1, double dt,
                    double reduce_tol) {
  if (dt <= 0) throw ConfigError("simulate: dt must be positive");
  long steps = std::lround((t1 - t0) / dt);
  if (steps < 0) throw ConfigError("simulate: t1 must be >= t0");
  Trajectory traj;
  Vector x = x0.coeffs;
  traj.samples.push_back(make_sample(t0, x, reduce_tol));
  for (long i = 0; i < steps; ++i) {
    double t = t0 + i * dt;
    x = rk4_step(rhs, t, x, dt);
    if (!x.allFinite())
      throw NonFiniteState("state diverged; last good t=" + std::to_string(t));
    traj.samples.push_back(make_sample(t0 + (i + 1) * dt, x, reduce_tol));
  }
  return traj;
}

Trajectory switch_systems(const OmegaSystem& sys1, const DfVector& x0, const OmegaSystem& sys2,
                          double T, double t_end, double dt,
                          const std::optional<SteeringSpec>& steering,
                          const std::optional<DfVector>& z0, double tol) {
  Rhs rhs1;
  if (steering) {
    MinEnergyControl mec = min_energy_control(steering->a, steering->b, x0.coeffs,
                                              steering->target, T);
    Matrix a = steering->a, b = steering->b;
    auto u = mec.u;
    rhs1 = [a, b, u](double t, const Vector& x) { return Vector(a * x + b * u(t)); };
  } else {
    rhs1 = realize(sys1, x0.dim());
  }
  Trajectory first = simulate(rhs1, x0, 0, T, dt);
  DfVector xT{first.samples.back().realized};

  DfVector handoff = z0 ? *z0 : reduce(xT).rep;
  if (distance(xT, handoff) > tol)
    throw MatchFailure("states do not match at the switching time");

  long leaf = lcm_of(handoff.dim(), sys2.field.gen_dim);
  DfVector start2 = lift(handoff, (int)(leaf / handoff.dim()));
  Trajectory second = simulate(realize(sys2, (int)leaf), start2, T, t_end, dt);

  Trajectory out;
  out.samples.assign(first.samples.begin(), first.samples.end() - 1);
  out.samples.insert(out.samples.end(), second.samples.begin(), second.samples.end());
  return out;
}

double BlendSchedule::operator()(double s) const {
  s = std::clamp(s, 0.0, 1.0);
  switch (kind) {
    case Kind::Smoothstep: return s * s * (3 - 2 * s);
    case Kind::Linear: return s;
    case Kind::Custom: return custom.eval(Vector(), Vector(), s);
  }
  return s;
}

namespace {

// Joint field on R^{m1+m2}: the two participants flying side by side.
VectorField stacked_field(const OmegaSystem& s1, const OmegaSystem& s2, int m1, int m2,
                          InputFn u1, InputFn u2) {
  VectorField f1 = s1.field, f2 = s2.field;
  auto fn = [f1, f2, m1, m2, u1, u2](const Vector& w, const Vector&, double t) {
    Vector a = lift_vector_field(f1, DfVector{Vector(w.head(m1))}, u1 ? u1(t) : Vector(), t).coeffs;
    Vector b = lift_vector_field(f2, DfVector{Vector(w.tail(m2))}, u2 ? u2(t) : Vector(), t).coeffs;
    Vector out(m1 + m2);
    out << a, b;
    return out;
  };
  return VectorField{m1 + m2, 0, fn};
}

Trajectory run_transient(const DockingScenario& sc, const DfVector& xi0, int stack_dim,
                         const VectorField& stack, bool dock_mode, double tol) {
  if (!(sc.t_start <= sc.T0 && sc.T0 < sc.T1 && sc.T1 <= sc.t_end))
    throw ScheduleMismatch("docking window must satisfy t_start <= T0 < T1 <= t_end");
  long leaf = lcm_of(xi0.dim(), lcm_of(stack_dim, sc.target.min_gen_dim()));
  DfVector xi = lift(xi0, (int)(leaf / xi0.dim()));

  // Projector onto consistent stacks: states that split exactly into the
  // two participants. The virtual force pulls toward this set.
  Matrix up = build_projector(stack_dim, (int)leaf).matrix;
  Matrix down = build_projector((int)leaf, stack_dim).matrix;
  Matrix consist = up * down;

  OmegaSystem target = sc.target;
  BlendSchedule lambda = sc.lambda;
  VirtualForce psi = sc.psi;
  InputFn w = sc.w;
  double T0 = sc.T0, T1 = sc.T1;

  Rhs rhs = [&, stack](double t, const Vector& z) -> Vector {
    double lam = t <= T0 ? 0.0 : (t >= T1 ? 1.0 : lambda((t - T0) / (T1 - T0)));
    if (!dock_mode) lam = 1.0 - lam;
    Vector sv = lift_vector_field(stack, DfVector{z}, Vector(), t).coeffs;
    Vector hv = lift_vector_field(target.field, DfVector{z}, w ? w(t) : Vector(), t).coeffs;
    Vector out = (1.0 - lam) * sv + lam * hv;
    if (t >= T0 && t <= T1) {
      Vector delta = z - consist * z;
      switch (psi.kind) {
        case VirtualForce::Kind::Proportional:
          out -= psi.kappa * delta;
          break;
        case VirtualForce::Kind::Clutch:
          out -= psi.force * delta.unaryExpr([](double d) { return d > 0 ? 1.0 : (d < 0 ? -1.0 : 0.0); });
          break;
        case VirtualForce::Kind::Custom:
          out += psi.custom.eval(z, Vector(), t);
          break;
      }
    }
    return out;
  };
  return simulate(rhs, xi, sc.t_start, sc.t_end, sc.dt, tol);
}

}  // namespace

Trajectory dock(const DockingScenario& sc, double tol) {
  int m1 = sc.x0_sys1.dim(), m2 = sc.x0_sys2.dim();
  VectorField stack = stacked_field(sc.sys1, sc.sys2, m1, m2, sc.u1, sc.u2);
  Vector w0(m1 + m2);
  w0 << sc.x0_sys1.coeffs, sc.x0_sys2.coeffs;
  return run_transient(sc, DfVector{w0}, m1 + m2, stack, /*dock_mode=*/true, tol);
}

Trajectory undock(const DockingScenario& sc, double tol) {
  int m1 = sc.sys1.min_gen_dim(), m2 = sc.sys2.min_gen_dim();
  VectorField stack = stacked_field(sc.sys1, sc.sys2, m1, m2, sc.u1, sc.u2);
  return run_transient(sc, sc.xi0, m1 + m2, stack, /*dock_mode=*/false, tol);
}

}  // namespace dimfree
