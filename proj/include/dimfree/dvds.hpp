#pragma once

// Simulation of dimension-varying dynamics over the quotient space:
// realizations on a chosen leaf, fixed-step RK4 trajectories, switching
// between systems, and docking/undocking transients.

#include <functional>
#include <optional>
#include <vector>

#include "dimfree/esdd.hpp"
#include "dimfree/expr.hpp"
#include "dimfree/fields.hpp"
#include "dimfree/linsys.hpp"

namespace dimfree {

struct OmegaSystem {
  VectorField field;
  std::vector<ScalarField> outputs;

  int min_gen_dim() const;
};

using Rhs = std::function<Vector(double, const Vector&)>;
using InputFn = std::function<Vector(double)>;

// Concrete ODE right-hand side on R^n (the lift of the generator field).
Rhs realize(const OmegaSystem& sys, int n, InputFn input = nullptr);

struct TrajectorySample {
  double t = 0;
  EquivClass state;  // reduced per sample
  int realized_dim = 0;
  Vector realized;
};

struct Trajectory {
  std::vector<TrajectorySample> samples;

  // Largest quotient-space distance between consecutive samples.
  double max_step_distance() const;
};

Trajectory simulate(const Rhs& rhs, const DfVector& x0, double t0, double t1, double dt,
                    double reduce_tol = kDefaultTol);

struct SteeringSpec {
  Matrix a;
  Matrix b;
  Vector target;  // state to reach at the switch time
};

// Run sys1 (or its steered linear stand-in) until T, check the state class
// matches z0 (when given), then continue under sys2 until t_end.
Trajectory switch_systems(const OmegaSystem& sys1, const DfVector& x0, const OmegaSystem& sys2,
                          double T, double t_end, double dt,
                          const std::optional<SteeringSpec>& steering = std::nullopt,
                          const std::optional<DfVector>& z0 = std::nullopt, double tol = 1e-6);

struct BlendSchedule {
  enum class Kind { Smoothstep, Linear, Custom };
  Kind kind = Kind::Smoothstep;
  Expr custom;  // in the variable t, mapped over s in [0,1]

  double operator()(double s) const;
};

struct VirtualForce {
  enum class Kind { Proportional, Clutch, Custom };
  Kind kind = Kind::Proportional;
  double kappa = 1.0;  // proportional gain
  double force = 1.0;  // clutch magnitude
  ExprVector custom;   // components over the transient leaf state
};

struct DockingScenario {
  OmegaSystem sys1, sys2;  // the two docking participants
  OmegaSystem target;      // the merged system
  double t_start = 0, T0 = 0, T1 = 1, t_end = 1;
  double dt = 1e-3;
  BlendSchedule lambda;
  VirtualForce psi;
  DfVector x0_sys1, x0_sys2;  // dock initial states
  DfVector xi0;               // undock initial state (of the merged system)
  InputFn u1, u2, w;          // optional inputs for sys1 / sys2 / target
};

Trajectory dock(const DockingScenario& sc, double tol = kDefaultTol);
Trajectory undock(const DockingScenario& sc, double tol = kDefaultTol);

}  // namespace dimfree
