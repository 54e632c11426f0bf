#pragma once

// Least-squares projection of linear (control) systems across dimensions,
// lifted linear vector fields and flows, controllability/observability,
// and minimum-energy steering via the controllability Gramian.

#include <functional>
#include <optional>
#include <vector>

#include "dimfree/esdd.hpp"
#include "dimfree/projector.hpp"

namespace dimfree {

// Least-squares solution of A_pi * Pi ~= Pi * A for the canonical projector
// R^n -> R^m (branching on n vs m as the normal equations require).
Matrix project_A(const Matrix& a, int m);

// Same, with explicit projector matrices (used for dimension-varying stages
// where A maps R^{n} to R^{n'}; pi_out is m x n', pi_in is m x n).
Matrix project_A_with(const Matrix& pi_out, const Matrix& pi_in, const Matrix& a);

// Output-map projection; the branch compares n with the output count p.
Matrix project_C(const Matrix& c, int n, int m);
Matrix project_C_with(const Matrix& pi_in, const Matrix& c);

struct LinearStage {
  Matrix a;  // maps R^{n_in} -> R^{n_out}
  Matrix b;  // n_out x input_dim, optional (0x0 when absent)
  Matrix c;  // p x n_in, optional
};

struct VaryingLinearSystem {
  std::vector<LinearStage> stages;  // applied cyclically per step
};

// Per-stage projection to constant dimension m.
std::vector<LinearStage> project_varying(const VaryingLinearSystem& sys, int m);

// A_k = (1/k)(I_m (x) J_k) A (I_m (x) J_k^T): the lift of x' = Ax to R^{km}.
Matrix lift_linear_vf(const Matrix& a, int k);

// Row map c on R^m expressed on leaf R^s.
Eigen::RowVectorXd lift_linear_function(const Eigen::RowVectorXd& c, int s);

Matrix matrix_exp(const Matrix& a, double t = 1.0);

Matrix ctrb(const Matrix& a, const Matrix& b);
Matrix obsv(const Matrix& a, const Matrix& c);
int numeric_rank(const Matrix& m);

// Gramian W(T) = integral of e^{-A tau} B B^T e^{-A^T tau} over [0, T].
Matrix gramian_quadrature(const Matrix& a, const Matrix& b, double T, double rel_tol = 1e-10);
// Closed form when A is nilpotent (finite exponential series).
std::optional<Matrix> gramian_nilpotent(const Matrix& a, const Matrix& b, double T);

struct MinEnergyControl {
  Matrix gramian;
  double T = 0;
  std::function<Vector(double)> u;
};

MinEnergyControl min_energy_control(const Matrix& a, const Matrix& b, const Vector& x0,
                                    const Vector& xT, double T);

}  // namespace dimfree
