#pragma once

// Tensor fields of order (r,s) <= (2,2) represented by structure matrices,
// their evaluation by semi-tensor product chains, cross-dimensional lifting,
// and the Riemannian / symplectic predicates for quadratic forms.

#include <functional>
#include <vector>

#include "dimfree/esdd.hpp"
#include "dimfree/expr.hpp"

namespace dimfree {

struct TensorField {
  int gen_dim = 0;
  int cov_order = 0;     // r: number of vector arguments
  int contra_order = 0;  // s: number of covector arguments
  std::vector<Expr> gamma;  // row-major, m^s rows by m^r columns

  Matrix structure(const Vector& x) const;
};

// Evaluation w_s ... w_1 * Gamma * X_1 ... X_r with STP products.
double eval_structure(const Matrix& gamma, const std::vector<Vector>& xs,
                      const std::vector<Vector>& ws);
double eval_tensor(const TensorField& tf, const Vector& x, const std::vector<Vector>& xs,
                   const std::vector<Vector>& ws);

using StructureFn = std::function<Matrix(const Vector&)>;

// Structure-matrix evaluator of the lift to R^{k*m}.
StructureFn lift_tensor(const TensorField& tf, int k);

struct QuadForm {
  int gen_dim = 0;
  std::vector<Expr> entries;  // row-major m x m

  Matrix eval(const Vector& x) const;
};

// M_q(y) = P^T M(P y) P with P the projector R^q -> R^m.
StructureFn lift_quadratic_form(const QuadForm& q, int leaf_dim);

bool is_symmetric_at(const QuadForm& q, const std::vector<Vector>& pts, double tol = 1e-10);
bool is_skew_at(const QuadForm& q, const std::vector<Vector>& pts, double tol = 1e-10);

// Cyclic coefficient condition d_i g^{jk} + d_j g^{ki} + d_k g^{ij} = 0,
// partials by central differences. Requires skewness.
bool is_closed(const QuadForm& q, const std::vector<Vector>& pts, double tol = 1e-6);

bool is_riemannian_at(const QuadForm& q, const std::vector<Vector>& pts, double tol_pd = 1e-9);
bool is_symplectic_at(const QuadForm& q, const std::vector<Vector>& pts, double tol_ns = 1e-9);

}  // namespace dimfree
