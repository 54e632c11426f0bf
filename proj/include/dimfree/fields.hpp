#pragma once

// Scalar functions, vector fields, and covector fields given by a
// finite-dimensional generator, lifted to other dimensions through the
// projection operators. Lie brackets use finite-difference Jacobians.

#include <functional>

#include "dimfree/esdd.hpp"
#include "dimfree/expr.hpp"
#include "dimfree/projector.hpp"

namespace dimfree {

struct ScalarField {
  int gen_dim = 0;
  std::function<double(const Vector&)> fn;

  static ScalarField from_expr(const Expr& e, int dim);
};

struct VectorField {
  int gen_dim = 0;
  int input_dim = 0;
  std::function<Vector(const Vector&, const Vector&, double)> fn;

  static VectorField from_exprs(const ExprVector& v);

  Vector operator()(const Vector& x, const Vector& u = Vector(), double t = 0) const {
    return fn(x, u, t);
  }
};

struct CovectorField {
  int gen_dim = 0;
  std::function<Vector(const Vector&)> fn;  // returns row coefficients

  static CovectorField from_exprs(const ExprVector& v);
};

// f evaluated through the class representative: f(project(rep, gen_dim)).
double extend_function(const ScalarField& f, const EquivClass& a);

// Value of the lifted field on the leaf R^{y.dim}. Exact when y.dim is a
// multiple of the generator dimension, an approximation otherwise.
DfVector lift_vector_field(const VectorField& X, const DfVector& y,
                           const Vector& u = Vector(), double t = 0);
bool lift_is_exact(const DfVector& y, int gen_dim);

DfVector lift_covector_field(const CovectorField& w, const DfVector& y);

// <lifted w, lifted X> on the k-th common leaf of a and the generators.
double pair(const CovectorField& w, const VectorField& X, const EquivClass& a, int k);

// Central finite-difference Jacobian of f at z.
Matrix jacobian_fd(const std::function<Vector(const Vector&)>& f, const Vector& z);

// Bracket generator on the lcm leaf of the two generator dimensions.
VectorField lie_bracket(const VectorField& X, const VectorField& Y);

}  // namespace dimfree
