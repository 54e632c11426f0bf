#include "dimfree/fields.hpp"

#include <cmath>
#include <limits>

namespace dimfree {

ScalarField ScalarField::from_expr(const Expr& e, int dim) {
  return ScalarField{dim, [e](const Vector& x) { return e.eval(x); }};
}

VectorField VectorField::from_exprs(const ExprVector& v) {
  return VectorField{v.arity, v.input_arity,
                     [v](const Vector& x, const Vector& u, double t) { return v.eval(x, u, t); }};
}

CovectorField CovectorField::from_exprs(const ExprVector& v) {
  return CovectorField{v.arity, [v](const Vector& x) { return v.eval(x); }};
}

double extend_function(const ScalarField& f, const EquivClass& a) {
  return f.fn(project(a.rep, f.gen_dim).coeffs);
}

bool lift_is_exact(const DfVector& y, int gen_dim) { return y.dim() % gen_dim == 0; }

DfVector lift_vector_field(const VectorField& X, const DfVector& y, const Vector& u, double t) {
  int q = y.dim(), m = X.gen_dim;
  if (q == m) return DfVector{X.fn(y.coeffs, u, t)};
  Matrix down = build_projector(q, m).matrix;  // m x q
  Matrix up = build_projector(m, q).matrix;    // q x m
  return DfVector{up * X.fn(down * y.coeffs, u, t)};
}

DfVector lift_covector_field(const CovectorField& w, const DfVector& y) {
  int q = y.dim(), m = w.gen_dim;
  if (q == m) return DfVector{w.fn(y.coeffs)};
  Matrix down = build_projector(q, m).matrix;
  return DfVector{Vector((w.fn(down * y.coeffs).transpose() * down).transpose())};
}

double pair(const CovectorField& w, const VectorField& X, const EquivClass& a, int k) {
  if (w.gen_dim != X.gen_dim)
    throw DimensionMismatch("pair: covector and vector generators have different dimensions");
  long leaf = (long)k * lcm_of(a.dim(), w.gen_dim);
  DfVector y = lift(a.rep, (int)(leaf / a.dim()));
  DfVector row = lift_covector_field(w, y);
  DfVector col = lift_vector_field(X, y);
  return row.coeffs.dot(col.coeffs);
}

Matrix jacobian_fd(const std::function<Vector(const Vector&)>& f, const Vector& z) {
  const double cbrt_eps = std::cbrt(std::numeric_limits<double>::epsilon());
  Vector f0 = f(z);
  Matrix jac(f0.size(), z.size());
  for (long j = 0; j < z.size(); ++j) {
    double h = cbrt_eps * std::max(1.0, std::abs(z[j]));
    Vector zp = z, zm = z;
    zp[j] += h;
    zm[j] -= h;
    jac.col(j) = (f(zp) - f(zm)) / (2 * h);
  }
  return jac;
}

VectorField lie_bracket(const VectorField& X, const VectorField& Y) {
  long m = lcm_of(X.gen_dim, Y.gen_dim);
  auto xm = [X](const Vector& z) {
    return lift_vector_field(X, DfVector{z}).coeffs;
  };
  auto ym = [Y](const Vector& z) {
    return lift_vector_field(Y, DfVector{z}).coeffs;
  };
  auto bracket = [xm, ym](const Vector& z, const Vector&, double) {
    return Vector(jacobian_fd(ym, z) * xm(z) - jacobian_fd(xm, z) * ym(z));
  };
  return VectorField{(int)m, 0, bracket};
}

}  // namespace dimfree
