#include "dimfree/esdd.hpp"

#include <cmath>
#include <vector>

namespace dimfree {

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (long i = 0; i < a.rows(); ++i)
    for (long j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

Matrix stp(const Matrix& a, const Matrix& b) {
  long t = lcm_of(a.cols(), b.rows());
  Matrix ia = Matrix::Identity(t / a.cols(), t / a.cols());
  Matrix ib = Matrix::Identity(t / b.rows(), t / b.rows());
  return kron(a, ia) * kron(b, ib);
}

DfVector lift(const DfVector& x, int k) {
  Vector out(x.dim() * (long)k);
  for (int i = 0; i < x.dim(); ++i) out.segment((long)i * k, k).setConstant(x.coeffs[i]);
  return DfVector{std::move(out)};
}

DfVector vplus(const DfVector& x, const DfVector& y) {
  long t = lcm_of(x.dim(), y.dim());
  DfVector xs = lift(x, (int)(t / x.dim()));
  DfVector ys = lift(y, (int)(t / y.dim()));
  return DfVector{xs.coeffs + ys.coeffs};
}

DfVector vminus(const DfVector& x, const DfVector& y) {
  return vplus(x, DfVector{Vector(-y.coeffs)});
}

double inner(const DfVector& x, const DfVector& y) {
  long t = lcm_of(x.dim(), y.dim());
  DfVector xs = lift(x, (int)(t / x.dim()));
  DfVector ys = lift(y, (int)(t / y.dim()));
  return xs.coeffs.dot(ys.coeffs) / (double)t;
}

double norm(const DfVector& x) { return std::sqrt(std::max(0.0, inner(x, x))); }

double distance(const DfVector& x, const DfVector& y) { return norm(vminus(x, y)); }

namespace {

double scale_of(const Vector& v) {
  double m = v.size() ? v.cwiseAbs().maxCoeff() : 0.0;
  return std::max(1.0, m);
}

// x consists of dim/k blocks of k equal entries each?
bool block_constant(const Vector& v, int k, double tol) {
  for (long i = 0; i < v.size(); i += k)
    for (long j = 1; j < k; ++j)
      if (std::abs(v[i + j] - v[i]) > tol) return false;
  return true;
}

}  // namespace

bool equivalent(const DfVector& x, const DfVector& y, double tol) {
  long t = lcm_of(x.dim(), y.dim());
  DfVector xs = lift(x, (int)(t / x.dim()));
  DfVector ys = lift(y, (int)(t / y.dim()));
  double s = std::max(scale_of(xs.coeffs), scale_of(ys.coeffs));
  return (xs.coeffs - ys.coeffs).cwiseAbs().maxCoeff() <= tol * s;
}

EquivClass reduce(const DfVector& x, double tol) {
  int n = x.dim();
  double abstol = tol * scale_of(x.coeffs);
  for (int k = n; k >= 1; --k) {
    if (n % k != 0) continue;
    if (!block_constant(x.coeffs, k, abstol)) continue;
    Vector rep(n / k);
    for (int i = 0; i < n / k; ++i) rep[i] = x.coeffs[(long)i * k];
    return EquivClass{DfVector{std::move(rep)}};
  }
  return EquivClass{x};  // unreachable: k = 1 always matches
}

DfVector gcd_vec(const DfVector& x, const DfVector& y, double tol) {
  if (!equivalent(x, y, tol)) throw NotEquivalent("gcd_vec: inputs are not equivalent");
  EquivClass base = reduce(x, tol);
  long d = base.dim();
  long g = std::gcd(x.dim() / d, y.dim() / d);
  return lift(base.rep, (int)g);
}

DfVector lcm_vec(const DfVector& x, const DfVector& y, double tol) {
  if (!equivalent(x, y, tol)) throw NotEquivalent("lcm_vec: inputs are not equivalent");
  EquivClass base = reduce(x, tol);
  long d = base.dim();
  long l = lcm_of(x.dim() / d, y.dim() / d);
  return lift(base.rep, (int)l);
}

EquivClass class_add(const EquivClass& a, const EquivClass& b, double tol) {
  return reduce(vplus(a.rep, b.rep), tol);
}

EquivClass class_scale(const EquivClass& a, double r, double tol) {
  return reduce(DfVector{Vector(r * a.rep.coeffs)}, tol);
}

}  // namespace dimfree
