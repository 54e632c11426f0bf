#pragma once

// Arithmetic on the union of Euclidean spaces of every dimension:
// cross-dimensional addition, weighted inner product, equivalence by
// all-ones replication, and reduction to the smallest representative.

#include <initializer_list>
#include <numeric>

#include <Eigen/Dense>

#include "dimfree/errors.hpp"

namespace dimfree {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

inline constexpr double kDefaultTol = 1e-9;

inline long lcm_of(long a, long b) { return a / std::gcd(a, b) * b; }

// A vector that knows its own dimension; the element of V = ∪ R^n.
struct DfVector {
  Vector coeffs;

  DfVector() = default;
  explicit DfVector(Vector c) : coeffs(std::move(c)) {}
  DfVector(std::initializer_list<double> xs) : coeffs(Eigen::Map<const Vector>(xs.begin(), (long)xs.size())) {}

  int dim() const { return static_cast<int>(coeffs.size()); }
};

// A point of the quotient space: the unique smallest representative.
struct EquivClass {
  DfVector rep;
  int dim() const { return rep.dim(); }
};

Matrix kron(const Matrix& a, const Matrix& b);
// Semi-tensor product: both factors Kronecker-inflated to the lcm dimension.
Matrix stp(const Matrix& a, const Matrix& b);

// x ⊗ J_k : replicate every coordinate k times.
DfVector lift(const DfVector& x, int k);

// Cross-dimensional addition on the lcm leaf.
DfVector vplus(const DfVector& x, const DfVector& y);
DfVector vminus(const DfVector& x, const DfVector& y);

// Weighted inner product ⟨x,y⟩ = (1/t)·⟨x⊗J, y⊗J⟩, t = lcm of the dims.
double inner(const DfVector& x, const DfVector& y);
double norm(const DfVector& x);
double distance(const DfVector& x, const DfVector& y);

bool equivalent(const DfVector& x, const DfVector& y, double tol = kDefaultTol);

// Smallest element of the class of x: largest k with x = y ⊗ J_k.
EquivClass reduce(const DfVector& x, double tol = kDefaultTol);

// Greatest common divisor / least common multiple vectors of two
// equivalent vectors (throws NotEquivalent otherwise).
DfVector gcd_vec(const DfVector& x, const DfVector& y, double tol = kDefaultTol);
DfVector lcm_vec(const DfVector& x, const DfVector& y, double tol = kDefaultTol);

EquivClass class_add(const EquivClass& a, const EquivClass& b, double tol = kDefaultTol);
EquivClass class_scale(const EquivClass& a, double r, double tol = kDefaultTol);

}  // namespace dimfree
