#pragma once

// Cross-dimensional least-squares projection R^n -> R^m. The matrix is a
// block-averaging operator: replicate to the lcm leaf, then average back.

#include "dimfree/esdd.hpp"
#include "dimfree/rational.hpp"

namespace dimfree {

struct Projector {
  int src_dim = 0;  // n
  int dst_dim = 0;  // m
  Matrix matrix;    // m x n, row-stochastic
};

// Exact rational form of the same matrix: entry (i,j) = overlap(i,j) / beta
// with t = lcm(n,m), alpha = t/n, beta = t/m.
RatMatrix build_projector_exact(int n, int m);
Projector build_projector(int n, int m);

DfVector project(const DfVector& x, int m);
DfVector project_class(const EquivClass& a, int m);

}  // namespace dimfree
