#include "dimfree/projector.hpp"

#include <algorithm>

namespace dimfree {

RatMatrix build_projector_exact(int n, int m) {
  long t = lcm_of(n, m);
  long alpha = t / n, beta = t / m;
  RatMatrix p(m, n);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < n; ++j) {
      // Row i averages the slice [i*beta, (i+1)*beta) of the lcm leaf;
      // source coordinate j occupies [j*alpha, (j+1)*alpha).
      long lo = std::max((long)i * beta, (long)j * alpha);
      long hi = std::min((long)(i + 1) * beta, (long)(j + 1) * alpha);
      if (hi > lo) p.at(i, j) = Rat(hi - lo, beta);
    }
  }
  return p;
}

Projector build_projector(int n, int m) {
  RatMatrix exact = build_projector_exact(n, m);
  Matrix mat(m, n);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < n; ++j) mat(i, j) = exact.at(i, j).to_double();
  return Projector{n, m, std::move(mat)};
}

DfVector project(const DfVector& x, int m) {
  return DfVector{build_projector(x.dim(), m).matrix * x.coeffs};
}

DfVector project_class(const EquivClass& a, int m) { return project(a.rep, m); }

}  // namespace dimfree
