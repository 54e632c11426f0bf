#pragma once

#include <random>

#include "dimfree/esdd.hpp"

namespace testutil {

inline dimfree::Vector random_vec(std::mt19937& rng, int n, double lo = -2, double hi = 2) {
  std::uniform_real_distribution<double> d(lo, hi);
  dimfree::Vector v(n);
  for (int i = 0; i < n; ++i) v[i] = d(rng);
  return v;
}

inline dimfree::Matrix random_mat(std::mt19937& rng, int r, int c, double lo = -2, double hi = 2) {
  std::uniform_real_distribution<double> d(lo, hi);
  dimfree::Matrix m(r, c);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < c; ++j) m(i, j) = d(rng);
  return m;
}

}  // namespace testutil
