#pragma once

// Minimal exact rational arithmetic, enough for projector identities.
// Denominators stay tiny (products of leaf dimensions), so int64 is plenty.

#include <cstdint>
#include <numeric>
#include <vector>

namespace dimfree {

struct Rat {
  std::int64_t num = 0;
  std::int64_t den = 1;

  Rat() = default;
  Rat(std::int64_t n) : num(n) {}
  Rat(std::int64_t n, std::int64_t d) : num(n), den(d) { normalize(); }

  void normalize() {
    if (den < 0) { num = -num; den = -den; }
    std::int64_t g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) { num /= g; den /= g; }
    if (num == 0) den = 1;
  }

  friend Rat operator+(Rat a, Rat b) { return Rat(a.num * b.den + b.num * a.den, a.den * b.den); }
  friend Rat operator-(Rat a, Rat b) { return Rat(a.num * b.den - b.num * a.den, a.den * b.den); }
  friend Rat operator*(Rat a, Rat b) { return Rat(a.num * b.num, a.den * b.den); }
  friend Rat operator/(Rat a, Rat b) { return Rat(a.num * b.den, a.den * b.num); }
  friend bool operator==(Rat a, Rat b) { return a.num == b.num && a.den == b.den; }

  double to_double() const { return static_cast<double>(num) / static_cast<double>(den); }
};

struct RatMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<Rat> a;

  RatMatrix() = default;
  RatMatrix(int r, int c) : rows(r), cols(c), a((std::size_t)r * c) {}

  Rat& at(int i, int j) { return a[(std::size_t)i * cols + j]; }
  const Rat& at(int i, int j) const { return a[(std::size_t)i * cols + j]; }

  static RatMatrix identity(int n) {
    RatMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = Rat(1);
    return m;
  }

  RatMatrix operator*(const RatMatrix& o) const {
    RatMatrix out(rows, o.cols);
    for (int i = 0; i < rows; ++i)
      for (int k = 0; k < cols; ++k) {
        Rat v = at(i, k);
        if (v.num == 0) continue;
        for (int j = 0; j < o.cols; ++j) out.at(i, j) = out.at(i, j) + v * o.at(k, j);
      }
    return out;
  }

  friend bool operator==(const RatMatrix& x, const RatMatrix& y) {
    return x.rows == y.rows && x.cols == y.cols && x.a == y.a;
  }
};

}  // namespace dimfree
