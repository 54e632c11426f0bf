#include <doctest.h>

#include "dimfree/esdd.hpp"
#include "helpers.hpp"

using namespace dimfree;
using testutil::random_vec;

TEST_CASE("kronecker product basics") {
  Matrix i2 = Matrix::Identity(2, 2);
  Matrix j2 = Matrix::Ones(2, 1);
  Matrix k = kron(i2, j2);
  Matrix expect(4, 2);
  expect << 1, 0, 1, 0, 0, 1, 0, 1;
  CHECK((k - expect).cwiseAbs().maxCoeff() == 0);

  Matrix a(2, 3);
  a << 1, 2, 3, 4, 5, 6;
  Matrix one(1, 1);
  one << 1;
  CHECK((kron(a, one) - a).cwiseAbs().maxCoeff() == 0);

  Matrix row(1, 2);
  row << 1, 2;
  Matrix col(2, 1);
  col << 3, 4;
  Matrix kp = kron(row, col);  // 2x2: [[3,6],[4,8]]
  Matrix kexp(2, 2);
  kexp << 3, 6, 4, 8;
  CHECK((kp - kexp).cwiseAbs().maxCoeff() == 0);
}

TEST_CASE("semi-tensor product") {
  std::mt19937 rng(7);
  Matrix a = testutil::random_mat(rng, 3, 4);
  Matrix b = testutil::random_mat(rng, 4, 2);
  CHECK((stp(a, b) - a * b).cwiseAbs().maxCoeff() == doctest::Approx(0).epsilon(1e-14));

  Matrix r1(1, 2), r2(1, 2);
  r1 << 1, 2;
  r2 << 3, 4;
  // (1x2)(2x4 inflation) -> (a1 b1, a2 b1, a1 b2, a2 b2)
  Matrix got = stp(r1, r2);
  Matrix expect(1, 4);
  expect << 3, 6, 4, 8;
  CHECK((got - expect).cwiseAbs().maxCoeff() == 0);

  Matrix col(4, 1);
  col << 1, 2, 3, 4;
  CHECK((stp(Matrix::Identity(2, 2), col) - col).cwiseAbs().maxCoeff() == 0);
}

TEST_CASE("cross-dimensional addition") {
  DfVector a{1, 2}, b{3};
  Vector sum = vplus(a, b).coeffs;
  CHECK(sum.size() == 2);
  CHECK(sum[0] == 4);
  CHECK(sum[1] == 5);

  DfVector x{1.5, -2, 0.25}, zero{0.0};
  CHECK((vplus(x, zero).coeffs - x.coeffs).cwiseAbs().maxCoeff() == 0);

  DfVector p{1, 0}, q{0, 1, 0};
  Vector s = vplus(p, q).coeffs;
  Vector expect(6);
  expect << 1, 1, 2, 1, 0, 0;
  CHECK((s - expect).cwiseAbs().maxCoeff() == 0);
}

TEST_CASE("inner product, norm, distance") {
  for (int n = 1; n <= 6; ++n) {
    DfVector jn{Vector::Ones(n)};
    CHECK(inner(jn, jn) == doctest::Approx(1).epsilon(1e-15));
    DfVector cn{Vector::Constant(n, -2.5)};
    CHECK(norm(cn) == doctest::Approx(2.5).epsilon(1e-15));
  }
  CHECK(inner(DfVector{1, 0}, DfVector{1, 0, 0}) == doctest::Approx(1.0 / 3).epsilon(1e-15));
  CHECK(distance(DfVector{1, 0}, DfVector{0, 1}) == doctest::Approx(1.0).epsilon(1e-15));

  std::mt19937 rng(11);
  for (int it = 0; it < 50; ++it) {
    DfVector x{random_vec(rng, 1 + (int)(rng() % 5))};
    CHECK(distance(x, lift(x, 1 + (int)(rng() % 4))) == doctest::Approx(0).epsilon(1e-12));
  }
}

TEST_CASE("representative independence and translation invariance") {
  std::mt19937 rng(23);
  for (int it = 0; it < 100; ++it) {
    DfVector x{random_vec(rng, 1 + (int)(rng() % 6))};
    DfVector y{random_vec(rng, 1 + (int)(rng() % 6))};
    int s = 1 + (int)(rng() % 6);
    CHECK(inner(x, y) == doctest::Approx(inner(lift(x, s), lift(y, s))).epsilon(1e-12));

    DfVector z{random_vec(rng, 1 + (int)(rng() % 6))};
    CHECK(distance(vplus(x, z), vplus(y, z)) == doctest::Approx(distance(x, y)).epsilon(1e-12));
  }
}

TEST_CASE("equivalence") {
  CHECK(equivalent(DfVector{1, 2}, DfVector{1, 1, 2, 2}));
  CHECK_FALSE(equivalent(DfVector{1, 2}, DfVector{2, 1}));
  std::mt19937 rng(5);
  for (int it = 0; it < 20; ++it) {
    DfVector x{random_vec(rng, 1 + (int)(rng() % 6))};
    CHECK(equivalent(x, x));
    DfVector y = lift(x, 2), z = lift(x, 3);
    // relation properties on exact lifts
    CHECK(equivalent(x, y, 0.0));
    CHECK(equivalent(y, x, 0.0));
    CHECK(equivalent(y, z, 0.0));
    CHECK(equivalent(x, z, 0.0));
  }
}

TEST_CASE("reduce") {
  EquivClass c = reduce(DfVector{3.5, 3.5, -1, -1});
  CHECK(c.dim() == 2);
  CHECK(c.rep.coeffs[0] == 3.5);
  CHECK(c.rep.coeffs[1] == -1);

  CHECK(reduce(DfVector{1, 2, 3}).dim() == 3);
  CHECK(reduce(DfVector{Vector::Ones(6)}).dim() == 1);
  CHECK(reduce(DfVector{Vector::Zero(8)}).dim() == 1);

  std::mt19937 rng(31);
  for (int it = 0; it < 30; ++it) {
    DfVector x{random_vec(rng, 1 + (int)(rng() % 8))};
    EquivClass r = reduce(x);
    EquivClass again = reduce(r.rep);
    CHECK(again.dim() == r.dim());
    CHECK((again.rep.coeffs - r.rep.coeffs).cwiseAbs().maxCoeff() == 0);
  }
}

TEST_CASE("lift round trips") {
  DfVector x{1, 2};
  Vector l = lift(x, 2).coeffs;
  Vector expect(4);
  expect << 1, 1, 2, 2;
  CHECK((l - expect).cwiseAbs().maxCoeff() == 0);
  CHECK((lift(x, 1).coeffs - x.coeffs).cwiseAbs().maxCoeff() == 0);
  EquivClass back = reduce(lift(x, 3));
  CHECK(back.dim() == 2);
  CHECK((back.rep.coeffs - x.coeffs).cwiseAbs().maxCoeff() == 0);
}

TEST_CASE("gcd and lcm vectors") {
  DfVector a{1, 2}, b{1, 1, 2, 2};
  Vector g = gcd_vec(a, b).coeffs;
  CHECK(g.size() == 2);
  CHECK(g[0] == 1);
  CHECK(g[1] == 2);

  DfVector x4 = lift(a, 2), x6 = lift(a, 3);
  DfVector l = lcm_vec(x4, x6);
  CHECK(l.dim() == 12);
  CHECK(equivalent(l, a, 0.0));

  DfVector c{0.5, 1, -1};
  CHECK((gcd_vec(c, c).coeffs - c.coeffs).cwiseAbs().maxCoeff() == 0);

  CHECK_THROWS_AS(gcd_vec(DfVector{1, 2}, DfVector{2, 1}), NotEquivalent);
  CHECK_THROWS_AS(lcm_vec(DfVector{1, 2}, DfVector{2, 1}), NotEquivalent);
}

TEST_CASE("class arithmetic") {
  EquivClass a = reduce(DfVector{1, 2});
  EquivClass b = reduce(DfVector{1, 1, 2, 2});
  EquivClass sum = class_add(a, b);
  CHECK(sum.dim() == 2);
  CHECK(sum.rep.coeffs[0] == 2);
  CHECK(sum.rep.coeffs[1] == 4);

  EquivClass z = class_scale(a, 0);
  CHECK(z.dim() == 1);
  CHECK(z.rep.coeffs[0] == 0);

  EquivClass same = class_add(a, z);
  CHECK(same.dim() == a.dim());
  CHECK((same.rep.coeffs - a.rep.coeffs).cwiseAbs().maxCoeff() == 0);
}

TEST_CASE("vplus associativity up to equivalence") {
  std::mt19937 rng(43);
  for (int it = 0; it < 30; ++it) {
    DfVector x{random_vec(rng, 1 + (int)(rng() % 4))};
    DfVector y{random_vec(rng, 1 + (int)(rng() % 4))};
    DfVector z{random_vec(rng, 1 + (int)(rng() % 4))};
    DfVector lhs = vplus(vplus(x, y), z);
    DfVector rhs = vplus(x, vplus(y, z));
    CHECK(distance(lhs, rhs) == doctest::Approx(0).epsilon(1e-12));
    CHECK(distance(vplus(x, y), vplus(y, x)) == doctest::Approx(0).epsilon(1e-12));
  }
}
