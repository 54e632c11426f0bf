#include <doctest.h>

#include <cmath>

#include "dimfree/linsys.hpp"
#include "helpers.hpp"

using namespace dimfree;
using testutil::random_mat;
using testutil::random_vec;

TEST_CASE("matrix exponential") {
  CHECK((matrix_exp(Matrix::Zero(3, 3)) - Matrix::Identity(3, 3)).cwiseAbs().maxCoeff() <= 1e-15);
  Matrix d = Matrix::Zero(2, 2);
  d(0, 0) = 1;
  d(1, 1) = -2;
  Matrix e = matrix_exp(d, 0.5);
  CHECK(e(0, 0) == doctest::Approx(std::exp(0.5)).epsilon(1e-12));
  CHECK(e(1, 1) == doctest::Approx(std::exp(-1.0)).epsilon(1e-12));
  CHECK(e(0, 1) == doctest::Approx(0));

  // rotation block
  Matrix r(2, 2);
  r << 0, -1, 1, 0;
  Matrix er = matrix_exp(r, M_PI / 2);
  CHECK(er(0, 0) == doctest::Approx(0).epsilon(1e-10));
  CHECK(er(0, 1) == doctest::Approx(-1).epsilon(1e-12));
  CHECK(er(1, 0) == doctest::Approx(1).epsilon(1e-12));

  // semigroup property on a random matrix
  std::mt19937 rng(3);
  Matrix a = random_mat(rng, 4, 4);
  Matrix lhs = matrix_exp(a, 0.7) * matrix_exp(a, 0.3);
  CHECK((lhs - matrix_exp(a, 1.0)).cwiseAbs().maxCoeff() <= 1e-10);
}

TEST_CASE("linear field lift and flow commutation") {
  std::mt19937 rng(11);
  for (int it = 0; it < 10; ++it) {
    int m = 2 + (int)(rng() % 3), k = 2 + (int)(rng() % 2);
    Matrix a = random_mat(rng, m, m, -1, 1);
    Matrix ak = lift_linear_vf(a, k);
    REQUIRE(ak.rows() == k * m);
    Vector x0 = random_vec(rng, m);
    for (double t : {0.1, 1.0, 5.0}) {
      Vector big = matrix_exp(ak, t) * lift(DfVector{x0}, k).coeffs;
      Vector small = lift(DfVector{Vector(matrix_exp(a, t) * x0)}, k).coeffs;
      CHECK((big - small).cwiseAbs().maxCoeff() <= 1e-8);
    }
  }
}

TEST_CASE("lifted field agrees with projector sandwich") {
  std::mt19937 rng(19);
  Matrix a = random_mat(rng, 2, 2);
  Matrix ak = lift_linear_vf(a, 3);
  Matrix up = build_projector(2, 6).matrix;
  Matrix down = build_projector(6, 2).matrix;
  CHECK((ak - up * a * down).cwiseAbs().maxCoeff() <= 1e-13);
}

TEST_CASE("linear system projection identities") {
  std::mt19937 rng(23);
  // projecting to the same dimension returns A itself
  Matrix a = random_mat(rng, 4, 4);
  CHECK((project_A(a, 4) - a).cwiseAbs().maxCoeff() <= 1e-12);
  // a lifted system projects back to its generator
  Matrix g = random_mat(rng, 2, 2);
  CHECK((project_A(lift_linear_vf(g, 3), 2) - g).cwiseAbs().maxCoeff() <= 1e-10);
  // upward projection then downward recovers A when m is a multiple of n
  Matrix up = project_A(g, 4);
  CHECK((project_A(up, 2) - g).cwiseAbs().maxCoeff() <= 1e-10);
}

TEST_CASE("output map projection") {
  std::mt19937 rng(29);
  // C row lifted from a generator row projects back exactly
  Eigen::RowVectorXd c(2);
  c << 2, -2;
  Eigen::RowVectorXd c4 = lift_linear_function(c, 4);
  // value preserved on replicated states
  Vector x = random_vec(rng, 2);
  CHECK((c4 * lift(DfVector{x}, 2).coeffs)(0) == doctest::Approx((c * x)(0)).epsilon(1e-12));

  Matrix cm(1, 4);
  cm = c4;
  Matrix back = project_C(cm, 4, 2);
  CHECK((back - Matrix(c)).cwiseAbs().maxCoeff() <= 1e-10);
}

TEST_CASE("dimension-varying schedule projection") {
  // two stages: R^4 -> R^5 -> R^4 cyclically
  std::mt19937 rng(31);
  VaryingLinearSystem sys;
  LinearStage s1, s2;
  s1.a = random_mat(rng, 5, 4);
  s1.b = random_mat(rng, 5, 2);
  s1.c = random_mat(rng, 2, 4);
  s2.a = random_mat(rng, 4, 5);
  s2.b = random_mat(rng, 4, 2);
  s2.c = random_mat(rng, 2, 5);
  sys.stages = {s1, s2};
  std::vector<LinearStage> proj = project_varying(sys, 3);
  REQUIRE(proj.size() == 2);
  for (const auto& st : proj) {
    CHECK(st.a.rows() == 3);
    CHECK(st.a.cols() == 3);
    CHECK(st.b.rows() == 3);
    CHECK(st.c.cols() == 3);
  }

  // mismatched chain is rejected
  VaryingLinearSystem bad;
  LinearStage b1, b2;
  b1.a = random_mat(rng, 5, 4);
  b2.a = random_mat(rng, 4, 3);  // expects input dim 5
  bad.stages = {b1, b2};
  CHECK_THROWS_AS(project_varying(bad, 3), ScheduleMismatch);
}

TEST_CASE("controllability and observability") {
  Matrix a(2, 2), b(2, 1), c(1, 2);
  a << 0, 1, 0, 0;
  b << 0, 1;
  c << 1, 0;
  CHECK(numeric_rank(ctrb(a, b)) == 2);
  CHECK(numeric_rank(obsv(a, c)) == 2);

  Matrix b0 = Matrix::Zero(2, 1);
  CHECK(numeric_rank(ctrb(a, b0)) == 0);

  // uncontrollable: b aligned with an invariant subspace
  Matrix a2 = Matrix::Identity(2, 2);
  Matrix b2(2, 1);
  b2 << 1, 0;
  CHECK(numeric_rank(ctrb(a2, b2)) == 1);
}

TEST_CASE("gramian: quadrature matches nilpotent closed form") {
  // double integrator: A = [[0,1],[0,0]] is nilpotent
  Matrix a(2, 2), b(2, 1);
  a << 0, 1, 0, 0;
  b << 0, 1;
  auto closed = gramian_nilpotent(a, b, 1.0);
  REQUIRE(closed.has_value());
  Matrix quad = gramian_quadrature(a, b, 1.0);
  CHECK((*closed - quad).cwiseAbs().maxCoeff() <= 1e-10);
  // W(1) for this pair: integral of (-tau,1)(-tau,1)^T
  CHECK((*closed)(0, 0) == doctest::Approx(1.0 / 3).epsilon(1e-12));
  CHECK((*closed)(0, 1) == doctest::Approx(-0.5).epsilon(1e-12));
  CHECK((*closed)(1, 1) == doctest::Approx(1).epsilon(1e-12));

  // non-nilpotent A has no closed form here but quadrature still works
  Matrix as(1, 1), bs(1, 1);
  as << -1;
  bs << 1;
  CHECK_FALSE(gramian_nilpotent(as, bs, 1.0).has_value());
  Matrix w = gramian_quadrature(as, bs, 1.0);
  // integral of e^{2 tau} over [0,1] = (e^2 - 1)/2
  CHECK(w(0, 0) == doctest::Approx((std::exp(2.0) - 1) / 2).epsilon(1e-9));
}

TEST_CASE("minimum-energy steering reaches the target") {
  std::mt19937 rng(37);
  Matrix a(2, 2), b(2, 1);
  a << 0, 1, 0, 0;
  b << 0, 1;
  Vector x0 = Vector::Zero(2), xT(2);
  xT << 1, 1;
  MinEnergyControl mec = min_energy_control(a, b, x0, xT, 1.0);

  // u(t) = 4 - 6t for this steering problem
  CHECK(mec.u(0.0)[0] == doctest::Approx(4).epsilon(1e-8));
  CHECK(mec.u(1.0)[0] == doctest::Approx(-2).epsilon(1e-8));
  CHECK(mec.u(0.5)[0] == doctest::Approx(1).epsilon(1e-8));

  // forward integrate with RK4 and verify the endpoint
  Vector x = x0;
  double t = 0;
  const double dt = 1e-4;
  auto rhs = [&](double tt, const Vector& xx) -> Vector { return a * xx + b * mec.u(tt); };
  for (int i = 0; i < 10000; ++i) {
    Vector k1 = rhs(t, x);
    Vector k2 = rhs(t + dt / 2, x + dt / 2 * k1);
    Vector k3 = rhs(t + dt / 2, x + dt / 2 * k2);
    Vector k4 = rhs(t + dt, x + dt * k3);
    x += dt / 6 * (k1 + 2 * k2 + 2 * k3 + k4);
    t += dt;
  }
  CHECK((x - xT).cwiseAbs().maxCoeff() <= 1e-6);

  // uncontrollable pair is rejected
  Matrix b0 = Matrix::Zero(2, 1);
  CHECK_THROWS_AS(min_energy_control(a, b0, x0, xT, 1.0), UncontrollablePair);
}

TEST_CASE("random controllable steering") {
  std::mt19937 rng(41);
  for (int it = 0; it < 5; ++it) {
    Matrix a = random_mat(rng, 3, 3, -1, 1);
    Matrix b = random_mat(rng, 3, 1, -1, 1);
    if (numeric_rank(ctrb(a, b)) < 3) continue;
    Vector x0 = random_vec(rng, 3), xT = random_vec(rng, 3);
    MinEnergyControl mec = min_energy_control(a, b, x0, xT, 1.0);
    Vector x = x0;
    double t = 0;
    const double dt = 1e-4;
    auto rhs = [&](double tt, const Vector& xx) -> Vector { return a * xx + b * mec.u(tt); };
    for (int i = 0; i < 10000; ++i) {
      Vector k1 = rhs(t, x);
      Vector k2 = rhs(t + dt / 2, x + dt / 2 * k1);
      Vector k3 = rhs(t + dt / 2, x + dt / 2 * k2);
      Vector k4 = rhs(t + dt, x + dt * k3);
      x += dt / 6 * (k1 + 2 * k2 + 2 * k3 + k4);
      t += dt;
    }
    CHECK((x - xT).cwiseAbs().maxCoeff() <= 1e-5);
  }
}
