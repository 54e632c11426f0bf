#include "dimfree/linsys.hpp"

#include <cmath>
#include <limits>

#include <Eigen/SVD>

namespace dimfree {

namespace {

Matrix solve_right(const Matrix& x, const Matrix& m) {
  // returns x * m^{-1}
  return m.transpose().partialPivLu().solve(x.transpose()).transpose();
}

// (Pi^T Pi)^{-1} Pi^T, the left pseudo-inverse factor for tall projectors.
Matrix normal_left(const Matrix& pi) {
  return (pi.transpose() * pi).partialPivLu().solve(pi.transpose());
}

}  // namespace

Matrix project_A_with(const Matrix& pi_out, const Matrix& pi_in, const Matrix& a) {
  long n = pi_in.cols(), m = pi_in.rows();
  if (n >= m) {
    return solve_right(pi_out * a * pi_in.transpose(), Matrix(pi_in * pi_in.transpose()));
  }
  return pi_out * a * normal_left(pi_in);
}

Matrix project_A(const Matrix& a, int m) {
  if (a.rows() != a.cols()) throw DimensionMismatch("project_A expects a square matrix");
  Matrix pi = build_projector((int)a.rows(), m).matrix;
  return project_A_with(pi, pi, a);
}

Matrix project_C_with(const Matrix& pi_in, const Matrix& c) {
  long n = pi_in.cols();
  long p = c.rows();
  if (n >= p) {
    return solve_right(c * pi_in.transpose(), Matrix(pi_in * pi_in.transpose()));
  }
  return c * normal_left(pi_in);
}

Matrix project_C(const Matrix& c, int n, int m) {
  return project_C_with(build_projector(n, m).matrix, c);
}

std::vector<LinearStage> project_varying(const VaryingLinearSystem& sys, int m) {
  std::vector<LinearStage> out;
  for (std::size_t i = 0; i < sys.stages.size(); ++i) {
    const LinearStage& st = sys.stages[i];
    const LinearStage& next = sys.stages[(i + 1) % sys.stages.size()];
    if (next.a.cols() != st.a.rows())
      throw ScheduleMismatch("stage dimensions do not chain: cols(A_next) != rows(A)");
    Matrix pi_in = build_projector((int)st.a.cols(), m).matrix;
    Matrix pi_out = build_projector((int)st.a.rows(), m).matrix;
    LinearStage proj;
    proj.a = project_A_with(pi_out, pi_in, st.a);
    if (st.b.size()) proj.b = pi_out * st.b;
    if (st.c.size()) proj.c = project_C_with(pi_in, st.c);
    out.push_back(std::move(proj));
  }
  return out;
}

Matrix lift_linear_vf(const Matrix& a, int k) {
  if (a.rows() != a.cols()) throw DimensionMismatch("lift_linear_vf expects a square matrix");
  long m = a.rows();
  Matrix jk = Matrix::Ones(k, 1);
  Matrix up = kron(Matrix::Identity(m, m), jk);        // km x m
  Matrix down = kron(Matrix::Identity(m, m), jk.transpose()) / k;  // m x km
  return up * a * down;
}

Eigen::RowVectorXd lift_linear_function(const Eigen::RowVectorXd& c, int s) {
  long m = c.cols();
  long p = lcm_of(m, s);
  long mu = p / m, r = p / s;
  Matrix spread = kron(Matrix::Identity(m, m), Matrix::Ones(1, mu));  // m x p
  Matrix gather = kron(Matrix::Identity(s, s), Matrix::Ones(r, 1));   // p x s
  return (c * spread * gather) / (double)mu;
}

Matrix matrix_exp(const Matrix& a, double t) {
  Matrix m = a * t;
  long n = m.rows();
  double nrm = m.cwiseAbs().rowwise().sum().maxCoeff();
  int squarings = 0;
  if (nrm > 0.5) squarings = (int)std::ceil(std::log2(nrm)) + 1;
  Matrix b = m / std::exp2(squarings);
  Matrix term = Matrix::Identity(n, n);
  Matrix sum = term;
  for (int k = 1; k <= 40; ++k) {
    term = term * b / k;
    sum += term;
    if (term.cwiseAbs().maxCoeff() < 1e-18 * std::max(1.0, sum.cwiseAbs().maxCoeff())) break;
  }
  for (int i = 0; i < squarings; ++i) sum = sum * sum;
  return sum;
}

Matrix ctrb(const Matrix& a, const Matrix& b) {
  long n = a.rows();
  Matrix k(n, n * b.cols());
  Matrix cur = b;
  for (long i = 0; i < n; ++i) {
    k.middleCols(i * b.cols(), b.cols()) = cur;
    cur = a * cur;
  }
  return k;
}

Matrix obsv(const Matrix& a, const Matrix& c) {
  long n = a.rows();
  Matrix o(n * c.rows(), n);
  Matrix cur = c;
  for (long i = 0; i < n; ++i) {
    o.middleRows(i * c.rows(), c.rows()) = cur;
    cur = cur * a;
  }
  return o;
}

int numeric_rank(const Matrix& m) {
  if (m.size() == 0) return 0;
  Eigen::JacobiSVD<Matrix> svd(m);
  double smax = svd.singularValues()(0);
  if (smax == 0.0) return 0;
  double tol = std::max(m.rows(), m.cols()) * std::numeric_limits<double>::epsilon() * smax;
  return (int)(svd.singularValues().array() > tol).count();
}

namespace {

Matrix gramian_integrand(const Matrix& a, const Matrix& b, double tau) {
  Matrix e = matrix_exp(a, -tau) * b;
  return e * e.transpose();
}

Matrix simpson(const Matrix& fa, const Matrix& fm, const Matrix& fb, double h) {
  return (fa + 4 * fm + fb) * (h / 6);
}

Matrix adaptive_simpson(const Matrix& a, const Matrix& b, double lo, double hi, const Matrix& flo,
                        const Matrix& fmid, const Matrix& fhi, const Matrix& whole, double tol,
                        int depth) {
  double mid = 0.5 * (lo + hi);
  Matrix fl = gramian_integrand(a, b, 0.5 * (lo + mid));
  Matrix fr = gramian_integrand(a, b, 0.5 * (mid + hi));
  Matrix left = simpson(flo, fl, fmid, mid - lo);
  Matrix right = simpson(fmid, fr, fhi, hi - mid);
  Matrix err = left + right - whole;
  if (depth <= 0 || err.cwiseAbs().maxCoeff() <= 15 * tol) return left + right + err / 15;
  return adaptive_simpson(a, b, lo, mid, flo, fl, fmid, left, tol / 2, depth - 1) +
         adaptive_simpson(a, b, mid, hi, fmid, fr, fhi, right, tol / 2, depth - 1);
}

}  // namespace

Matrix gramian_quadrature(const Matrix& a, const Matrix& b, double T, double rel_tol) {
  Matrix flo = gramian_integrand(a, b, 0);
  Matrix fmid = gramian_integrand(a, b, T / 2);
  Matrix fhi = gramian_integrand(a, b, T);
  Matrix whole = simpson(flo, fmid, fhi, T);
  double scale = std::max(1.0, whole.cwiseAbs().maxCoeff());
  return adaptive_simpson(a, b, 0, T, flo, fmid, fhi, whole, rel_tol * scale, 40);
}

std::optional<Matrix> gramian_nilpotent(const Matrix& a, const Matrix& b, double T) {
  long n = a.rows();
  std::vector<Matrix> pw{Matrix::Identity(n, n)};
  int index = -1;
  for (int i = 1; i <= n; ++i) {
    Matrix next = pw.back() * a;
    if (next.cwiseAbs().maxCoeff() == 0.0) {
      index = i;
      break;
    }
    pw.push_back(next);
  }
  if (index < 0) return std::nullopt;
  // e^{-A tau} = sum_i (-1)^i A^i tau^i / i!, a finite series.
  Matrix w = Matrix::Zero(n, n);
  double fact_i = 1;
  for (int i = 0; i < index; ++i, fact_i *= i) {
    double fact_j = 1;
    for (int j = 0; j < index; ++j, fact_j *= j) {
      double sign = ((i + j) % 2 == 0) ? 1.0 : -1.0;
      double coef = sign / (fact_i * fact_j) * std::pow(T, i + j + 1) / (i + j + 1);
      w += coef * pw[i] * b * b.transpose() * pw[j].transpose();
    }
  }
  return w;
}

MinEnergyControl min_energy_control(const Matrix& a, const Matrix& b, const Vector& x0,
                                    const Vector& xT, double T) {
  std::optional<Matrix> closed = gramian_nilpotent(a, b, T);
  Matrix w = closed ? *closed : gramian_quadrature(a, b, T);
  Eigen::JacobiSVD<Matrix> svd(w, Eigen::ComputeThinU | Eigen::ComputeThinV);
  double smax = svd.singularValues()(0);
  double smin = svd.singularValues()(svd.singularValues().size() - 1);
  if (smax == 0.0 || smin <= w.rows() * std::numeric_limits<double>::epsilon() * smax)
    throw UncontrollablePair("controllability Gramian is singular");
  Vector rhs = x0 - matrix_exp(a, -T) * xT;
  Vector v = svd.solve(rhs);
  auto u = [a, b, v](double t) { return Vector(-b.transpose() * matrix_exp(a.transpose(), -t) * v); };
  return MinEnergyControl{w, T, u};
}

}  // namespace dimfree
