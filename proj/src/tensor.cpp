#include "dimfree/tensor.hpp"

#include <cmath>
#include <limits>

#include <Eigen/Eigenvalues>

#include "dimfree/fields.hpp"

namespace dimfree {

namespace {

long ipow(long b, int e) {
  long r = 1;
  while (e-- > 0) r *= b;
  return r;
}

void check_order(const TensorField& tf) {
  if (tf.cov_order > 2 || tf.contra_order > 2 || tf.cov_order < 0 || tf.contra_order < 0)
    throw UnsupportedOrder("tensor orders above (2,2) are not supported");
}

}  // namespace

Matrix TensorField::structure(const Vector& x) const {
  long rows = ipow(gen_dim, contra_order), cols = ipow(gen_dim, cov_order);
  Matrix out(rows, cols);
  for (long i = 0; i < rows; ++i)
    for (long j = 0; j < cols; ++j) out(i, j) = gamma[(std::size_t)i * cols + j].eval(x);
  return out;
}

double eval_structure(const Matrix& gamma, const std::vector<Vector>& xs,
                      const std::vector<Vector>& ws) {
  Matrix acc;
  bool have = false;
  for (auto it = ws.rbegin(); it != ws.rend(); ++it) {
    Matrix row = it->transpose();
    acc = have ? stp(acc, row) : row;
    have = true;
  }
  acc = have ? stp(acc, gamma) : gamma;
  for (const Vector& x : xs) acc = stp(acc, Matrix(x));
  if (acc.rows() != 1 || acc.cols() != 1)
    throw DimensionMismatch("tensor evaluation did not contract to a scalar");
  return acc(0, 0);
}

double eval_tensor(const TensorField& tf, const Vector& x, const std::vector<Vector>& xs,
                   const std::vector<Vector>& ws) {
  check_order(tf);
  if ((int)xs.size() != tf.cov_order || (int)ws.size() != tf.contra_order)
    throw DimensionMismatch("argument count does not match tensor order");
  for (const Vector& v : xs)
    if (v.size() != tf.gen_dim) throw DimensionMismatch("vector argument dimension mismatch");
  for (const Vector& w : ws)
    if (w.size() != tf.gen_dim) throw DimensionMismatch("covector argument dimension mismatch");
  return eval_structure(tf.structure(x), xs, ws);
}

StructureFn lift_tensor(const TensorField& tf, int k) {
  check_order(tf);
  int m = tf.gen_dim;
  int km = k * m;
  Matrix up = build_projector(m, km).matrix;    // km x m
  Matrix down = build_projector(km, m).matrix;  // m x km

  // Left factor: Pi_up (I_m (x) Pi_up) ... ; right factor mirrored with
  // Pi_down; non-conformable products taken as STP.
  Matrix left;
  bool have_left = tf.contra_order > 0;
  if (have_left) {
    left = up;
    for (int i = 1; i < tf.contra_order; ++i)
      left = stp(left, kron(Matrix::Identity(i * m, i * m), up));
  }
  Matrix right;
  bool have_right = tf.cov_order > 0;
  if (have_right) {
    bool first = true;
    for (int i = tf.cov_order - 1; i >= 1; --i) {
      Matrix f = kron(Matrix::Identity(i * m, i * m), down);
      right = first ? f : stp(right, f);
      first = false;
    }
    right = first ? down : stp(right, down);
  }

  return [tf, down, left, right, have_left, have_right](const Vector& y) {
    Matrix g = tf.structure(down * y);
    if (have_left) g = stp(left, g);
    if (have_right) g = stp(g, right);
    return g;
  };
}

Matrix QuadForm::eval(const Vector& x) const {
  Matrix out(gen_dim, gen_dim);
  for (int i = 0; i < gen_dim; ++i)
    for (int j = 0; j < gen_dim; ++j) out(i, j) = entries[(std::size_t)i * gen_dim + j].eval(x);
  return out;
}

StructureFn lift_quadratic_form(const QuadForm& q, int leaf_dim) {
  Matrix down = build_projector(leaf_dim, q.gen_dim).matrix;  // m x q
  return [q, down](const Vector& y) { return Matrix(down.transpose() * q.eval(down * y) * down); };
}

bool is_symmetric_at(const QuadForm& q, const std::vector<Vector>& pts, double tol) {
  for (const Vector& p : pts) {
    Matrix m = q.eval(p);
    if ((m - m.transpose()).cwiseAbs().maxCoeff() > tol) return false;
  }
  return true;
}

bool is_skew_at(const QuadForm& q, const std::vector<Vector>& pts, double tol) {
  for (const Vector& p : pts) {
    Matrix m = q.eval(p);
    if ((m + m.transpose()).cwiseAbs().maxCoeff() > tol) return false;
  }
  return true;
}

bool is_closed(const QuadForm& q, const std::vector<Vector>& pts, double tol) {
  if (!is_skew_at(q, pts)) throw NotSkew("is_closed requires a skew form at the sample points");
  int m = q.gen_dim;
  for (const Vector& p : pts) {
    // partial[i](j,k) = d g^{jk} / d x_i
    std::vector<Matrix> partial(m);
    double scale = 1.0;
    const double h0 = std::cbrt(std::numeric_limits<double>::epsilon());
    for (int i = 0; i < m; ++i) {
      double h = h0 * std::max(1.0, std::abs(p[i]));
      Vector pp = p, pm = p;
      pp[i] += h;
      pm[i] -= h;
      partial[i] = (q.eval(pp) - q.eval(pm)) / (2 * h);
      scale = std::max(scale, partial[i].cwiseAbs().maxCoeff());
    }
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j)
        for (int k = 0; k < m; ++k) {
          double cyc = partial[i](j, k) + partial[j](k, i) + partial[k](i, j);
          if (std::abs(cyc) > tol * scale) return false;
        }
  }
  return true;
}

bool is_riemannian_at(const QuadForm& q, const std::vector<Vector>& pts, double tol_pd) {
  if (!is_symmetric_at(q, pts)) return false;
  for (const Vector& p : pts) {
    Eigen::SelfAdjointEigenSolver<Matrix> es(q.eval(p));
    if (es.eigenvalues().minCoeff() <= tol_pd) return false;
  }
  return true;
}

bool is_symplectic_at(const QuadForm& q, const std::vector<Vector>& pts, double tol_ns) {
  if (q.gen_dim % 2 != 0)
    throw OddDimension("symplectic forms need an even generator dimension");
  if (!is_skew_at(q, pts)) return false;
  for (const Vector& p : pts)
    if (std::abs(q.eval(p).determinant()) <= tol_ns) return false;
  return is_closed(q, pts);
}

}  // namespace dimfree
