#pragma once

// Small expression language used by config files to define scalar
// functions, vector fields, and tensor structure matrices.
// Variables: x1..xN (state), u1..uM (input), t (time).

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

#include "dimfree/errors.hpp"

namespace dimfree {

class Expr {
 public:
  Expr() = default;

  double eval(const Eigen::VectorXd& x, const Eigen::VectorXd& u, double t) const;
  double eval(const Eigen::VectorXd& x) const { return eval(x, Eigen::VectorXd(), 0.0); }

  int state_arity() const { return state_arity_; }
  int input_arity() const { return input_arity_; }

  // Fully parenthesized form; parse(str(e)) == e structurally.
  std::string str() const;

  struct Node;
  using NodePtr = std::shared_ptr<const Node>;

  friend Expr parse(std::string_view text, int state_dim, int input_dim);

 private:
  NodePtr root_;
  int state_arity_ = 0;
  int input_arity_ = 0;
};

Expr parse(std::string_view text, int state_dim, int input_dim = 0);

// A list of expressions sharing one arity declaration, e.g. a vector field.
struct ExprVector {
  int arity = 0;
  int input_arity = 0;
  std::vector<Expr> components;

  Eigen::VectorXd eval(const Eigen::VectorXd& x, const Eigen::VectorXd& u, double t) const;
  Eigen::VectorXd eval(const Eigen::VectorXd& x) const { return eval(x, Eigen::VectorXd(), 0.0); }
};

ExprVector parse_vector(const std::vector<std::string>& texts, int state_dim, int input_dim = 0);

}  // namespace dimfree
