#include "dimfree/expr.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <charconv>
#include <sstream>

namespace dimfree {

struct Expr::Node {
  enum class Op { Num, StateVar, InputVar, Time, Neg, Add, Sub, Mul, Div, Pow, Call };
  Op op;
  std::size_t pos = 0;  // byte offset in the source text, for error reports
  double value = 0;     // Num
  int index = 0;        // StateVar / InputVar, 0-based
  std::string func;     // Call
  NodePtr a, b;
};

namespace {

using Node = Expr::Node;
using Op = Node::Op;
using NodePtr = Expr::NodePtr;

std::shared_ptr<Node> make(Op op, std::size_t pos) {
  auto n = std::make_shared<Node>();
  n->op = op;
  n->pos = pos;
  return n;
}

bool known_func(const std::string& f) {
  return f == "sin" || f == "cos" || f == "tan" || f == "exp" || f == "log" ||
         f == "sqrt" || f == "abs" || f == "sign";
}

struct Parser {
  std::string_view src;
  std::size_t pos = 0;
  int state_dim, input_dim;

  void skip_ws() {
    while (pos < src.size() && std::isspace((unsigned char)src[pos])) ++pos;
  }

  char peek() {
    skip_ws();
    return pos < src.size() ? src[pos] : '\0';
  }

  [[noreturn]] void fail(const std::string& msg) { throw SyntaxError(pos, msg); }

  NodePtr parse_expr(int min_prec) {
    NodePtr lhs = parse_unary();
    for (;;) {
      char c = peek();
      int prec;
      Op op;
      switch (c) {
        case '+': prec = 1; op = Op::Add; break;
        case '-': prec = 1; op = Op::Sub; break;
        case '*': prec = 2; op = Op::Mul; break;
        case '/': prec = 2; op = Op::Div; break;
        case '^': prec = 4; op = Op::Pow; break;
        default: return lhs;
      }
      if (prec < min_prec) return lhs;
      std::size_t at = pos;
      ++pos;
      // '^' is right-associative, the rest left-associative
      NodePtr rhs = parse_expr(op == Op::Pow ? prec : prec + 1);
      auto n = make(op, at);
      n->a = lhs;
      n->b = rhs;
      lhs = n;
    }
  }

  NodePtr parse_unary() {
    char c = peek();
    if (c == '-') {
      std::size_t at = pos;
      ++pos;
      // unary minus binds looser than '^': -x^2 == -(x^2)
      auto n = make(Op::Neg, at);
      n->a = parse_expr(3);
      return n;
    }
    if (c == '+') { ++pos; return parse_unary(); }
    return parse_primary();
  }

  NodePtr parse_primary() {
    char c = peek();
    std::size_t at = pos;
    if (c == '(') {
      ++pos;
      NodePtr inner = parse_expr(0);
      if (peek() != ')') fail("expected ')'");
      ++pos;
      return inner;
    }
    if (std::isdigit((unsigned char)c) || c == '.') return parse_number();
    if (std::isalpha((unsigned char)c)) return parse_ident();
    fail("expected a number, variable, function, or '('");
  }

  NodePtr parse_number() {
    std::size_t at = pos;
    double v = 0;
    auto res = std::from_chars(src.data() + pos, src.data() + src.size(), v);
    if (res.ec != std::errc{}) fail("malformed number");
    pos = res.ptr - src.data();
    auto n = make(Op::Num, at);
    n->value = v;
    return n;
  }

  NodePtr parse_ident() {
    std::size_t at = pos;
    std::size_t end = pos;
    while (end < src.size() && (std::isalnum((unsigned char)src[end]) || src[end] == '_')) ++end;
    std::string name(src.substr(pos, end - pos));
    pos = end;
    if (name == "t") return make(Op::Time, at);
    if (name == "pi") {
      auto n = make(Op::Num, at);
      n->value = 3.14159265358979323846;
      return n;
    }
    if ((name[0] == 'x' || name[0] == 'u') && name.size() > 1 &&
        std::all_of(name.begin() + 1, name.end(), [](char d) { return std::isdigit((unsigned char)d); })) {
      int idx = std::stoi(name.substr(1));
      int limit = name[0] == 'x' ? state_dim : input_dim;
      if (idx < 1 || idx > limit)
        throw ArityViolation(at, "variable " + name + " out of range (declared arity " +
                                     std::to_string(limit) + ")");
      auto n = make(name[0] == 'x' ? Op::StateVar : Op::InputVar, at);
      n->index = idx - 1;
      return n;
    }
    if (known_func(name)) {
      if (peek() != '(') fail("expected '(' after function name");
      ++pos;
      NodePtr arg = parse_expr(0);
      if (peek() != ')') fail("expected ')'");
      ++pos;
      auto n = make(Op::Call, at);
      n->func = name;
      n->a = arg;
      return n;
    }
    throw UnknownIdentifier(at, "unknown identifier '" + name + "'");
  }
};

double check_finite(double v, std::size_t pos) {
  if (!std::isfinite(v))
    throw EvalError(EvalError::Kind::NonFinite, pos, "non-finite result");
  return v;
}

double eval_node(const Node& n, const Eigen::VectorXd& x, const Eigen::VectorXd& u, double t) {
  switch (n.op) {
    case Op::Num: return n.value;
    case Op::Time: return t;
    case Op::StateVar:
      if (n.index >= x.size())
        throw EvalError(EvalError::Kind::Domain, n.pos, "state vector shorter than declared arity");
      return x[n.index];
    case Op::InputVar:
      if (n.index >= u.size())
        throw EvalError(EvalError::Kind::Domain, n.pos, "input vector shorter than declared arity");
      return u[n.index];
    case Op::Neg: return -eval_node(*n.a, x, u, t);
    case Op::Add: return check_finite(eval_node(*n.a, x, u, t) + eval_node(*n.b, x, u, t), n.pos);
    case Op::Sub: return check_finite(eval_node(*n.a, x, u, t) - eval_node(*n.b, x, u, t), n.pos);
    case Op::Mul: return check_finite(eval_node(*n.a, x, u, t) * eval_node(*n.b, x, u, t), n.pos);
    case Op::Div: {
      double d = eval_node(*n.b, x, u, t);
      if (d == 0.0) throw EvalError(EvalError::Kind::DivByZero, n.pos, "division by zero");
      return check_finite(eval_node(*n.a, x, u, t) / d, n.pos);
    }
    case Op::Pow: {
      double base = eval_node(*n.a, x, u, t);
      double e = eval_node(*n.b, x, u, t);
      double v = std::pow(base, e);
      if (std::isnan(v)) throw EvalError(EvalError::Kind::Domain, n.pos, "pow domain error");
      return check_finite(v, n.pos);
    }
    case Op::Call: {
      double a = eval_node(*n.a, x, u, t);
      if (n.func == "sin") return std::sin(a);
      if (n.func == "cos") return std::cos(a);
      if (n.func == "tan") return check_finite(std::tan(a), n.pos);
      if (n.func == "exp") return check_finite(std::exp(a), n.pos);
      if (n.func == "log") {
        if (a <= 0) throw EvalError(EvalError::Kind::Domain, n.pos, "log of non-positive value");
        return std::log(a);
      }
      if (n.func == "sqrt") {
        if (a < 0) throw EvalError(EvalError::Kind::Domain, n.pos, "sqrt of negative value");
        return std::sqrt(a);
      }
      if (n.func == "abs") return std::abs(a);
      // sign(0) = 0
      return a > 0 ? 1.0 : (a < 0 ? -1.0 : 0.0);
    }
  }
  return 0;  // unreachable
}

void print_node(const Node& n, std::ostream& os) {
  switch (n.op) {
    case Op::Num: {
      std::ostringstream tmp;
      tmp.precision(17);
      tmp << n.value;
      os << tmp.str();
      break;
    }
    case Op::Time: os << "t"; break;
    case Op::StateVar: os << "x" << n.index + 1; break;
    case Op::InputVar: os << "u" << n.index + 1; break;
    case Op::Neg:
      os << "(-";
      print_node(*n.a, os);
      os << ")";
      break;
    case Op::Call:
      os << n.func << "(";
      print_node(*n.a, os);
      os << ")";
      break;
    default: {
      const char* sym = n.op == Op::Add ? "+" : n.op == Op::Sub ? "-" :
                        n.op == Op::Mul ? "*" : n.op == Op::Div ? "/" : "^";
      os << "(";
      print_node(*n.a, os);
      os << sym;
      print_node(*n.b, os);
      os << ")";
      break;
    }
  }
}

}  // namespace

Expr parse(std::string_view text, int state_dim, int input_dim) {
  Parser p{text, 0, state_dim, input_dim};
  NodePtr root = p.parse_expr(0);
  p.skip_ws();
  if (p.pos != text.size()) p.fail("unexpected trailing input");
  Expr e;
  e.root_ = root;
  e.state_arity_ = state_dim;
  e.input_arity_ = input_dim;
  return e;
}

double Expr::eval(const Eigen::VectorXd& x, const Eigen::VectorXd& u, double t) const {
  if (!root_) throw EvalError(EvalError::Kind::Domain, 0, "empty expression");
  return eval_node(*root_, x, u, t);
}

std::string Expr::str() const {
  std::ostringstream os;
  if (root_) print_node(*root_, os);
  return os.str();
}

Eigen::VectorXd ExprVector::eval(const Eigen::VectorXd& x, const Eigen::VectorXd& u, double t) const {
  Eigen::VectorXd out(components.size());
  for (std::size_t i = 0; i < components.size(); ++i) out[i] = components[i].eval(x, u, t);
  return out;
}

ExprVector parse_vector(const std::vector<std::string>& texts, int state_dim, int input_dim) {
  ExprVector v;
  v.arity = state_dim;
  v.input_arity = input_dim;
  for (const auto& s : texts) v.components.push_back(parse(s, state_dim, input_dim));
  return v;
}

}  // namespace dimfree
