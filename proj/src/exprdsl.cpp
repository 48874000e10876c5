#include "multloop/exprdsl.hpp"

#include <cctype>
#include <cmath>
#include <sstream>

namespace multloop::dsl {

namespace {
std::string make_syntax_message(std::size_t offset, const std::string& expected,
                                const std::string& src) {
  std::ostringstream os;
  os << "syntax error at offset " << offset << " (expected " << expected << ") in \"" << src
     << "\"";
  return os.str();
}
} // namespace

SyntaxError::SyntaxError(std::size_t offset, std::string expected, const std::string& src)
    : std::runtime_error(make_syntax_message(offset, expected, src)),
      offset(offset),
      expected(std::move(expected)) {}

const std::set<std::string>& allowed_variables() {
  static const std::set<std::string> vars = {"x", "y", "z", "m", "v", "w"};
  return vars;
}

struct Expr::Node {
  enum class Kind { Literal, Variable, Add, Sub, Mul, Div, Pow, Neg, Apply };
  Kind kind;
  double literal = 0;
  std::string name; // variable or function name
  long exponent = 0;
  std::shared_ptr<const Node> lhs, rhs;
};

namespace {

using Node = Expr::Node;
using NodePtr = std::shared_ptr<const Node>;

NodePtr make_literal(double v) {
  auto n = std::make_shared<Node>();
  n->kind = Node::Kind::Literal;
  n->literal = v;
  return n;
}

NodePtr make_var(const std::string& name) {
  auto n = std::make_shared<Node>();
  n->kind = Node::Kind::Variable;
  n->name = name;
  return n;
}

NodePtr make_binary(Node::Kind k, NodePtr a, NodePtr b) {
  auto n = std::make_shared<Node>();
  n->kind = k;
  n->lhs = std::move(a);
  n->rhs = std::move(b);
  return n;
}

NodePtr make_pow(NodePtr base, long exponent) {
  auto n = std::make_shared<Node>();
  n->kind = Node::Kind::Pow;
  n->lhs = std::move(base);
  n->exponent = exponent;
  return n;
}

NodePtr make_neg(NodePtr a) {
  auto n = std::make_shared<Node>();
  n->kind = Node::Kind::Neg;
  n->lhs = std::move(a);
  return n;
}

NodePtr make_apply(const std::string& fn, NodePtr a) {
  auto n = std::make_shared<Node>();
  n->kind = Node::Kind::Apply;
  n->name = fn;
  n->lhs = std::move(a);
  return n;
}

bool is_function(const std::string& s) {
  return s == "exp" || s == "log" || s == "sin" || s == "cos";
}

/// Recursive descent parser.
/// expr   := term (('+'|'-') term)*
/// term   := unary (('*'|'/') unary)*
/// unary  := '-' unary | power
/// power  := atom ['^' int]           (binds tighter than unary minus)
/// atom   := number | var | fn '(' expr ')' | '(' expr ')'
class Parser {
public:
  explicit Parser(const std::string& src) : src_(src) {}

  NodePtr parse() {
    NodePtr e = expr();
    skip_ws();
    if (pos_ != src_.size()) fail("end of input");
    return e;
  }

private:
  [[noreturn]] void fail(const std::string& expected) { throw SyntaxError(pos_, expected, src_); }

  void skip_ws() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
  }

  bool eat(char c) {
    skip_ws();
    if (pos_ < src_.size() && src_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  char peek() {
    skip_ws();
    return pos_ < src_.size() ? src_[pos_] : '\0';
  }

  NodePtr expr() {
    NodePtr e = term();
    while (true) {
      if (eat('+'))
        e = make_binary(Node::Kind::Add, e, term());
      else if (eat('-'))
        e = make_binary(Node::Kind::Sub, e, term());
      else
        return e;
    }
  }

  NodePtr term() {
    NodePtr e = unary();
    while (true) {
      if (eat('*'))
        e = make_binary(Node::Kind::Mul, e, unary());
      else if (eat('/'))
        e = make_binary(Node::Kind::Div, e, unary());
      else
        return e;
    }
  }

  NodePtr unary() {
    if (eat('-')) return make_neg(unary());
    return power();
  }

  NodePtr power() {
    NodePtr base = atom();
    if (eat('^')) return make_pow(base, integer_literal());
    return base;
  }

  long integer_literal() {
    skip_ws();
    std::size_t start = pos_;
    if (pos_ < src_.size() && src_[pos_] == '-') ++pos_;
    std::size_t digits = pos_;
    while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    if (pos_ == digits) {
      pos_ = start;
      fail("integer exponent");
    }
    return std::stol(src_.substr(start, pos_ - start));
  }

  NodePtr atom() {
    skip_ws();
    if (pos_ >= src_.size()) fail("number, variable, function or '('");
    char c = src_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return number();
    if (std::isalpha(static_cast<unsigned char>(c))) return identifier();
    if (c == '(') {
      ++pos_;
      NodePtr e = expr();
      if (!eat(')')) fail("')'");
      return e;
    }
    fail("number, variable, function or '('");
  }

  NodePtr number() {
    std::size_t start = pos_;
    while (pos_ < src_.size() &&
           (std::isdigit(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '.'))
      ++pos_;
    // Exponent notation like 1e-3 stays out of the grammar; 'e' would be an identifier.
    try {
      return make_literal(std::stod(src_.substr(start, pos_ - start)));
    } catch (const std::exception&) {
      pos_ = start;
      fail("number");
    }
  }

  NodePtr identifier() {
    std::size_t start = pos_;
    while (pos_ < src_.size() && std::isalpha(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    std::string name = src_.substr(start, pos_ - start);
    if (is_function(name)) {
      if (!eat('(')) fail("'(' after function name");
      NodePtr arg = expr();
      if (!eat(')')) fail("')'");
      return make_apply(name, arg);
    }
    if (allowed_variables().count(name)) return make_var(name);
    pos_ = start;
    fail("variable in {x,y,z,m,v,w} or function in {exp,log,sin,cos}");
  }

  const std::string& src_;
  std::size_t pos_ = 0;
};

double eval_node(const Node& n, const Env& env) {
  switch (n.kind) {
    case Node::Kind::Literal:
      return n.literal;
    case Node::Kind::Variable: {
      auto it = env.find(n.name);
      if (it == env.end()) throw UnboundVariable(n.name);
      return it->second;
    }
    case Node::Kind::Add:
      return eval_node(*n.lhs, env) + eval_node(*n.rhs, env);
    case Node::Kind::Sub:
      return eval_node(*n.lhs, env) - eval_node(*n.rhs, env);
    case Node::Kind::Mul:
      return eval_node(*n.lhs, env) * eval_node(*n.rhs, env);
    case Node::Kind::Div:
      return eval_node(*n.lhs, env) / eval_node(*n.rhs, env);
    case Node::Kind::Pow: {
      double b = eval_node(*n.lhs, env);
      return std::pow(b, static_cast<double>(n.exponent));
    }
    case Node::Kind::Neg:
      return -eval_node(*n.lhs, env);
    case Node::Kind::Apply: {
      double a = eval_node(*n.lhs, env);
      if (n.name == "exp") return std::exp(a);
      if (n.name == "sin") return std::sin(a);
      if (n.name == "cos") return std::cos(a);
      if (n.name == "log") {
        if (!(a > 0)) throw DomainError("log of non-positive argument");
        return std::log(a);
      }
      throw std::logic_error("unknown function");
    }
  }
  throw std::logic_error("unreachable");
}

void collect_vars(const Node& n, std::set<std::string>& out) {
  if (n.kind == Node::Kind::Variable) out.insert(n.name);
  if (n.lhs) collect_vars(*n.lhs, out);
  if (n.rhs) collect_vars(*n.rhs, out);
}

int precedence(Node::Kind k) {
  switch (k) {
    case Node::Kind::Add:
    case Node::Kind::Sub:
      return 1;
    case Node::Kind::Mul:
    case Node::Kind::Div:
      return 2;
    case Node::Kind::Neg:
      return 3;
    case Node::Kind::Pow:
      return 4;
    default:
      return 5;
  }
}

void print_node(const Node& n, std::ostringstream& os, int parent_prec) {
  int prec = precedence(n.kind);
  bool paren = prec < parent_prec;
  if (paren) os << "(";
  switch (n.kind) {
    case Node::Kind::Literal: {
      std::ostringstream tmp;
      tmp.precision(17);
      tmp << n.literal;
      os << tmp.str();
      break;
    }
    case Node::Kind::Variable:
      os << n.name;
      break;
    case Node::Kind::Add:
      print_node(*n.lhs, os, prec);
      os << "+";
      print_node(*n.rhs, os, prec + 1);
      break;
    case Node::Kind::Sub:
      print_node(*n.lhs, os, prec);
      os << "-";
      print_node(*n.rhs, os, prec + 1);
      break;
    case Node::Kind::Mul:
      print_node(*n.lhs, os, prec);
      os << "*";
      print_node(*n.rhs, os, prec + 1);
      break;
    case Node::Kind::Div:
      print_node(*n.lhs, os, prec);
      os << "/";
      print_node(*n.rhs, os, prec + 1);
      break;
    case Node::Kind::Neg:
      os << "-";
      print_node(*n.lhs, os, prec);
      break;
    case Node::Kind::Pow:
      print_node(*n.lhs, os, prec + 1);
      os << "^" << n.exponent;
      break;
    case Node::Kind::Apply:
      os << n.name << "(";
      print_node(*n.lhs, os, 0);
      os << ")";
      break;
  }
  if (paren) os << ")";
}

} // namespace

Expr Expr::parse(const std::string& src) { return Expr(Parser(src).parse()); }
Expr Expr::constant(double value) { return Expr(make_literal(value)); }
Expr Expr::variable(const std::string& name) {
  if (!allowed_variables().count(name)) throw std::invalid_argument("unknown variable " + name);
  return Expr(make_var(name));
}

double Expr::eval(const Env& env) const { return eval_node(*root_, env); }

std::set<std::string> Expr::free_vars() const {
  std::set<std::string> out;
  collect_vars(*root_, out);
  return out;
}

std::string Expr::print() const {
  std::ostringstream os;
  print_node(*root_, os, 0);
  return os.str();
}

double Expr::eval1(double value) const {
  std::set<std::string> fv = free_vars();
  Env env;
  for (const auto& v : fv) env[v] = value;
  if (fv.size() > 1) throw std::invalid_argument("eval1 on multivariate expression");
  return eval(env);
}

double num_derivative(const Expr& e, const std::string& var, const Env& at, double h) {
  auto diff = [&](double step) {
    Env hi = at, lo = at;
    hi[var] += step;
    lo[var] -= step;
    return (e.eval(hi) - e.eval(lo)) / (2 * step);
  };
  double d1 = diff(h), d2 = diff(h / 2);
  return (4 * d2 - d1) / 3;
}

} // namespace multloop::dsl
