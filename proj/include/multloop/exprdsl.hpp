#ifndef MULTLOOP_EXPRDSL_HPP
#define MULTLOOP_EXPRDSL_HPP

#include <map>
#include <memory>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace multloop::dsl {

struct SyntaxError : std::runtime_error {
  SyntaxError(std::size_t offset, std::string expected, const std::string& src);
  std::size_t offset;
  std::string expected;
};

struct UnboundVariable : std::runtime_error {
  explicit UnboundVariable(const std::string& var)
      : std::runtime_error("unbound variable '" + var + "'"), var(var) {}
  std::string var;
};

struct DomainError : std::runtime_error {
  explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

using Env = std::map<std::string, double>;

/// Scalar expression over variables {x,y,z,m,v,w}, literals, + - * / ^
/// (integer exponents), exp/log/sin/cos, unary minus.
class Expr {
public:
  static Expr parse(const std::string& src);
  static Expr constant(double value);
  static Expr variable(const std::string& name);

  double eval(const Env& env) const;
  std::set<std::string> free_vars() const;
  std::string print() const;

  /// Convenience for univariate use: binds the single free variable.
  double eval1(double value) const;

  struct Node;
  explicit Expr(std::shared_ptr<const Node> root) : root_(std::move(root)) {}
  const Node& root() const { return *root_; }

private:
  std::shared_ptr<const Node> root_;
};

/// Central-difference derivative with one Richardson step (h and h/2).
double num_derivative(const Expr& e, const std::string& var, const Env& at, double h = 1e-4);

const std::set<std::string>& allowed_variables();

} // namespace multloop::dsl

#endif
