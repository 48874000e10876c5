#include "multloop/exprdsl.hpp"

#include <doctest.h>

#include <cmath>
#include <random>

using namespace multloop;
using namespace multloop::dsl;

TEST_CASE("parse and eval basics") {
  CHECK(Expr::parse("exp(z)-1").eval({{"z", 0.0}}) == doctest::Approx(0.0));
  CHECK(Expr::parse("z^2").eval({{"z", 3.0}}) == doctest::Approx(9.0));
  CHECK(Expr::parse("3*(1-exp(-z))").eval({{"z", 0.0}}) == doctest::Approx(0.0));
  CHECK(Expr::parse("x*z").eval({{"x", 2.0}, {"z", 5.0}}) == doctest::Approx(10.0));
  CHECK(Expr::parse("2^-1").eval({}) == doctest::Approx(0.5));
  CHECK(Expr::parse("sin(m)+cos(v)").eval({{"m", 0.0}, {"v", 0.0}}) == doctest::Approx(1.0));
}

TEST_CASE("precedence") {
  // ^ binds tighter than unary minus; * / tighter than + -.
  CHECK(Expr::parse("-z^2").eval({{"z", 3.0}}) == doctest::Approx(-9.0));
  CHECK(Expr::parse("(-z)^2").eval({{"z", 3.0}}) == doctest::Approx(9.0));
  CHECK(Expr::parse("1-2*3").eval({}) == doctest::Approx(-5.0));
  CHECK(Expr::parse("1-2-3").eval({}) == doctest::Approx(-4.0));
  CHECK(Expr::parse("12/2/3").eval({}) == doctest::Approx(2.0));
  CHECK(Expr::parse("-x-y").eval({{"x", 1.0}, {"y", 10.0}}) == doctest::Approx(-11.0));
}

TEST_CASE("syntax errors carry the byte offset") {
  try {
    Expr::parse("exp(");
    FAIL("no error raised");
  } catch (const SyntaxError& e) {
    CHECK(e.offset == 4);
  }
  try {
    Expr::parse("z^x");
    FAIL("no error raised");
  } catch (const SyntaxError& e) {
    CHECK(e.expected.find("integer") != std::string::npos);
  }
  CHECK_THROWS_AS(Expr::parse("q+1"), SyntaxError);  // q is not a variable
  CHECK_THROWS_AS(Expr::parse("1+"), SyntaxError);
  CHECK_THROWS_AS(Expr::parse("sin 3"), SyntaxError);
}

TEST_CASE("eval errors") {
  CHECK_THROWS_AS(Expr::parse("x+y").eval({{"x", 1.0}}), UnboundVariable);
  CHECK_THROWS_AS(Expr::parse("log(z)").eval({{"z", -1.0}}), DomainError);
  CHECK(Expr::parse("log(z)").eval({{"z", std::exp(1.0)}}) == doctest::Approx(1.0));
}

TEST_CASE("free variables") {
  CHECK(Expr::parse("exp(z)-1").free_vars() == std::set<std::string>{"z"});
  CHECK(Expr::parse("x^2+z").free_vars() == std::set<std::string>{"x", "z"});
  CHECK(Expr::parse("1").free_vars().empty());
}

namespace {

Expr random_expr(std::mt19937& rng, int depth) {
  std::uniform_int_distribution<int> pick(0, depth <= 0 ? 1 : 6);
  switch (pick(rng)) {
    case 0: {
      std::uniform_int_distribution<int> lit(-4, 4);
      return Expr::constant(lit(rng));
    }
    case 1: {
      const char* vars[3] = {"x", "y", "z"};
      return Expr::variable(vars[rng() % 3]);
    }
    case 2:
      return Expr::parse("(" + random_expr(rng, depth - 1).print() + ")+(" +
                         random_expr(rng, depth - 1).print() + ")");
    case 3:
      return Expr::parse("(" + random_expr(rng, depth - 1).print() + ")*(" +
                         random_expr(rng, depth - 1).print() + ")");
    case 4:
      return Expr::parse("-(" + random_expr(rng, depth - 1).print() + ")");
    case 5:
      return Expr::parse("sin(" + random_expr(rng, depth - 1).print() + ")");
    default:
      return Expr::parse("(" + random_expr(rng, depth - 1).print() + ")^2");
  }
}

} // namespace

TEST_CASE("print/parse round-trip is the identity on random ASTs") {
  std::mt19937 rng(7);
  Env env{{"x", 0.7}, {"y", -1.3}, {"z", 0.4}};
  for (int i = 0; i < 200; ++i) {
    Expr e = random_expr(rng, 4);
    std::string printed = e.print();
    Expr reparsed = Expr::parse(printed);
    CHECK(reparsed.print() == printed); // parse . print . parse = parse
    double a = e.eval(env), b = reparsed.eval(env);
    if (std::isfinite(a))
      CHECK(a == doctest::Approx(b).epsilon(1e-12));
  }
}

TEST_CASE("numeric derivative matches hand derivatives") {
  Expr e = Expr::parse("z^3+exp(z)");
  for (double z : {-1.0, 0.0, 0.5, 1.5}) {
    double expect = 3 * z * z + std::exp(z);
    CHECK(num_derivative(e, "z", {{"z", z}}) == doctest::Approx(expect).epsilon(1e-6));
  }
  Expr g = Expr::parse("x*z^2");
  CHECK(num_derivative(g, "x", {{"x", 2.0}, {"z", 3.0}}) == doctest::Approx(9.0).epsilon(1e-6));
}
