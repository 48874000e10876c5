#include "multloop/groupcat.hpp"

#include "multloop/algebra_catalog.hpp"
#include "multloop/kepka.hpp"

#include <doctest.h>

#include <cmath>

using namespace multloop;
using namespace multloop::groupcat;

namespace {
const double kE = std::exp(1.0);

bool close(const Vec& a, const Vec& b, double tol = 1e-12) {
  return max_abs(vec_sub(a, b)) < tol;
}
} // namespace

TEST_CASE("mult1 products") {
  const GroupLaw& m1 = law("mult1");
  CHECK(close(g_mul(m1, {1, 0, 0, 0, 0}, {0, 1, 0, 0, 0}), {1, 1, -1, 0, 0}));
  Vec x{0.3, -1.2, 0.5, 2.0, -0.7};
  CHECK(close(g_mul(m1, Vec(5, 0.0), x), x));
  CHECK(close(g_mul(m1, x, Vec(5, 0.0)), x));
}

TEST_CASE("the 4-dim law from the H-subgroup construction") {
  const GroupLaw& g = law("g4_3");
  CHECK(close(g_mul(g, {0, 0, 0, 1}, {1, 0, 0, 0}), {kE, 0, 0, 1}));
  // closed-form inverse
  Vec a{0.8, -0.4, 1.1, -0.6};
  CHECK(close(g_inv(g, a), {-a[0] * std::exp(-a[3]), -a[1] + a[3] * a[2], -a[2], -a[3]}));
  // commutator lands back near the commutator subgroup
  CHECK(close(g_comm(g, {1, 0, 0, 0}, {0, 0, 0, 1}), {std::exp(-1.0) - 1, 0, 0, 0}));
  CHECK(close(g_comm(g, a, a), Vec(4, 0.0)));
}

TEST_CASE("inverses verified by products on random points") {
  CheckConfig cfg;
  for (const auto& l : law_catalog()) {
    INFO(l.name);
    Sampler sampler(derive_seed(cfg.seed, "invtest:" + l.name));
    double worst = 0;
    for (int i = 0; i < 100; ++i) {
      Vec a = sampler.point(l.dim, 2.0);
      worst = std::max(worst, max_abs(g_mul(l, a, g_inv(l, a))));
      worst = std::max(worst, max_abs(g_mul(l, g_inv(l, a), a)));
    }
    CHECK(worst < 1e-12);
  }
}

TEST_CASE("l2 inverse closed form") {
  const GroupLaw& l = law("l2");
  Vec a{1.7, -0.9};
  CHECK(close(g_inv(l, a), {-a[0] * std::exp(-a[1]), -a[1]}));
}

TEST_CASE("mult1 commutator lies in Inn1") {
  const GroupLaw& m1 = law("mult1");
  Vec a{0, kE - 1, 0, 0, 1}; // A1 member at (x,y,z) = (0,0,1)
  Vec b{1, 0, 0, -1, 0};     // B1 member at (n,l,m) = (1,0,0)
  Vec c = g_comm(m1, a, b);
  CHECK(close(c, {0, 0, kE - 1, kE - 1, 0}));
  const SubgroupSpec& inn1 = kepka::case_data(1).inns[0];
  CHECK(subgroup_member(inn1, c));
  CHECK(subgroup_member(inn1, Vec(5, 0.0)));
  CHECK(!subgroup_member(inn1, {0, 1, 2, 3, 0}));
}

TEST_CASE("dimension mismatch is rejected") {
  CHECK_THROWS_AS(g_mul(law("mult1"), Vec{1, 2}, Vec{1, 2}), std::invalid_argument);
}

TEST_CASE("tangent extraction recovers the linked algebras") {
  for (const auto& l : law_catalog()) {
    INFO(l.name);
    CHECK(tangent_matches_linked(l));
  }
}

TEST_CASE("tangent extraction, specific brackets") {
  liealg::LieAlgebra t2 = tangent_algebra(law("mult2"));
  CHECK(t2 == liealg::mult_alg(2)); // [e1,e2]=e1, [e3,e4]=e3 directly in chart basis

  GroupLaw m7 = make_mult7_law(2.0, 3.0);
  liealg::LieAlgebra t7 = tangent_algebra(m7);
  CHECK(t7 == liealg::mult7_alg(Rat(2), Rat(3)));

  liealg::LieAlgebra r5 = tangent_algebra(law("R5"));
  CHECK(r5 == liealg::abelian(5));
}

TEST_CASE("parametric law guards") {
  CHECK_THROWS_AS(make_mult6_law(0.0), std::invalid_argument);
  CHECK_THROWS_AS(make_mult6_law(-1.0), std::invalid_argument);
  CHECK_THROWS_AS(make_mult7_law(1.0, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(make_mult8_law(0.0), std::invalid_argument);
}

TEST_CASE("full law suite on a reduced sample budget") {
  CheckConfig cfg;
  cfg.samples = 200;
  for (const auto& l : law_catalog()) {
    INFO(l.name);
    LawSuiteReport rep = law_suite(l, cfg);
    CHECK(rep.passed);
    CHECK(rep.assoc_residual < cfg.tol_grp);
  }
}

TEST_CASE("overridden parameters flow into the linked algebra") {
  GroupLaw m6 = make_mult6_law(0.5);
  CHECK(tangent_matches_linked(m6));
  GroupLaw m8 = make_mult8_law(-1.0);
  CHECK(tangent_matches_linked(m8));
}
