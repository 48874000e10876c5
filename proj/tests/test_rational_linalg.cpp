#include "multloop/linalg.hpp"
#include "multloop/rational.hpp"

#include <doctest.h>

using namespace multloop;

TEST_CASE("rational arithmetic stays canonical") {
  Rat a(1, 3), b(1, 6);
  CHECK(a + b == Rat(1, 2));
  CHECK((a + b).den() == 2);
  CHECK(Rat(2, -4) == Rat(-1, 2));
  CHECK(Rat(-1, 2).den() == 1 * 2);
  CHECK(Rat::parse("-7/21") == Rat(-1, 3));
  CHECK(Rat::parse("5").str() == "5");
  CHECK(Rat(3, 4).str() == "3/4");
  CHECK_THROWS_AS(Rat(1, 0), std::invalid_argument);
  CHECK_THROWS_AS(Rat(1) / Rat(0), std::invalid_argument);
  CHECK(Rat(1, 3).to_double() == doctest::Approx(1.0 / 3));
}

TEST_CASE("rref produces canonical pivots") {
  RatMat m = {{Rat(0), Rat(2), Rat(4)}, {Rat(1), Rat(1), Rat(1)}, {Rat(1), Rat(3), Rat(5)}};
  auto piv = rref(m);
  CHECK(piv == std::vector<std::size_t>{0, 1});
  CHECK(m.size() == 2);
  CHECK(m[0] == RatVec{Rat(1), Rat(0), Rat(-1)});
  CHECK(m[1] == RatVec{Rat(0), Rat(1), Rat(2)});
}

TEST_CASE("null space and inverse") {
  RatMat m = {{Rat(1), Rat(2), Rat(3)}, {Rat(2), Rat(4), Rat(6)}};
  auto ns = null_space(m);
  CHECK(ns.size() == 2);
  for (const auto& v : ns)
    CHECK((v[0] + Rat(2) * v[1] + Rat(3) * v[2]).is_zero());

  RatMat a = {{Rat(2), Rat(1)}, {Rat(1), Rat(1)}};
  RatMat inv = inverse(a);
  CHECK(inv[0] == RatVec{Rat(1), Rat(-1)});
  CHECK(inv[1] == RatVec{Rat(-1), Rat(2)});
  CHECK_THROWS_AS(inverse(RatMat{{Rat(1), Rat(2)}, {Rat(2), Rat(4)}}), std::invalid_argument);
}

TEST_CASE("subspace canonical form, membership, sum") {
  Subspace s = Subspace::span({{Rat(1), Rat(1), Rat(0)}, {Rat(2), Rat(2), Rat(0)}});
  CHECK(s.dim() == 1);
  CHECK(s.contains(RatVec{Rat(-3), Rat(-3), Rat(0)}));
  CHECK(!s.contains(RatVec{Rat(1), Rat(0), Rat(0)}));

  // Same span, different spanning sets: identical canonical data.
  Subspace t = Subspace::span({{Rat(1), Rat(1), Rat(0)}, {Rat(1), Rat(1), Rat(1)}});
  Subspace u = Subspace::span({{Rat(0), Rat(0), Rat(1)}, {Rat(2), Rat(2), Rat(5)}});
  CHECK(t == u);

  Subspace sum = s.sum(Subspace::span({{Rat(0), Rat(1), Rat(0)}}));
  CHECK(sum.dim() == 2);
  CHECK(sum.contains(RatVec{Rat(1), Rat(0), Rat(0)}));

  CHECK(Subspace(3).dim() == 0);
  CHECK(Subspace::whole(4).dim() == 4);
  CHECK(s.complement_basis().size() == 2);
}
