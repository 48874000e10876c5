#include "multloop/algebra_catalog.hpp"
#include "multloop/liealg.hpp"

#include <doctest.h>

using namespace multloop;
using namespace multloop::liealg;

namespace {

// Independent oracle: read a bracket of basis vectors straight off the
// structure-constant table, no bilinear evaluation path.
RatVec basis_bracket_oracle(const LieAlgebra& alg, std::size_t i, std::size_t j) {
  RatVec v = zero_vec(alg.dim());
  for (std::size_t k = 0; k < alg.dim(); ++k) v[k] = alg.c(i, j, k);
  return v;
}

} // namespace

TEST_CASE("bracket on g4_3") {
  LieAlgebra g = g4_3();
  CHECK(bracket(g, unit_vec(4, 0), unit_vec(4, 3)) == unit_vec(4, 0)); // [e1,e4] = e1
  RatVec x = {Rat(1), Rat(-2), Rat(3), Rat(1, 2)};
  CHECK(is_zero(bracket(g, x, x)));
  // [e4,e3] = -e2 by antisymmetry; cross-check against the oracle.
  RatVec expect = scale(Rat(-1), unit_vec(4, 1));
  CHECK(bracket(g, unit_vec(4, 3), unit_vec(4, 2)) == expect);
  CHECK(basis_bracket_oracle(g, 3, 2) == expect);
  CHECK_THROWS_AS(bracket(g, RatVec{Rat(1)}, x), std::invalid_argument);
}

TEST_CASE("bracket is bilinear") {
  LieAlgebra g = mult_alg(1);
  RatVec x = {Rat(1), Rat(2), Rat(0), Rat(-1), Rat(1, 3)};
  RatVec y = {Rat(0), Rat(1), Rat(5), Rat(2), Rat(-2)};
  RatVec z = {Rat(3), Rat(0), Rat(1), Rat(1), Rat(1)};
  CHECK(bracket(g, add(x, y), z) == add(bracket(g, x, z), bracket(g, y, z)));
  CHECK(bracket(g, scale(Rat(7, 2), x), y) == scale(Rat(7, 2), bracket(g, x, y)));
}

TEST_CASE("jacobi_check") {
  CHECK(jacobi_check(mult_alg(1)));
  CHECK(jacobi_check(abelian(5)));
  LieAlgebra corrupted = g4_3();
  corrupted.set_bracket(0, 2, 3, Rat(1)); // extra [e1,e3] = e4 breaks Jacobi on (e1,e3,e4)
  CHECK(!jacobi_check(corrupted));
}

TEST_CASE("commutator ideal") {
  Subspace comm1 = commutator_ideal(mult_alg(1));
  CHECK(comm1 == Subspace::span({unit_vec(5, 2), unit_vec(5, 3)}));
  CHECK(commutator_ideal(abelian(4)).dim() == 0);
  Subspace comm38 = commutator_ideal(g5_38());
  CHECK(comm38 == Subspace::span({unit_vec(5, 0), unit_vec(5, 1), unit_vec(5, 2)}));
}

TEST_CASE("center") {
  CHECK(center(prop5_g(1)) == Subspace::span({unit_vec(5, 0)}));
  CHECK(center(abelian(5)) == Subspace::whole(5));
  CHECK(center(mult_alg(2)) == Subspace::span({unit_vec(5, 4)}));
}

TEST_CASE("series") {
  LieAlgebra f4 = filiform(4);
  SeriesResult lc = series(f4, SeriesKind::LowerCentral);
  CHECK(lc.dims == std::vector<std::size_t>{4, 2, 1, 0});
  CHECK(lc.reaches_zero);
  CHECK(nilpotency_class(f4) == 3);
  SeriesResult der = series(f4, SeriesKind::Derived);
  CHECK(der.dims == std::vector<std::size_t>{4, 2, 0});

  SeriesResult ab = series(abelian(3), SeriesKind::Derived);
  CHECK(ab.dims == std::vector<std::size_t>{3, 0});

  LieAlgebra l = l2();
  CHECK(series(l, SeriesKind::Derived).dims == std::vector<std::size_t>{2, 1, 0});
  CHECK(is_solvable(l));
  CHECK(series(l, SeriesKind::LowerCentral).dims == std::vector<std::size_t>{2, 1, 1});
  CHECK(!is_nilpotent(l));
  CHECK(!nilpotency_class(l).has_value());
}

TEST_CASE("is_ideal") {
  LieAlgebra g = g4_3();
  CHECK(is_ideal(g, Subspace::span({unit_vec(4, 0)})));
  CHECK(is_ideal(g, Subspace::whole(4)));
  // [e1+e2, e4] = e1 leaves the line, so it is no ideal.
  CHECK(!is_ideal(g, Subspace::span({add(unit_vec(4, 0), unit_vec(4, 1))})));
}

TEST_CASE("normalizer") {
  LieAlgebra g = g4_3();
  Subspace h4 = Subspace::span({add(unit_vec(4, 0), unit_vec(4, 1))});
  CHECK(normalizer(g, h4) ==
        Subspace::span({unit_vec(4, 0), unit_vec(4, 1), unit_vec(4, 2)}));
  Subspace e1 = Subspace::span({unit_vec(4, 0)});
  CHECK(normalizer(g, e1) == Subspace::whole(4)); // ideals normalize to everything

  LieAlgebra m1 = mult_alg(1);
  Subspace inn1 = Subspace::span({unit_vec(5, 1), add(unit_vec(5, 2), unit_vec(5, 3))});
  CHECK(normalizer(m1, inn1) ==
        Subspace::span({unit_vec(5, 1), unit_vec(5, 2), unit_vec(5, 3)}));

  LieAlgebra f4 = filiform(4);
  Subspace not_subalg = Subspace::span({unit_vec(4, 0), unit_vec(4, 1)}); // [e1,e2]=e3
  CHECK_THROWS_AS(normalizer(f4, not_subalg), NotSubalgebraError);
}

TEST_CASE("quotient") {
  LieAlgebra g533 = g5_33(Rat(1), Rat(0));
  LieAlgebra q = quotient(g533, Subspace::span({unit_vec(5, 0)}));
  CHECK(jacobi_check(q));
  LieAlgebra l2l2 = direct_sum(l2(), l2());
  CHECK(fingerprint(q) == fingerprint(l2l2));

  // the mirror case: beta = 0 and the quotient taken by <e2>
  LieAlgebra g533b = g5_33(Rat(0), Rat(1));
  CHECK(fingerprint(quotient(g533b, Subspace::span({unit_vec(5, 1)}))) == fingerprint(l2l2));

  LieAlgebra f4 = filiform(4);
  CHECK(fingerprint(quotient(f4, Subspace(4))) == fingerprint(f4));
  CHECK(fingerprint(quotient(f4, Subspace::span({unit_vec(4, 3)}))) == fingerprint(filiform(3)));

  CHECK_THROWS_AS(
      quotient(g4_3(), Subspace::span({add(unit_vec(4, 0), unit_vec(4, 1))})), NotIdealError);
}

TEST_CASE("quotient fingerprint ignores the complement choice") {
  LieAlgebra f4 = filiform(4);
  Subspace ideal = Subspace::span({unit_vec(4, 3)});
  LieAlgebra q1 = quotient(f4, ideal);
  // A skewed complement spanning the same quotient.
  std::vector<RatVec> comp = {add(unit_vec(4, 0), unit_vec(4, 3)),
                              add(unit_vec(4, 1), scale(Rat(2), unit_vec(4, 3))),
                              unit_vec(4, 2)};
  LieAlgebra q2 = quotient(f4, ideal, comp);
  CHECK(jacobi_check(q2));
  CHECK(fingerprint(q1) == fingerprint(q2));
}

TEST_CASE("fingerprint") {
  Fingerprint f4 = fingerprint(filiform(4));
  CHECK(f4.dim == 4);
  CHECK(f4.derived_dims == std::vector<std::size_t>{4, 2, 0});
  CHECK(f4.lower_central_dims == std::vector<std::size_t>{4, 2, 1, 0});
  CHECK(f4.center_dim == 1);
  CHECK(f4.commutator_dim == 2);
  CHECK(f4.commutator_abelian);

  Fingerprint r3 = fingerprint(abelian(3));
  CHECK(r3.dim == 3);
  CHECK(r3.derived_dims == std::vector<std::size_t>{3, 0});
  CHECK(r3.center_dim == 3);
  CHECK(r3.commutator_dim == 0);

  Fingerprint ll = fingerprint(direct_sum(l2(), l2()));
  CHECK(ll.derived_dims == std::vector<std::size_t>{4, 2, 0});
  CHECK(ll.lower_central_dims == std::vector<std::size_t>{4, 2, 2});
  CHECK(ll.center_dim == 0);
  CHECK(ll.commutator_dim == 2);
  CHECK(ll.commutator_abelian);

  // The two distinguishers the suite leans on stay distinguishable.
  CHECK(!(fingerprint(filiform(4)) == ll));
}

TEST_CASE("direct_sum") {
  CHECK(direct_sum(filiform(3), l2()) == mult_alg(1));
  LieAlgebra a = g4_3();
  CHECK(direct_sum(a, abelian(0)) == a);
  CHECK(direct_sum(direct_sum(l2(), l2()), abelian(1)) == mult_alg(2));
}

TEST_CASE("direct_sum fingerprints add") {
  LieAlgebra a = filiform(3), b = l2();
  Fingerprint fa = fingerprint(a), fb = fingerprint(b), fs = fingerprint(direct_sum(a, b));
  CHECK(fs.center_dim == fa.center_dim + fb.center_dim);
  for (std::size_t i = 0; i < fs.derived_dims.size(); ++i) {
    std::size_t da = i < fa.derived_dims.size() ? fa.derived_dims[i] : fa.derived_dims.back();
    std::size_t db = i < fb.derived_dims.size() ? fb.derived_dims[i] : fb.derived_dims.back();
    CHECK(fs.derived_dims[i] == da + db);
  }
}

TEST_CASE("catalog-wide structural invariants") {
  for (const auto& entry : algebra_catalog()) {
    if (entry.stub) continue;
    const LieAlgebra& alg = *entry.algebra;
    INFO(entry.name);
    CHECK(alg.antisymmetric());
    CHECK(jacobi_check(alg));
    Subspace comm = commutator_ideal(alg);
    CHECK(is_ideal(alg, comm));
    SeriesResult der = series(alg, SeriesKind::Derived);
    for (std::size_t i = 1; i < der.dims.size(); ++i) CHECK(der.dims[i] <= der.dims[i - 1]);
    // centre normalizes every subalgebra; use the commutator ideal when it is one
    if (is_subalgebra(alg, comm) && comm.dim() > 0)
      CHECK(normalizer(alg, comm).contains(center(alg)));
  }
}

TEST_CASE("change_basis preserves fingerprints") {
  LieAlgebra f4 = filiform(4);
  RatMat t = {{Rat(1), Rat(1), Rat(0), Rat(0)},
              {Rat(0), Rat(1), Rat(0), Rat(2)},
              {Rat(0), Rat(0), Rat(1), Rat(1)},
              {Rat(0), Rat(0), Rat(0), Rat(1)}};
  LieAlgebra moved = change_basis(f4, t);
  CHECK(jacobi_check(moved));
  CHECK(fingerprint(moved) == fingerprint(f4));
}

TEST_CASE("dimension cap") {
  CHECK_THROWS_AS(LieAlgebra("too-big", 7), std::invalid_argument);
  CHECK_THROWS_AS(direct_sum(mult_alg(1), l2()), std::invalid_argument);
}
