// Property-style checks with hand-rolled generators: random basis changes,
// random subspaces, and seed-independence of the verdicts.

#include "multloop/algebra_catalog.hpp"
#include "multloop/groupcat.hpp"
#include "multloop/kepka.hpp"
#include "multloop/liealg.hpp"

#include <doctest.h>

#include <random>

using namespace multloop;
using namespace multloop::liealg;

namespace {

Rat random_rat(std::mt19937& rng) {
  std::uniform_int_distribution<long> num(-3, 3);
  std::uniform_int_distribution<long> den(1, 4);
  return Rat(num(rng), den(rng));
}

RatMat random_invertible(std::mt19937& rng, std::size_t n) {
  while (true) {
    RatMat t(n, RatVec(n));
    for (auto& row : t)
      for (auto& x : row) x = random_rat(rng);
    try {
      inverse(t);
      return t;
    } catch (const std::invalid_argument&) {
      // singular draw, try again
    }
  }
}

} // namespace

TEST_CASE("random basis changes preserve Jacobi and fingerprints") {
  std::mt19937 rng(20240601);
  for (const char* name : {"mult1", "mult3", "g4_3", "prop5_g2", "F4"}) {
    const LieAlgebra& alg = catalog_algebra(name);
    for (int trial = 0; trial < 5; ++trial) {
      RatMat t = random_invertible(rng, alg.dim());
      LieAlgebra moved = change_basis(alg, t);
      INFO(name);
      CHECK(moved.antisymmetric());
      CHECK(jacobi_check(moved));
      CHECK(fingerprint(moved) == fingerprint(alg));
    }
  }
}

TEST_CASE("subspace membership agrees with reduction") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<RatVec> gens;
    for (int g = 0; g < 3; ++g) {
      RatVec v(5);
      for (auto& x : v) x = random_rat(rng);
      gens.push_back(v);
    }
    Subspace s(5, gens);
    for (const auto& g : gens) CHECK(s.contains(g));
    // membership is stable under taking random combinations
    RatVec combo = zero_vec(5);
    for (const auto& g : gens) combo = add(combo, scale(random_rat(rng), g));
    CHECK(s.contains(combo));
    CHECK(is_zero(s.reduce(combo)));
    // dim + complement size = ambient
    CHECK(s.dim() + s.complement_basis().size() == 5);
  }
}

TEST_CASE("subspace sums are monotone and bounded") {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 30; ++trial) {
    auto draw = [&] {
      std::vector<RatVec> gens;
      for (int g = 0; g < 2; ++g) {
        RatVec v(4);
        for (auto& x : v) x = random_rat(rng);
        gens.push_back(v);
      }
      return Subspace(4, gens);
    };
    Subspace a = draw(), b = draw();
    Subspace s = a.sum(b);
    CHECK(s.contains(a));
    CHECK(s.contains(b));
    CHECK(s.dim() <= a.dim() + b.dim());
    CHECK(s.dim() >= std::max(a.dim(), b.dim()));
    CHECK(a.sum(b) == b.sum(a));
  }
}

TEST_CASE("verdicts do not depend on the sampling seed") {
  for (std::uint64_t seed : {std::uint64_t{kDefaultSeed}, std::uint64_t{999}, std::uint64_t{123456789}}) {
    CheckConfig cfg;
    cfg.seed = seed;
    cfg.samples = 150;
    cfg.grid_points = 5;
    CHECK(groupcat::law_suite(groupcat::law("mult4"), cfg).passed);
    const kepka::CaseData& c1 = kepka::case_data(1);
    CHECK(kepka::is_left_transversal(c1.triples[0].a, c1.inns[0], cfg).passed);
    CHECK(kepka::generation_witness(*c1.law, c1.generators, 5, cfg).passed);
    const kepka::CaseData& c8 = kepka::case_data(8);
    CHECK(kepka::generation_witness(*c8.law, c8.generators, 5, cfg).rank == 4);
  }
}

TEST_CASE("centre normalizes every case subalgebra") {
  for (const auto& c : kepka::niemenmaa_cases()) {
    const LieAlgebra& alg = catalog_algebra(c.algebra);
    Subspace inn(alg.dim(), c.inn);
    CHECK(normalizer(alg, inn).contains(center(alg)));
  }
}
