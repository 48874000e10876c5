#ifndef MULTLOOP_LOOPCORE_HPP
#define MULTLOOP_LOOPCORE_HPP

#include "multloop/config.hpp"
#include "multloop/exprdsl.hpp"
#include "multloop/groupcat.hpp"
#include "multloop/numerics.hpp"

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace multloop::loopcore {

struct NotNormalized : std::runtime_error {
  explicit NotNormalized(const std::string& what) : std::runtime_error(what) {}
};

/// Loop multiplication with both divisions on R^3. Identity is the origin.
struct LoopLaw {
  std::string name;
  std::function<Vec(const Vec&, const Vec&)> mul;  // p * q
  std::function<Vec(const Vec&, const Vec&)> ldiv; // (a, b) -> a \ b
  std::function<Vec(const Vec&, const Vec&)> rdiv; // (b, a) -> b / a
  std::optional<Vec> central_dir;                  // catalog central-line candidate
};

LoopLaw family_a(const dsl::Expr& f); // f = f(z), f(0) = 0
LoopLaw family_b(const dsl::Expr& h); // h = h(x,z), h(0,0) = 0
LoopLaw family_c(const dsl::Expr& f); // f = f(x,y,z), f(0,0,0) = 0
LoopLaw family_d(const dsl::Expr& k); // k = k(x,y,z), k(0,0,0) = 0

/// Loop induced by a sharply transitive section of law/subgroup.
struct SectionLoop {
  std::string name;
  const groupcat::GroupLaw* law = nullptr;
  groupcat::SubgroupSpec subgroup;
  std::function<groupcat::Element(const Vec&)> section; // R^3 -> G, section(0) = 1
  Vec central_dir;
};

/// Validates the SectionLoop invariants on a sample grid, then builds the law.
/// ldiv is exact (left translations act on the coset space by group
/// multiplication, so a\b lifts to section(a)^{-1}); rdiv is Newton-backed.
LoopLaw loop_from_section(const SectionLoop& s, const CheckConfig& cfg = {});

SectionLoop section_case1();
SectionLoop section_case2();

/// Deterministic evaluation grid: lattice points plus seeded random triples.
struct LoopGrid {
  std::vector<Vec> points;
  std::vector<std::pair<Vec, Vec>> pairs;
  std::vector<std::array<Vec, 3>> triples;
};
LoopGrid make_grid(const CheckConfig& cfg, const std::string& label);

struct AxiomsReport {
  double identity_residual = 0;
  double ldiv_residual = 0;
  double rdiv_residual = 0;
  double max_residual = 0;
  bool passed = false;
  std::string failure; // set when a division solver reports 0 or >= 2 roots
  Vec worst_a, worst_b; // pair attaining the largest division residual
};
AxiomsReport axioms_check(const LoopLaw& loop, const CheckConfig& cfg);

/// ldiv(a*(b*c), (a*b)*c); zero iff associativity holds at (a,b,c).
Vec associator(const LoopLaw& loop, const Vec& a, const Vec& b, const Vec& c);

struct AssociatorScan {
  double max_norm = 0;
  std::array<Vec, 3> witness;
};
AssociatorScan associator_scan(const LoopLaw& loop, const CheckConfig& cfg);

bool is_central(const LoopLaw& loop, const Vec& z, const CheckConfig& cfg,
                double* residual = nullptr);

struct Class2Report {
  bool central_line_ok = false;    // t * dir passes is_central
  double off_line_residual = 0;    // associators/commutators distance from the line
  double max_associator_norm = 0;  // properness witness size
  std::array<Vec, 3> properness_witness;
  std::array<Vec, 3> off_line_witness;
  int estimated_class = 0; // 1 when all associators vanish, 2 when the check passes
  bool passed = false;
};
Class2Report nilpotency_class2_check(const LoopLaw& loop, const Vec& central_dir,
                                     const CheckConfig& cfg);

struct BijectivityResult {
  bool independent_of_z = false;
  // Witness fields, valid when independent_of_z is false:
  double u = 0, x0 = 0, y0 = 0, z1 = 0, z2 = 0;
  bool witness_found = false;
};
BijectivityResult bijectivity_witness(const dsl::Expr& f, const CheckConfig& cfg = {});

struct FunctionalResult {
  double max_residual = 0;   // of f(z2) + e^{-z2} f(z1) - f(z1+z2) over pairs
  double fitted_c = 0;       // least-squares c for f(z) ~ c(1 - e^{-z})
  double fit_residual = 0;
};
FunctionalResult functional_residual(const dsl::Expr& f, const CheckConfig& cfg = {},
                                     int pairs = 200);

} // namespace multloop::loopcore

#endif
