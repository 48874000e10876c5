#ifndef MULTLOOP_GROUPCAT_HPP
#define MULTLOOP_GROUPCAT_HPP

#include "multloop/config.hpp"
#include "multloop/liealg.hpp"
#include "multloop/numerics.hpp"

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace multloop::groupcat {

/// Group element = coordinate vector; identity is the origin in every law.
using Element = Vec;

struct GroupLaw {
  std::string name;
  std::size_t dim = 0;
  std::function<Element(const Element&, const Element&)> mul;
  std::function<Element(const Element&)> inv;
  std::map<std::string, double> params;
  /// Linked liealg catalog entry, empty when the law has no linked algebra.
  std::string lie_algebra_ref;
  /// Builds the linked algebra instance (nullptr when unlinked).
  std::function<liealg::LieAlgebra()> linked_algebra;
  /// Rows = linked-catalog basis written in the chart basis at the identity.
  /// tangent_algebra, pushed through this frame, must equal the linked entry.
  RatMat tangent_frame;
};

Element g_mul(const GroupLaw& law, const Element& a, const Element& b);
Element g_inv(const GroupLaw& law, const Element& a);
/// a^-1 b^-1 a b
Element g_comm(const GroupLaw& law, const Element& a, const Element& b);

/// Homogeneous linear condition sum_i coeffs[i] * x[i] = 0.
struct LinearForm {
  Vec coeffs;
  double eval(const Element& g) const;
};

/// Coordinate-slice subgroup with explicit coset coordinates.
struct SubgroupSpec {
  std::string name;
  const GroupLaw* law = nullptr;
  std::size_t param_dim = 0;
  std::function<Element(const Vec&)> parametrize;     // R^k -> S
  std::vector<LinearForm> membership_equations;       // count + k = law->dim
  std::function<Vec(const Element&)> coset_coords;    // R^n -> R^3, constant on gS
  std::function<Element(const Vec&)> lift;            // R^3 -> G, coset_coords(lift(p)) = p
};

double membership_residual(const SubgroupSpec& spec, const Element& g);
bool subgroup_member(const SubgroupSpec& spec, const Element& g, double tol = 1e-9);

/// Structure constants extracted from mixed second derivatives of
/// (s,t) -> g_comm(s e_i, t e_j) at 0, matched to rationals with
/// denominator <= 12. Throws ExtractionUnstable on step disagreement
/// and std::runtime_error when a constant is not near a small rational.
liealg::LieAlgebra tangent_algebra(const GroupLaw& law, double h = 1e-3, double tol_fd = 1e-5);

/// Extract, push through the recorded frame, compare with the linked entry.
bool tangent_matches_linked(const GroupLaw& law, double h = 1e-3, double tol_fd = 1e-5);

/// Built-in law catalog: the coordinate laws written out in the source
/// material plus small helpers (l2, F3, F4, R5) used as cross-checks.
const std::vector<GroupLaw>& law_catalog();
const GroupLaw& law(const std::string& name);

/// Parametric builders.
GroupLaw make_mult6_law(double a); // requires a > 0
GroupLaw make_mult7_law(double a, double b);
GroupLaw make_mult8_law(double a);
/// R^2 x (euclidean motion group cover): the mult6 formulas at a = 0.
/// Deliberately not constructible through make_mult6_law.
GroupLaw make_motion_law();

struct LawSuiteReport {
  double assoc_residual = 0;
  double identity_residual = 0;
  double inverse_residual = 0;
  bool tangent_ok = true;
  bool passed = false;
  Vec worst_assoc_sample;
};

/// Associativity / identity / inverse on seeded samples + tangent link.
LawSuiteReport law_suite(const GroupLaw& law, const CheckConfig& cfg);

} // namespace multloop::groupcat

#endif
