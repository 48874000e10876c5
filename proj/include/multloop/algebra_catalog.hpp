#ifndef MULTLOOP_ALGEBRA_CATALOG_HPP
#define MULTLOOP_ALGEBRA_CATALOG_HPP

#include "multloop/liealg.hpp"

#include <optional>
#include <string>
#include <vector>

namespace multloop::liealg {

/// One catalog record. Stub entries are algebras the source material names
/// without writing out a bracket table; they carry no structure constants.
struct CatalogEntry {
  std::string name;
  std::size_t dim = 0;
  bool stub = false; // flagged "relations-not-in-paper"
  std::optional<LieAlgebra> algebra;
  std::string note;
};

/// Parametric builders (values are rationals; guards mirror the source constraints).
LieAlgebra filiform(std::size_t n);                  // F_n, [e1,e_i] = e_{i+1}
LieAlgebra l2();                                     // [e1,e2] = e1
LieAlgebra g4_3();                                   // [e1,e4]=e1, [e3,e4]=e2
LieAlgebra g4_10();                                  // [e1,e3]=e1, [e2,e3]=e2, [e1,e4]=-e2, [e2,e4]=e1
LieAlgebra g5_33(const Rat& beta, const Rat& gamma); // requires beta or gamma nonzero
LieAlgebra g5_38();
LieAlgebra prop5_g(int which); // the four 5-dim algebras g_1..g_4, which in 1..4
LieAlgebra mult_alg(int which_case); // mult(L)_1..8 with default parameters
LieAlgebra mult6_alg(const Rat& a);  // requires a > 0
LieAlgebra mult7_alg(const Rat& a, const Rat& b); // requires a != b, both nonzero
LieAlgebra mult8_alg(const Rat& a);               // requires a nonzero
LieAlgebra r2_x_l2(); // 4-dim R^2 x L_2, [e4,e3]=e4

/// The built-in catalog (fixed order, used by the CLI listing and the data file).
const std::vector<CatalogEntry>& algebra_catalog();

/// Lookup; throws std::out_of_range for unknown names and std::runtime_error
/// when asked for the structure constants of a stub.
const CatalogEntry& catalog_entry(const std::string& name);
const LieAlgebra& catalog_algebra(const std::string& name);

/// Plain-text serialization, one record per line:
///   name; dim; [i,j,k]=p/q; ...; params a=1 b=2; note "..."
///   name; dim; relations-not-in-paper
/// print/parse round-trips losslessly.
std::string catalog_to_text(const std::vector<CatalogEntry>& entries);
std::vector<CatalogEntry> catalog_from_text(const std::string& text);

} // namespace multloop::liealg

#endif
