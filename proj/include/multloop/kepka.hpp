#ifndef MULTLOOP_KEPKA_HPP
#define MULTLOOP_KEPKA_HPP

#include "multloop/config.hpp"
#include "multloop/groupcat.hpp"
#include "multloop/liealg.hpp"

#include <array>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace multloop::kepka {

/// Closed-form left-transversal family R^3 -> G with family(0) = identity.
struct TransversalSpec {
  std::string name;
  const groupcat::GroupLaw* law = nullptr;
  std::function<groupcat::Element(const Vec&)> family;
};

/// Raised when a subgroup's coset coordinates drift along its own cosets
/// (e.g. a spec paired with a family from a different law).
struct CosetCoordsInvalid : std::runtime_error {
  explicit CosetCoordsInvalid(const std::string& what) : std::runtime_error(what) {}
};

struct TransversalReport {
  bool coset_coords_valid = false;
  double coset_residual = 0;     // drift of coset_coords along cosets
  double membership_residual = 0; // family(p)^{-1} g against the subgroup
  bool solver_ok = true;
  bool passed = false;
};
TransversalReport is_left_transversal(const TransversalSpec& ts, const groupcat::SubgroupSpec& sg,
                                      const CheckConfig& cfg);

struct ConnectednessReport {
  double max_residual = 0;
  bool passed = false;
  Vec worst_a, worst_b;
};
ConnectednessReport connectedness_check(const TransversalSpec& a, const TransversalSpec& b,
                                        const groupcat::SubgroupSpec& s, const CheckConfig& cfg);

struct GenerationReport {
  std::size_t rank = 0;
  std::size_t target_dim = 0;
  Vec singular_values;
  bool passed = false; // rank == target_dim
};
GenerationReport generation_witness(const groupcat::GroupLaw& law,
                                    const std::vector<TransversalSpec>& families,
                                    std::size_t target_dim, const CheckConfig& cfg);

struct NiemenmaaReport {
  std::size_t normalizer_dim = 0;
  std::size_t inn_center_dim = 0;
  bool sum_direct = false;
  bool passed = false; // normalizer == inn (+) center exactly
};
NiemenmaaReport niemenmaa_check(const liealg::LieAlgebra& alg, const Subspace& inn);

/// One S-connected-transversal instance (A, B, S) of a case.
struct TransversalTriple {
  TransversalSpec a, b;
  groupcat::SubgroupSpec inn;
  std::vector<RatVec> inn_subalgebra; // in the linked catalog algebra basis
};

struct CaseData {
  int index = 0;
  const groupcat::GroupLaw* law = nullptr;
  std::vector<groupcat::SubgroupSpec> inns;
  std::vector<TransversalTriple> triples;
  std::vector<TransversalSpec> generators; // families expected to generate
  // Fixed-point spiral families: connected transversals that are nevertheless
  // confined to a proper subgroup. Kept as negative witnesses with their rank.
  std::vector<TransversalSpec> defect_families;
  std::size_t defect_rank = 0;
  // Case 8 carries no generating witness at all: the connectedness condition
  // forces x+y = d(e^{az}-1), confining every admissible pair to a 4-dim
  // subgroup; its expected generation rank is 4, not 5.
  std::size_t expected_generation_rank = 5;
};

/// The eight positive classification cases.
const CaseData& case_data(int i);

/// The 4-dim pair whose normalizer condition fails.
struct NiemenmaaCase {
  std::string name;
  std::string algebra;
  std::vector<RatVec> inn;
  bool expect_pass = true;
};
const std::vector<NiemenmaaCase>& niemenmaa_cases();

/// Obstruction catalog. Residual cases fit free constants by least squares
/// and confirm when the remaining residual stays >= delta_obs; rank cases
/// confirm when the forced families span strictly less than the target.
struct FitObstruction {
  std::vector<Vec> samples;
  std::function<double(const Vec&)> target;
  std::vector<std::function<double(const Vec&)>> basis;
};
struct RankObstruction {
  std::shared_ptr<const groupcat::GroupLaw> law;
  std::vector<TransversalSpec> families;
  std::size_t target_dim = 0;
};
struct ObstructionCase {
  std::string name;
  std::string description;
  std::variant<FitObstruction, RankObstruction> payload;
};

struct ObstructionReport {
  bool confirmed = false;
  double residual = 0;        // fit cases
  Vec fitted;                 // fit cases
  std::size_t rank = 0;       // rank cases
  std::size_t target_dim = 0; // rank cases
};

const std::vector<ObstructionCase>& obstruction_catalog();
const ObstructionCase& obstruction(const std::string& name);
ObstructionReport obstruction_report(const ObstructionCase& c, const CheckConfig& cfg);

} // namespace multloop::kepka

#endif
