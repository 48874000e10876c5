#ifndef MULTLOOP_LIEALG_HPP
#define MULTLOOP_LIEALG_HPP

#include "multloop/linalg.hpp"
#include "multloop/rational.hpp"

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace multloop::liealg {

struct NotSubalgebraError : std::runtime_error {
  NotSubalgebraError() : std::runtime_error("subspace is not a subalgebra") {}
};
struct NotIdealError : std::runtime_error {
  NotIdealError() : std::runtime_error("subspace is not an ideal") {}
};

constexpr std::size_t kMaxDim = 6;

/// Lie algebra over Q given by structure constants [e_i,e_j] = sum_k c[i][j][k] e_k.
class LieAlgebra {
public:
  LieAlgebra(std::string name, std::size_t dim);

  const std::string& name() const { return name_; }
  std::size_t dim() const { return dim_; }
  const Rat& c(std::size_t i, std::size_t j, std::size_t k) const { return c_[idx(i, j, k)]; }

  /// Sets [e_i,e_j] = v and [e_j,e_i] = -v (0-based indices).
  void set_bracket(std::size_t i, std::size_t j, const RatVec& v);
  void set_bracket(std::size_t i, std::size_t j, std::size_t k, const Rat& value);

  std::map<std::string, Rat>& params() { return params_; }
  const std::map<std::string, Rat>& params() const { return params_; }

  bool antisymmetric() const; // c[i][j][k] == -c[j][i][k], incl. diagonal zero
  friend bool operator==(const LieAlgebra& a, const LieAlgebra& b) {
    return a.dim_ == b.dim_ && a.c_ == b.c_;
  }

private:
  std::size_t idx(std::size_t i, std::size_t j, std::size_t k) const {
    return (i * dim_ + j) * dim_ + k;
  }
  std::string name_;
  std::size_t dim_;
  std::vector<Rat> c_;
  std::map<std::string, Rat> params_;
};

LieAlgebra abelian(std::size_t n);

RatVec bracket(const LieAlgebra& alg, const RatVec& x, const RatVec& y);
bool jacobi_check(const LieAlgebra& alg);

Subspace commutator_ideal(const LieAlgebra& alg);
Subspace center(const LieAlgebra& alg);

enum class SeriesKind { Derived, LowerCentral };

struct SeriesResult {
  std::vector<Subspace> chain;     // starts with the whole algebra
  std::vector<std::size_t> dims;   // chain dims, last entry repeated once on stabilization
  bool reaches_zero;
  /// Number of steps to reach zero (only meaningful when reaches_zero).
  std::size_t length;
};

SeriesResult series(const LieAlgebra& alg, SeriesKind kind);
bool is_solvable(const LieAlgebra& alg);
bool is_nilpotent(const LieAlgebra& alg);
/// Nilpotency class (lower central series length); nullopt when not nilpotent.
std::optional<std::size_t> nilpotency_class(const LieAlgebra& alg);

bool is_subalgebra(const LieAlgebra& alg, const Subspace& s);
bool is_ideal(const LieAlgebra& alg, const Subspace& s);
Subspace normalizer(const LieAlgebra& alg, const Subspace& s);

/// Quotient by an ideal on the canonical complement basis, or on a caller
/// supplied complement (vectors spanning a complement of the ideal).
LieAlgebra quotient(const LieAlgebra& alg, const Subspace& ideal);
LieAlgebra quotient(const LieAlgebra& alg, const Subspace& ideal,
                    const std::vector<RatVec>& complement);

struct Fingerprint {
  std::size_t dim;
  std::vector<std::size_t> derived_dims;
  std::vector<std::size_t> lower_central_dims;
  std::size_t center_dim;
  std::size_t commutator_dim;
  bool commutator_abelian;
  friend bool operator==(const Fingerprint&, const Fingerprint&) = default;
};

Fingerprint fingerprint(const LieAlgebra& alg);
std::string to_string(const Fingerprint& fp);

LieAlgebra direct_sum(const LieAlgebra& a, const LieAlgebra& b);

/// Structure constants in the new basis given by rows of t (new_i = sum_j t[i][j] e_j).
LieAlgebra change_basis(const LieAlgebra& alg, const RatMat& t);

} // namespace multloop::liealg

#endif
