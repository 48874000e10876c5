#ifndef MULTLOOP_LINALG_HPP
#define MULTLOOP_LINALG_HPP

#include "multloop/rational.hpp"

#include <cstddef>
#include <vector>

namespace multloop {

using RatVec = std::vector<Rat>;
using RatMat = std::vector<RatVec>; // row major

RatVec zero_vec(std::size_t n);
RatVec unit_vec(std::size_t n, std::size_t i);
RatVec add(const RatVec& a, const RatVec& b);
RatVec sub(const RatVec& a, const RatVec& b);
RatVec scale(const Rat& c, const RatVec& a);
bool is_zero(const RatVec& v);

/// In-place reduced row echelon form; returns pivot column indices.
std::vector<std::size_t> rref(RatMat& m);

/// Inverse of a square matrix (throws std::invalid_argument if singular).
RatMat inverse(const RatMat& m);

/// Right null space of m as a list of basis vectors.
std::vector<RatVec> null_space(const RatMat& m);

/// Linear subspace of Q^n in canonical (RREF) form.
/// Canonical form makes equality a plain data comparison.
class Subspace {
public:
  explicit Subspace(std::size_t ambient_dim) : ambient_(ambient_dim) {}
  Subspace(std::size_t ambient_dim, const std::vector<RatVec>& spanning);

  static Subspace span(const std::vector<RatVec>& spanning);
  static Subspace whole(std::size_t n);

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return basis_.size(); }
  const std::vector<RatVec>& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  bool contains(const RatVec& v) const;
  bool contains(const Subspace& other) const;

  /// Residue of v after eliminating pivot coordinates; zero iff v is a member.
  RatVec reduce(const RatVec& v) const;

  Subspace sum(const Subspace& other) const;

  /// Standard basis vectors at the non-pivot coordinates.
  std::vector<RatVec> complement_basis() const;

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
  }
  friend bool operator!=(const Subspace& a, const Subspace& b) { return !(a == b); }

private:
  std::size_t ambient_;
  std::vector<RatVec> basis_; // RREF rows
  std::vector<std::size_t> pivots_;
};

} // namespace multloop

#endif
