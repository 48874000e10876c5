#include "multloop/linalg.hpp"

#include <stdexcept>

namespace multloop {

RatVec zero_vec(std::size_t n) { return RatVec(n, Rat(0)); }

RatVec unit_vec(std::size_t n, std::size_t i) {
  RatVec v = zero_vec(n);
  v.at(i) = Rat(1);
  return v;
}

RatVec add(const RatVec& a, const RatVec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("vector size mismatch");
  RatVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

RatVec sub(const RatVec& a, const RatVec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("vector size mismatch");
  RatVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

RatVec scale(const Rat& c, const RatVec& a) {
  RatVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = c * a[i];
  return r;
}

bool is_zero(const RatVec& v) {
  for (const Rat& x : v)
    if (!x.is_zero()) return false;
  return true;
}

std::vector<std::size_t> rref(RatMat& m) {
  std::vector<std::size_t> pivots;
  if (m.empty()) return pivots;
  const std::size_t rows = m.size(), cols = m[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t pr = r;
    while (pr < rows && m[pr][c].is_zero()) ++pr;
    if (pr == rows) continue;
    std::swap(m[r], m[pr]);
    Rat inv = Rat(1) / m[r][c];
    for (std::size_t j = c; j < cols; ++j) m[r][j] *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][c].is_zero()) continue;
      Rat f = m[i][c];
      for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  m.resize(pivots.size()); // drop zero rows
  return pivots;
}

RatMat inverse(const RatMat& m) {
  const std::size_t n = m.size();
  RatMat aug(n, RatVec(2 * n, Rat(0)));
  for (std::size_t i = 0; i < n; ++i) {
    if (m[i].size() != n) throw std::invalid_argument("inverse: not square");
    for (std::size_t j = 0; j < n; ++j) aug[i][j] = m[i][j];
    aug[i][n + i] = Rat(1);
  }
  auto piv = rref(aug);
  if (piv.size() != n || piv.back() != n - 1)
    throw std::invalid_argument("inverse: singular matrix");
  RatMat inv(n, RatVec(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv[i][j] = aug[i][n + j];
  return inv;
}

std::vector<RatVec> null_space(const RatMat& m) {
  if (m.empty()) return {};
  const std::size_t cols = m[0].size();
  RatMat a = m;
  std::vector<std::size_t> piv = rref(a);
  std::vector<bool> is_pivot(cols, false);
  for (std::size_t c : piv) is_pivot[c] = true;
  std::vector<RatVec> basis;
  for (std::size_t free_c = 0; free_c < cols; ++free_c) {
    if (is_pivot[free_c]) continue;
    RatVec v = zero_vec(cols);
    v[free_c] = Rat(1);
    for (std::size_t i = 0; i < piv.size(); ++i) v[piv[i]] = -a[i][free_c];
    basis.push_back(v);
  }
  return basis;
}

Subspace::Subspace(std::size_t ambient_dim, const std::vector<RatVec>& spanning)
    : ambient_(ambient_dim) {
  for (const auto& v : spanning)
    if (v.size() != ambient_) throw std::invalid_argument("Subspace: ambient dim mismatch");
  RatMat m = spanning;
  pivots_ = rref(m);
  basis_ = m;
}

Subspace Subspace::span(const std::vector<RatVec>& spanning) {
  if (spanning.empty()) throw std::invalid_argument("Subspace::span: empty spanning set");
  return Subspace(spanning[0].size(), spanning);
}

Subspace Subspace::whole(std::size_t n) {
  std::vector<RatVec> e;
  for (std::size_t i = 0; i < n; ++i) e.push_back(unit_vec(n, i));
  return Subspace(n, e);
}

RatVec Subspace::reduce(const RatVec& v) const {
  if (v.size() != ambient_) throw std::invalid_argument("Subspace::reduce: dim mismatch");
  RatVec r = v;
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    Rat f = r[pivots_[i]];
    if (f.is_zero()) continue;
    for (std::size_t j = 0; j < ambient_; ++j) r[j] -= f * basis_[i][j];
  }
  return r;
}

bool Subspace::contains(const RatVec& v) const { return is_zero(reduce(v)); }

bool Subspace::contains(const Subspace& other) const {
  for (const auto& v : other.basis_)
    if (!contains(v)) return false;
  return true;
}

Subspace Subspace::sum(const Subspace& other) const {
  if (ambient_ != other.ambient_) throw std::invalid_argument("Subspace::sum: dim mismatch");
  std::vector<RatVec> rows = basis_;
  rows.insert(rows.end(), other.basis_.begin(), other.basis_.end());
  return Subspace(ambient_, rows);
}

std::vector<RatVec> Subspace::complement_basis() const {
  std::vector<bool> is_pivot(ambient_, false);
  for (std::size_t c : pivots_) is_pivot[c] = true;
  std::vector<RatVec> comp;
  for (std::size_t j = 0; j < ambient_; ++j)
    if (!is_pivot[j]) comp.push_back(unit_vec(ambient_, j));
  return comp;
}

} // namespace multloop
