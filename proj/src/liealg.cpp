#include "multloop/liealg.hpp"

#include <sstream>

namespace multloop::liealg {

LieAlgebra::LieAlgebra(std::string name, std::size_t dim)
    : name_(std::move(name)), dim_(dim), c_(dim * dim * dim, Rat(0)) {
  if (dim > kMaxDim) throw std::invalid_argument("LieAlgebra: dim > 6 unsupported");
}

void LieAlgebra::set_bracket(std::size_t i, std::size_t j, const RatVec& v) {
  if (i >= dim_ || j >= dim_ || v.size() != dim_)
    throw std::invalid_argument("set_bracket: index/dim out of range");
  if (i == j && !is_zero(v)) throw std::invalid_argument("set_bracket: [x,x] must be 0");
  for (std::size_t k = 0; k < dim_; ++k) {
    c_[idx(i, j, k)] = v[k];
    c_[idx(j, i, k)] = -v[k];
  }
}

void LieAlgebra::set_bracket(std::size_t i, std::size_t j, std::size_t k, const Rat& value) {
  RatVec v = zero_vec(dim_);
  for (std::size_t m = 0; m < dim_; ++m) v[m] = c(i, j, m);
  v.at(k) = value;
  set_bracket(i, j, v);
}

bool LieAlgebra::antisymmetric() const {
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = 0; j < dim_; ++j)
      for (std::size_t k = 0; k < dim_; ++k)
        if (c(i, j, k) != -c(j, i, k)) return false;
  return true;
}

LieAlgebra abelian(std::size_t n) {
  std::ostringstream name;
  name << "R" << n;
  return LieAlgebra(name.str(), n);
}

RatVec bracket(const LieAlgebra& alg, const RatVec& x, const RatVec& y) {
  const std::size_t n = alg.dim();
  if (x.size() != n || y.size() != n)
    throw std::invalid_argument("bracket: vector length != algebra dim");
  RatVec r = zero_vec(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (y[j].is_zero()) continue;
      Rat f = x[i] * y[j];
      for (std::size_t k = 0; k < n; ++k) r[k] += f * alg.c(i, j, k);
    }
  }
  return r;
}

bool jacobi_check(const LieAlgebra& alg) {
  const std::size_t n = alg.dim();
  if (!alg.antisymmetric()) return false;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k)
        for (std::size_t l = 0; l < n; ++l) {
          Rat s(0);
          for (std::size_t m = 0; m < n; ++m)
            s += alg.c(i, j, m) * alg.c(m, k, l) + alg.c(j, k, m) * alg.c(m, i, l) +
                 alg.c(k, i, m) * alg.c(m, j, l);
          if (!s.is_zero()) return false;
        }
  return true;
}

namespace {

/// Span of [a, b] over basis pairs of two subspaces.
Subspace bracket_span(const LieAlgebra& alg, const Subspace& a, const Subspace& b) {
  std::vector<RatVec> gens;
  for (const auto& u : a.basis())
    for (const auto& v : b.basis()) {
      RatVec w = bracket(alg, u, v);
      if (!is_zero(w)) gens.push_back(w);
    }
  return Subspace(alg.dim(), gens);
}

} // namespace

Subspace commutator_ideal(const LieAlgebra& alg) {
  return bracket_span(alg, Subspace::whole(alg.dim()), Subspace::whole(alg.dim()));
}

Subspace center(const LieAlgebra& alg) {
  const std::size_t n = alg.dim();
  // Rows of the stacked adjoint conditions: x central iff [x, e_j] = 0 for all j.
  RatMat m;
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = 0; k < n; ++k) {
      RatVec row(n);
      for (std::size_t i = 0; i < n; ++i) row[i] = alg.c(i, j, k);
      m.push_back(row);
    }
  return Subspace(n, null_space(m));
}

SeriesResult series(const LieAlgebra& alg, SeriesKind kind) {
  SeriesResult res;
  Subspace current = Subspace::whole(alg.dim());
  res.chain.push_back(current);
  res.dims.push_back(current.dim());
  res.reaches_zero = (current.dim() == 0);
  res.length = 0;
  while (current.dim() > 0) {
    Subspace next = (kind == SeriesKind::Derived)
                        ? bracket_span(alg, current, current)
                        : bracket_span(alg, Subspace::whole(alg.dim()), current);
    res.chain.push_back(next);
    res.dims.push_back(next.dim());
    if (next.dim() == 0) {
      res.reaches_zero = true;
      res.length = res.chain.size() - 1;
      break;
    }
    if (next == current) break; // stabilized above zero
    current = next;
  }
  return res;
}

bool is_solvable(const LieAlgebra& alg) { return series(alg, SeriesKind::Derived).reaches_zero; }
bool is_nilpotent(const LieAlgebra& alg) {
  return series(alg, SeriesKind::LowerCentral).reaches_zero;
}

std::optional<std::size_t> nilpotency_class(const LieAlgebra& alg) {
  SeriesResult s = series(alg, SeriesKind::LowerCentral);
  if (!s.reaches_zero) return std::nullopt;
  return s.length;
}

bool is_subalgebra(const LieAlgebra& alg, const Subspace& s) {
  for (const auto& u : s.basis())
    for (const auto& v : s.basis())
      if (!s.contains(bracket(alg, u, v))) return false;
  return true;
}

bool is_ideal(const LieAlgebra& alg, const Subspace& s) {
  if (s.ambient_dim() != alg.dim()) throw std::invalid_argument("is_ideal: dim mismatch");
  for (std::size_t i = 0; i < alg.dim(); ++i)
    for (const auto& v : s.basis())
      if (!s.contains(bracket(alg, unit_vec(alg.dim(), i), v))) return false;
  return true;
}

Subspace normalizer(const LieAlgebra& alg, const Subspace& s) {
  if (!is_subalgebra(alg, s)) throw NotSubalgebraError();
  const std::size_t n = alg.dim();
  // x in normalizer iff reduce([x, v]) = 0 for every basis vector v of s.
  RatMat m;
  for (const auto& v : s.basis()) {
    // Column i of the linear map x_i -> reduce([e_i, v]).
    std::vector<RatVec> cols;
    for (std::size_t i = 0; i < n; ++i) cols.push_back(s.reduce(bracket(alg, unit_vec(n, i), v)));
    for (std::size_t k = 0; k < n; ++k) {
      RatVec row(n);
      for (std::size_t i = 0; i < n; ++i) row[i] = cols[i][k];
      m.push_back(row);
    }
  }
  if (m.empty()) return Subspace::whole(n);
  return Subspace(n, null_space(m));
}

LieAlgebra quotient(const LieAlgebra& alg, const Subspace& ideal) {
  std::vector<RatVec> comp = ideal.complement_basis();
  return quotient(alg, ideal, comp);
}

LieAlgebra quotient(const LieAlgebra& alg, const Subspace& ideal,
                    const std::vector<RatVec>& complement) {
  if (!is_ideal(alg, ideal)) throw NotIdealError();
  const std::size_t n = alg.dim();
  const std::size_t q = n - ideal.dim();
  if (complement.size() != q)
    throw std::invalid_argument("quotient: complement has wrong dimension");
  // Coordinates on the quotient: write reduce(v) in the complement basis.
  RatMat sys; // columns: complement vectors reduced; solve per target later
  std::vector<RatVec> red_comp;
  for (const auto& v : complement) red_comp.push_back(ideal.reduce(v));
  {
    Subspace check(n, red_comp);
    if (check.dim() != q) throw std::invalid_argument("quotient: complement not transversal");
  }
  auto coords = [&](const RatVec& target) {
    // Solve sum_a x_a red_comp[a] = reduce(target) exactly.
    RatVec t = ideal.reduce(target);
    RatMat aug(n, RatVec(q + 1, Rat(0)));
    for (std::size_t row = 0; row < n; ++row) {
      for (std::size_t a = 0; a < q; ++a) aug[row][a] = red_comp[a][row];
      aug[row][q] = t[row];
    }
    auto piv = rref(aug);
    RatVec x = zero_vec(q);
    for (std::size_t r = 0; r < piv.size(); ++r) {
      if (piv[r] == q) throw std::invalid_argument("quotient: inconsistent reduction");
      x[piv[r]] = aug[r][q];
    }
    return x;
  };
  LieAlgebra out(alg.name() + "/ideal", q);
  for (std::size_t a = 0; a < q; ++a)
    for (std::size_t b = a + 1; b < q; ++b)
      out.set_bracket(a, b, coords(bracket(alg, complement[a], complement[b])));
  return out;
}

Fingerprint fingerprint(const LieAlgebra& alg) {
  Fingerprint fp;
  fp.dim = alg.dim();
  fp.derived_dims = series(alg, SeriesKind::Derived).dims;
  fp.lower_central_dims = series(alg, SeriesKind::LowerCentral).dims;
  fp.center_dim = center(alg).dim();
  Subspace comm = commutator_ideal(alg);
  fp.commutator_dim = comm.dim();
  fp.commutator_abelian = true;
  for (const auto& u : comm.basis())
    for (const auto& v : comm.basis())
      if (!is_zero(bracket(alg, u, v))) fp.commutator_abelian = false;
  return fp;
}

std::string to_string(const Fingerprint& fp) {
  std::ostringstream os;
  os << "(dim=" << fp.dim << ", derived=[";
  for (std::size_t i = 0; i < fp.derived_dims.size(); ++i)
    os << (i ? "," : "") << fp.derived_dims[i];
  os << "], lower_central=[";
  for (std::size_t i = 0; i < fp.lower_central_dims.size(); ++i)
    os << (i ? "," : "") << fp.lower_central_dims[i];
  os << "], center=" << fp.center_dim << ", comm=" << fp.commutator_dim
     << (fp.commutator_abelian ? ", comm abelian)" : ", comm nonabelian)");
  return os.str();
}

LieAlgebra direct_sum(const LieAlgebra& a, const LieAlgebra& b) {
  const std::size_t n = a.dim() + b.dim();
  LieAlgebra out(a.name() + "+" + b.name(), n);
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = i + 1; j < a.dim(); ++j) {
      RatVec v = zero_vec(n);
      for (std::size_t k = 0; k < a.dim(); ++k) v[k] = a.c(i, j, k);
      out.set_bracket(i, j, v);
    }
  for (std::size_t i = 0; i < b.dim(); ++i)
    for (std::size_t j = i + 1; j < b.dim(); ++j) {
      RatVec v = zero_vec(n);
      for (std::size_t k = 0; k < b.dim(); ++k) v[a.dim() + k] = b.c(i, j, k);
      out.set_bracket(a.dim() + i, a.dim() + j, v);
    }
  return out;
}

LieAlgebra change_basis(const LieAlgebra& alg, const RatMat& t) {
  const std::size_t n = alg.dim();
  if (t.size() != n) throw std::invalid_argument("change_basis: matrix size mismatch");
  RatMat tinv = inverse(t);
  LieAlgebra out(alg.name() + "~", n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      RatVec w = bracket(alg, t[i], t[j]); // in old coordinates
      RatVec v = zero_vec(n);              // in new coordinates: v_d = sum_c w_c (t^-1)_{cd}
      for (std::size_t d = 0; d < n; ++d)
        for (std::size_t c = 0; c < n; ++c) v[d] += w[c] * tinv[c][d];
      out.set_bracket(i, j, v);
    }
  return out;
}

} // namespace multloop::liealg
