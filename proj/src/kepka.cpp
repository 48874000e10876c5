#include "multloop/kepka.hpp"

#include "multloop/algebra_catalog.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace multloop::kepka {

using groupcat::Element;
using groupcat::GroupLaw;
using groupcat::LinearForm;
using groupcat::SubgroupSpec;

namespace {

std::vector<Vec> lattice(int points_per_axis, double box, std::size_t dims) {
  std::vector<Vec> out;
  std::vector<int> idx(dims, 0);
  while (true) {
    Vec p(dims);
    for (std::size_t d = 0; d < dims; ++d)
      p[d] = -box + 2 * box * idx[d] / (points_per_axis - 1);
    out.push_back(p);
    std::size_t d = 0;
    while (d < dims && ++idx[d] == points_per_axis) idx[d++] = 0;
    if (d == dims) break;
  }
  return out;
}

} // namespace

TransversalReport is_left_transversal(const TransversalSpec& ts, const SubgroupSpec& sg,
                                      const CheckConfig& cfg) {
  TransversalReport rep;
  const GroupLaw& law = *ts.law;
  if (sg.law->dim != law.dim)
    throw std::invalid_argument("is_left_transversal: law dimension mismatch");

  // coset_coords must be constant along g S.
  Sampler sampler(derive_seed(cfg.seed, "transversal:" + ts.name + ":" + sg.name));
  for (int t = 0; t < 100; ++t) {
    Element g = sampler.point(law.dim, cfg.box);
    Vec sp = sampler.point(sg.param_dim, cfg.box);
    Element gs = g_mul(law, g, sg.parametrize(sp));
    rep.coset_residual =
        std::max(rep.coset_residual, max_abs(vec_sub(sg.coset_coords(gs), sg.coset_coords(g))));
  }
  rep.coset_coords_valid = rep.coset_residual < cfg.tol_grp;
  if (!rep.coset_coords_valid)
    throw CosetCoordsInvalid("CosetCoordsInvalid: " + sg.name + " drifts by " +
                             std::to_string(rep.coset_residual) + " along cosets of " + law.name);

  // Every sampled group element factors as family(p) * s: solve for p through
  // coset coordinates, then verify family(p)^{-1} g lands in the subgroup.
  std::uint64_t newton_seed = derive_seed(cfg.seed, "transversal-newton:" + ts.name);
  int n_samples = cfg.grid_points * cfg.grid_points * cfg.grid_points;
  Sampler gsampler(derive_seed(cfg.seed, "transversal-elements:" + ts.name));
  for (int t = 0; t < n_samples; ++t) {
    Element g = gsampler.point(law.dim, cfg.box);
    Vec c = sg.coset_coords(g);
    auto f = [&](const Vec& p) { return vec_sub(sg.coset_coords(ts.family(p)), c); };
    Vec p = c;
    if (!newton_solve(f, p, 1e-12, 80, newton_seed)) {
      rep.solver_ok = false;
      break;
    }
    Element rest = g_mul(law, g_inv(law, ts.family(p)), g);
    rep.membership_residual =
        std::max(rep.membership_residual, groupcat::membership_residual(sg, rest));
  }
  rep.passed = rep.coset_coords_valid && rep.solver_ok && rep.membership_residual < cfg.tol_grp;
  return rep;
}

ConnectednessReport connectedness_check(const TransversalSpec& a, const TransversalSpec& b,
                                        const SubgroupSpec& s, const CheckConfig& cfg) {
  ConnectednessReport rep;
  const GroupLaw& law = *a.law;
  std::vector<Vec> grid = lattice(cfg.grid_points, cfg.box, 3);
  for (const Vec& pa : grid) {
    Element ga = a.family(pa);
    for (const Vec& pb : grid) {
      Element gb = b.family(pb);
      double r = groupcat::membership_residual(s, g_comm(law, ga, gb));
      if (r > rep.max_residual) {
        rep.max_residual = r;
        rep.worst_a = pa;
        rep.worst_b = pb;
      }
    }
  }
  rep.passed = rep.max_residual < cfg.tol_grp;
  return rep;
}

namespace {

/// Mixed-derivative bracket of two tangent directions through the group law.
Vec fd_bracket(const GroupLaw& law, const Vec& u, const Vec& v, const CheckConfig& cfg) {
  Vec w(law.dim);
  for (std::size_t k = 0; k < law.dim; ++k) {
    auto f = [&](double s, double t) {
      Element a(law.dim), b(law.dim);
      for (std::size_t i = 0; i < law.dim; ++i) {
        a[i] = s * u[i];
        b[i] = t * v[i];
      }
      return g_comm(law, a, b)[k];
    };
    w[k] = mixed_derivative(f, cfg.fd_step, cfg.tol_fd);
  }
  return w;
}

double norm2(const Vec& v) {
  double s = 0;
  for (double x : v) s += x * x;
  return std::sqrt(s);
}

/// Gram-Schmidt append; returns true when v adds a new direction.
bool orthonormal_add(std::vector<Vec>& onb, Vec v) {
  for (const Vec& u : onb) {
    double d = 0;
    for (std::size_t i = 0; i < v.size(); ++i) d += u[i] * v[i];
    for (std::size_t i = 0; i < v.size(); ++i) v[i] -= d * u[i];
  }
  double n = norm2(v);
  if (n < 1e-8) return false;
  for (double& x : v) x /= n;
  onb.push_back(v);
  return true;
}

} // namespace

GenerationReport generation_witness(const GroupLaw& law,
                                    const std::vector<TransversalSpec>& families,
                                    std::size_t target_dim, const CheckConfig& cfg) {
  GenerationReport rep;
  rep.target_dim = target_dim;
  std::vector<Vec> collected;
  std::vector<Vec> onb;

  Sampler sampler(derive_seed(cfg.seed, "generation:" + law.name));
  std::vector<Vec> bases;
  bases.push_back(Vec{0, 0, 0});
  for (int t = 0; t < 6; ++t) bases.push_back(sampler.point(3, 1.5));

  for (const auto& fam : families) {
    for (const Vec& base : bases) {
      Element at_base_inv = g_inv(law, fam.family(base));
      for (int dir = 0; dir < 3; ++dir) {
        Vec x(law.dim);
        for (std::size_t k = 0; k < law.dim; ++k) {
          auto f = [&](double t) {
            Vec p = base;
            p[dir] += t;
            return g_mul(law, at_base_inv, fam.family(p))[k];
          };
          x[k] = curve_derivative(f, cfg.fd_step, cfg.tol_fd);
        }
        double n = norm2(x);
        if (n < 1e-10) continue;
        for (double& c : x) c /= n;
        collected.push_back(x);
        orthonormal_add(onb, x);
      }
    }
  }

  // Close the tangent span under brackets (commutator curves), depth 3.
  for (int depth = 0; depth < 3 && onb.size() < law.dim; ++depth) {
    std::vector<Vec> current = onb;
    bool grew = false;
    for (std::size_t i = 0; i < current.size(); ++i)
      for (std::size_t j = i + 1; j < current.size(); ++j) {
        Vec w = fd_bracket(law, current[i], current[j], cfg);
        double n = norm2(w);
        if (n < 1e-8) continue;
        for (double& c : w) c /= n;
        collected.push_back(w);
        grew = orthonormal_add(onb, w) || grew;
        if (onb.size() == law.dim) break;
      }
    if (!grew) break;
  }

  rep.singular_values = singular_values(collected);
  rep.rank = 0;
  for (double s : rep.singular_values)
    if (s > cfg.svd_threshold) ++rep.rank;
  rep.passed = rep.rank == target_dim;
  return rep;
}

NiemenmaaReport niemenmaa_check(const liealg::LieAlgebra& alg, const Subspace& inn) {
  NiemenmaaReport rep;
  Subspace norm = liealg::normalizer(alg, inn);
  Subspace cen = liealg::center(alg);
  Subspace sum = inn.sum(cen);
  rep.normalizer_dim = norm.dim();
  rep.inn_center_dim = sum.dim();
  rep.sum_direct = sum.dim() == inn.dim() + cen.dim();
  rep.passed = (norm == sum);
  return rep;
}

namespace {

SubgroupSpec make_subgroup(std::string name, const GroupLaw* law, std::size_t param_dim,
                           std::function<Element(const Vec&)> parametrize,
                           std::vector<Vec> equations,
                           std::function<Vec(const Element&)> coset_coords,
                           std::function<Element(const Vec&)> lift) {
  SubgroupSpec s;
  s.name = std::move(name);
  s.law = law;
  s.param_dim = param_dim;
  s.parametrize = std::move(parametrize);
  for (auto& e : equations) s.membership_equations.push_back(LinearForm{std::move(e)});
  s.coset_coords = std::move(coset_coords);
  s.lift = std::move(lift);
  if (s.membership_equations.size() + s.param_dim != s.law->dim)
    throw std::logic_error(s.name + ": membership equations + params != dim");
  return s;
}

TransversalSpec make_family(std::string name, const GroupLaw* law,
                            std::function<Element(const Vec&)> family) {
  TransversalSpec t;
  t.name = std::move(name);
  t.law = law;
  t.family = std::move(family);
  return t;
}

CaseData build_case(int i) {
  CaseData data;
  data.index = i;
  switch (i) {
    case 1: {
      const GroupLaw* law = &groupcat::law("mult1");
      data.law = law;
      auto inn = make_subgroup(
          "Inn1", law, 2, [](const Vec& p) { return Element{0, p[0], p[1], p[1], 0}; },
          {Vec{1, 0, 0, 0, 0}, Vec{0, 0, 1, -1, 0}, Vec{0, 0, 0, 0, 1}},
          [](const Element& g) { return Vec{g[0], g[4], g[2] + g[0] * g[1] - g[3]}; },
          [](const Vec& p) { return Element{p[0], 0, p[2], 0, p[1]}; });
      auto a1 = make_family("A1", law, [](const Vec& p) {
        return Element{p[0], std::exp(p[2]) - 1, p[1], 0, p[2]};
      });
      auto b1 = make_family("B1", law,
                            [](const Vec& p) { return Element{p[0], 0, p[1], -p[0], p[2]}; });
      data.inns = {inn};
      data.triples.push_back(
          {a1, b1, inn, {RatVec{0, 1, 0, 0, 0}, RatVec{0, 0, 1, 1, 0}}});
      data.generators = {a1, b1};
      break;
    }
    case 2: {
      const GroupLaw* law = &groupcat::law("mult2");
      data.law = law;
      auto inn = make_subgroup(
          "Inn2", law, 2, [](const Vec& p) { return Element{p[0], 0, p[1], 0, p[0] + p[1]}; },
          {Vec{0, 1, 0, 0, 0}, Vec{0, 0, 0, 1, 0}, Vec{-1, 0, -1, 0, 1}},
          [](const Element& g) { return Vec{g[1], g[3], g[4] - g[0] - g[2]}; },
          [](const Vec& p) { return Element{0, p[0], 0, p[1], p[2]}; });
      auto a2 = make_family("A2", law, [](const Vec& p) {
        double c = 2 - std::exp(p[0]) - std::exp(p[1]);
        return Element{c, p[0], 0, p[1], p[2] + c};
      });
      auto b2 = make_family("B2", law, [](const Vec& p) {
        double c = 1 - std::exp(p[0]);
        return Element{c, p[0], c, p[1], p[2]};
      });
      data.inns = {inn};
      data.triples.push_back(
          {a2, b2, inn, {RatVec{1, 0, 0, 0, 1}, RatVec{0, 0, 1, 0, 1}}});
      data.generators = {a2, b2};
      break;
    }
    case 3: {
      const GroupLaw* law = &groupcat::law("mult3");
      data.law = law;
      auto inn31 = make_subgroup(
          "Inn3_1", law, 2, [](const Vec& p) { return Element{p[0], p[1], 0, 0, p[0]}; },
          {Vec{0, 0, 1, 0, 0}, Vec{0, 0, 0, 1, 0}, Vec{-1, 0, 0, 0, 1}},
          [](const Element& g) {
            return Vec{g[2], g[3], (g[0] + g[1] * g[2]) * std::exp(-g[3]) - g[4]};
          },
          [](const Vec& p) { return Element{p[2] * std::exp(p[1]), 0, p[0], p[1], 0}; });
      auto inn32 = make_subgroup(
          "Inn3_2", law, 2, [](const Vec& p) { return Element{p[0], p[1], 0, 0, p[0] + p[1]}; },
          {Vec{0, 0, 1, 0, 0}, Vec{0, 0, 0, 1, 0}, Vec{-1, -1, 0, 0, 1}},
          [](const Element& g) {
            return Vec{g[2], g[3], g[4] - (g[0] + g[1] * g[2] + g[1]) * std::exp(-g[3])};
          },
          [](const Vec& p) { return Element{-p[2] * std::exp(p[1]), 0, p[0], p[1], 0}; });
      auto a3 = make_family("A3", law, [](const Vec& p) {
        double ew = std::exp(p[1]);
        return Element{(ew - 1) * (p[0] + 2) - p[0], 1 - ew, p[0], p[1], p[2]};
      });
      auto b3 = make_family("B3", law, [](const Vec& p) {
        double el = std::exp(p[1]);
        return Element{(2 - el) * p[0], el - 1, p[0], p[1], p[2]};
      });
      auto c3 = make_family("C3", law, [](const Vec& p) {
        double ew = std::exp(p[1]);
        return Element{p[0] * (ew - 2), 1 - ew, p[0], p[1], p[2]};
      });
      data.inns = {inn31, inn32};
      // Pairing (A3,B3) with Inn3_1 leaves the commutator residual
      // 2(1-e^-w)(e^-l - 1); the assignment below is the one that is exact.
      data.triples.push_back(
          {a3, b3, inn32, {RatVec{1, 0, 0, 0, 1}, RatVec{0, 1, 0, 0, 1}}});
      data.triples.push_back(
          {b3, c3, inn31, {RatVec{1, 0, 0, 0, 1}, RatVec{0, 1, 0, 0, 0}}});
      data.generators = {a3, b3};
      break;
    }
    case 4: {
      const GroupLaw* law = &groupcat::law("mult4");
      data.law = law;
      auto coset = [](int which) {
        return [which](const Element& g) {
          double last = which == 1 ? g[4] - g[0] : which == 2 ? g[4] - g[1] : g[4] - g[0] - g[1];
          return Vec{g[2], g[3], last};
        };
      };
      auto lift = [](const Vec& p) { return Element{0, 0, p[0], p[1], p[2]}; };
      auto inn41 = make_subgroup(
          "Inn4_1", law, 2, [](const Vec& p) { return Element{p[0], p[1], 0, 0, p[0]}; },
          {Vec{0, 0, 1, 0, 0}, Vec{0, 0, 0, 1, 0}, Vec{-1, 0, 0, 0, 1}}, coset(1), lift);
      auto inn42 = make_subgroup(
          "Inn4_2", law, 2, [](const Vec& p) { return Element{p[0], p[1], 0, 0, p[1]}; },
          {Vec{0, 0, 1, 0, 0}, Vec{0, 0, 0, 1, 0}, Vec{0, -1, 0, 0, 1}}, coset(2), lift);
      auto inn43 = make_subgroup(
          "Inn4_3", law, 2, [](const Vec& p) { return Element{p[0], p[1], 0, 0, p[0] + p[1]}; },
          {Vec{0, 0, 1, 0, 0}, Vec{0, 0, 0, 1, 0}, Vec{-1, -1, 0, 0, 1}}, coset(3), lift);
      // The set 1 - e^{u+iv} is the rotation-dilation subgroup about the fixed
      // point (1,0): a connected transversal, but it generates only a 3-dim
      // subgroup. The conjugate spirals e^{u-iv} - 1 (one per inner mapping
      // candidate, matched to its membership functional) satisfy the same
      // transversality and connectedness conditions and do generate.
      auto a41 = make_family("A4_1", law, [](const Vec& p) {
        double eu = std::exp(p[0]);
        return Element{eu * std::cos(p[1]) - 1, -eu * std::sin(p[1]), p[0], p[1], p[2]};
      });
      auto a42 = make_family("A4_2", law, [](const Vec& p) {
        double eu = std::exp(p[0]);
        return Element{eu * std::sin(p[1]), eu * std::cos(p[1]) - 1, p[0], p[1], p[2]};
      });
      auto a43 = make_family("A4_3", law, [](const Vec& p) {
        double eu = std::exp(p[0]), c = std::cos(p[1]), s = std::sin(p[1]);
        return Element{eu * (c + s) - 1, eu * (c - s) - 1, p[0], p[1], p[2]};
      });
      auto a4_spiral = make_family("A4_fixedpoint", law, [](const Vec& p) {
        double eu = std::exp(p[0]);
        return Element{1 - eu * std::cos(p[1]), -eu * std::sin(p[1]), p[0], p[1], p[2]};
      });
      data.inns = {inn41, inn42, inn43};
      data.triples.push_back(
          {a41, a41, inn41, {RatVec{1, 0, 0, 0, 1}, RatVec{0, 1, 0, 0, 0}}});
      data.triples.push_back(
          {a42, a42, inn42, {RatVec{1, 0, 0, 0, 0}, RatVec{0, 1, 0, 0, 1}}});
      data.triples.push_back(
          {a43, a43, inn43, {RatVec{1, 0, 0, 0, 1}, RatVec{0, 1, 0, 0, 1}}});
      data.generators = {a41};
      data.defect_families = {a4_spiral};
      data.defect_rank = 3;
      break;
    }
    case 5: {
      const GroupLaw* law = &groupcat::law("mult5");
      data.law = law;
      auto inn = make_subgroup(
          "Inn5", law, 2, [](const Vec& p) { return Element{p[0], p[1], 0, p[1], 0}; },
          {Vec{0, 0, 1, 0, 0}, Vec{0, 0, 0, 0, 1}, Vec{0, -1, 0, 1, 0}},
          [](const Element& g) { return Vec{g[2], g[4], g[3] - g[1]}; },
          [](const Vec& p) { return Element{0, 0, p[0], p[2], p[1]}; });
      auto a5 = make_family("A5", law, [](const Vec& p) {
        double c = 1 - std::exp(p[0]) * (1 + p[0]);
        return Element{0, c, p[0], p[1] + c, p[2]};
      });
      auto b5 = make_family("B5", law, [](const Vec& p) {
        double c = 1 - std::exp(p[0]);
        return Element{c, c, p[0], p[1], p[2]};
      });
      data.inns = {inn};
      data.triples.push_back(
          {a5, b5, inn, {RatVec{1, 0, 0, 0, 0}, RatVec{0, 1, 0, 1, 0}}});
      data.generators = {a5, b5};
      break;
    }
    case 6:
    case 7:
    case 8: {
      const GroupLaw* law = &groupcat::law(i == 6 ? "mult6" : i == 7 ? "mult7" : "mult8");
      data.law = law;
      auto coset = [](int which) {
        return [which](const Element& g) {
          double last = which == 1 ? g[3] - g[0] - g[1] : which == 2 ? g[3] - g[0] : g[3] - g[1];
          return Vec{g[2], g[4], last};
        };
      };
      auto lift = [](const Vec& p) { return Element{0, 0, p[0], p[2], p[1]}; };
      auto inn61 = make_subgroup(
          "Inn6_1", law, 2, [](const Vec& p) { return Element{p[0], p[1], 0, p[0] + p[1], 0}; },
          {Vec{0, 0, 1, 0, 0}, Vec{0, 0, 0, 0, 1}, Vec{-1, -1, 0, 1, 0}}, coset(1), lift);
      if (i == 6) {
        double a = law->params.at("a");
        auto inn62 = make_subgroup(
            "Inn6_2", law, 2, [](const Vec& p) { return Element{p[0], p[1], 0, p[0], 0}; },
            {Vec{0, 0, 1, 0, 0}, Vec{0, 0, 0, 0, 1}, Vec{-1, 0, 0, 1, 0}}, coset(2), lift);
        auto inn63 = make_subgroup(
            "Inn6_3", law, 2, [](const Vec& p) { return Element{p[0], p[1], 0, p[1], 0}; },
            {Vec{0, 0, 1, 0, 0}, Vec{0, 0, 0, 0, 1}, Vec{0, -1, 0, 1, 0}}, coset(3), lift);
        // Same situation as case 4: the spiral about the fixed point (1,1) is a
        // one-parameter subgroup and cannot generate; the conjugate spirals
        // below are connected transversals that do.
        auto a61 = make_family("A6_1", law, [a](const Vec& p) {
          double e = std::exp(a * p[0]), s = std::sin(p[0]), c = std::cos(p[0]);
          return Element{e * (c + s) - 1, e * (c - s) - 1, p[0], p[1], p[2]};
        });
        auto a62 = make_family("A6_2", law, [a](const Vec& p) {
          double e = std::exp(a * p[0]);
          return Element{e * std::cos(p[0]) - 1, -e * std::sin(p[0]), p[0], p[1], p[2]};
        });
        auto a63 = make_family("A6_3", law, [a](const Vec& p) {
          double e = std::exp(a * p[0]);
          return Element{e * std::sin(p[0]), e * std::cos(p[0]) - 1, p[0], p[1], p[2]};
        });
        auto a6_spiral = make_family("A6_fixedpoint", law, [a](const Vec& p) {
          double e = std::exp(a * p[0]), s = std::sin(p[0]), c = std::cos(p[0]);
          return Element{1 + e * (s - c), 1 - e * (s + c), p[0], p[1], p[2]};
        });
        data.inns = {inn61, inn62, inn63};
        data.triples.push_back(
            {a61, a61, inn61, {RatVec{1, 0, 0, 1, 0}, RatVec{0, 1, 0, 1, 0}}});
        data.triples.push_back(
            {a62, a62, inn62, {RatVec{1, 0, 0, 1, 0}, RatVec{0, 1, 0, 0, 0}}});
        data.triples.push_back(
            {a63, a63, inn63, {RatVec{1, 0, 0, 0, 0}, RatVec{0, 1, 0, 1, 0}}});
        data.generators = {a61};
        data.defect_families = {a6_spiral};
        data.defect_rank = 3;
      } else if (i == 7) {
        double a = law->params.at("a"), b = law->params.at("b");
        auto a7 = make_family("A7", law, [a, b](const Vec& p) {
          double c = 2 - std::exp(b * p[0]) - std::exp(a * p[0]);
          return Element{c, c, p[0], p[1], p[2]};
        });
        data.inns = {inn61};
        data.triples.push_back(
            {a7, a7, inn61, {RatVec{1, 0, 0, 1, 0}, RatVec{0, 1, 0, 1, 0}}});
        data.generators = {a7};
      } else {
        double a = law->params.at("a");
        auto a8 = make_family("A8", law, [a](const Vec& p) {
          return Element{1 - std::exp(a * p[0]) - p[0], p[0], p[0], p[1], p[2]};
        });
        data.inns = {inn61};
        data.triples.push_back(
            {a8, a8, inn61, {RatVec{1, 0, 0, 1, 0}, RatVec{0, 1, 0, 1, 0}}});
        data.generators = {a8};
        // With both scalings equal, Inn-connectedness forces x+y of every
        // transversal onto d(e^{az}-1), which is preserved by products: all
        // admissible pairs stay inside a fixed 4-dim subgroup. No generating
        // witness exists for this case; rank 4 is the honest expectation.
        data.expected_generation_rank = 4;
      }
      break;
    }
    default:
      throw std::invalid_argument("case_data: case must be 1..8");
  }
  return data;
}

} // namespace

const CaseData& case_data(int i) {
  static const std::array<CaseData, 8> cases = {build_case(1), build_case(2), build_case(3),
                                                build_case(4), build_case(5), build_case(6),
                                                build_case(7), build_case(8)};
  if (i < 1 || i > 8) throw std::invalid_argument("case_data: case must be 1..8");
  return cases[i - 1];
}

const std::vector<NiemenmaaCase>& niemenmaa_cases() {
  static const std::vector<NiemenmaaCase> cases = [] {
    std::vector<NiemenmaaCase> c;
    // Inn candidate H4 = exp t(e1+e2); normalizer is 3-dim but inn + centre is
    // only 2-dim, so the check must fail.
    c.push_back(NiemenmaaCase{"g43-h4", "g4_3", {RatVec{1, 1, 0, 0}}, false});
    for (int i = 1; i <= 8; ++i) {
      const CaseData& data = case_data(i);
      int sub = 0;
      for (const auto& triple : data.triples) {
        std::string name = "case" + std::to_string(i);
        if (data.triples.size() > 1) name += "-" + std::to_string(++sub);
        c.push_back(NiemenmaaCase{name, data.law->lie_algebra_ref, triple.inn_subalgebra, true});
      }
    }
    return c;
  }();
  return cases;
}

namespace {

std::vector<Vec> grid1d(std::initializer_list<double> xs) {
  std::vector<Vec> out;
  for (double x : xs) out.push_back(Vec{x});
  return out;
}

std::vector<ObstructionCase> build_obstructions() {
  std::vector<ObstructionCase> cases;
  {
    FitObstruction fit;
    fit.samples = grid1d({-1, 1});
    fit.target = [](const Vec& s) { return s[0]; };
    fit.basis = {[](const Vec& s) { return 1 - std::exp(-s[0]); }};
    cases.push_back({"OBS-EXP-M", "m = c2 (1 - e^-m) cannot hold for all m", fit});
  }
  {
    FitObstruction fit;
    fit.samples = grid1d({-2, -1, -0.5, 0.5, 1, 2});
    fit.target = [](const Vec& s) { return -s[0]; };
    fit.basis = {[](const Vec& s) { return std::cos(s[0]) + std::sin(s[0]) - 1; },
                 [](const Vec& s) { return std::cos(s[0]) - std::sin(s[0]) - 1; }};
    cases.push_back(
        {"OBS-TRIG-SUMDIFF", "-m = c1(cos m + sin m - 1) + c2(cos m - sin m - 1) fails", fit});
  }
  {
    FitObstruction fit;
    fit.samples = grid1d({-2, -1, -0.5, 0.5, 1, 2});
    fit.target = [](const Vec& s) { return -s[0]; };
    fit.basis = {[](const Vec& s) { return std::sin(s[0]); },
                 [](const Vec& s) { return std::cos(s[0]) - 1; }};
    cases.push_back({"OBS-TRIG-SIN", "-m = c1 sin m + c2(cos m - 1) fails", fit});
  }
  {
    FitObstruction fit;
    fit.samples = grid1d({-2, -1, -0.5, 0.5, 1, 2});
    fit.target = [](const Vec& s) { return -s[0]; };
    fit.basis = {[](const Vec& s) { return std::cos(s[0]) - 1; },
                 [](const Vec& s) { return -std::sin(s[0]); }};
    cases.push_back({"OBS-TRIG-COS", "-m = c1(cos m - 1) - c2 sin m fails", fit});
  }
  {
    FitObstruction fit;
    fit.samples = grid1d({-1.5, -1, -0.5, 0.5, 1, 1.5});
    fit.target = [](const Vec& s) { return s[0] * std::exp(s[0]) / (1 - std::exp(s[0])); };
    fit.basis = {[](const Vec&) { return 1.0; }};
    cases.push_back({"OBS-NONCONST-V", "v e^v / (1 - e^v) is not constant", fit});
  }
  {
    FitObstruction fit;
    for (double v : {-2.0, -1.0, 1.0, 2.0})
      for (double w : {-2.0, -1.0, 1.0, 2.0}) fit.samples.push_back(Vec{v, w});
    fit.target = [](const Vec& s) { return s[0] * (std::exp(s[1]) - 1); };
    cases.push_back({"OBS-VEW", "v (e^w - 1) = 0 cannot hold for all v, w", fit});
  }
  {
    FitObstruction fit;
    for (int i = -4; i <= 4; ++i)
      for (int j = -4; j <= 4; ++j) fit.samples.push_back(Vec{0.5 * i, 0.5 * j});
    fit.target = [](const Vec& s) {
      double z1 = s[0], z2 = s[1];
      return z2 + std::exp(-z2) * z1 - (z1 + z2); // f(z) = z in the functional law
    };
    cases.push_back({"OBS-FUNCEQ-LINEAR", "f(z) = z violates the translation functional law", fit});
  }
  {
    RankObstruction rank;
    rank.law = std::make_shared<GroupLaw>(groupcat::law("r2xl2"));
    rank.families = {make_family("forced-exp", rank.law.get(), [](const Vec& p) {
      return Element{p[0], p[1], p[2], 1 - std::exp(p[2])};
    })};
    rank.target_dim = 4;
    cases.push_back({"OBS-4DIM-G1",
                     "forced transversals h = f = k(1 - e^z) stay inside centre x one-parameter",
                     rank});
  }
  {
    RankObstruction rank;
    rank.law = std::make_shared<GroupLaw>(groupcat::make_motion_law());
    rank.families = {make_family("forced-sincos", rank.law.get(), [](const Vec& p) {
      double s = std::sin(p[0]), c = std::cos(p[0]);
      return Element{1 + (s - c), 1 - (s + c), p[0], p[1], p[2]};
    })};
    rank.target_dim = 5;
    cases.push_back({"OBS-SINCOS",
                     "forced a(1-cos)+b sin transversals of the motion group generate rank < 5",
                     rank});
  }
  return cases;
}

} // namespace

const std::vector<ObstructionCase>& obstruction_catalog() {
  static const std::vector<ObstructionCase> cases = build_obstructions();
  return cases;
}

const ObstructionCase& obstruction(const std::string& name) {
  for (const auto& c : obstruction_catalog())
    if (c.name == name) return c;
  throw std::out_of_range("unknown obstruction case '" + name + "'");
}

ObstructionReport obstruction_report(const ObstructionCase& c, const CheckConfig& cfg) {
  ObstructionReport rep;
  if (const auto* fit = std::get_if<FitObstruction>(&c.payload)) {
    if (!fit->basis.empty()) {
      std::vector<Vec> rows;
      Vec rhs;
      for (const auto& s : fit->samples) {
        Vec row;
        for (const auto& b : fit->basis) row.push_back(b(s));
        rows.push_back(row);
        rhs.push_back(fit->target(s));
      }
      rep.fitted = least_squares(rows, rhs);
    }
    for (const auto& s : fit->samples) {
      double model = 0;
      for (std::size_t j = 0; j < fit->basis.size(); ++j) model += rep.fitted[j] * fit->basis[j](s);
      rep.residual = std::max(rep.residual, std::abs(fit->target(s) - model));
    }
    rep.confirmed = rep.residual >= cfg.delta_obs;
  } else {
    const auto& rank = std::get<RankObstruction>(c.payload);
    GenerationReport gen = generation_witness(*rank.law, rank.families, rank.target_dim, cfg);
    rep.rank = gen.rank;
    rep.target_dim = rank.target_dim;
    rep.confirmed = gen.rank < rank.target_dim;
  }
  return rep;
}

} // namespace multloop::kepka
