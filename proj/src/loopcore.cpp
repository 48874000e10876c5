#include "multloop/loopcore.hpp"

#include "multloop/kepka.hpp"

#include <cmath>
#include <sstream>

namespace multloop::loopcore {

namespace {

using dsl::Expr;

double eval_xyz(const Expr& e, double x, double y, double z) {
  dsl::Env env{{"x", x}, {"y", y}, {"z", z}};
  return e.eval(env);
}

void require_vars(const Expr& e, const std::set<std::string>& allowed, const std::string& who) {
  for (const auto& v : e.free_vars())
    if (!allowed.count(v))
      throw std::invalid_argument(who + ": unexpected free variable '" + v + "'");
}

void require_normalized(double at_zero, const std::string& msg) {
  if (std::abs(at_zero) > 1e-12) throw NotNormalized(msg);
}

} // namespace

LoopLaw family_a(const Expr& f) {
  require_vars(f, {"z"}, "family_a");
  require_normalized(eval_xyz(f, 0, 0, 0), "family_a: f(0) != 0");
  auto fv = [f](double z) { return eval_xyz(f, 0, 0, z); };
  LoopLaw loop;
  loop.name = "family_a";
  loop.central_dir = Vec{0, 1, 0};
  loop.mul = [fv](const Vec& a, const Vec& b) {
    double fz = fv(a[2]);
    return Vec{a[0] + b[0] * std::exp(fz), a[1] + b[1] + b[2] * fz, a[2] + b[2]};
  };
  loop.ldiv = [fv](const Vec& a, const Vec& b) {
    double fz = fv(a[2]);
    return Vec{(b[0] - a[0]) * std::exp(-fz), b[1] - a[1] - (b[2] - a[2]) * fz, b[2] - a[2]};
  };
  loop.rdiv = [fv](const Vec& b, const Vec& a) {
    double dz = b[2] - a[2];
    double fz = fv(dz);
    return Vec{b[0] - a[0] * std::exp(fz), b[1] - a[1] - a[2] * fz, dz};
  };
  return loop;
}

LoopLaw family_b(const Expr& h) {
  require_vars(h, {"x", "z"}, "family_b");
  require_normalized(eval_xyz(h, 0, 0, 0), "family_b: h(0,0) != 0");
  auto hv = [h](double x, double z) { return eval_xyz(h, x, 0, z); };
  LoopLaw loop;
  loop.name = "family_b";
  loop.mul = [hv](const Vec& a, const Vec& b) {
    return Vec{a[0] + b[0] * std::exp(a[2]), a[1] + b[1] - b[2] * hv(a[0], a[2]), a[2] + b[2]};
  };
  loop.ldiv = [hv](const Vec& a, const Vec& b) {
    double dz = b[2] - a[2];
    return Vec{(b[0] - a[0]) * std::exp(-a[2]), b[1] - a[1] + dz * hv(a[0], a[2]), dz};
  };
  loop.rdiv = [hv](const Vec& b, const Vec& a) {
    double dz = b[2] - a[2];
    double x = b[0] - a[0] * std::exp(dz);
    return Vec{x, b[1] - a[1] + a[2] * hv(x, dz), dz};
  };
  return loop;
}

LoopLaw family_c(const Expr& f) {
  require_vars(f, {"x", "y", "z"}, "family_c");
  require_normalized(eval_xyz(f, 0, 0, 0), "family_c: f(0,0,0) != 0");
  auto fv = [f](double x, double y, double z) { return eval_xyz(f, x, y, z); };
  LoopLaw loop;
  loop.name = "family_c";
  loop.mul = [fv](const Vec& a, const Vec& b) {
    double fa = fv(a[0], a[1], a[2]);
    return Vec{a[0] + std::exp(a[2]) * (b[0] + fa * (1 - std::exp(b[2]))),
               a[1] + b[1] - b[2] * fa, a[2] + b[2]};
  };
  loop.ldiv = [fv](const Vec& a, const Vec& b) {
    double dz = b[2] - a[2];
    double fa = fv(a[0], a[1], a[2]);
    return Vec{(b[0] - a[0]) * std::exp(-a[2]) - fa * (1 - std::exp(dz)),
               b[1] - a[1] + dz * fa, dz};
  };
  loop.rdiv = [fv](const Vec& b, const Vec& a) {
    // x and y are affine in phi = f(x,y,dz); solve the scalar fixed point.
    double dz = b[2] - a[2];
    double ax = b[0] - std::exp(dz) * a[0];
    double bx = std::exp(b[2]) * (1 - std::exp(-a[2]));
    double cy = b[1] - a[1];
    double dy = a[2];
    auto g = [&](double phi) { return phi - fv(ax + bx * phi, cy + dy * phi, dz); };
    double guess = fv(ax, cy, dz);
    double phi = scalar_root(g, "family_c rdiv", guess);
    return Vec{ax + bx * phi, cy + dy * phi, dz};
  };
  return loop;
}

LoopLaw family_d(const Expr& k) {
  require_vars(k, {"x", "y", "z"}, "family_d");
  require_normalized(eval_xyz(k, 0, 0, 0), "family_d: k(0,0,0) != 0");
  auto kv = [k](double x, double y, double z) { return eval_xyz(k, x, y, z); };
  LoopLaw loop;
  loop.name = "family_d";
  loop.mul = [kv](const Vec& a, const Vec& b) {
    double ka = kv(a[0], a[1], a[2]);
    return Vec{a[0] + std::exp(a[2]) * (b[0] + ka - std::exp(b[2]) * (a[2] * b[1] + ka)),
               a[1] + b[1], a[2] + b[2]};
  };
  loop.ldiv = [kv](const Vec& a, const Vec& b) {
    double dz = b[2] - a[2], dy = b[1] - a[1];
    double ka = kv(a[0], a[1], a[2]);
    return Vec{(b[0] - a[0]) * std::exp(-a[2]) - ka + std::exp(dz) * (a[2] * dy + ka), dy, dz};
  };
  loop.rdiv = [kv](const Vec& b, const Vec& a) {
    double dz = b[2] - a[2], dy = b[1] - a[1];
    double rhs = b[0] - a[0] * std::exp(dz) + std::exp(b[2]) * dz * a[1];
    double coeff = std::exp(b[2]) * (std::exp(-a[2]) - 1);
    auto g = [&](double x) { return x + coeff * kv(x, dy, dz) - rhs; };
    double x = scalar_root(g, "family_d rdiv", rhs);
    return Vec{x, dy, dz};
  };
  return loop;
}

LoopLaw loop_from_section(const SectionLoop& s, const CheckConfig& cfg) {
  const groupcat::GroupLaw* law = s.law;
  const groupcat::SubgroupSpec sub = s.subgroup;
  auto section = s.section;

  // SectionLoop invariants on a sample grid.
  Sampler sampler(derive_seed(cfg.seed, "section:" + s.name));
  if (max_abs(section(Vec{0, 0, 0})) > cfg.tol_grp)
    throw std::invalid_argument(s.name + ": section(0) != identity");
  for (int t = 0; t < 50; ++t) {
    Vec p = sampler.point(3, cfg.box);
    if (max_abs(vec_sub(sub.coset_coords(sub.lift(p)), p)) > cfg.tol_grp)
      throw std::invalid_argument(s.name + ": coset_coords(lift(p)) != p");
    groupcat::Element g = sampler.point(law->dim, cfg.box);
    Vec sp = sampler.point(sub.param_dim, cfg.box);
    groupcat::Element gs = g_mul(*law, g, sub.parametrize(sp));
    if (max_abs(vec_sub(sub.coset_coords(gs), sub.coset_coords(g))) > cfg.tol_grp)
      throw std::invalid_argument(s.name + ": coset_coords not constant on cosets");
    Vec q = sampler.point(3, cfg.box);
    if (max_abs(vec_sub(sub.coset_coords(section(q)), q)) > cfg.tol_grp)
      throw std::invalid_argument(s.name + ": section(p) not in coset p");
  }

  auto mul = [law, sub, section](const Vec& p, const Vec& q) {
    return sub.coset_coords(g_mul(*law, section(p), sub.lift(q)));
  };
  auto ldiv = [law, sub, section](const Vec& a, const Vec& b) {
    // a * r = b iff section(a) lift(r) in coset(b); left translations are group
    // actions on the coset space, so r is the coset of section(a)^{-1} lift(b).
    return sub.coset_coords(g_mul(*law, g_inv(*law, section(a)), sub.lift(b)));
  };
  std::uint64_t rdiv_seed = derive_seed(cfg.seed, "rdiv:" + s.name);
  auto rdiv = [mul, rdiv_seed](const Vec& b, const Vec& a) {
    auto f = [&](const Vec& p) { return vec_sub(mul(p, a), b); };
    Vec p = b; // decent initial guess: near-group loops have p close to b - a
    for (int i = 0; i < 3; ++i) p[i] = b[i] - a[i];
    if (!newton_solve(f, p, 1e-12, 80, rdiv_seed))
      throw NoSolutionError("section-loop rdiv: Newton failed from all starts");
    return p;
  };

  LoopLaw loop;
  loop.name = s.name;
  loop.mul = mul;
  loop.ldiv = ldiv;
  loop.rdiv = rdiv;
  loop.central_dir = s.central_dir;
  return loop;
}

SectionLoop section_case1() {
  SectionLoop s;
  s.name = "section1";
  s.law = &groupcat::law("mult1");
  s.subgroup = kepka::case_data(1).inns.at(0);
  s.section = [](const Vec& p) {
    double e = std::exp(p[1]) - 1;
    return groupcat::Element{p[0], e, p[2] - p[0] * e, 0, p[1]};
  };
  s.central_dir = Vec{0, 0, 1};
  return s;
}

SectionLoop section_case2() {
  SectionLoop s;
  s.name = "section2";
  s.law = &groupcat::law("mult2");
  s.subgroup = kepka::case_data(2).inns.at(0);
  s.section = [](const Vec& p) {
    double c = 2 - std::exp(p[0]) - std::exp(p[1]);
    return groupcat::Element{c, p[0], 0, p[1], p[2] + c};
  };
  s.central_dir = Vec{0, 0, 1};
  return s;
}

LoopGrid make_grid(const CheckConfig& cfg, const std::string& label) {
  LoopGrid grid;
  const int n = cfg.grid_points;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        grid.points.push_back(Vec{-cfg.box + 2 * cfg.box * i / (n - 1),
                                  -cfg.box + 2 * cfg.box * j / (n - 1),
                                  -cfg.box + 2 * cfg.box * k / (n - 1)});
  Sampler sampler(derive_seed(cfg.seed, "grid:" + label));
  for (int t = 0; t < cfg.random_triples; ++t) {
    Vec a = sampler.point(3, cfg.box), b = sampler.point(3, cfg.box), c = sampler.point(3, cfg.box);
    grid.triples.push_back({a, b, c});
    grid.pairs.emplace_back(a, b);
    grid.pairs.emplace_back(b, c);
  }
  return grid;
}

AxiomsReport axioms_check(const LoopLaw& loop, const CheckConfig& cfg) {
  AxiomsReport rep;
  LoopGrid grid = make_grid(cfg, "axioms:" + loop.name);
  Vec id{0, 0, 0};
  try {
    for (const auto& p : grid.points) {
      rep.identity_residual = std::max(rep.identity_residual, max_abs(vec_sub(loop.mul(id, p), p)));
      rep.identity_residual = std::max(rep.identity_residual, max_abs(vec_sub(loop.mul(p, id), p)));
    }
    for (const auto& [a, b] : grid.pairs) {
      double dl = max_abs(vec_sub(loop.mul(a, loop.ldiv(a, b)), b));
      double dr = max_abs(vec_sub(loop.mul(loop.rdiv(b, a), a), b));
      if (std::max(dl, dr) > std::max(rep.ldiv_residual, rep.rdiv_residual)) {
        rep.worst_a = a;
        rep.worst_b = b;
      }
      rep.ldiv_residual = std::max(rep.ldiv_residual, dl);
      rep.rdiv_residual = std::max(rep.rdiv_residual, dr);
    }
  } catch (const MultipleSolutionsError& e) {
    rep.failure = e.what();
  } catch (const NoSolutionError& e) {
    rep.failure = e.what();
  }
  rep.max_residual = std::max({rep.identity_residual, rep.ldiv_residual, rep.rdiv_residual});
  rep.passed = rep.failure.empty() && rep.max_residual < cfg.tol_loop;
  return rep;
}

Vec associator(const LoopLaw& loop, const Vec& a, const Vec& b, const Vec& c) {
  return loop.ldiv(loop.mul(a, loop.mul(b, c)), loop.mul(loop.mul(a, b), c));
}

AssociatorScan associator_scan(const LoopLaw& loop, const CheckConfig& cfg) {
  AssociatorScan scan;
  LoopGrid grid = make_grid(cfg, "assoc:" + loop.name);
  for (const auto& t : grid.triples) {
    double norm = max_abs(associator(loop, t[0], t[1], t[2]));
    if (norm > scan.max_norm) {
      scan.max_norm = norm;
      scan.witness = t;
    }
  }
  return scan;
}

bool is_central(const LoopLaw& loop, const Vec& z, const CheckConfig& cfg, double* residual) {
  LoopGrid grid = make_grid(cfg, "central:" + loop.name);
  double r = 0;
  std::size_t checked = 0;
  for (const auto& [x, y] : grid.pairs) {
    // z x . y = z . x y ; x . y z = x y . z ; x z . y = x . z y ; z x = x z
    r = std::max(r, max_abs(vec_sub(loop.mul(loop.mul(z, x), y), loop.mul(z, loop.mul(x, y)))));
    r = std::max(r, max_abs(vec_sub(loop.mul(x, loop.mul(y, z)), loop.mul(loop.mul(x, y), z))));
    r = std::max(r, max_abs(vec_sub(loop.mul(loop.mul(x, z), y), loop.mul(x, loop.mul(z, y)))));
    r = std::max(r, max_abs(vec_sub(loop.mul(z, x), loop.mul(x, z))));
    if (++checked >= 250) break;
  }
  if (residual) *residual = r;
  return r < cfg.tol_loop;
}

namespace {
double off_line_distance(const Vec& v, const Vec& dir) {
  double dd = 0, vd = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    dd += dir[i] * dir[i];
    vd += v[i] * dir[i];
  }
  double t = dd > 0 ? vd / dd : 0;
  double r = 0;
  for (std::size_t i = 0; i < v.size(); ++i) r = std::max(r, std::abs(v[i] - t * dir[i]));
  return r;
}
} // namespace

Class2Report nilpotency_class2_check(const LoopLaw& loop, const Vec& central_dir,
                                     const CheckConfig& cfg) {
  Class2Report rep;
  rep.central_line_ok = true;
  for (double t : {-2.0, -1.0, -0.5, 0.5, 1.0, 2.0}) {
    Vec z(3);
    for (int i = 0; i < 3; ++i) z[i] = t * central_dir[i];
    if (!is_central(loop, z, cfg)) rep.central_line_ok = false;
  }
  LoopGrid grid = make_grid(cfg, "class2:" + loop.name);
  for (const auto& tr : grid.triples) {
    Vec assoc = associator(loop, tr[0], tr[1], tr[2]);
    double norm = max_abs(assoc);
    if (norm > rep.max_associator_norm) {
      rep.max_associator_norm = norm;
      rep.properness_witness = tr;
    }
    double off = off_line_distance(assoc, central_dir);
    if (off > rep.off_line_residual) {
      rep.off_line_residual = off;
      rep.off_line_witness = tr;
    }
  }
  for (const auto& [a, b] : grid.pairs) {
    Vec comm = loop.ldiv(loop.mul(a, b), loop.mul(b, a));
    double off = off_line_distance(comm, central_dir);
    if (off > rep.off_line_residual) {
      rep.off_line_residual = off;
      rep.off_line_witness = {a, b, Vec{0, 0, 0}};
    }
  }
  bool quotient_ok = rep.off_line_residual < cfg.tol_loop;
  rep.passed = rep.central_line_ok && quotient_ok;
  rep.estimated_class = (rep.max_associator_norm < cfg.tol_loop) ? 1 : 2;
  return rep;
}

BijectivityResult bijectivity_witness(const dsl::Expr& f, const CheckConfig& cfg) {
  BijectivityResult res;
  require_vars(f, {"x", "y", "z"}, "bijectivity_witness");
  auto fv = [&](double x, double y, double z) { return eval_xyz(f, x, y, z); };
  const std::vector<std::pair<double, double>> probes = {
      {0, 0}, {1, 0}, {0, 1}, {1, 1}, {-1, 1}, {0.5, -0.5}};

  // Certify z-independence when the z-derivative vanishes on the probe grid.
  double dmax = 0;
  for (const auto& [x0, y0] : probes)
    for (int i = 0; i <= 20; ++i) {
      double z = -2 + 0.2 * i;
      double h = 1e-5;
      dmax = std::max(dmax, std::abs(fv(x0, y0, z + h) - fv(x0, y0, z - h)) / (2 * h));
    }
  if (dmax < 1e-7) {
    res.independent_of_z = true;
    return res;
  }

  const std::vector<double> us = {1, -1, 2, -2, 3, -3, 0.5, -0.5};
  const std::vector<double> zs = {0, -1, 1, -2, 2, -3, 3};
  // Prefer small-integer witnesses: exact collisions of z + u f on the coarse grid.
  for (double u : us)
    for (const auto& [x0, y0] : probes)
      for (std::size_t i = 0; i < zs.size(); ++i)
        for (std::size_t j = i + 1; j < zs.size(); ++j) {
          double g1 = zs[i] + u * fv(x0, y0, zs[i]);
          double g2 = zs[j] + u * fv(x0, y0, zs[j]);
          if (std::abs(g1 - g2) < cfg.tol_loop) {
            res.witness_found = true;
            res.u = u;
            res.x0 = x0;
            res.y0 = y0;
            res.z1 = zs[i];
            res.z2 = zs[j];
            return res;
          }
        }
  // Fallback: find a local extremum of z + u f and bisect both flanks to a
  // common level; the two preimages witness non-injectivity.
  for (double u : us)
    for (const auto& [x0, y0] : probes) {
      auto g = [&](double z) { return z + u * fv(x0, y0, z); };
      const int n = 601;
      std::vector<double> gz(n);
      for (int i = 0; i < n; ++i) gz[i] = g(-3 + 6.0 * i / (n - 1));
      for (int i = 1; i + 1 < n; ++i) {
        bool local_max = gz[i] > gz[i - 1] && gz[i] > gz[i + 1];
        bool local_min = gz[i] < gz[i - 1] && gz[i] < gz[i + 1];
        if (!local_max && !local_min) continue;
        double za = -3 + 6.0 * (i - 1) / (n - 1);
        double zb = -3 + 6.0 * i / (n - 1);
        double zc = -3 + 6.0 * (i + 1) / (n - 1);
        double level = local_max ? (std::max(gz[i - 1], gz[i + 1]) + gz[i]) / 2
                                 : (std::min(gz[i - 1], gz[i + 1]) + gz[i]) / 2;
        auto ga = [&](double z) { return g(z) - level; };
        ScanResult left = scan_roots(ga, za, zb, 100);
        ScanResult right = scan_roots(ga, zb, zc, 100);
        if (!left.roots.empty() && !right.roots.empty()) {
          double r1 = left.roots.front(), r2 = right.roots.back();
          if (std::abs(g(r1) - g(r2)) < cfg.tol_loop && std::abs(r1 - r2) > 1e-9) {
            res.witness_found = true;
            res.u = u;
            res.x0 = x0;
            res.y0 = y0;
            res.z1 = r1;
            res.z2 = r2;
            return res;
          }
        }
      }
    }
  return res; // neither certificate nor witness (flagged by caller)
}

FunctionalResult functional_residual(const dsl::Expr& f, const CheckConfig& cfg, int pairs) {
  require_vars(f, {"z"}, "functional_residual");
  auto fv = [&](double z) { return eval_xyz(f, 0, 0, z); };
  FunctionalResult res;
  Sampler sampler(derive_seed(cfg.seed, "functional"));
  for (int i = 0; i < pairs; ++i) {
    double z1 = sampler.uniform(-cfg.box, cfg.box), z2 = sampler.uniform(-cfg.box, cfg.box);
    res.max_residual =
        std::max(res.max_residual, std::abs(fv(z2) + std::exp(-z2) * fv(z1) - fv(z1 + z2)));
  }
  std::vector<Vec> rows;
  Vec rhs;
  for (int i = 0; i <= 40; ++i) {
    double z = -cfg.box + 2 * cfg.box * i / 40.0;
    rows.push_back(Vec{1 - std::exp(-z)});
    rhs.push_back(fv(z));
  }
  Vec c = least_squares(rows, rhs);
  res.fitted_c = c[0];
  for (std::size_t i = 0; i < rows.size(); ++i)
    res.fit_residual = std::max(res.fit_residual, std::abs(rhs[i] - c[0] * rows[i][0]));
  return res;
}

} // namespace multloop::loopcore
