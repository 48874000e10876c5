#include "multloop/groupcat.hpp"

#include "multloop/algebra_catalog.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace multloop::groupcat {

Element g_mul(const GroupLaw& law, const Element& a, const Element& b) {
  if (a.size() != law.dim || b.size() != law.dim)
    throw std::invalid_argument(law.name + ": coordinate length != law dim");
  return law.mul(a, b);
}

Element g_inv(const GroupLaw& law, const Element& a) {
  if (a.size() != law.dim) throw std::invalid_argument(law.name + ": coordinate length != law dim");
  return law.inv(a);
}

Element g_comm(const GroupLaw& law, const Element& a, const Element& b) {
  return g_mul(law, g_mul(law, g_mul(law, g_inv(law, a), g_inv(law, b)), a), b);
}

double LinearForm::eval(const Element& g) const {
  double s = 0;
  for (std::size_t i = 0; i < coeffs.size(); ++i) s += coeffs[i] * g[i];
  return s;
}

double membership_residual(const SubgroupSpec& spec, const Element& g) {
  double r = 0;
  for (const auto& eq : spec.membership_equations) r = std::max(r, std::abs(eq.eval(g)));
  return r;
}

bool subgroup_member(const SubgroupSpec& spec, const Element& g, double tol) {
  return membership_residual(spec, g) < tol;
}

namespace {

RatMat identity_frame(std::size_t n) {
  RatMat t(n, zero_vec(n));
  for (std::size_t i = 0; i < n; ++i) t[i][i] = Rat(1);
  return t;
}

RatMat diag_frame(const std::vector<int>& signs) {
  RatMat t(signs.size(), zero_vec(signs.size()));
  for (std::size_t i = 0; i < signs.size(); ++i) t[i][i] = Rat(signs[i]);
  return t;
}

GroupLaw make_law(std::string name, std::size_t dim,
                  std::function<Element(const Element&, const Element&)> mul,
                  std::function<Element(const Element&)> inv, std::string algebra_ref,
                  std::function<liealg::LieAlgebra()> linked, RatMat frame) {
  GroupLaw law;
  law.name = std::move(name);
  law.dim = dim;
  law.mul = std::move(mul);
  law.inv = std::move(inv);
  law.lie_algebra_ref = std::move(algebra_ref);
  law.linked_algebra = std::move(linked);
  law.tangent_frame = std::move(frame);
  return law;
}

GroupLaw make_mult1_law() {
  auto mul = [](const Element& x, const Element& y) {
    return Element{x[0] + y[0], x[1] + y[1], x[2] + y[2] - x[0] * y[1],
                   y[3] + x[3] * std::exp(y[4]), x[4] + y[4]};
  };
  auto inv = [](const Element& x) {
    return Element{-x[0], -x[1], -x[2] - x[0] * x[1], -x[3] * std::exp(-x[4]), -x[4]};
  };
  return make_law("mult1", 5, mul, inv, "mult1", [] { return liealg::mult_alg(1); },
                  diag_frame({1, 1, -1, 1, 1}));
}

GroupLaw make_mult2_law() {
  auto mul = [](const Element& x, const Element& y) {
    return Element{y[0] + x[0] * std::exp(y[1]), x[1] + y[1], y[2] + x[2] * std::exp(y[3]),
                   x[3] + y[3], x[4] + y[4]};
  };
  auto inv = [](const Element& x) {
    return Element{-x[0] * std::exp(-x[1]), -x[1], -x[2] * std::exp(-x[3]), -x[3], -x[4]};
  };
  return make_law("mult2", 5, mul, inv, "mult2", [] { return liealg::mult_alg(2); },
                  identity_frame(5));
}

GroupLaw make_mult3_law() {
  // Coordinates (z, y, x, w, q).
  auto mul = [](const Element& a, const Element& b) {
    double ew = std::exp(a[3]);
    return Element{a[0] + ew * b[0] - a[2] * ew * b[1], a[1] + ew * b[1], a[2] + b[2], a[3] + b[3],
                   a[4] + b[4]};
  };
  auto inv = [](const Element& a) {
    double ew = std::exp(-a[3]);
    return Element{-a[0] * ew - a[2] * a[1] * ew, -a[1] * ew, -a[2], -a[3], -a[4]};
  };
  return make_law("mult3", 5, mul, inv, "mult3", [] { return liealg::mult_alg(3); },
                  diag_frame({1, 1, 1, -1, 1}));
}

GroupLaw make_mult4_law() {
  // Coordinates (x, y, w, z, u); the (x,y) block carries the rotation-dilation.
  auto mul = [](const Element& a, const Element& b) {
    double ew = std::exp(b[2]), c = std::cos(b[3]), s = std::sin(b[3]);
    return Element{b[0] + ew * (a[0] * c - a[1] * s), b[1] + ew * (a[0] * s + a[1] * c),
                   a[2] + b[2], a[3] + b[3], a[4] + b[4]};
  };
  auto inv = [](const Element& a) {
    double ew = std::exp(-a[2]), c = std::cos(a[3]), s = std::sin(a[3]);
    return Element{-ew * (a[0] * c + a[1] * s), ew * (a[0] * s - a[1] * c), -a[2], -a[3], -a[4]};
  };
  return make_law("mult4", 5, mul, inv, "mult4", [] { return liealg::mult_alg(4); },
                  diag_frame({1, 1, 1, -1, 1}));
}

GroupLaw make_mult5_law() {
  auto mul = [](const Element& x, const Element& y) {
    double ez = std::exp(y[2]);
    return Element{y[0] + x[0] * ez, y[1] + x[1] * ez + x[0] * y[2] * ez, x[2] + y[2], x[3] + y[3],
                   x[4] + y[4]};
  };
  auto inv = [](const Element& x) {
    double ez = std::exp(-x[2]);
    return Element{-x[0] * ez, -x[1] * ez + x[0] * x[2] * ez, -x[2], -x[3], -x[4]};
  };
  return make_law("mult5", 5, mul, inv, "mult5", [] { return liealg::mult_alg(5); },
                  identity_frame(5));
}

Element sincos_mul(double a, const Element& p, const Element& q) {
  double ez = std::exp(a * q[2]), c = std::cos(q[2]), s = std::sin(q[2]);
  return Element{q[0] + ez * (p[0] * c - p[1] * s), q[1] + ez * (p[0] * s + p[1] * c), p[2] + q[2],
                 p[3] + q[3], p[4] + q[4]};
}

Element sincos_inv(double a, const Element& p) {
  double ez = std::exp(-a * p[2]), c = std::cos(p[2]), s = std::sin(p[2]);
  return Element{-ez * (p[0] * c + p[1] * s), ez * (p[0] * s - p[1] * c), -p[2], -p[3], -p[4]};
}

} // namespace

GroupLaw make_mult6_law(double a) {
  if (!(a > 0)) throw std::invalid_argument("mult6: requires a > 0");
  auto mul = [a](const Element& p, const Element& q) { return sincos_mul(a, p, q); };
  auto inv = [a](const Element& p) { return sincos_inv(a, p); };
  // Linked brackets are [e1,e3]=a e1 - e2, [e2,e3]=e1 + a e2; the chart
  // realizes them with e1 and e2 swapped.
  RatMat frame = identity_frame(5);
  frame[0] = unit_vec(5, 1);
  frame[1] = unit_vec(5, 0);
  GroupLaw law = make_law(
      "mult6", 5, mul, inv, "mult6",
      [a] {
        RationalRound r = round_rational(a);
        return liealg::mult6_alg(Rat(r.num, r.den));
      },
      frame);
  law.params["a"] = a;
  return law;
}

GroupLaw make_mult7_law(double a, double b) {
  if (a == b || a == 0 || b == 0) throw std::invalid_argument("mult7: requires a != b, nonzero");
  auto mul = [a, b](const Element& x, const Element& y) {
    return Element{y[0] + x[0] * std::exp(a * y[2]), y[1] + x[1] * std::exp(b * y[2]), x[2] + y[2],
                   x[3] + y[3], x[4] + y[4]};
  };
  auto inv = [a, b](const Element& x) {
    return Element{-x[0] * std::exp(-a * x[2]), -x[1] * std::exp(-b * x[2]), -x[2], -x[3], -x[4]};
  };
  GroupLaw law = make_law(
      "mult7", 5, mul, inv, "mult7",
      [a, b] {
        RationalRound ra = round_rational(a), rb = round_rational(b);
        return liealg::mult7_alg(Rat(ra.num, ra.den), Rat(rb.num, rb.den));
      },
      identity_frame(5));
  law.params["a"] = a;
  law.params["b"] = b;
  return law;
}

GroupLaw make_mult8_law(double a) {
  if (a == 0) throw std::invalid_argument("mult8: requires a nonzero");
  auto mul = [a](const Element& x, const Element& y) {
    double e = std::exp(a * y[2]);
    return Element{y[0] + x[0] * e, y[1] + x[1] * e, x[2] + y[2], x[3] + y[3], x[4] + y[4]};
  };
  auto inv = [a](const Element& x) {
    double e = std::exp(-a * x[2]);
    return Element{-x[0] * e, -x[1] * e, -x[2], -x[3], -x[4]};
  };
  GroupLaw law = make_law(
      "mult8", 5, mul, inv, "mult8",
      [a] {
        RationalRound r = round_rational(a);
        return liealg::mult8_alg(Rat(r.num, r.den));
      },
      identity_frame(5));
  law.params["a"] = a;
  return law;
}

GroupLaw make_motion_law() {
  auto mul = [](const Element& p, const Element& q) { return sincos_mul(0.0, p, q); };
  auto inv = [](const Element& p) { return sincos_inv(0.0, p); };
  return make_law("motion_r2", 5, mul, inv, "", nullptr, identity_frame(5));
}

namespace {

GroupLaw make_g43_law() {
  auto mul = [](const Element& x, const Element& y) {
    return Element{x[0] + y[0] * std::exp(x[3]), x[1] + y[1] + x[3] * y[2], x[2] + y[2],
                   x[3] + y[3]};
  };
  auto inv = [](const Element& x) {
    return Element{-x[0] * std::exp(-x[3]), -x[1] + x[3] * x[2], -x[2], -x[3]};
  };
  return make_law("g4_3", 4, mul, inv, "g4_3", [] { return liealg::g4_3(); },
                  diag_frame({1, 1, 1, -1}));
}

GroupLaw make_r2xl2_law() {
  auto mul = [](const Element& x, const Element& y) {
    return Element{x[0] + y[0], x[1] + y[1], x[2] + y[2], y[3] + x[3] * std::exp(y[2])};
  };
  auto inv = [](const Element& x) {
    return Element{-x[0], -x[1], -x[2], -x[3] * std::exp(-x[2])};
  };
  return make_law("r2xl2", 4, mul, inv, "r2xl2", [] { return liealg::r2_x_l2(); },
                  identity_frame(4));
}

GroupLaw make_secG1_law() {
  // Coordinates (x, y, z, q, w).
  auto mul = [](const Element& x, const Element& y) {
    return Element{x[0] + x[4] * y[1] + 0.5 * x[4] * x[4] * y[2] + y[0], x[1] + x[4] * y[2] + y[1],
                   x[2] + y[2], x[3] + std::exp(x[2]) * y[3], x[4] + y[4]};
  };
  auto inv = [](const Element& x) {
    return Element{-x[0] - 0.5 * x[4] * x[4] * x[2] + x[4] * x[1], x[4] * x[2] - x[1], -x[2],
                   -x[3] * std::exp(-x[2]), -x[4]};
  };
  RatMat frame(5, zero_vec(5));
  frame[0] = scale(Rat(-1), unit_vec(5, 0)); // e1 = -f1
  frame[1] = unit_vec(5, 4);                 // e2 = f5
  frame[2] = scale(Rat(-1), unit_vec(5, 1)); // e3 = -f2
  frame[3] = unit_vec(5, 3);                 // e4 = f4
  frame[4] = scale(Rat(-1), unit_vec(5, 2)); // e5 = -f3
  return make_law("secG1", 5, mul, inv, "prop5_g1", [] { return liealg::prop5_g(1); }, frame);
}

GroupLaw make_secG2_law() {
  // Coordinates (q, x, y, z, w).
  auto mul = [](const Element& x, const Element& y) {
    double ew = std::exp(x[4]);
    return Element{x[0] + ew * y[0] + x[1] * y[3], x[1] + ew * y[1], x[2] + x[4] * y[3] + y[2],
                   x[3] + y[3], x[4] + y[4]};
  };
  auto inv = [](const Element& x) {
    double ew = std::exp(-x[4]);
    return Element{ew * (x[1] * x[3] - x[0]), -x[1] * ew, x[4] * x[3] - x[2], -x[3], -x[4]};
  };
  return make_law("secG2", 5, mul, inv, "prop5_g2", [] { return liealg::prop5_g(2); },
                  diag_frame({1, 1, 1, 1, -1}));
}

GroupLaw make_secG3_law() {
  // Coordinates (q, x, y, z, w).
  auto mul = [](const Element& x, const Element& y) {
    return Element{x[0] + std::exp(x[3]) * y[0], x[1] + std::exp(x[4]) * y[1],
                   x[2] + x[4] * y[3] + y[2], x[3] + y[3], x[4] + y[4]};
  };
  auto inv = [](const Element& x) {
    return Element{-x[0] * std::exp(-x[3]), -x[1] * std::exp(-x[4]), x[4] * x[3] - x[2], -x[3],
                   -x[4]};
  };
  return make_law("secG3", 5, mul, inv, "prop5_g3", [] { return liealg::prop5_g(3); },
                  diag_frame({1, 1, -1, -1, -1}));
}

GroupLaw make_secG4_law() {
  // Coordinates (x, y, q, w, z); the (x,y) block carries the rotation-dilation.
  auto mul = [](const Element& a, const Element& b) {
    double ew = std::exp(b[3]), c = std::cos(b[4]), s = std::sin(b[4]);
    return Element{b[0] + ew * (a[0] * c - a[1] * s), b[1] + ew * (a[0] * s + a[1] * c),
                   a[2] + b[2] - a[3] * b[4], a[3] + b[3], a[4] + b[4]};
  };
  auto inv = [](const Element& a) {
    double ew = std::exp(-a[3]), c = std::cos(a[4]), s = std::sin(a[4]);
    return Element{-ew * (a[0] * c + a[1] * s), ew * (a[0] * s - a[1] * c), -a[2] - a[3] * a[4],
                   -a[3], -a[4]};
  };
  return make_law("secG4", 5, mul, inv, "prop5_g4", [] { return liealg::prop5_g(4); },
                  diag_frame({1, 1, 1, 1, -1}));
}

GroupLaw make_l2_law() {
  auto mul = [](const Element& x, const Element& y) {
    return Element{y[0] + x[0] * std::exp(y[1]), x[1] + y[1]};
  };
  auto inv = [](const Element& x) { return Element{-x[0] * std::exp(-x[1]), -x[1]}; };
  return make_law("l2", 2, mul, inv, "l2", [] { return liealg::l2(); }, identity_frame(2));
}

GroupLaw make_f3_law() {
  auto mul = [](const Element& x, const Element& y) {
    return Element{x[0] + y[0], x[1] + y[1], x[2] + y[2] + x[0] * y[1]};
  };
  auto inv = [](const Element& x) { return Element{-x[0], -x[1], x[0] * x[1] - x[2]}; };
  return make_law("F3", 3, mul, inv, "F3", [] { return liealg::filiform(3); }, identity_frame(3));
}

GroupLaw make_f4_law() {
  auto mul = [](const Element& x, const Element& y) {
    return Element{x[0] + y[0], x[1] + y[1], x[2] + y[2] + x[0] * y[1],
                   x[3] + y[3] + x[0] * y[2] + 0.5 * x[0] * x[0] * y[1]};
  };
  auto inv = [](const Element& x) {
    return Element{-x[0], -x[1], x[0] * x[1] - x[2],
                   -x[3] + x[0] * x[2] - 0.5 * x[0] * x[0] * x[1]};
  };
  return make_law("F4", 4, mul, inv, "F4", [] { return liealg::filiform(4); }, identity_frame(4));
}

GroupLaw make_r5_law() {
  auto mul = [](const Element& x, const Element& y) {
    Element r(5);
    for (int i = 0; i < 5; ++i) r[i] = x[i] + y[i];
    return r;
  };
  auto inv = [](const Element& x) {
    Element r(5);
    for (int i = 0; i < 5; ++i) r[i] = -x[i];
    return r;
  };
  return make_law("R5", 5, mul, inv, "", [] { return liealg::abelian(5); }, identity_frame(5));
}

std::vector<GroupLaw> build_laws() {
  std::vector<GroupLaw> laws;
  laws.push_back(make_mult1_law());
  laws.push_back(make_mult2_law());
  laws.push_back(make_mult3_law());
  laws.push_back(make_mult4_law());
  laws.push_back(make_mult5_law());
  laws.push_back(make_mult6_law(1.0));
  laws.push_back(make_mult7_law(1.0, 2.0));
  laws.push_back(make_mult8_law(1.0));
  laws.push_back(make_g43_law());
  laws.push_back(make_r2xl2_law());
  laws.push_back(make_secG1_law());
  laws.push_back(make_secG2_law());
  laws.push_back(make_secG3_law());
  laws.push_back(make_secG4_law());
  laws.push_back(make_l2_law());
  laws.push_back(make_f3_law());
  laws.push_back(make_f4_law());
  laws.push_back(make_r5_law());
  laws.push_back(make_motion_law());
  return laws;
}

} // namespace

const std::vector<GroupLaw>& law_catalog() {
  static const std::vector<GroupLaw> laws = build_laws();
  return laws;
}

const GroupLaw& law(const std::string& name) {
  for (const auto& l : law_catalog())
    if (l.name == name) return l;
  throw std::out_of_range("unknown group law '" + name + "'");
}

liealg::LieAlgebra tangent_algebra(const GroupLaw& law, double h, double tol_fd) {
  const std::size_t n = law.dim;
  liealg::LieAlgebra alg(law.name + "_tangent", n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      RatVec v = zero_vec(n);
      for (std::size_t k = 0; k < n; ++k) {
        auto f = [&](double s, double t) {
          Element a(n, 0.0), b(n, 0.0);
          a[i] = s;
          b[j] = t;
          return g_comm(law, a, b)[k];
        };
        double c = mixed_derivative(f, h, tol_fd);
        RationalRound r = round_rational(c);
        if (r.error > tol_fd) {
          std::ostringstream os;
          os << law.name << ": tangent constant c[" << i << "][" << j << "][" << k << "] = " << c
             << " is not close to a rational with denominator <= 12";
          throw std::runtime_error(os.str());
        }
        v[k] = Rat(r.num, r.den);
      }
      alg.set_bracket(i, j, v);
    }
  }
  return alg;
}

bool tangent_matches_linked(const GroupLaw& law, double h, double tol_fd) {
  if (!law.linked_algebra) return true;
  liealg::LieAlgebra extracted = tangent_algebra(law, h, tol_fd);
  liealg::LieAlgebra in_catalog_basis = liealg::change_basis(extracted, law.tangent_frame);
  return in_catalog_basis == law.linked_algebra();
}

LawSuiteReport law_suite(const GroupLaw& law, const CheckConfig& cfg) {
  LawSuiteReport rep;
  Sampler sampler(derive_seed(cfg.seed, "law:" + law.name));
  Element id(law.dim, 0.0);
  for (int s = 0; s < cfg.samples; ++s) {
    Element a = sampler.point(law.dim, cfg.box);
    Element b = sampler.point(law.dim, cfg.box);
    Element c = sampler.point(law.dim, cfg.box);
    double assoc = max_abs(vec_sub(g_mul(law, g_mul(law, a, b), c), g_mul(law, a, g_mul(law, b, c))));
    if (assoc > rep.assoc_residual) {
      rep.assoc_residual = assoc;
      rep.worst_assoc_sample = a;
    }
    rep.identity_residual = std::max(rep.identity_residual, max_abs(vec_sub(g_mul(law, id, a), a)));
    rep.identity_residual = std::max(rep.identity_residual, max_abs(vec_sub(g_mul(law, a, id), a)));
    rep.inverse_residual = std::max(rep.inverse_residual, max_abs(g_mul(law, a, g_inv(law, a))));
    rep.inverse_residual = std::max(rep.inverse_residual, max_abs(g_mul(law, g_inv(law, a), a)));
  }
  rep.tangent_ok = tangent_matches_linked(law, cfg.fd_step, cfg.tol_fd);
  rep.passed = rep.assoc_residual < cfg.tol_grp && rep.identity_residual < cfg.tol_grp &&
               rep.inverse_residual < cfg.tol_grp && rep.tangent_ok;
  return rep;
}

} // namespace multloop::groupcat
