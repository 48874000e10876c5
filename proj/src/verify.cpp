#include "multloop/verify.hpp"

#include "multloop/algebra_catalog.hpp"
#include "multloop/exprdsl.hpp"
#include "multloop/groupcat.hpp"
#include "multloop/kepka.hpp"
#include "multloop/liealg.hpp"
#include "multloop/loopcore.hpp"

#include <sstream>

namespace multloop::verify {

namespace {

std::string fmt(double x) { return format_double(x); }

Report base_report(const CheckConfig& cfg, std::string check, std::string case_name) {
  Report r;
  r.check = std::move(check);
  r.case_name = std::move(case_name);
  r.seed = cfg.seed;
  return r;
}

void run_algebra(const liealg::CatalogEntry& e, const CheckConfig& cfg,
                 std::vector<Report>& out) {
  if (e.stub) return;
  const liealg::LieAlgebra& alg = *e.algebra;
  Report anti = base_report(cfg, "antisymmetry", e.name);
  anti.passed = alg.antisymmetric();
  anti.params["dim"] = std::to_string(e.dim);
  out.push_back(anti);
  Report jac = base_report(cfg, "jacobi", e.name);
  jac.passed = liealg::jacobi_check(alg);
  jac.params["fingerprint"] = liealg::to_string(liealg::fingerprint(alg));
  out.push_back(jac);
}

void run_group(const groupcat::GroupLaw& law, const CheckConfig& cfg, std::vector<Report>& out) {
  groupcat::LawSuiteReport suite = groupcat::law_suite(law, cfg);
  auto mk = [&](const std::string& check, double residual, bool passed) {
    Report r = base_report(cfg, check, law.name);
    r.max_residual = residual;
    r.passed = passed;
    r.params["samples"] = std::to_string(cfg.samples);
    r.params["box"] = fmt(cfg.box);
    return r;
  };
  out.push_back(mk("associativity", suite.assoc_residual, suite.assoc_residual < cfg.tol_grp));
  out.push_back(mk("identity", suite.identity_residual, suite.identity_residual < cfg.tol_grp));
  out.push_back(mk("inverse", suite.inverse_residual, suite.inverse_residual < cfg.tol_grp));
  if (law.linked_algebra) {
    Report t = base_report(cfg, "tangent", law.name);
    t.passed = suite.tangent_ok;
    t.params["algebra"] = law.lie_algebra_ref.empty() ? "(builtin)" : law.lie_algebra_ref;
    out.push_back(t);
  }
}

void run_loop_law(const loopcore::LoopLaw& loop, const std::string& case_name,
                  Expectation properness_expect, Expectation class2_expect,
                  const CheckConfig& cfg, std::vector<Report>& out) {
  loopcore::AxiomsReport ax = loopcore::axioms_check(loop, cfg);
  Report axr = base_report(cfg, "loop-axioms", case_name);
  axr.max_residual = ax.max_residual;
  axr.passed = ax.passed;
  if (!ax.failure.empty()) axr.params["failure"] = ax.failure;
  axr.params["identity_residual"] = fmt(ax.identity_residual);
  axr.params["ldiv_residual"] = fmt(ax.ldiv_residual);
  axr.params["rdiv_residual"] = fmt(ax.rdiv_residual);
  if (!ax.passed && !ax.worst_a.empty()) {
    axr.witnesses.push_back({"a", ax.worst_a});
    axr.witnesses.push_back({"b", ax.worst_b});
  }
  out.push_back(axr);

  loopcore::AssociatorScan scan = loopcore::associator_scan(loop, cfg);
  Report prop = base_report(cfg, "properness", case_name);
  prop.max_residual = scan.max_norm;
  prop.passed = scan.max_norm > 0.1;
  prop.expectation = properness_expect;
  if (prop.passed) {
    const char* labels[3] = {"a", "b", "c"};
    for (int i = 0; i < 3; ++i) prop.witnesses.push_back({labels[i], scan.witness[i]});
  }
  out.push_back(prop);

  if (loop.central_dir) {
    loopcore::Class2Report c2 = loopcore::nilpotency_class2_check(loop, *loop.central_dir, cfg);
    Report r = base_report(cfg, "class2", case_name);
    r.max_residual = c2.off_line_residual;
    r.passed = c2.passed;
    r.expectation = class2_expect;
    r.params["central_line_ok"] = c2.central_line_ok ? "true" : "false";
    r.params["max_associator"] = fmt(c2.max_associator_norm);
    r.params["estimated_class"] = std::to_string(c2.estimated_class);
    if (!c2.passed)
      for (int i = 0; i < 3; ++i) r.witnesses.push_back({"offline", c2.off_line_witness[i]});
    out.push_back(r);
  }
}

std::string dsl_value(const std::string& spec) {
  std::size_t eq = spec.find('=');
  if (eq == std::string::npos)
    throw std::invalid_argument("loop parameter must look like f=<expr>: " + spec);
  return spec.substr(eq + 1);
}

bool is_linear_in_z(const dsl::Expr& f) {
  // Catalog truth for expectations: associators of the H1 family vanish
  // exactly for linear f.
  double f0 = f.eval1(0.0);
  double slope = f.eval1(1.0) - f0;
  for (double z : {-2.0, -1.3, 0.4, 1.7})
    if (std::abs(f.eval1(z) - f0 - slope * z) > 1e-9) return false;
  return true;
}

void run_loop(const std::string& spec, const CheckConfig& cfg, std::vector<Report>& out) {
  if (spec == "section1" || spec == "section2") {
    loopcore::SectionLoop s =
        spec == "section1" ? loopcore::section_case1() : loopcore::section_case2();
    run_loop_law(loopcore::loop_from_section(s, cfg), spec, Expectation::Pass, Expectation::Pass,
                 cfg, out);
    return;
  }
  std::size_t colon = spec.find(':');
  if (colon == std::string::npos) throw UnknownTarget("loop:" + spec);
  std::string family = spec.substr(0, colon);
  std::string param = spec.substr(colon + 1);
  dsl::Expr e = dsl::Expr::parse(dsl_value(param));
  std::string case_name = family + ":" + param;
  if (family == "functional") {
    loopcore::FunctionalResult res = loopcore::functional_residual(e, cfg);
    Report r = base_report(cfg, "functional", case_name);
    r.max_residual = res.max_residual;
    r.passed = res.max_residual < 1e-12;
    r.expectation = Expectation::Info;
    r.params["fitted_c"] = fmt(res.fitted_c);
    r.params["fit_residual"] = fmt(res.fit_residual);
    out.push_back(r);
    return;
  }
  if (family == "bijectivity") {
    loopcore::BijectivityResult res = loopcore::bijectivity_witness(e, cfg);
    Report r = base_report(cfg, "bijectivity", case_name);
    r.passed = res.independent_of_z || res.witness_found;
    r.params["independent_of_z"] = res.independent_of_z ? "true" : "false";
    if (res.witness_found)
      r.witnesses.push_back({"u,x0,y0,z1,z2", Vec{res.u, res.x0, res.y0, res.z1, res.z2}});
    out.push_back(r);
    return;
  }
  if (family == "family_a") {
    // Linear f is the group case: no properness witness. Nonlinear f gives a
    // proper loop, but associators still leave the central y-line, so the
    // class2 expectation is Fail either way (see the acceptance suite notes).
    bool linear = is_linear_in_z(e);
    run_loop_law(loopcore::family_a(e), case_name,
                 linear ? Expectation::Fail : Expectation::Pass, Expectation::Fail, cfg, out);
    return;
  }
  if (family == "family_b") {
    run_loop_law(loopcore::family_b(e), case_name, Expectation::Info, Expectation::Info, cfg, out);
    return;
  }
  if (family == "family_c") {
    run_loop_law(loopcore::family_c(e), case_name, Expectation::Info, Expectation::Info, cfg, out);
    return;
  }
  if (family == "family_d") {
    run_loop_law(loopcore::family_d(e), case_name, Expectation::Info, Expectation::Info, cfg, out);
    return;
  }
  throw UnknownTarget("loop:" + spec);
}

void run_kepka_case(int i, const CheckConfig& cfg, std::vector<Report>& out) {
  const kepka::CaseData& data = kepka::case_data(i);
  std::string case_name = "case" + std::to_string(i);
  for (const auto& triple : data.triples) {
    std::string label = case_name + ":" + triple.inn.name;
    for (const kepka::TransversalSpec* fam : {&triple.a, &triple.b}) {
      if (fam == &triple.b && triple.b.name == triple.a.name) continue;
      kepka::TransversalReport tr = kepka::is_left_transversal(*fam, triple.inn, cfg);
      Report r = base_report(cfg, "transversal", label + ":" + fam->name);
      r.max_residual = std::max(tr.membership_residual, tr.coset_residual);
      r.passed = tr.passed;
      out.push_back(r);
    }
    kepka::ConnectednessReport cr = kepka::connectedness_check(triple.a, triple.b, triple.inn, cfg);
    Report r = base_report(cfg, "connectedness", label);
    r.max_residual = cr.max_residual;
    r.passed = cr.passed;
    if (!cr.passed) {
      r.witnesses.push_back({"a", cr.worst_a});
      r.witnesses.push_back({"b", cr.worst_b});
    }
    out.push_back(r);

    kepka::NiemenmaaReport nr =
        kepka::niemenmaa_check(data.law->linked_algebra(), Subspace(5, triple.inn_subalgebra));
    Report nrep = base_report(cfg, "niemenmaa", label);
    nrep.passed = nr.passed;
    nrep.params["normalizer_dim"] = std::to_string(nr.normalizer_dim);
    nrep.params["inn_center_dim"] = std::to_string(nr.inn_center_dim);
    nrep.params["direct"] = nr.sum_direct ? "true" : "false";
    out.push_back(nrep);
  }
  kepka::GenerationReport gr = kepka::generation_witness(*data.law, data.generators, 5, cfg);
  Report r = base_report(cfg, "generation", case_name);
  r.passed = gr.passed;
  if (data.expected_generation_rank != 5) {
    r.expectation = Expectation::Fail; // no generating witness exists for this case
    r.params["expected_rank"] = std::to_string(data.expected_generation_rank);
  }
  r.params["rank"] = std::to_string(gr.rank);
  r.witnesses.push_back({"singular_values", gr.singular_values});
  out.push_back(r);

  for (const auto& fam : data.defect_families) {
    kepka::GenerationReport dg = kepka::generation_witness(*data.law, {fam}, 5, cfg);
    Report dr = base_report(cfg, "generation", case_name + ":" + fam.name);
    dr.passed = dg.passed;
    dr.expectation = Expectation::Fail; // negative witness, kept on purpose
    dr.params["rank"] = std::to_string(dg.rank);
    dr.params["note"] = "fixed-point spiral family, confined to a proper subgroup";
    out.push_back(dr);
  }
}

void run_niemenmaa(const kepka::NiemenmaaCase& c, const CheckConfig& cfg,
                   std::vector<Report>& out) {
  const liealg::LieAlgebra& alg = liealg::catalog_algebra(c.algebra);
  kepka::NiemenmaaReport nr = kepka::niemenmaa_check(alg, Subspace(alg.dim(), c.inn));
  Report r = base_report(cfg, "niemenmaa", c.name);
  r.passed = nr.passed;
  r.expectation = c.expect_pass ? Expectation::Pass : Expectation::Fail;
  r.params["algebra"] = c.algebra;
  r.params["normalizer_dim"] = std::to_string(nr.normalizer_dim);
  r.params["inn_center_dim"] = std::to_string(nr.inn_center_dim);
  out.push_back(r);
}

void run_obstruction(const kepka::ObstructionCase& c, const CheckConfig& cfg,
                     std::vector<Report>& out) {
  kepka::ObstructionReport rep = kepka::obstruction_report(c, cfg);
  Report r = base_report(cfg, "obstruction", c.name);
  r.passed = rep.confirmed;
  if (std::holds_alternative<kepka::FitObstruction>(c.payload)) {
    r.max_residual = rep.residual;
    r.witnesses.push_back({"fitted_constants", rep.fitted});
    r.params["kind"] = "residual-fit";
    r.params["delta_obs"] = fmt(cfg.delta_obs);
  } else {
    r.params["kind"] = "generation-rank";
    r.params["rank"] = std::to_string(rep.rank);
    r.params["target_dim"] = std::to_string(rep.target_dim);
  }
  out.push_back(r);
}

std::vector<std::string> repro_targets() {
  std::vector<std::string> t = {"algebra:all", "group:all"};
  for (int i = 1; i <= 8; ++i) t.push_back("kepka:case" + std::to_string(i));
  t.push_back("niemenmaa:all");
  t.push_back("obstruction:all");
  t.push_back("loop:family_a:f=z^2");
  t.push_back("loop:family_a:f=z");
  t.push_back("loop:section1");
  t.push_back("loop:section2");
  t.push_back("loop:functional:f=-2*(1-exp(-z))");
  t.push_back("loop:functional:f=0");
  t.push_back("loop:functional:f=3*(1-exp(-z))");
  t.push_back("loop:functional:f=z");
  t.push_back("loop:bijectivity:f=z^2");
  t.push_back("loop:bijectivity:f=x+y");
  return t;
}

} // namespace

std::vector<Report> run_target(const std::string& target, const CheckConfig& cfg) {
  std::vector<Report> out;
  std::size_t colon = target.find(':');
  if (colon == std::string::npos) throw UnknownTarget(target);
  std::string kind = target.substr(0, colon);
  std::string rest = target.substr(colon + 1);

  if (kind == "repro") {
    if (rest != "all") throw UnknownTarget(target);
    for (const auto& t : repro_targets()) {
      std::vector<Report> sub = run_target(t, cfg);
      out.insert(out.end(), sub.begin(), sub.end());
    }
    // The functional-law residual for f=z must be large; recorded as Fail.
    for (auto& r : out)
      if (r.check == "functional")
        r.expectation = (r.case_name == "functional:f=z") ? Expectation::Fail : Expectation::Pass;
    return out;
  }
  if (kind == "algebra") {
    if (rest == "all") {
      for (const auto& e : liealg::algebra_catalog()) run_algebra(e, cfg, out);
    } else {
      run_algebra(liealg::catalog_entry(rest), cfg, out);
    }
    return out;
  }
  if (kind == "group") {
    if (rest == "all") {
      for (const auto& l : groupcat::law_catalog()) run_group(l, cfg, out);
    } else {
      run_group(groupcat::law(rest), cfg, out);
    }
    return out;
  }
  if (kind == "loop") {
    run_loop(rest, cfg, out);
    return out;
  }
  if (kind == "kepka") {
    if (rest.rfind("case", 0) != 0) throw UnknownTarget(target);
    run_kepka_case(std::stoi(rest.substr(4)), cfg, out);
    return out;
  }
  if (kind == "niemenmaa") {
    if (rest == "all") {
      for (const auto& c : kepka::niemenmaa_cases()) run_niemenmaa(c, cfg, out);
    } else {
      for (const auto& c : kepka::niemenmaa_cases())
        if (c.name == rest) {
          run_niemenmaa(c, cfg, out);
          return out;
        }
      throw UnknownTarget(target);
    }
    return out;
  }
  if (kind == "obstruction") {
    if (rest == "all") {
      for (const auto& c : kepka::obstruction_catalog()) run_obstruction(c, cfg, out);
    } else {
      run_obstruction(kepka::obstruction(rest), cfg, out);
    }
    return out;
  }
  throw UnknownTarget(target);
}

bool all_expected(const std::vector<Report>& reports) {
  for (const auto& r : reports)
    if (!r.expected_outcome()) return false;
  return true;
}

std::string catalog_listing(const std::string& filter) {
  struct Entry {
    std::string name;
    std::vector<std::string> kinds;
  };
  std::vector<Entry> entries;
  auto add = [&](const std::string& name, const std::string& kind) {
    for (auto& e : entries)
      if (e.name == name) {
        e.kinds.push_back(kind);
        return;
      }
    entries.push_back({name, {kind}});
  };
  for (const auto& e : liealg::algebra_catalog())
    add(e.name, (e.stub ? "algebra stub dim " : "algebra dim ") + std::to_string(e.dim));
  for (const auto& l : groupcat::law_catalog())
    add(l.name, "group law dim " + std::to_string(l.dim));
  for (const char* fam : {"family_a", "family_b", "family_c", "family_d"})
    add(fam, "loop family (DSL parameter)");
  for (const char* sec : {"section1", "section2"}) add(sec, "section loop");
  for (int i = 1; i <= 8; ++i) {
    const auto& data = kepka::case_data(i);
    std::string kind = "kepka case " + std::to_string(i) + " (";
    for (std::size_t t = 0; t < data.triples.size(); ++t)
      kind += (t ? ", " : "") + data.triples[t].a.name + "/" + data.triples[t].b.name + "/" +
              data.triples[t].inn.name;
    kind += ")";
    add("mult" + std::to_string(i), kind);
  }
  for (const auto& c : kepka::obstruction_catalog()) add(c.name, "obstruction: " + c.description);
  for (const auto& c : kepka::niemenmaa_cases())
    add("niemenmaa:" + c.name,
        std::string("normalizer check, expected ") + (c.expect_pass ? "pass" : "fail"));
  std::ostringstream os;
  for (const auto& e : entries) {
    if (!filter.empty() && e.name.find(filter) == std::string::npos) continue;
    os << e.name;
    for (std::size_t i = 0; i < e.kinds.size(); ++i) os << (i ? "; " : "  [") << e.kinds[i];
    os << "]\n";
  }
  return os.str();
}

} // namespace multloop::verify
