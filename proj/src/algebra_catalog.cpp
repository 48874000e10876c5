#include "multloop/algebra_catalog.hpp"

#include <map>
#include <sstream>
#include <stdexcept>

namespace multloop::liealg {

LieAlgebra filiform(std::size_t n) {
  if (n < 3 || n > 6) throw std::invalid_argument("filiform: need 3 <= n <= 6");
  std::ostringstream name;
  name << "F" << n;
  LieAlgebra a(name.str(), n);
  for (std::size_t i = 1; i + 1 < n; ++i) a.set_bracket(0, i, i + 1, Rat(1));
  return a;
}

LieAlgebra l2() {
  LieAlgebra a("l2", 2);
  a.set_bracket(0, 1, 0, Rat(1));
  return a;
}

LieAlgebra g4_3() {
  LieAlgebra a("g4_3", 4);
  a.set_bracket(0, 3, 0, Rat(1));
  a.set_bracket(2, 3, 1, Rat(1));
  return a;
}

LieAlgebra g4_10() {
  LieAlgebra a("g4_10", 4);
  a.set_bracket(0, 2, 0, Rat(1));
  a.set_bracket(1, 2, 1, Rat(1));
  a.set_bracket(0, 3, 1, Rat(-1));
  a.set_bracket(1, 3, 0, Rat(1));
  return a;
}

LieAlgebra g5_33(const Rat& beta, const Rat& gamma) {
  if (beta.is_zero() && gamma.is_zero())
    throw std::invalid_argument("g5_33: beta and gamma cannot both vanish");
  LieAlgebra a("g5_33", 5);
  a.set_bracket(0, 3, 0, Rat(1));
  a.set_bracket(2, 3, 2, beta);
  a.set_bracket(1, 4, 1, Rat(1));
  a.set_bracket(2, 4, 2, gamma);
  a.params()["beta"] = beta;
  a.params()["gamma"] = gamma;
  return a;
}

LieAlgebra g5_38() {
  LieAlgebra a("g5_38", 5);
  a.set_bracket(0, 3, 0, Rat(1));
  a.set_bracket(1, 4, 1, Rat(1));
  a.set_bracket(3, 4, 2, Rat(1));
  return a;
}

LieAlgebra prop5_g(int which) {
  switch (which) {
    case 1: {
      LieAlgebra a("prop5_g1", 5);
      a.set_bracket(1, 2, 0, Rat(1));
      a.set_bracket(1, 4, 2, Rat(1));
      a.set_bracket(3, 4, 3, Rat(1));
      return a;
    }
    case 2: {
      LieAlgebra a("prop5_g2", 5);
      a.set_bracket(1, 3, 0, Rat(1));
      a.set_bracket(0, 4, 0, Rat(1));
      a.set_bracket(1, 4, 1, Rat(1));
      a.set_bracket(3, 4, 2, Rat(1));
      return a;
    }
    case 3: {
      // Same bracket table as g5_38.
      LieAlgebra a("prop5_g3", 5);
      a.set_bracket(0, 3, 0, Rat(1));
      a.set_bracket(1, 4, 1, Rat(1));
      a.set_bracket(3, 4, 2, Rat(1));
      return a;
    }
    case 4: {
      LieAlgebra a("prop5_g4", 5);
      a.set_bracket(0, 3, 0, Rat(1));
      a.set_bracket(1, 3, 1, Rat(1));
      a.set_bracket(0, 4, 1, Rat(-1));
      a.set_bracket(1, 4, 0, Rat(1));
      a.set_bracket(3, 4, 2, Rat(1));
      return a;
    }
    default:
      throw std::invalid_argument("prop5_g: which must be 1..4");
  }
}

LieAlgebra mult6_alg(const Rat& a) {
  if (!(a > Rat(0))) throw std::invalid_argument("mult6: requires a > 0");
  LieAlgebra g("mult6", 5);
  g.set_bracket(0, 2, RatVec{a, Rat(-1), Rat(0), Rat(0), Rat(0)});
  g.set_bracket(1, 2, RatVec{Rat(1), a, Rat(0), Rat(0), Rat(0)});
  g.params()["a"] = a;
  return g;
}

LieAlgebra mult7_alg(const Rat& a, const Rat& b) {
  if (a == b || a.is_zero() || b.is_zero())
    throw std::invalid_argument("mult7: requires a != b, both nonzero");
  LieAlgebra g("mult7", 5);
  g.set_bracket(0, 2, 0, a);
  g.set_bracket(1, 2, 1, b);
  g.params()["a"] = a;
  g.params()["b"] = b;
  return g;
}

LieAlgebra mult8_alg(const Rat& a) {
  if (a.is_zero()) throw std::invalid_argument("mult8: requires a nonzero");
  LieAlgebra g("mult8", 5);
  g.set_bracket(0, 2, 0, a);
  g.set_bracket(1, 2, 1, a);
  g.params()["a"] = a;
  return g;
}

LieAlgebra mult_alg(int which_case) {
  switch (which_case) {
    case 1: {
      LieAlgebra a("mult1", 5);
      a.set_bracket(0, 1, 2, Rat(1));
      a.set_bracket(3, 4, 3, Rat(1));
      return a;
    }
    case 2: {
      LieAlgebra a("mult2", 5);
      a.set_bracket(0, 1, 0, Rat(1));
      a.set_bracket(2, 3, 2, Rat(1));
      return a;
    }
    case 3: {
      LieAlgebra a("mult3", 5);
      a.set_bracket(1, 2, 0, Rat(1));
      a.set_bracket(0, 3, 0, Rat(1));
      a.set_bracket(1, 3, 1, Rat(1));
      return a;
    }
    case 4: {
      LieAlgebra a("mult4", 5);
      a.set_bracket(0, 2, 0, Rat(1));
      a.set_bracket(1, 2, 1, Rat(1));
      a.set_bracket(0, 3, 1, Rat(-1));
      a.set_bracket(1, 3, 0, Rat(1));
      return a;
    }
    case 5: {
      LieAlgebra a("mult5", 5);
      a.set_bracket(0, 2, RatVec{Rat(1), Rat(1), Rat(0), Rat(0), Rat(0)});
      a.set_bracket(1, 2, 1, Rat(1));
      return a;
    }
    case 6:
      return mult6_alg(Rat(1));
    case 7:
      return mult7_alg(Rat(1), Rat(2));
    case 8:
      return mult8_alg(Rat(1));
    default:
      throw std::invalid_argument("mult_alg: case must be 1..8");
  }
}

LieAlgebra r2_x_l2() {
  LieAlgebra a("r2xl2", 4);
  a.set_bracket(3, 2, 3, Rat(1));
  return a;
}

namespace {

CatalogEntry real_entry(const LieAlgebra& a, const std::string& note = "") {
  CatalogEntry e;
  e.name = a.name();
  e.dim = a.dim();
  e.stub = false;
  e.algebra = a;
  e.note = note;
  return e;
}

CatalogEntry stub_entry(const std::string& name, std::size_t dim, const std::string& note = "") {
  CatalogEntry e;
  e.name = name;
  e.dim = dim;
  e.stub = true;
  e.note = note;
  return e;
}

std::vector<CatalogEntry> build_catalog() {
  std::vector<CatalogEntry> c;
  c.push_back(real_entry(l2()));
  for (std::size_t n = 3; n <= 6; ++n) c.push_back(real_entry(filiform(n)));
  c.push_back(stub_entry("g4_1", 4, "filiform, isomorphic to F4"));
  c.push_back(real_entry(g4_3()));
  c.push_back(stub_entry("g4_8", 4, "parameter h, centre 1-dim only for h=-1"));
  c.push_back(stub_entry("g4_9", 4, "parameter p, centre 1-dim only for p=0"));
  c.push_back(real_entry(g4_10()));
  c.push_back(real_entry(r2_x_l2(), "R^2 x L_2"));
  // 5-dim indecomposable families named in the source lists; only those with a
  // written-out bracket table are instantiated.
  for (int k : {7, 8, 9, 10, 11, 12, 13, 14}) c.push_back(stub_entry("g5_" + std::to_string(k), 5));
  c.push_back(stub_entry("g5_15", 5, "trivial centre iff gamma != 0"));
  c.push_back(stub_entry("g5_16", 5));
  c.push_back(stub_entry("g5_17", 5, "no 1-dim ideal"));
  c.push_back(stub_entry("g5_18", 5, "no 1-dim ideal"));
  c.push_back(stub_entry("g5_19", 5, "trivial centre iff alpha != -1"));
  c.push_back(stub_entry("g5_20", 5, "trivial centre iff alpha != -1"));
  for (int k : {21, 22, 23, 24}) c.push_back(stub_entry("g5_" + std::to_string(k), 5));
  c.push_back(stub_entry("g5_25", 5, "beta != 0; centre 1-dim iff p = 0"));
  c.push_back(stub_entry("g5_26", 5, "centre 1-dim iff p = 0, epsilon = +-1"));
  for (int k : {27, 28, 29}) c.push_back(stub_entry("g5_" + std::to_string(k), 5));
  c.push_back(stub_entry("g5_30", 5, "centre 1-dim iff h = -2"));
  for (int k : {31, 32}) c.push_back(stub_entry("g5_" + std::to_string(k), 5));
  c.push_back(real_entry(g5_33(Rat(1), Rat(0)), "beta^2 + gamma^2 != 0"));
  for (int k : {34, 35, 36, 37}) c.push_back(stub_entry("g5_" + std::to_string(k), 5));
  c.push_back(real_entry(g5_38()));
  c.push_back(stub_entry("g5_39", 5));
  for (int k = 1; k <= 4; ++k)
    if (k != 3) c.push_back(real_entry(prop5_g(k)));
  c.push_back(real_entry(prop5_g(3), "equals g5_38"));
  for (int k = 1; k <= 8; ++k) c.push_back(real_entry(mult_alg(k)));
  return c;
}

} // namespace

const std::vector<CatalogEntry>& algebra_catalog() {
  static const std::vector<CatalogEntry> catalog = build_catalog();
  return catalog;
}

const CatalogEntry& catalog_entry(const std::string& name) {
  for (const auto& e : algebra_catalog())
    if (e.name == name) return e;
  throw std::out_of_range("unknown catalog algebra '" + name + "'");
}

const LieAlgebra& catalog_algebra(const std::string& name) {
  const CatalogEntry& e = catalog_entry(name);
  if (e.stub) throw std::runtime_error("catalog entry '" + name + "' has no bracket table");
  return *e.algebra;
}

std::string catalog_to_text(const std::vector<CatalogEntry>& entries) {
  std::ostringstream os;
  for (const auto& e : entries) {
    os << e.name << "; " << e.dim;
    if (e.stub) {
      os << "; relations-not-in-paper";
    } else {
      const LieAlgebra& a = *e.algebra;
      for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = i + 1; j < a.dim(); ++j)
          for (std::size_t k = 0; k < a.dim(); ++k)
            if (!a.c(i, j, k).is_zero())
              os << "; [" << i + 1 << "," << j + 1 << "," << k + 1 << "]=" << a.c(i, j, k).str();
      if (!a.params().empty()) {
        os << "; params";
        for (const auto& [key, value] : a.params()) os << " " << key << "=" << value.str();
      }
    }
    if (!e.note.empty()) os << "; note \"" << e.note << "\"";
    os << "\n";
  }
  return os.str();
}

namespace {

std::string trim(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  std::size_t e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

} // namespace

std::vector<CatalogEntry> catalog_from_text(const std::string& text) {
  std::vector<CatalogEntry> out;
  std::istringstream is(text);
  std::string line;
  while (std::getline(is, line)) {
    line = trim(line);
    if (line.empty() || line[0] == '#') continue;
    std::vector<std::string> fields;
    {
      std::string current;
      bool in_quotes = false;
      for (char c : line) {
        if (c == '"') in_quotes = !in_quotes;
        if (c == ';' && !in_quotes) {
          fields.push_back(trim(current));
          current.clear();
        } else {
          current += c;
        }
      }
      fields.push_back(trim(current));
    }
    if (fields.size() < 2) throw std::invalid_argument("catalog: bad record '" + line + "'");
    CatalogEntry e;
    e.name = fields[0];
    e.dim = std::stoul(fields[1]);
    LieAlgebra alg(e.name, e.dim);
    bool has_relations = false;
    for (std::size_t f = 2; f < fields.size(); ++f) {
      const std::string& field = fields[f];
      if (field == "relations-not-in-paper") {
        e.stub = true;
      } else if (field.rfind("params", 0) == 0) {
        std::istringstream ps(field.substr(6));
        std::string kv;
        while (ps >> kv) {
          std::size_t eq = kv.find('=');
          if (eq == std::string::npos)
            throw std::invalid_argument("catalog: bad param '" + kv + "'");
          alg.params()[kv.substr(0, eq)] = Rat::parse(kv.substr(eq + 1));
        }
      } else if (field.rfind("note", 0) == 0) {
        std::size_t q1 = field.find('"');
        std::size_t q2 = field.rfind('"');
        if (q1 == std::string::npos || q2 <= q1)
          throw std::invalid_argument("catalog: bad note field");
        e.note = field.substr(q1 + 1, q2 - q1 - 1);
      } else if (!field.empty() && field[0] == '[') {
        std::size_t rb = field.find(']');
        std::size_t eq = rb == std::string::npos ? std::string::npos : field.find('=', rb);
        if (rb == std::string::npos || eq == std::string::npos)
          throw std::invalid_argument("catalog: bad bracket '" + field + "'");
        std::istringstream bs(field.substr(1, rb - 1));
        std::size_t i = 0, j = 0, k = 0;
        char c1 = 0, c2 = 0;
        bs >> i >> c1 >> j >> c2 >> k;
        if (!bs || c1 != ',' || c2 != ',' || i < 1 || j < 1 || k < 1 || i > e.dim || j > e.dim ||
            k > e.dim)
          throw std::invalid_argument("catalog: bad bracket indices '" + field + "'");
        alg.set_bracket(i - 1, j - 1, k - 1, Rat::parse(trim(field.substr(eq + 1))));
        has_relations = true;
      } else {
        throw std::invalid_argument("catalog: unknown field '" + field + "'");
      }
    }
    if (e.stub && has_relations)
      throw std::invalid_argument("catalog: stub record with relations");
    if (!e.stub) e.algebra = alg;
    out.push_back(std::move(e));
  }
  return out;
}

} // namespace multloop::liealg
