#include "multloop/report.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

namespace multloop {

std::string format_double(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

namespace {

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      default: out += c;
    }
  }
  return out;
}

const char* expectation_name(Expectation e) {
  switch (e) {
    case Expectation::Pass: return "pass";
    case Expectation::Fail: return "fail";
    case Expectation::Info: return "info";
  }
  return "?";
}

} // namespace

std::string to_json(const Report& r) {
  std::ostringstream os;
  os << "{\"check\":\"" << escape(r.check) << "\",";
  os << "\"case\":\"" << escape(r.case_name) << "\",";
  os << "\"passed\":" << (r.passed ? "true" : "false") << ",";
  os << "\"expectation\":\"" << expectation_name(r.expectation) << "\",";
  os << "\"max_residual\":" << format_double(r.max_residual) << ",";
  os << "\"witnesses\":[";
  for (std::size_t i = 0; i < r.witnesses.size(); ++i) {
    if (i) os << ",";
    os << "{\"label\":\"" << escape(r.witnesses[i].label) << "\",\"value\":[";
    for (std::size_t j = 0; j < r.witnesses[i].value.size(); ++j) {
      if (j) os << ",";
      os << format_double(r.witnesses[i].value[j]);
    }
    os << "]}";
  }
  os << "],";
  os << "\"params\":{";
  bool first = true;
  for (const auto& [k, v] : r.params) { // std::map iterates in key order
    if (!first) os << ",";
    first = false;
    os << "\"" << escape(k) << "\":\"" << escape(v) << "\"";
  }
  os << "},";
  os << "\"seed\":" << r.seed << ",";
  os << "\"runtime_ms\":" << r.runtime_ms << "}";
  return os.str();
}

std::string reports_to_json(const std::string& target, std::uint64_t seed,
                            const std::vector<Report>& reports) {
  std::vector<Report> ordered = reports;
  std::stable_sort(ordered.begin(), ordered.end(), [](const Report& a, const Report& b) {
    if (a.case_name != b.case_name) return a.case_name < b.case_name;
    return a.check < b.check;
  });
  std::ostringstream os;
  os << "{\"schema\":\"multloop/1\",\"target\":\"" << escape(target) << "\",\"seed\":" << seed
     << ",\"reports\":[";
  for (std::size_t i = 0; i < ordered.size(); ++i) {
    if (i) os << ",";
    os << "\n" << to_json(ordered[i]);
  }
  os << "\n]}\n";
  return os.str();
}

} // namespace multloop
