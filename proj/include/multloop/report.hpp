#ifndef MULTLOOP_REPORT_HPP
#define MULTLOOP_REPORT_HPP

#include "multloop/config.hpp"
#include "multloop/numerics.hpp"

#include <map>
#include <string>
#include <vector>

namespace multloop {

enum class Expectation { Pass, Fail, Info };

struct Witness {
  std::string label;
  Vec value;
};

struct Report {
  std::string check;
  std::string case_name;
  bool passed = false;
  double max_residual = 0;
  std::vector<Witness> witnesses;
  std::map<std::string, std::string> params;
  std::uint64_t seed = kDefaultSeed;
  // Wall time is reported on the console only; the JSON field stays 0 so the
  // same seed and config always produce byte-identical files.
  std::int64_t runtime_ms = 0;
  Expectation expectation = Expectation::Pass;

  bool expected_outcome() const {
    switch (expectation) {
      case Expectation::Pass: return passed;
      case Expectation::Fail: return !passed;
      case Expectation::Info: return true;
    }
    return false;
  }
};

/// Canonical JSON: fixed field order, floats with 17 significant digits.
std::string to_json(const Report& r);
std::string reports_to_json(const std::string& target, std::uint64_t seed,
                            const std::vector<Report>& reports);
std::string format_double(double x);

} // namespace multloop

#endif
