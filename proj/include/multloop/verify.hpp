#ifndef MULTLOOP_VERIFY_HPP
#define MULTLOOP_VERIFY_HPP

#include "multloop/config.hpp"
#include "multloop/report.hpp"

#include <string>
#include <vector>

namespace multloop::verify {

struct UnknownTarget : std::runtime_error {
  explicit UnknownTarget(const std::string& t) : std::runtime_error("unknown target '" + t + "'") {}
};

/// Runs one verification target and returns its reports.
/// Targets: algebra:<name|all>, group:<name|all>, loop:<family>:<dsl>,
/// loop:section1, loop:section2, loop:functional:<dsl>, loop:bijectivity:<dsl>,
/// kepka:case<i>, obstruction:<name|all>, niemenmaa:<case|all>, repro:all.
std::vector<Report> run_target(const std::string& target, const CheckConfig& cfg);

bool all_expected(const std::vector<Report>& reports);

/// Human-readable catalog listing, one line per entry, filtered by substring.
std::string catalog_listing(const std::string& filter);

} // namespace multloop::verify

#endif
