#include "multloop/exprdsl.hpp"
#include "multloop/report.hpp"
#include "multloop/verify.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>

using namespace multloop;

int main(int argc, char** argv) {
  CLI::App app{"multloop: verification lab for low-dimensional solvable multiplication groups"};
  app.require_subcommand(1);

  std::string filter;
  CLI::App* cat = app.add_subcommand("catalog", "list algebras, laws, loop families and cases");
  cat->add_option("filter", filter, "substring filter");

  std::string target;
  CheckConfig cfg;
  std::string json_path;
  CLI::App* ver = app.add_subcommand("verify", "run a verification target");
  ver->add_option("target", target, "e.g. kepka:case1, algebra:all, repro:all")->required();
  ver->add_option("--seed", cfg.seed, "sampling seed");
  ver->add_option("--samples", cfg.samples, "samples per law")->check(CLI::PositiveNumber);
  ver->add_option("--box", cfg.box, "half-width of the sampling cube");
  ver->add_option("--tol-grp", cfg.tol_grp, "group-law tolerance");
  ver->add_option("--tol-loop", cfg.tol_loop, "loop tolerance");
  ver->add_option("--delta-obs", cfg.delta_obs, "obstruction confirmation threshold");
  ver->add_option("--json", json_path, "write the JSON report file here");

  if (const char* env = std::getenv("MULTLOOP_SEED")) cfg.seed = std::strtoull(env, nullptr, 10);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  if (cat->parsed()) {
    std::cout << verify::catalog_listing(filter);
    return 0;
  }

  try {
    auto t0 = std::chrono::steady_clock::now();
    std::vector<Report> reports = verify::run_target(target, cfg);
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - t0)
                  .count();
    std::string json = reports_to_json(target, cfg.seed, reports);
    if (!json_path.empty()) {
      std::ofstream out(json_path, std::ios::binary);
      out << json;
    } else {
      std::cout << json;
    }
    int mismatches = 0;
    for (const auto& r : reports) {
      bool ok = r.expected_outcome();
      if (!ok) ++mismatches;
      std::cerr << (ok ? "  ok " : "MISM ") << r.check << " " << r.case_name << " passed="
                << (r.passed ? "true" : "false")
                << " max_residual=" << format_double(r.max_residual) << "\n";
    }
    std::cerr << reports.size() << " report(s), " << mismatches << " mismatch(es), " << ms
              << " ms\n";
    return mismatches == 0 ? 0 : 1;
  } catch (const verify::UnknownTarget& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const dsl::SyntaxError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
