#ifndef MULTLOOP_CONFIG_HPP
#define MULTLOOP_CONFIG_HPP

#include <cstdint>

namespace multloop {

inline constexpr std::uint64_t kDefaultSeed = 1836413044ull;

/// Tolerances and sampling knobs shared by the numeric suites.
struct CheckConfig {
  std::uint64_t seed = kDefaultSeed;
  double tol_grp = 1e-9;   // group-law residuals, box [-box,box]^n
  double tol_loop = 1e-8;  // loop residuals
  double tol_fd = 1e-5;    // finite-difference agreement (Richardson steps h, h/2)
  double delta_obs = 0.01; // obstruction confirmation threshold
  double fd_step = 1e-3;
  int samples = 1000;      // seeded samples per law
  double box = 2.0;        // half-width of the sampling cube
  int grid_points = 7;     // lattice points per parameter
  int random_triples = 500;
  double svd_threshold = 1e-6;
};

} // namespace multloop

#endif
