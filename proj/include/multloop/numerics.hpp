#ifndef MULTLOOP_NUMERICS_HPP
#define MULTLOOP_NUMERICS_HPP

#include <cstdint>
#include <functional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace multloop {

using Vec = std::vector<double>;

double max_abs(const Vec& v);
Vec vec_sub(const Vec& a, const Vec& b);

/// Deterministic uniform sampler. mt19937_64 has a pinned sequence; the
/// double extraction avoids the unspecified std::uniform_real_distribution.
class Sampler {
public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {}
  double uniform(double lo, double hi) {
    const double u = static_cast<double>(rng_() >> 11) * 0x1.0p-53;
    return lo + (hi - lo) * u;
  }
  Vec point(std::size_t n, double box) {
    Vec p(n);
    for (auto& x : p) x = uniform(-box, box);
    return p;
  }

private:
  std::mt19937_64 rng_;
};

/// Sub-seed derived from a master seed and a case label (FNV-1a mix).
std::uint64_t derive_seed(std::uint64_t master, const std::string& label);

struct ExtractionUnstable : std::runtime_error {
  explicit ExtractionUnstable(const std::string& what) : std::runtime_error(what) {}
};

/// d2/dsdt f(s,t) at (0,0), Richardson-extrapolated from steps h and h/2.
/// Throws ExtractionUnstable when the two steps disagree beyond tol.
double mixed_derivative(const std::function<double(double, double)>& f, double h, double tol);

/// d/dt f(t) at 0 with the same Richardson scheme.
double curve_derivative(const std::function<double(double)>& f, double h, double tol);

struct NoSolutionError : std::runtime_error {
  explicit NoSolutionError(const std::string& what) : std::runtime_error(what) {}
};
struct MultipleSolutionsError : std::runtime_error {
  MultipleSolutionsError(const std::string& what, std::vector<double> roots)
      : std::runtime_error(what), roots(std::move(roots)) {}
  std::vector<double> roots;
};

struct ScanResult {
  std::vector<double> roots;
};

/// Scans n equally spaced brackets on [lo,hi], polishes each sign change by
/// bisection + Newton to `tol`, and deduplicates.
ScanResult scan_roots(const std::function<double(double)>& f, double lo = -10, double hi = 10,
                      int n = 401, double tol = 1e-12);

/// The unique root on [lo,hi]; throws NoSolutionError / MultipleSolutionsError.
double unique_root(const std::function<double(double)>& f, const std::string& what,
                   double lo = -10, double hi = 10, int n = 401, double tol = 1e-12);

/// Division solver: the bracketing scan reports multiplicity; when it finds
/// no root inside the window, damped Newton from `guess` (plus a few spread
/// starts) picks up roots outside it. Throws NoSolutionError when nothing
/// converges.
double scalar_root(const std::function<double(double)>& f, const std::string& what, double guess,
                   double tol = 1e-12);

/// Damped Newton for F: R^n -> R^n with finite-difference Jacobian and seeded
/// restarts as fallback. Returns true on success and leaves the root in x.
bool newton_solve(const std::function<Vec(const Vec&)>& f, Vec& x, double tol = 1e-12,
                  int max_iter = 80, std::uint64_t restart_seed = 0, int restarts = 24,
                  double restart_box = 4.0);

/// Least squares min ||A c - b||_2; returns c. A is row-major, rows x cols.
Vec least_squares(const std::vector<Vec>& a_rows, const Vec& b);

/// Singular values (descending) of the matrix with the given rows.
Vec singular_values(const std::vector<Vec>& rows);

/// Nearest rational p/q with 1 <= q <= max_den; returns achieved error.
struct RationalRound {
  long num;
  long den;
  double error;
};
RationalRound round_rational(double x, long max_den = 12);

} // namespace multloop

#endif
