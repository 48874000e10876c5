#include "multloop/numerics.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <sstream>

namespace multloop {

double max_abs(const Vec& v) {
  double m = 0;
  for (double x : v) m = std::max(m, std::abs(x));
  return m;
}

Vec vec_sub(const Vec& a, const Vec& b) {
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

std::uint64_t derive_seed(std::uint64_t master, const std::string& label) {
  std::uint64_t h = 1469598103934665603ull ^ master;
  for (char c : label) {
    h ^= static_cast<unsigned char>(c);
    h *= 1099511628211ull;
  }
  return h;
}

namespace {
double mixed_stencil(const std::function<double(double, double)>& f, double h) {
  return (f(h, h) - f(h, -h) - f(-h, h) + f(-h, -h)) / (4 * h * h);
}
} // namespace

double mixed_derivative(const std::function<double(double, double)>& f, double h, double tol) {
  double a = mixed_stencil(f, h);
  double b = mixed_stencil(f, h / 2);
  if (std::abs(a - b) > tol * std::max({1.0, std::abs(a), std::abs(b)})) {
    std::ostringstream os;
    os << "mixed derivative unstable: step " << h << " gives " << a << ", step " << h / 2
       << " gives " << b;
    throw ExtractionUnstable(os.str());
  }
  return (4 * b - a) / 3;
}

double curve_derivative(const std::function<double(double)>& f, double h, double tol) {
  auto d = [&](double step) { return (f(step) - f(-step)) / (2 * step); };
  double a = d(h), b = d(h / 2);
  if (std::abs(a - b) > tol * std::max({1.0, std::abs(a), std::abs(b)})) {
    std::ostringstream os;
    os << "curve derivative unstable: " << a << " vs " << b;
    throw ExtractionUnstable(os.str());
  }
  return (4 * b - a) / 3;
}

namespace {

double polish(const std::function<double(double)>& f, double lo, double hi, double tol) {
  double flo = f(lo), fhi = f(hi);
  for (int i = 0; i < 200; ++i) {
    double mid = 0.5 * (lo + hi);
    double fm = f(mid);
    if (std::abs(fm) < tol || hi - lo < tol) {
      // Newton refinement from the bisection estimate.
      double x = mid;
      for (int k = 0; k < 8; ++k) {
        double fx = f(x);
        if (std::abs(fx) < tol) break;
        double hstep = 1e-7 * std::max(1.0, std::abs(x));
        double d = (f(x + hstep) - f(x - hstep)) / (2 * hstep);
        if (d == 0) break;
        double next = x - fx / d;
        if (!(std::isfinite(next)) || next < lo - 1 || next > hi + 1) break;
        x = next;
      }
      return std::abs(f(x)) <= std::abs(fm) ? x : mid;
    }
    if ((flo < 0) != (fm < 0)) {
      hi = mid;
      fhi = fm;
    } else {
      lo = mid;
      flo = fm;
    }
  }
  (void)fhi;
  return 0.5 * (lo + hi);
}

} // namespace

ScanResult scan_roots(const std::function<double(double)>& f, double lo, double hi, int n,
                      double tol) {
  ScanResult res;
  double prev_x = lo, prev_f = f(lo);
  for (int i = 1; i < n; ++i) {
    double x = lo + (hi - lo) * i / (n - 1);
    double fx = f(x);
    if (prev_f == 0) {
      res.roots.push_back(prev_x);
    } else if (std::isfinite(prev_f) && std::isfinite(fx) && (prev_f < 0) != (fx < 0)) {
      res.roots.push_back(polish(f, prev_x, x, tol));
    }
    prev_x = x;
    prev_f = fx;
  }
  if (prev_f == 0) res.roots.push_back(prev_x);
  // Deduplicate nearby roots.
  std::sort(res.roots.begin(), res.roots.end());
  std::vector<double> uniq;
  for (double r : res.roots)
    if (uniq.empty() || std::abs(r - uniq.back()) > 1e-7) uniq.push_back(r);
  res.roots = uniq;
  return res;
}

double unique_root(const std::function<double(double)>& f, const std::string& what, double lo,
                   double hi, int n, double tol) {
  ScanResult scan = scan_roots(f, lo, hi, n, tol);
  if (scan.roots.empty()) throw NoSolutionError(what + ": no root in bracketing scan");
  if (scan.roots.size() > 1) {
    std::ostringstream os;
    os << what << ": " << scan.roots.size() << " roots in bracketing scan";
    throw MultipleSolutionsError(os.str(), scan.roots);
  }
  return scan.roots[0];
}

double scalar_root(const std::function<double(double)>& f, const std::string& what, double guess,
                   double tol) {
  ScanResult scan = scan_roots(f, -10, 10, 401, tol);
  if (scan.roots.size() > 1) {
    std::ostringstream os;
    os << what << ": " << scan.roots.size() << " roots in bracketing scan";
    throw MultipleSolutionsError(os.str(), scan.roots);
  }
  if (scan.roots.size() == 1) return scan.roots[0];
  for (double start : {guess, 2 * guess, -guess, 25.0, -25.0, 75.0, -75.0}) {
    double x = start;
    bool ok = true;
    for (int it = 0; it < 100; ++it) {
      double fx = f(x);
      if (!std::isfinite(fx)) {
        ok = false;
        break;
      }
      if (std::abs(fx) < tol) break;
      double h = 1e-7 * std::max(1.0, std::abs(x));
      double d = (f(x + h) - f(x - h)) / (2 * h);
      if (d == 0 || !std::isfinite(d)) {
        ok = false;
        break;
      }
      double lambda = 1.0;
      bool moved = false;
      for (int half = 0; half < 40; ++half) {
        double next = x - lambda * fx / d;
        if (std::isfinite(next) && std::abs(f(next)) < std::abs(fx)) {
          x = next;
          moved = true;
          break;
        }
        lambda *= 0.5;
      }
      if (!moved) {
        ok = false;
        break;
      }
    }
    if (ok && std::abs(f(x)) < tol) return x;
  }
  throw NoSolutionError(what + ": no root in bracketing scan or by Newton fallback");
}

bool newton_solve(const std::function<Vec(const Vec&)>& f, Vec& x, double tol, int max_iter,
                  std::uint64_t restart_seed, int restarts, double restart_box) {
  const std::size_t n = x.size();
  auto attempt = [&](Vec p) -> bool {
    for (int it = 0; it < max_iter; ++it) {
      Vec fx = f(p);
      double r = max_abs(fx);
      if (!std::isfinite(r)) return false;
      if (r < tol) {
        x = p;
        return true;
      }
      Eigen::MatrixXd jac(n, n);
      for (std::size_t j = 0; j < n; ++j) {
        double h = 1e-6 * std::max(1.0, std::abs(p[j]));
        Vec hi = p, lo = p;
        hi[j] += h;
        lo[j] -= h;
        Vec fhi = f(hi), flo = f(lo);
        for (std::size_t i = 0; i < n; ++i) jac(i, j) = (fhi[i] - flo[i]) / (2 * h);
      }
      Eigen::VectorXd rhs(n);
      for (std::size_t i = 0; i < n; ++i) rhs(i) = -fx[i];
      Eigen::VectorXd step = jac.fullPivLu().solve(rhs);
      if (!step.allFinite()) return false;
      // Damping: halve until the residual decreases.
      double lambda = 1.0;
      bool moved = false;
      for (int half = 0; half < 40; ++half) {
        Vec q = p;
        for (std::size_t i = 0; i < n; ++i) q[i] += lambda * step(i);
        double rq = max_abs(f(q));
        if (std::isfinite(rq) && rq < r) {
          p = q;
          moved = true;
          break;
        }
        lambda *= 0.5;
      }
      if (!moved) return false;
    }
    return false;
  };
  if (attempt(x)) return true;
  Sampler sampler(restart_seed);
  for (int k = 0; k < restarts; ++k) {
    Vec start = sampler.point(n, restart_box);
    if (attempt(start)) return true;
  }
  return false;
}

Vec least_squares(const std::vector<Vec>& a_rows, const Vec& b) {
  if (a_rows.empty()) return {};
  const std::size_t rows = a_rows.size(), cols = a_rows[0].size();
  Eigen::MatrixXd a(rows, cols);
  Eigen::VectorXd rhs(rows);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) a(i, j) = a_rows[i][j];
    rhs(i) = b[i];
  }
  Eigen::VectorXd c = a.colPivHouseholderQr().solve(rhs);
  Vec out(cols);
  for (std::size_t j = 0; j < cols; ++j) out[j] = c(j);
  return out;
}

Vec singular_values(const std::vector<Vec>& rows) {
  if (rows.empty()) return {};
  const std::size_t m = rows.size(), n = rows[0].size();
  Eigen::MatrixXd a(m, n);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j) a(i, j) = rows[i][j];
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(a);
  Vec out(svd.singularValues().size());
  for (Eigen::Index i = 0; i < svd.singularValues().size(); ++i)
    out[i] = svd.singularValues()(i);
  return out;
}

RationalRound round_rational(double x, long max_den) {
  RationalRound best{0, 1, std::abs(x)};
  for (long q = 1; q <= max_den; ++q) {
    long p = std::lround(x * q);
    double err = std::abs(x - static_cast<double>(p) / q);
    if (err < best.error - 1e-15) best = RationalRound{p, q, err};
  }
  return best;
}

} // namespace multloop
