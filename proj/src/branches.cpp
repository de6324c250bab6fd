#include "lpdm/branches.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "lpdm/classify.hpp"
#include "lpdm/period.hpp"

namespace lpdm {

namespace {

constexpr double kPi = std::numbers::pi;

double theta_at(const ExponentPair& pq, double r, const QuadratureConfig& cfg) {
  return theta(pq, RatioParam(r), cfg).theta;
}

}  // namespace

MonotoneVerdict monotone_class(const ExponentPair& pq) {
  if (!pq.in_domain_D()) throw DomainError("monotone_class: requires p < q");
  const double p = pq.p, q = pq.q;
  const bool exc = is_exceptional_pair(pq);
  if (p <= -2.0 && q >= 2.0 && !exc)
    return {MonotoneDir::IncreasingInR, MonotoneRegion::I};
  if (q >= 2.0 && p >= 2.0 * q / (2.0 + q) && !exc)
    return {MonotoneDir::IncreasingInR, MonotoneRegion::II};
  if (p <= -2.0 && q <= 2.0 * p / (2.0 - p) && !exc)
    return {MonotoneDir::IncreasingInR, MonotoneRegion::III};
  if (q >= 2.0 * p / (2.0 - p) && p >= -2.0 && q <= 2.0 && !exc)
    return {MonotoneDir::DecreasingInR, MonotoneRegion::IV};
  return {MonotoneDir::Unknown, MonotoneRegion::None};
}

double find_root(const ExponentPair& pq, double theta_target, double r_lo, double r_hi,
                 const QuadratureConfig& cfg) {
  if (!(r_lo > 1.0 && r_hi > r_lo)) throw DomainError("find_root: need 1 < r_lo < r_hi");
  double f_lo = theta_at(pq, r_lo, cfg) - theta_target;
  double f_hi = theta_at(pq, r_hi, cfg) - theta_target;
  if (f_lo == 0.0) return r_lo;
  if (f_hi == 0.0) return r_hi;
  if (f_lo * f_hi > 0.0) throw BracketError("find_root: no sign change on bracket");

  double lo = r_lo, hi = r_hi;
  while (hi - lo > 1e-12 * (0.5 * (hi + lo))) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    const double f_mid = theta_at(pq, mid, cfg) - theta_target;
    if (f_mid == 0.0) return mid;
    if (f_lo * f_mid < 0.0) {
      hi = mid;
    } else {
      lo = mid;
      f_lo = f_mid;
    }
  }
  const double root = 0.5 * (lo + hi);
  const double resid = std::abs(theta_at(pq, root, cfg) - theta_target);
  if (!(resid < 1e-10))
    throw ConvergenceError("find_root: residual " + std::to_string(resid) +
                           " exceeds 1e-10 at the bisection limit");
  return root;
}

std::vector<int> admissible_m(const ExponentPair& pq, int n) {
  if (!pq.in_domain_D()) throw DomainError("admissible_m: requires p < q");
  if (n < 1) throw ParamError("admissible_m: n must be positive");
  const double a = std::sqrt(pq.q - pq.p);
  const double b = xi(pq);
  const double lo = std::min(a, b) * n, hi = std::max(a, b) * n;
  std::vector<int> out;
  for (int m = static_cast<int>(std::floor(lo)) + 1; m < hi; ++m) {
    if (m <= 0 || !(m > lo)) continue;
    if (std::gcd(m, n) == 1) out.push_back(m);
  }
  return out;
}

namespace {

SolutionBranch make_branch(const ExponentPair& pq, int n, int m, double r_root,
                           bool certified, const QuadratureConfig& cfg) {
  const double target = kPi * n / m;
  return {pq, n, m, r_root, target, std::abs(theta_at(pq, r_root, cfg) - target), certified};
}

// One certified root by expanding the upper bracket end until the sign flips.
SolutionBranch monotone_root(const ExponentPair& pq, int n, int m,
                             const QuadratureConfig& cfg) {
  const double target = kPi * n / m;
  const double lo = 1.0 + 1e-9;
  const double f_lo = theta_at(pq, lo, cfg) - target;
  double hi = 2.0;
  for (; hi < 1e13; hi *= 4.0) {
    const double f_hi = theta_at(pq, hi, cfg) - target;
    if (f_lo * f_hi <= 0.0) break;
  }
  if (hi >= 1e13)
    throw BracketError("enumerate_branches: monotone bracket never changed sign");
  return make_branch(pq, n, m, find_root(pq, target, lo, hi, cfg), true, cfg);
}

std::vector<SolutionBranch> scan_roots(const ExponentPair& pq, int n, int m,
                                       const QuadratureConfig& cfg,
                                       const BranchScanConfig& scan) {
  const double target = kPi * n / m;
  // Far out on the grid the integrand only supports algebraic convergence, so
  // the sign scan runs at a relaxed tolerance; refinement near a detected
  // crossing uses the caller's config.
  QuadratureConfig loose = cfg;
  loose.rel_tol = std::max(cfg.rel_tol, 1e-9);
  std::vector<SolutionBranch> found;
  // Log-spaced in r-1 so the near-1 range is covered densely.
  const double d_lo = std::log(1e-4), d_hi = std::log(scan.r_max - 1.0);
  const double step = std::exp((d_hi - d_lo) / (scan.scan_points - 1));
  double prev_r = 0.0, prev_f = 0.0;
  for (int i = 0; i < scan.scan_points; ++i) {
    const double r = 1.0 + std::exp(d_lo + (d_hi - d_lo) * i / (scan.scan_points - 1));
    const double f = theta_at(pq, r, loose) - target;
    if (i > 0 && (prev_f * f < 0.0 || f == 0.0)) {
      double root;
      try {
        root = find_root(pq, target, prev_r, r, cfg);
      } catch (const BracketError&) {
        // A grid point sat on the root closer than the scan tolerance; widen
        // the bracket by one grid step each way and retry.
        root = find_root(pq, target, 1.0 + (prev_r - 1.0) / step,
                         std::min(1.0 + (r - 1.0) * step, scan.r_max), cfg);
      }
      found.push_back(make_branch(pq, n, m, root, false, cfg));
    }
    prev_r = r;
    prev_f = f;
  }
  return found;
}

}  // namespace

std::vector<SolutionBranch> enumerate_branches(const ExponentPair& pq, int n,
                                               const QuadratureConfig& cfg,
                                               const BranchScanConfig& scan) {
  if (!pq.in_domain_D()) throw DomainError("enumerate_branches: requires p < q");
  if (n < 1) throw ParamError("enumerate_branches: n must be positive");
  if (is_exceptional_pair(pq))
    throw ExceptionalFamilyError(
        "enumerate_branches: (p,q) has constant period and a continuum of solutions");

  const MonotoneVerdict verdict = monotone_class(pq);
  std::vector<int> targets = admissible_m(pq, n);
  if (verdict.direction == MonotoneDir::Unknown && scan.probe_boundary_targets) {
    const double a = std::sqrt(pq.q - pq.p), b = xi(pq);
    for (double bound : {std::min(a, b), std::max(a, b)}) {
      const double mb = bound * n;
      const int m = static_cast<int>(std::lround(mb));
      if (m >= 1 && std::abs(mb - m) < 1e-9 * n && std::gcd(m, n) == 1 &&
          std::find(targets.begin(), targets.end(), m) == targets.end())
        targets.push_back(m);
    }
    std::sort(targets.begin(), targets.end());
  }

  std::vector<std::vector<SolutionBranch>> slots(targets.size());
  std::exception_ptr err;
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
  for (int ti = 0; ti < static_cast<int>(targets.size()); ++ti) {
    try {
      if (verdict.direction != MonotoneDir::Unknown)
        slots[ti] = {monotone_root(pq, n, targets[ti], cfg)};
      else
        slots[ti] = scan_roots(pq, n, targets[ti], cfg, scan);
    } catch (...) {
#ifdef _OPENMP
#pragma omp critical
#endif
      if (!err) err = std::current_exception();
    }
  }
  if (err) std::rethrow_exception(err);

  std::vector<SolutionBranch> out;
  for (auto& s : slots)
    for (auto& b : s) out.push_back(b);
  std::sort(out.begin(), out.end(), [](const SolutionBranch& a, const SolutionBranch& b) {
    return a.m != b.m ? a.m < b.m : a.r_root < b.r_root;
  });
  return out;
}

}  // namespace lpdm
