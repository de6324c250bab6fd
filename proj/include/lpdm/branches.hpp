#pragma once

#include <vector>

#include "lpdm/types.hpp"

namespace lpdm {

enum class MonotoneDir { IncreasingInR, DecreasingInR, Unknown };
enum class MonotoneRegion { I, II, III, IV, None };

/// Monotonicity-in-r verdict from the four certified regions; Unknown outside.
struct MonotoneVerdict {
  MonotoneDir direction;
  MonotoneRegion region_case;
};

MonotoneVerdict monotone_class(const ExponentPair& pq);

/// One located root r of Theta(p,q,r) = pi n / m.
struct SolutionBranch {
  ExponentPair pq;
  int n;  // winding number (total curvature 2 pi n)
  int m;  // number of maxima
  double r_root;
  double theta_target;  // pi n / m
  double residual;      // |Theta(r_root) - theta_target|
  bool certified;       // found under a monotone verdict
};

/// Bracketed bisection for Theta(p,q,r) = theta_target on [r_lo, r_hi].
double find_root(const ExponentPair& pq, double theta_target, double r_lo, double r_hi,
                 const QuadratureConfig& cfg = {});

/// Integers m coprime to n with m/n strictly between sqrt(q-p) and Xi(p,q).
std::vector<int> admissible_m(const ExponentPair& pq, int n);

struct BranchScanConfig {
  double r_max = 1e6;
  int scan_points = 512;
  // In non-monotone regions also probe targets sitting exactly on a limit
  // value; roots there can exist when the limit is approached from the far
  // side, and are reported uncertified.
  bool probe_boundary_targets = true;
};

/// All roots of Theta = pi n / m over admissible m.  Monotone regions get one
/// certified root per admissible m by bracketing; elsewhere a log-spaced scan
/// over r locates sign changes, reported uncertified.
std::vector<SolutionBranch> enumerate_branches(const ExponentPair& pq, int n,
                                               const QuadratureConfig& cfg = {},
                                               const BranchScanConfig& scan = {});

}  // namespace lpdm
