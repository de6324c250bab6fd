#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "lpdm/types.hpp"

namespace lpdm {

enum class Qualifier { Exact, AtLeast, UniqueUpToScaling, ContinuumFamily, ExactWithPiPeriodicOpen };

const char* qualifier_name(Qualifier q);

/// Classification verdict for the embedded solutions at a given (p,q).
/// `count` is the number of certain embedded solutions including the constant
/// one (the exact count for Exact, a lower bound for AtLeast, 1 for the
/// remaining qualifiers).
struct ClassificationReport {
  std::string_view case_path;  // points to static storage
  Qualifier qualifier;
  int count;
  std::vector<int> admissible_k;  // integers strictly between sqrt(q-p) and Xi
  double xi;                      // NaN when q <= p
  int k_bucket;                   // k with (k-1)^2 < q-p <= k^2; 0 when q <= p
};

/// Xi(p,q): 2(q-p)/q for 0 <= p < q, 2 for p < 0 < q, 2(p-q)/p for p < q <= 0.
double xi(const ExponentPair& pq);

/// Total classification of the embedded solutions; accepts any finite (p,q).
ClassificationReport classify_embedded(const ExponentPair& pq);

struct ImmersedVerdict {
  bool constants_only;
  bool continuum_family;
  bool admissible;        // an (n,m) immersed solution exists
  bool unique_certified;  // exactly one up to rotation and scaling
  std::string note;
};

/// Immersed classification for a curve with total curvature 2 pi n and m
/// maxima, gcd(m,n) = 1.
ImmersedVerdict classify_immersed(const ExponentPair& pq, int m, int n);

struct Lemma74Verdict {
  bool small_ratio;    // p(r^q-1)/(q(r^p-1)) <= r^2, selecting the first kernel
  double integrand;    // I(p, p+3, r, x)
  double bound;        // J1 or J2 at (r,x)
  bool strict_holds;   // integrand < bound
};

/// Comparison bound check on the line q = p + 3 for -1 < p < (sqrt(33)-3)/2.
Lemma74Verdict lemma74_bound_check(double p, RatioParam r, double x);

/// int_1^r dx / sqrt(J_i(r,x)) for the two comparison kernels (analytically
/// pi/2), evaluated numerically; which = 1 or 2.
double lemma74_kernel_integral(int which, RatioParam r);

struct CrosscheckReport {
  ClassificationReport report;
  int branch_count;
  bool pass;
};

/// Compare classify_embedded's exact count against numerical enumeration;
/// throws DiscrepancyError on mismatch.
CrosscheckReport crosscheck_counts(const ExponentPair& pq, const QuadratureConfig& cfg = {});

}  // namespace lpdm
