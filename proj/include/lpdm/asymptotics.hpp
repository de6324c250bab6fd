#pragma once

#include "lpdm/types.hpp"

namespace lpdm {

/// Two-term expansion of Theta about r = 1:
///   Theta = c0 + c2 (r-1)^2 + o((r-1)^2),
/// with c0 = pi/sqrt(q-p) and c2 = pi (q^2 - pq + p^2 + 3p - 3q) / (96 sqrt(q-p)).
struct NearOneSeries {
  double c0;
  double c2;

  double eval(double r) const {
    const double d = r - 1.0;
    return c0 + c2 * d * d;
  }
};

NearOneSeries series_near_one(const ExponentPair& pq);

enum class TailKind { LogTail, PowerTail };

/// Leading behavior of Theta as r -> infinity:
///   p = 0,  q > 0     : pi/2 + coefficient / log r        (LogTail)
///   -1 < p < 0, q > -p: pi/2 + coefficient * r^p          (PowerTail)
struct LargeRTail {
  TailKind kind;
  double constant;     // pi/2 for both covered regimes
  double coefficient;
  double exponent;     // p for PowerTail, unused for LogTail

  double eval(double r) const;
};

LargeRTail tail_large_r(const ExponentPair& pq);

/// p^2 - pq + q^2 + 3p - 3q: zero on the ellipse separating locally increasing
/// from locally decreasing behavior of Theta at r = 1+.
double phi_discriminant(const ExponentPair& pq);

/// Residual of the transformed integrand against its first-order expansion at
/// r = 1 + delta:
///   I~(p,q,beta,1+delta,z) - (q-p)(1-z^2) [1 + (z/2)(beta - (2q-p)/3) delta].
/// The result is O(delta^2).
double integrand_expansion_check(const ExponentPair& pq, double beta, double z, double delta);

namespace detail {
// int_0^1 (y^p - 1) / (1-y^2)^{3/2} dy for -1 < p < 0, by graded quadrature
// after the substitution y = 1 - s^2.
double tail_coefficient_integral(double p);
}

}  // namespace lpdm
