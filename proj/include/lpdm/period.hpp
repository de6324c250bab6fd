#pragma once

#include "lpdm/types.hpp"

namespace lpdm {

/// First integral constant E of the arc with ratio r:
///   p,q != 0 : (u_th^2+u^2)^{q/2} - (q/p) u^p = E
///   p  == 0 : (u_th^2+u^2)^{q/2} - q log u   = E
///   q  == 0 : log(u_th^2+u^2) - (2/p) u^p    = E
double first_integral(const ExponentPair& pq, RatioParam r);

/// Arc endpoints: u_- in closed form, u_+ = r u_-.
ArcEndpoints endpoint_u_minus(const ExponentPair& pq, RatioParam r);

/// Integrand I(p,q,r,x) under the square root of Theta = int_1^r dx / sqrt(I),
/// in the normalized variable x = u/u_-.  Nonnegative on [1,r], zero at both
/// endpoints; evaluated anchored at the nearer endpoint so the relative
/// accuracy does not degrade where I -> 0.
double integrand_raw(const ExponentPair& pq, RatioParam r, double x);

/// d/dx of I at the endpoints (closed form; used to regularize endpoint limits).
double integrand_raw_dx_at_1(const ExponentPair& pq, RatioParam r);
double integrand_raw_dx_at_r(const ExponentPair& pq, RatioParam r);

/// Transformed integrand I~(p,q,beta,r,z) on z in (-1,1), obtained from the
/// substitution x^beta = v = (r^beta-1)/2 z + (r^beta+1)/2.  Strictly positive
/// on the open interval and vanishing like (1-z^2) at the ends.
double integrand_transformed(const ExponentPair& pq, double beta, RatioParam r, double z);

/// Period function Theta(p,q,r).  Strategy:
///   (a) exact constants at the three exceptional pairs,
///   (b) q <= 0 reduced through Theta(-q,-p,r) = Theta(p,q,r),
///   (c) series in (r-1) below cfg.near_one_switch,
///   (d) Gauss-Chebyshev quadrature on the smooth factor of the transformed
///       integrand, doubling nodes until the successive difference is below
///       cfg.rel_tol * |Theta|.
PeriodValue theta(const ExponentPair& pq, RatioParam r, const QuadratureConfig& cfg = {});

/// Limit of Theta as r -> 1+:  pi / sqrt(q-p).
double theta_limit_r1(const ExponentPair& pq);

/// Limit of Theta as r -> infinity (piecewise by the sign pattern of p,q).
double theta_limit_rinf(const ExponentPair& pq);

namespace detail {

// (e^{s a} - 1) / (e^{s b} - 1) for 0 <= a <= b, overflow-safe for any s.
double expm1_ratio(double s, double la, double lb);

// Substitution exponent used by the quadrature path.  (2q-p)/3 unless that
// choice is degenerate or would compress the map at this r, in which case 1.
double beta_for_quadrature(const ExponentPair& pq, double r);

// log-bracket argument: I = x^2 expm1(arg), lx = log x in [0, log r] and
// dl = lx - lr supplied stably by the caller.
double integrand_log_arg(const ExponentPair& pq, double lr, double lx, double dl);

// Quadrature core with an explicit substitution exponent.
PeriodValue theta_quadrature(const ExponentPair& pq, double r, double beta,
                             const QuadratureConfig& cfg);

}  // namespace detail

}  // namespace lpdm
