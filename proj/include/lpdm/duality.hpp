#pragma once

#include "lpdm/reconstruct.hpp"
#include "lpdm/types.hpp"

namespace lpdm {

/// Bookkeeping for one Theta-level duality relation:
///   Theta(target) = scale * Theta(source).
struct DualityTriple {
  double p_src, q_src, r_src;
  double p_dst, q_dst, r_dst;
  double scale;
};

/// Theta(-q,-p,r) = Theta(p,q,r).
DualityTriple dual_reflect(const ExponentPair& pq, RatioParam r);

/// Theta(pq/(p-q), q, r^{(q-p)/q}) = (q-p)/q * Theta(p,q,r); requires q > 0.
DualityTriple dual_p_transform(const ExponentPair& pq, RatioParam r);

/// Theta(p, pq/(q-p), r^{(p-q)/p}) = (p-q)/p * Theta(p,q,r); requires p < 0.
DualityTriple dual_q_transform(const ExponentPair& pq, RatioParam r);

/// Solution-level power transform w(tau) = const * u(theta)^beta with
/// beta = (q-p)/q, tau = beta theta.  The rescaled profile solves the equation
/// with p replaced by pq/(p-q) (same q); the constant is fixed numerically by
/// matching the measured right side of the transformed equation.
SupportProfile power_transform(const SupportProfile& profile);

/// Polar dual: u~ = (u_th^2+u^2)^{-1/2} against the dual angle
/// d eta / d theta = u~^2 u (u_thth + u), resampled onto a uniform eta grid.
/// The result solves the equation with exponents (-q,-p).
SupportProfile polar_dual(const SupportProfile& profile);

}  // namespace lpdm
