#pragma once

#include <array>
#include <vector>

#include "lpdm/types.hpp"

namespace lpdm {

/// Sampled support function on a uniform angle grid: one monotone arc, or a
/// full closed/immersed profile assembled from arcs.  u_theta is carried
/// alongside u so downstream consumers never differentiate numerically.
struct SupportProfile {
  std::vector<double> thetas;
  std::vector<double> u;
  std::vector<double> u_theta;
  ExponentPair pq;
  double arc_theta = 0.0;  // total turning of one monotone arc
  int sym_n = 0;           // winding number, 0 when not assembled
  int sym_m = 0;           // number of maxima, 0 when not assembled

  std::size_t size() const { return thetas.size(); }
};

struct PlanarCurve {
  std::vector<std::array<double, 2>> points;
  bool closed = false;
  double total_curvature = 0.0;
  int sym_n = 0;
  int sym_m = 0;
};

enum class ClosedFamily { Translate12, Polar2m1, Ellipse2 };

/// Parameters of the three explicit solution families:
///   Translate12: u = 1 + lambda cos(th - th0)                       for (1,2)
///   Polar2m1:    u = (sqrt(1 - mu^2 sin^2) - mu cos)/(1 - mu^2)     for (-2,-1)
///   Ellipse2:    u = sqrt(lambda^2 cos^2 + lambda^-2 sin^2)         for (-2,2)
struct ClosedFormParams {
  ClosedFamily family;
  double shape;   // lambda or mu
  double theta0 = 0.0;
};

/// Integrate one monotone arc from u_- up to u_+ = r u_-, resampled onto a
/// uniform theta grid of `samples` intervals.  u_theta vanishes exactly at
/// both endpoints.
SupportProfile integrate_arc(const ExponentPair& pq, RatioParam r, int samples = 2048);

/// Build the full profile over [0, 2 m arc_theta] by even reflection of the
/// arc about each endpoint and m-fold repetition.  Requires
/// |arc_theta - pi n / m| < 1e-8 and gcd(m, n) = 1.
SupportProfile assemble_closed(const SupportProfile& arc, int n, int m);

/// x(th) = u (cos th, sin th) + u_th (-sin th, cos th); total_curvature is the
/// turning measured from the emitted points.
PlanarCurve support_to_curve(const SupportProfile& profile);

/// Exact sampled profile of one of the three closed-form families over
/// [0, span] inclusive.
SupportProfile closed_form(const ClosedFormParams& params, int samples = 2048,
                           double span = 6.283185307179586476925286766559);

/// Max interior deviation of u^{1-p}(u_th^2+u^2)^{(q-2)/2}(u_thth + u) from 1,
/// with u_thth reconstructed from the first integral of the profile (its E is
/// estimated from the samples) rather than by numerical differentiation.
double ode_residual(const SupportProfile& profile);

namespace detail {
// E estimated per sample from the first-integral relation; median over samples.
double profile_first_integral(const SupportProfile& profile);
// u_thth from the first integral at (u, E).
double u_thth_from_first_integral(const ExponentPair& pq, double E, double u);
}

}  // namespace lpdm
