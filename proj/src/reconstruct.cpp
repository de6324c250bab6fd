#include "lpdm/reconstruct.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>

#include "lpdm/period.hpp"

namespace lpdm {

namespace {

constexpr double kPi = std::numbers::pi;

double signed_angle(const std::array<double, 2>& a, const std::array<double, 2>& b) {
  return std::atan2(a[0] * b[1] - a[1] * b[0], a[0] * b[0] + a[1] * b[1]);
}

// theta(phi) on [0, pi/2] for the substitution x = 1 + (r-1) sin^2(phi),
// which regularizes the square-root vanishing of the integrand at both arc
// endpoints at once.
struct ArcQuadrature {
  const ExponentPair& pq;
  double r, lr, dI1, dIr;

  double speed(double phi) const {  // d theta / d phi = 2 / sqrt(hbar)
    double hbar;
    if (phi <= 0.0)
      hbar = dI1 / (r - 1.0);
    else if (phi >= kPi / 2.0)
      hbar = -dIr / (r - 1.0);
    else {
      const double s2 = std::sin(phi) * std::sin(phi);
      const double c2 = std::cos(phi) * std::cos(phi);
      const double xm1 = (r - 1.0) * s2;   // x - 1
      const double rmx = (r - 1.0) * c2;   // r - x
      const double lx = std::log1p(xm1);
      const double dl = std::log1p(-rmx / r);
      const double x = 1.0 + xm1;
      const double I = x * x * std::expm1(detail::integrand_log_arg(pq, lr, lx, dl));
      hbar = I / ((r - 1.0) * (r - 1.0) * s2 * c2);
    }
    if (!(hbar > 0.0))
      throw NumericalError("integrate_arc: integrand lost positivity along the arc");
    return 2.0 / std::sqrt(hbar);
  }
};

}  // namespace

SupportProfile integrate_arc(const ExponentPair& pq, RatioParam r, int samples) {
  if (!pq.in_domain_D()) throw DomainError("integrate_arc: requires p < q");
  if (samples < 8) throw ParamError("integrate_arc: need at least 8 samples");

  const double rv = r.value;
  const ArcQuadrature quad{pq, rv, std::log(rv), integrand_raw_dx_at_1(pq, r),
                           integrand_raw_dx_at_r(pq, r)};
  const auto [um, up] = endpoint_u_minus(pq, r);

  // Cumulative Simpson for theta(phi) on a grid twice as fine as the output.
  const int n = 2 * samples;
  const double h = kPi / 2.0 / n;
  std::vector<double> phi(n + 1), th(n + 1), spd(n + 1);
  for (int j = 0; j <= n; ++j) {
    phi[j] = kPi / 2.0 * j / n;
    spd[j] = quad.speed(phi[j]);
  }
  th[0] = 0.0;
  for (int j = 0; j < n; ++j) {
    const double mid = quad.speed(phi[j] + 0.5 * h);
    th[j + 1] = th[j] + h / 6.0 * (spd[j] + 4.0 * mid + spd[j + 1]);
  }
  const double arc_theta = th[n];

  SupportProfile out{{}, {}, {}, pq, arc_theta, 0, 0};
  out.thetas.resize(samples + 1);
  out.u.resize(samples + 1);
  out.u_theta.resize(samples + 1);

  // Invert theta(phi) by cubic Hermite on each bracket (theta' = spd > 0).
  std::size_t j = 0;
  for (int i = 0; i <= samples; ++i) {
    const double target = arc_theta * i / samples;
    out.thetas[i] = target;
    if (i == 0 || i == samples) {
      out.u[i] = (i == 0) ? um : up;
      out.u_theta[i] = 0.0;
      continue;
    }
    while (j + 1 < th.size() && th[j + 1] < target) ++j;
    const double t0 = th[j], t1 = th[j + 1], d0 = spd[j] * h, d1 = spd[j + 1] * h;
    double t = (target - t0) / (t1 - t0);
    for (int it = 0; it < 8; ++it) {
      const double h00 = (1 + 2 * t) * (1 - t) * (1 - t), h10 = t * (1 - t) * (1 - t);
      const double h01 = t * t * (3 - 2 * t), h11 = t * t * (t - 1);
      const double val = h00 * t0 + h10 * d0 + h01 * t1 + h11 * d1 - target;
      const double dp00 = 6 * t * (t - 1), dp10 = (1 - t) * (1 - 3 * t);
      const double dp01 = 6 * t * (1 - t), dp11 = t * (3 * t - 2);
      const double der = dp00 * t0 + dp10 * d0 + dp01 * t1 + dp11 * d1;
      t -= val / der;
      t = std::clamp(t, 0.0, 1.0);
    }
    const double ph = phi[j] + t * h;
    const double s2 = std::sin(ph) * std::sin(ph);
    const double x = 1.0 + (rv - 1.0) * s2;
    const double I = integrand_raw(pq, r, std::min(x, rv));
    out.u[i] = um * x;
    out.u_theta[i] = um * std::sqrt(std::max(I, 0.0));
  }

  const double res = ode_residual(out);
  if (!(res < 1e-6))
    throw NumericalError("integrate_arc: reconstructed arc violates the equation, residual " +
                         std::to_string(res));
  return out;
}

SupportProfile assemble_closed(const SupportProfile& arc, int n, int m) {
  if (n < 1 || m < 1 || std::gcd(m, n) != 1)
    throw ParamError("assemble_closed: need positive coprime (m, n)");
  const double target = kPi * n / m;
  if (!(std::abs(arc.arc_theta - target) < 1e-8))
    throw PeriodMismatchError("assemble_closed: arc turning differs from pi n / m");
  const std::size_t S = arc.size() - 1;
  if (S < 2) throw ParamError("assemble_closed: arc too coarse");
  if (std::abs(arc.u_theta.front()) > 1e-8 || std::abs(arc.u_theta.back()) > 1e-8)
    throw PeriodMismatchError("assemble_closed: arc endpoints are not critical points");

  const double dth = arc.arc_theta / S;
  const std::size_t total = 2 * S * m + 1;
  SupportProfile out{{}, {}, {}, arc.pq, arc.arc_theta, n, m};
  out.thetas.resize(total);
  out.u.resize(total);
  out.u_theta.resize(total);
  for (std::size_t jj = 0; jj < total; ++jj) {
    const std::size_t pos = jj % (2 * S);
    const std::size_t i = pos <= S ? pos : 2 * S - pos;
    out.thetas[jj] = dth * jj;
    out.u[jj] = arc.u[i];
    out.u_theta[jj] = pos <= S ? arc.u_theta[i] : -arc.u_theta[i];
  }
  return out;
}

PlanarCurve support_to_curve(const SupportProfile& profile) {
  const std::size_t n = profile.size();
  if (n < 3) throw ParamError("support_to_curve: profile too small");

  const double E = detail::profile_first_integral(profile);
  for (std::size_t i = 0; i < n; ++i) {
    const double utt = detail::u_thth_from_first_integral(profile.pq, E, profile.u[i]);
    if (!std::isfinite(utt) || !(utt + profile.u[i] > 0.0))
      throw ConvexityError("support_to_curve: u_thth + u <= 0, profile not strictly convex");
  }

  PlanarCurve curve;
  curve.sym_n = profile.sym_n;
  curve.sym_m = profile.sym_m;
  curve.points.resize(n);
  double max_abs = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double c = std::cos(profile.thetas[i]), s = std::sin(profile.thetas[i]);
    curve.points[i] = {profile.u[i] * c - profile.u_theta[i] * s,
                       profile.u[i] * s + profile.u_theta[i] * c};
    max_abs = std::max({max_abs, std::abs(curve.points[i][0]), std::abs(curve.points[i][1])});
  }

  const auto& first = curve.points.front();
  const auto& last = curve.points.back();
  const double gap = std::hypot(first[0] - last[0], first[1] - last[1]);
  curve.closed = gap < 1e-6 * max_abs;

  // Total turning from the emitted polyline; for a closed traversal the
  // near-duplicate final point is dropped and the fan wraps around.
  const std::size_t m = curve.closed ? n - 1 : n;
  std::vector<std::array<double, 2>> edge(curve.closed ? m : m - 1);
  for (std::size_t i = 0; i + 1 < m; ++i)
    edge[i] = {curve.points[i + 1][0] - curve.points[i][0],
               curve.points[i + 1][1] - curve.points[i][1]};
  if (curve.closed)
    edge[m - 1] = {curve.points[0][0] - curve.points[m - 1][0],
                   curve.points[0][1] - curve.points[m - 1][1]};
  double turning = 0.0;
  for (std::size_t i = 1; i < edge.size(); ++i) turning += signed_angle(edge[i - 1], edge[i]);
  if (curve.closed) turning += signed_angle(edge.back(), edge.front());
  curve.total_curvature = turning;
  return curve;
}

SupportProfile closed_form(const ClosedFormParams& params, int samples, double span) {
  if (samples < 2) throw ParamError("closed_form: need at least 2 samples");
  if (!(params.theta0 >= 0.0 && params.theta0 < 2.0 * kPi))
    throw ParamError("closed_form: theta0 outside [0, 2 pi)");
  ExponentPair pq{0.0, 1.0};
  switch (params.family) {
    case ClosedFamily::Translate12:
      if (!(params.shape >= 0.0)) throw ParamError("closed_form: lambda must be >= 0");
      pq = ExponentPair{1.0, 2.0};
      break;
    case ClosedFamily::Polar2m1:
      if (!(params.shape >= 0.0 && params.shape < 1.0))
        throw ParamError("closed_form: mu must be in [0, 1)");
      pq = ExponentPair{-2.0, -1.0};
      break;
    case ClosedFamily::Ellipse2:
      if (!(params.shape > 0.0)) throw ParamError("closed_form: lambda must be > 0");
      pq = ExponentPair{-2.0, 2.0};
      break;
  }

  SupportProfile out{{}, {}, {}, pq, span, 0, 0};
  out.thetas.resize(samples + 1);
  out.u.resize(samples + 1);
  out.u_theta.resize(samples + 1);
  const double a = params.shape;
  for (int i = 0; i <= samples; ++i) {
    const double th = span * i / samples;
    const double psi = th - params.theta0;
    out.thetas[i] = th;
    switch (params.family) {
      case ClosedFamily::Translate12:
        out.u[i] = 1.0 + a * std::cos(psi);
        out.u_theta[i] = -a * std::sin(psi);
        break;
      case ClosedFamily::Polar2m1: {
        const double root = std::sqrt(1.0 - a * a * std::sin(psi) * std::sin(psi));
        out.u[i] = (root - a * std::cos(psi)) / (1.0 - a * a);
        out.u_theta[i] =
            (a * std::sin(psi) - a * a * std::sin(psi) * std::cos(psi) / root) / (1.0 - a * a);
        break;
      }
      case ClosedFamily::Ellipse2: {
        const double la2 = a * a, la2i = 1.0 / (a * a);
        const double c = std::cos(psi), s = std::sin(psi);
        out.u[i] = std::sqrt(la2 * c * c + la2i * s * s);
        out.u_theta[i] = (la2i - la2) * s * c / out.u[i];
        break;
      }
    }
  }
  return out;
}

namespace detail {

double profile_first_integral(const SupportProfile& profile) {
  const double p = profile.pq.p, q = profile.pq.q;
  std::vector<double> es(profile.size());
  for (std::size_t i = 0; i < profile.size(); ++i) {
    const double u = profile.u[i], ut = profile.u_theta[i];
    const double speed2 = ut * ut + u * u;
    if (q == 0.0)
      es[i] = std::log(speed2) - 2.0 / p * std::pow(u, p);
    else if (p == 0.0)
      es[i] = std::pow(speed2, q / 2.0) - q * std::log(u);
    else
      es[i] = std::pow(speed2, q / 2.0) - q / p * std::pow(u, p);
  }
  std::nth_element(es.begin(), es.begin() + es.size() / 2, es.end());
  return es[es.size() / 2];
}

double u_thth_from_first_integral(const ExponentPair& pq, double E, double u) {
  const double p = pq.p, q = pq.q;
  if (q == 0.0) return std::pow(u, p - 1.0) * std::exp(E + 2.0 / p * std::pow(u, p)) - u;
  const double A = (p == 0.0) ? E + q * std::log(u) : E + q / p * std::pow(u, p);
  if (!(A > 0.0)) return std::numeric_limits<double>::infinity();
  const double speed_pow = std::pow(A, (2.0 - q) / q);  // (u_th^2+u^2)^{(2-q)/2}
  return (p == 0.0 ? speed_pow / u : std::pow(u, p - 1.0) * speed_pow) - u;
}

}  // namespace detail

double ode_residual(const SupportProfile& profile) {
  const std::size_t n = profile.size();
  if (n < 3) throw ParamError("ode_residual: profile too small");
  const double p = profile.pq.p, q = profile.pq.q;

  const auto [mn, mx] = std::minmax_element(profile.u.begin(), profile.u.end());
  if (*mx - *mn <= 1e-12 * std::max(1.0, *mx)) {
    // Constant profile: u_thth = 0 and the equation reduces to u^{q-p} = 1.
    double worst = 0.0;
    for (double u : profile.u) worst = std::max(worst, std::abs(std::pow(u, q - p) - 1.0));
    return worst;
  }

  const double E = detail::profile_first_integral(profile);
  double worst = 0.0;
  for (std::size_t i = 1; i + 1 < n; ++i) {
    const double u = profile.u[i], ut = profile.u_theta[i];
    const double utt = detail::u_thth_from_first_integral(profile.pq, E, u);
    if (!std::isfinite(utt)) return std::numeric_limits<double>::infinity();
    const double speed2 = ut * ut + u * u;
    const double lhs =
        std::pow(u, 1.0 - p) * std::pow(speed2, (q - 2.0) / 2.0) * (utt + u);
    worst = std::max(worst, std::abs(lhs - 1.0));
  }
  return worst;
}

}  // namespace lpdm
