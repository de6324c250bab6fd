#include "lpdm/duality.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace lpdm {

namespace {

// Cumulative integral of uniformly sampled f over its grid, 4th order
// (integrates the local interpolating cubic across each interval).
std::vector<double> cumulative_integral(const std::vector<double>& f, double h) {
  const std::size_t n = f.size();
  std::vector<double> out(n, 0.0);
  if (n < 4) throw ParamError("cumulative_integral: too few samples");
  for (std::size_t i = 0; i + 1 < n; ++i) {
    double inc;
    if (i == 0)
      inc = h / 24.0 * (9.0 * f[0] + 19.0 * f[1] - 5.0 * f[2] + f[3]);
    else if (i + 2 >= n)
      inc = h / 24.0 * (9.0 * f[n - 1] + 19.0 * f[n - 2] - 5.0 * f[n - 3] + f[n - 4]);
    else
      inc = h / 24.0 * (-f[i - 1] + 13.0 * f[i] + 13.0 * f[i + 1] - f[i + 2]);
    out[i + 1] = out[i] + inc;
  }
  return out;
}

double hermite(double t, double y0, double y1, double d0, double d1, double h) {
  const double h00 = (1 + 2 * t) * (1 - t) * (1 - t), h10 = t * (1 - t) * (1 - t);
  const double h01 = t * t * (3 - 2 * t), h11 = t * t * (t - 1);
  return h00 * y0 + h10 * h * d0 + h01 * y1 + h11 * h * d1;
}

double hermite_deriv(double t, double y0, double y1, double d0, double d1, double h) {
  const double dp00 = 6 * t * (t - 1), dp10 = (1 - t) * (1 - 3 * t);
  const double dp01 = 6 * t * (1 - t), dp11 = t * (3 * t - 2);
  return (dp00 * y0 + dp01 * y1) / h + dp10 * d0 + dp11 * d1;
}

}  // namespace

DualityTriple dual_reflect(const ExponentPair& pq, RatioParam r) {
  if (!pq.in_domain_D()) throw DomainError("dual_reflect: requires p < q");
  return {pq.p, pq.q, r.value, -pq.q, -pq.p, r.value, 1.0};
}

DualityTriple dual_p_transform(const ExponentPair& pq, RatioParam r) {
  if (!pq.in_domain_D()) throw DomainError("dual_p_transform: requires p < q");
  if (!(pq.q > 0.0)) throw DomainError("dual_p_transform: requires q > 0");
  const double p = pq.p, q = pq.q;
  return {p, q, r.value, p * q / (p - q), q, std::pow(r.value, (q - p) / q), (q - p) / q};
}

DualityTriple dual_q_transform(const ExponentPair& pq, RatioParam r) {
  if (!pq.in_domain_D()) throw DomainError("dual_q_transform: requires p < q");
  if (!(pq.p < 0.0)) throw DomainError("dual_q_transform: requires p < 0");
  const double p = pq.p, q = pq.q;
  return {p, q, r.value, p, p * q / (q - p), std::pow(r.value, (p - q) / p), (p - q) / p};
}

SupportProfile power_transform(const SupportProfile& profile) {
  const double p = profile.pq.p, q = profile.pq.q;
  if (!profile.pq.in_domain_D()) throw DomainError("power_transform: requires p < q");
  if (!(q > 0.0)) throw DomainError("power_transform: requires q > 0");
  if (p == 0.0) return profile;  // fixed point: pq/(p-q) = 0 and beta = 1

  const double beta = (q - p) / q;
  const double E = detail::profile_first_integral(profile);
  const double rhs = p / (p - q) * E;  // right side of the transformed equation
  if (!(rhs > 0.0))
    throw NumericalError("power_transform: transformed equation has nonpositive right side");
  const double sigma = std::pow(rhs, -(q - p) / (q * q));

  SupportProfile out{{}, {}, {}, ExponentPair{p * q / (p - q), q},
                     beta * profile.arc_theta, profile.sym_n, profile.sym_m};
  const std::size_t n = profile.size();
  out.thetas.resize(n);
  out.u.resize(n);
  out.u_theta.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    out.thetas[i] = beta * profile.thetas[i];
    out.u[i] = sigma * std::pow(profile.u[i], beta);
    out.u_theta[i] = sigma * std::pow(profile.u[i], beta - 1.0) * profile.u_theta[i];
  }

  const double res = ode_residual(out);
  if (!(res < 1e-6))
    throw NumericalError("power_transform: scaled profile violates the target equation");
  return out;
}

SupportProfile polar_dual(const SupportProfile& profile) {
  const std::size_t n = profile.size();
  if (n < 4) throw ParamError("polar_dual: profile too small");
  const double p = profile.pq.p, q = profile.pq.q;

  const double E = detail::profile_first_integral(profile);
  std::vector<double> dual_u(n), dual_du(n), deta(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double u = profile.u[i], ut = profile.u_theta[i];
    const double utt = detail::u_thth_from_first_integral(profile.pq, E, u);
    if (!std::isfinite(utt) || !(utt + u > 0.0))
      throw ConvexityError("polar_dual: u_thth + u <= 0, profile not strictly convex");
    const double speed2 = ut * ut + u * u;
    dual_u[i] = 1.0 / std::sqrt(speed2);
    dual_du[i] = -dual_u[i] * ut / u;          // d u~ / d eta
    deta[i] = u * (utt + u) / speed2;          // u~^2 u (u_thth + u)
  }

  const double h = profile.thetas[1] - profile.thetas[0];
  const std::vector<double> eta = cumulative_integral(deta, h);
  const double eta_end = eta.back();

  // Resample u~(eta) onto a uniform eta grid by Hermite interpolation with the
  // analytically known derivative; theta(eta) is monotone so brackets advance.
  SupportProfile out{{}, {}, {}, ExponentPair{-q, -p}, eta_end, profile.sym_n, profile.sym_m};
  out.thetas.resize(n);
  out.u.resize(n);
  out.u_theta.resize(n);
  std::size_t j = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const double target = eta_end * i / (n - 1);
    out.thetas[i] = target;
    if (i == 0 || i + 1 == n) {
      const std::size_t k = (i == 0) ? 0 : n - 1;
      out.u[i] = dual_u[k];
      out.u_theta[i] = dual_du[k];
      continue;
    }
    while (j + 2 < n && eta[j + 1] < target) ++j;
    const double span = eta[j + 1] - eta[j];
    const double t = (target - eta[j]) / span;
    out.u[i] = hermite(t, dual_u[j], dual_u[j + 1], dual_du[j], dual_du[j + 1], span);
    out.u_theta[i] =
        hermite_deriv(t, dual_u[j], dual_u[j + 1], dual_du[j], dual_du[j + 1], span);
  }
  return out;
}

}  // namespace lpdm
