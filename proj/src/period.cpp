#include "lpdm/period.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "lpdm/asymptotics.hpp"

namespace lpdm {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kExpOverflow = 708.0;

// h(s) = (r^s - 1)/s with the limit h(0) = log r.  Increasing in s for r > 1.
double h_slope(double s, double lr) {
  if (s == 0.0) return lr;
  return std::expm1(s * lr) / s;
}

// log(e^t + 1) without overflow.
double log1p_exp(double t) {
  if (t > 36.0) return t + std::log1p(std::exp(-t));
  return std::log1p(std::exp(t));
}

}  // namespace

namespace detail {

double expm1_ratio(double s, double la, double lb) {
  // (e^{s la} - 1) / (e^{s lb} - 1), 0 <= la <= lb, lb > 0.
  if (s == 0.0) return la / lb;
  const double sa = s * la, sb = s * lb;
  if (s > 0.0) {
    if (sb <= kExpOverflow) return std::expm1(sa) / std::expm1(sb);
    if (sa <= kExpOverflow) return std::expm1(sa) * std::exp(-sb);
    return std::exp(sa - sb) * (-std::expm1(-sa));
  }
  // s < 0: both expm1 arguments are in (-inf, 0], values in (-1, 0].
  return std::expm1(sa) / std::expm1(sb);
}

// Bracket argument of the integrand: I(x) = x^2 expm1(arg) where for
// p,q != 0
//   arg = (2/q) log(1 + (r^q-1)(x^p-1)/(r^p-1)) - 2 lx.
// lx = log x and dl = lx - lr <= 0 are passed separately so callers that know
// the endpoint distances exactly keep full relative accuracy at both ends;
// the logarithm is anchored at whichever endpoint is nearer.
double integrand_log_arg(const ExponentPair& pq, double lr, double lx, double dl) {
  const double p = pq.p, q = pq.q;
  const bool near_r = lx > 0.5 * lr;

  if (q == 0.0) {
    // I = r^{2(x^p-1)/(r^p-1)} - x^2
    if (near_r) {
      const double ratio2 = std::expm1(p * dl) / (-std::expm1(-p * lr));
      return 2.0 * lr * ratio2 - 2.0 * dl;
    }
    return 2.0 * lr * expm1_ratio(p, lx, lr) - 2.0 * lx;
  }

  if (near_r && q * lr > -kExpOverflow && std::abs(p) * lr < kExpOverflow) {
    // f(x) = r^q (1 + S),  S <= 0 small near x = r.
    const double om_q = -std::expm1(-q * lr);  // 1 - r^{-q}
    // (x^p - r^p)/(r^p - 1) = expm1(p dl)/(1 - r^{-p}) in (-1, 0]
    const double ratio2 =
        (p == 0.0) ? dl / lr : std::expm1(p * dl) / (-std::expm1(-p * lr));
    const double S = om_q * ratio2;
    if (S <= -1.0) return std::numeric_limits<double>::quiet_NaN();
    return -2.0 * dl + (2.0 / q) * std::log1p(S);
  }

  // Anchored at x = 1:  f(x) = 1 + T with T -> 0 as x -> 1.
  double ratio1;  // (x^p - 1)/(r^p - 1) in [0, 1]
  if (p == 0.0)
    ratio1 = lx / lr;
  else
    ratio1 = expm1_ratio(p, lx, lr);

  double L;  // log f
  if (q * lr <= kExpOverflow) {
    const double T = std::expm1(q * lr) * ratio1;
    if (T <= -1.0) return std::numeric_limits<double>::quiet_NaN();
    L = std::log1p(T);
  } else {
    // r^q overflows; work with log T directly.
    const double log_em_q = q * lr + std::log1p(-std::exp(-q * lr));
    const double logT = log_em_q + std::log(ratio1);
    L = log1p_exp(logT);
  }
  return (2.0 / q) * L - 2.0 * lx;
}

double beta_for_quadrature(const ExponentPair& pq, double r) {
  // (2q-p)/3 kills the first-order term of the kernel near r = 1.  Once
  // r^beta grows past ~e^4 the substitution squeezes the kernel's branch
  // point (at x slightly below 1) exponentially close to z = -1 and
  // Gauss-Chebyshev stalls; fall back to beta = 1/log r, which pins
  // r^beta = e and stretches the near-1 region the most.
  const double lr = std::log(r);
  const double fallback = lr > 1.0 ? 1.0 / lr : 1.0;
  const double b = (2.0 * pq.q - pq.p) / 3.0;
  if (std::abs(b) < 0.05) return fallback;
  if (std::abs(b) * lr > 4.0) return fallback;
  return b;
}

namespace {

// Transformed kernel evaluated from precomputed r^beta data.
struct TransformedCtx {
  ExponentPair pq;
  double beta;
  double lr;
  double blr;       // beta log r
  double rb1;       // r^beta - 1 (may be +inf, or exactly -1)
  double log_rb1;   // log|r^beta - 1|, used when rb1 overflows
};

TransformedCtx make_ctx(const ExponentPair& pq, double beta, double r) {
  TransformedCtx c{pq, beta, std::log(r), 0.0, 0.0, 0.0};
  c.blr = beta * c.lr;
  c.rb1 = std::expm1(c.blr);
  c.log_rb1 = c.blr > 1.0 ? c.blr + std::log1p(-std::exp(-c.blr))
                          : std::log(std::abs(c.rb1));
  return c;
}

// y = (1+z)/2 and omy = 1-y = (1-z)/2, both supplied at full relative
// accuracy so the kernel keeps precision right up to the endpoints.
double eval_transformed(const TransformedCtx& c, double y, double omy) {
  double lv, dlv, scale2;  // log v, log(v r^{-beta}), (v / rb1)^2
  if (std::isinf(c.rb1)) {
    const double t = c.log_rb1 + std::log(y);
    lv = log1p_exp(t);
    dlv = std::log(y);  // v/(1+rb1) -> y up to e^{-blr}
    scale2 = y * y;
  } else if (c.rb1 == -1.0) {
    lv = std::log(omy);  // v = 1 - y exactly in this regime
    dlv = lv - c.blr;
    scale2 = omy * omy;
  } else {
    lv = std::log1p(c.rb1 * y);
    dlv = std::log1p(-c.rb1 * omy / (1.0 + c.rb1));
    const double s = 1.0 / c.rb1 + y;
    scale2 = s * s;
  }
  const double lx = lv / c.beta;
  const double dl = dlv / c.beta;
  const double arg = integrand_log_arg(c.pq, c.lr, lx, dl);
  return 4.0 * c.beta * c.beta * scale2 * std::expm1(arg);
}

}  // namespace

PeriodValue theta_quadrature(const ExponentPair& pq, double r, double beta,
                             const QuadratureConfig& cfg) {
  const TransformedCtx ctx = make_ctx(pq, beta, r);
  double prev = std::numeric_limits<double>::quiet_NaN();
  double prev_diff = std::numeric_limits<double>::infinity();
  for (int n = cfg.base_nodes; n <= cfg.max_nodes; n *= 2) {
    double sum = 0.0, comp = 0.0;
    for (int k = 1; k <= n; ++k) {
      const double phi = (2.0 * k - 1.0) * kPi / (2.0 * n);
      const double ch = std::cos(0.5 * phi), sh = std::sin(0.5 * phi);
      const double y = ch * ch, omy = sh * sh;  // (1 +- cos phi)/2, exact forms
      const double s = std::sin(phi);
      const double kernel = eval_transformed(ctx, y, omy);
      if (!(kernel > 0.0))
        throw ConvergenceError("theta: transformed integrand nonpositive at a node; "
                               "parameters need higher precision");
      const double term = s / std::sqrt(kernel);
      const double t = sum + term;  // Kahan
      comp += (std::abs(sum) >= std::abs(term)) ? (sum - t) + term : (term - t) + sum;
      sum = t;
    }
    const double val = kPi / n * (sum + comp);
    if (std::isfinite(prev)) {
      const double diff = std::abs(val - prev);
      if (diff < cfg.rel_tol * std::abs(val)) return {val, diff, ThetaMethod::Quadrature};
      // Floor regime: the successive differences are already tiny but are
      // either no longer shrinking geometrically (rounding floor) or the node
      // budget is exhausted.  Accept with the honest error estimate instead
      // of insisting on a rel_tol this kernel cannot express.
      if (diff < 3e-11 * std::abs(val) && (diff > 0.3 * prev_diff || 2 * n > cfg.max_nodes))
        return {val, diff, ThetaMethod::Quadrature};
      prev_diff = diff;
    }
    prev = val;
  }
  throw ConvergenceError("theta: node doubling reached max_nodes without meeting rel_tol");
}

}  // namespace detail

double first_integral(const ExponentPair& pq, RatioParam r) {
  if (!pq.in_domain_D()) throw DomainError("first_integral: requires p < q");
  const double lr = std::log(r.value);
  const double p = pq.p, q = pq.q;
  if (p == 0.0) {
    const double A = lr / h_slope(q, lr);  // u_-^q
    return A - std::log(A);
  }
  if (q == 0.0) {
    const double A = lr / h_slope(p, lr);  // u_-^p
    return (2.0 / p) * (std::log(A) - A);
  }
  const double A = h_slope(p, lr) / h_slope(q, lr);  // u_-^{q-p}
  return std::pow(A, p / (q - p)) * (A - q / p);
}

ArcEndpoints endpoint_u_minus(const ExponentPair& pq, RatioParam r) {
  if (!pq.in_domain_D()) throw DomainError("endpoint_u_minus: requires p < q");
  const double lr = std::log(r.value);
  const double p = pq.p, q = pq.q;
  double um;
  if (p == 0.0)
    um = std::pow(lr / h_slope(q, lr), 1.0 / q);
  else if (q == 0.0)
    um = std::pow(lr / h_slope(p, lr), 1.0 / p);
  else
    um = std::pow(h_slope(p, lr) / h_slope(q, lr), 1.0 / (q - p));
  return {um, r.value * um};
}

double integrand_raw(const ExponentPair& pq, RatioParam r, double x) {
  if (!pq.in_domain_D()) throw DomainError("integrand_raw: requires p < q");
  if (!(x >= 1.0 && x <= r.value)) throw DomainError("integrand_raw: x outside [1, r]");
  if (x == 1.0 || x == r.value) return 0.0;
  const double lr = std::log(r.value);
  const double dl = std::log1p((x - r.value) / r.value);
  const double arg = detail::integrand_log_arg(pq, lr, std::log(x), dl);
  return x * x * std::expm1(arg);
}

double integrand_raw_dx_at_1(const ExponentPair& pq, RatioParam r) {
  const double lr = std::log(r.value);
  return 2.0 * (h_slope(pq.q, lr) / h_slope(pq.p, lr) - 1.0);
}

double integrand_raw_dx_at_r(const ExponentPair& pq, RatioParam r) {
  const double lr = std::log(r.value);
  const double rv = r.value;
  return 2.0 * rv * (h_slope(pq.q, lr) / h_slope(pq.p, lr) * std::pow(rv, pq.p - pq.q) - 1.0);
}

double integrand_transformed(const ExponentPair& pq, double beta, RatioParam r, double z) {
  if (!pq.in_domain_D()) throw DomainError("integrand_transformed: requires p < q");
  if (beta == 0.0) throw DomainError("integrand_transformed: beta must be nonzero");
  if (!(z > -1.0 && z < 1.0)) throw DomainError("integrand_transformed: z outside (-1, 1)");
  const auto ctx = detail::make_ctx(pq, beta, r.value);
  return detail::eval_transformed(ctx, 0.5 * (1.0 + z), 0.5 * (1.0 - z));
}

PeriodValue theta(const ExponentPair& pq, RatioParam r, const QuadratureConfig& cfg) {
  cfg.validate();
  if (!pq.in_domain_D()) throw DomainError("theta: requires p < q");

  if (cfg.use_exact_special && is_exceptional_pair(pq)) {
    const double v = (pq.p == -2.0 && pq.q == 2.0) ? kPi / 2.0 : kPi;
    return {v, 0.0, ThetaMethod::ExactSpecial};
  }

  if (pq.q <= 0.0 && cfg.use_dual_reduction)
    return theta(ExponentPair{-pq.q, -pq.p}, r, cfg);

  const double d = r.value - 1.0;
  if (d < cfg.near_one_switch) {
    const NearOneSeries s = series_near_one(pq);
    return {s.c0 + s.c2 * d * d, (std::abs(s.c2) + 1.0) * d * d * d,
            ThetaMethod::SeriesNearOne};
  }

  const double beta = detail::beta_for_quadrature(pq, r.value);
  return detail::theta_quadrature(pq, r.value, beta, cfg);
}

double theta_limit_r1(const ExponentPair& pq) {
  if (!pq.in_domain_D()) throw DomainError("theta_limit_r1: requires p < q");
  return kPi / std::sqrt(pq.q - pq.p);
}

double theta_limit_rinf(const ExponentPair& pq) {
  if (!pq.in_domain_D()) throw DomainError("theta_limit_rinf: requires p < q");
  if (pq.p >= 0.0) return pq.q / (pq.q - pq.p) * kPi / 2.0;
  if (pq.q > 0.0) return kPi / 2.0;
  return pq.p / (pq.p - pq.q) * kPi / 2.0;
}

}  // namespace lpdm
