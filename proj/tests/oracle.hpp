#pragma once

// Independent oracles for the test suite: the period integrand coded directly
// from its defining expressions (anchored at whichever endpoint is nearer,
// taking the exact endpoint distance to dodge the usual tanh-sinh precision
// trap), and tanh-sinh quadrature over the open interval.  No code is shared
// with the library's transformed Gauss-Chebyshev path.

#include <cmath>

namespace oracle {

// Plain transcription, adequate away from the endpoints.
inline double raw_integrand(double p, double q, double r, double x) {
  if (q == 0.0)
    return std::pow(r, 2.0 * (std::pow(x, p) - 1.0) / (std::pow(r, p) - 1.0)) - x * x;
  if (p == 0.0)
    return std::pow(1.0 + (std::pow(r, q) - 1.0) / std::log(r) * std::log(x), 2.0 / q) - x * x;
  const double f = (std::pow(r, p) - std::pow(r, q)) / (std::pow(r, p) - 1.0) +
                   (std::pow(r, q) - 1.0) / (std::pow(r, p) - 1.0) * std::pow(x, p);
  return std::pow(f, 2.0 / q) - x * x;
}

// Transformed kernel written directly from its defining expression.
inline double transformed_integrand(double p, double q, double beta, double r, double z) {
  const double rb = std::pow(r, beta);
  const double v = 0.5 * (rb - 1.0) * z + 0.5 * (rb + 1.0);
  const double pref = 4.0 * beta * beta / ((rb - 1.0) * (rb - 1.0));
  if (p == 0.0) {
    const double inner = 1.0 + (std::pow(r, q) - 1.0) / (beta * std::log(r)) * std::log(v);
    return pref * (std::pow(v, 2.0 * (beta - 1.0) / beta) * std::pow(inner, 2.0 / q) - v * v);
  }
  const double a = (std::pow(r, p) - std::pow(r, q)) / (std::pow(r, p) - 1.0);
  const double b = (std::pow(r, q) - 1.0) / (std::pow(r, p) - 1.0);
  const double inner = a * std::pow(v, q * (beta - 1.0) / beta) +
                       b * std::pow(v, (p + q * (beta - 1.0)) / beta);
  return pref * (std::pow(inner, 2.0 / q) - v * v);
}

// I(p,q,r,x) where da = x - 1 and db = r - x are known exactly; keeps full
// relative accuracy down to distances of order 1e-300 from either endpoint.
inline double integrand_by_distance(double p, double q, double r, double x, double da,
                                    double db) {
  const double lr = std::log(r);
  double arg;  // I = x^2 expm1(arg)
  if (da <= db) {
    const double lx = std::log1p(da);
    if (q == 0.0) {
      arg = 2.0 * lr * std::expm1(p * lx) / std::expm1(p * lr) - 2.0 * lx;
    } else {
      const double T = std::expm1(q * lr) * std::expm1(p * lx) / std::expm1(p * lr);
      arg = (p == 0.0 ? (2.0 / q) * std::log1p(std::expm1(q * lr) * lx / lr)
                      : (2.0 / q) * std::log1p(T)) -
            2.0 * lx;
    }
  } else {
    const double dl = std::log1p(-db / r);  // lx - lr <= 0
    // (x^p - r^p)/(r^p - 1) = expm1(p dl) / (1 - r^{-p})
    const double ratio2 = std::expm1(p * dl) / (-std::expm1(-p * lr));
    if (q == 0.0) {
      arg = 2.0 * lr * ratio2 - 2.0 * dl;
    } else if (p == 0.0) {
      const double S = -std::expm1(-q * lr) * dl / lr;  // (1 - r^{-q}) dl / lr
      arg = -2.0 * dl + (2.0 / q) * std::log1p(S);
    } else {
      const double S = -std::expm1(-q * lr) * ratio2;
      arg = -2.0 * dl + (2.0 / q) * std::log1p(S);
    }
  }
  return x * x * std::expm1(arg);
}

// Tanh-sinh over (a,b); the integrand receives the node and its exact
// distances to both endpoints.
template <class F>
double tanh_sinh(F&& f, double a, double b, double tol = 1e-12) {
  const double half = 0.5 * (b - a);
  const double pi_2 = 1.5707963267948966;

  const auto weighted = [&](double t) -> double {
    const double s = pi_2 * std::sinh(t);
    const double w = pi_2 * std::cosh(t) / (std::cosh(s) * std::cosh(s));
    if (w < 1e-300) return 0.0;
    const double d_hi = half * 2.0 / (std::exp(2.0 * s) + 1.0);   // b - x
    const double d_lo = half * 2.0 / (std::exp(-2.0 * s) + 1.0);  // x - a
    if (d_hi == 0.0 || d_lo == 0.0) return 0.0;
    const double x = t >= 0.0 ? b - d_hi : a + d_lo;
    const double v = f(x, d_lo, d_hi);
    return std::isfinite(v) ? w * v : 0.0;
  };

  double h = 1.0;
  double sum = weighted(0.0);
  for (int k = 1; k <= 7; ++k) sum += weighted(k * h) + weighted(-k * h);
  double prev = half * h * sum;

  for (int level = 1; level <= 14; ++level) {
    h *= 0.5;
    double add = 0.0;
    const int kmax = static_cast<int>(std::ceil(7.0 / h));
    for (int k = 1; k <= kmax; k += 2) add += weighted(k * h) + weighted(-k * h);
    sum += add;
    const double cur = half * h * sum;
    if (level >= 4 && std::abs(cur - prev) <= tol * std::abs(cur)) return cur;
    prev = cur;
  }
  return prev;
}

// Period value through the raw x-integral: the cross-validation path.
inline double theta_raw(double p, double q, double r, double tol = 1e-12) {
  return tanh_sinh(
      [&](double x, double da, double db) {
        const double I = integrand_by_distance(p, q, r, x, da, db);
        return I > 0.0 ? 1.0 / std::sqrt(I) : 0.0;
      },
      1.0, r, tol);
}

}  // namespace oracle
