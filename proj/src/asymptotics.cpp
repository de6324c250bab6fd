#include "lpdm/asymptotics.hpp"

#include <cmath>
#include <numbers>

#include "lpdm/period.hpp"

namespace lpdm {

namespace {

constexpr double kPi = std::numbers::pi;

// 16-point Gauss-Legendre rule on [-1, 1].
constexpr int kGL = 8;
constexpr double kGLx[kGL] = {
    0.0950125098376374, 0.2816035507792589, 0.4580167776572274, 0.6178762444026438,
    0.7554044083550030, 0.8656312023878318, 0.9445750230732326, 0.9894009349916499};
constexpr double kGLw[kGL] = {
    0.1894506104550685, 0.1826034150449236, 0.1691565193950025, 0.1495959888165767,
    0.1246289712555339, 0.0951585116824928, 0.0622535239386479, 0.0271524594117541};

template <typename F>
double gl16(F&& f, double a, double b) {
  const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
  double sum = 0.0;
  for (int i = 0; i < kGL; ++i)
    sum += kGLw[i] * (f(mid + half * kGLx[i]) + f(mid - half * kGLx[i]));
  return half * sum;
}

}  // namespace

NearOneSeries series_near_one(const ExponentPair& pq) {
  if (!pq.in_domain_D()) throw DomainError("series_near_one: requires p < q");
  const double p = pq.p, q = pq.q;
  const double root = std::sqrt(q - p);
  return {kPi / root, kPi * (q * q - p * q + p * p + 3.0 * p - 3.0 * q) / (96.0 * root)};
}

double LargeRTail::eval(double r) const {
  if (kind == TailKind::LogTail) return constant + coefficient / std::log(r);
  return constant + coefficient * std::pow(r, exponent);
}

namespace detail {

double tail_coefficient_integral(double p) {
  // Split at y = 1/2.  On (0, 1/2] expand the weight binomially,
  //   (1-y^2)^{-3/2} = sum_k c_k y^{2k},  c_0 = 1, c_{k+1} = c_k (k+3/2)/(k+1),
  // which integrates y^p termwise and handles the y -> 0 singularity exactly;
  // the -1 part of the numerator has the closed antiderivative y/sqrt(1-y^2).
  double series = 0.0, c = 1.0;
  for (int k = 0; k < 60; ++k) {
    series += c * std::pow(0.5, 2 * k + p + 1.0) / (2 * k + p + 1.0);
    c *= (k + 1.5) / (k + 1.0);
  }
  const double plain = 0.5 / std::sqrt(0.75);

  // On [1/2, 1] the substitution y = 1 - s^2 removes the cancellation between
  // y^p - 1 and (1-y^2)^{3/2}; the result is smooth on s in [0, 1/sqrt(2)].
  const auto G = [p](double s) {
    const double s2 = s * s;
    const double num = std::expm1(p * std::log1p(-s2));
    return 2.0 * num / (s2 * std::pow(2.0 - s2, 1.5));
  };
  double right = 0.0;
  const int panels = 8;
  const double s_max = 1.0 / std::sqrt(2.0);
  for (int i = 0; i < panels; ++i)
    right += gl16(G, s_max * i / panels, s_max * (i + 1) / panels);

  return series - plain + right;
}

}  // namespace detail

LargeRTail tail_large_r(const ExponentPair& pq) {
  const double p = pq.p, q = pq.q;
  if (p == 0.0 && q > 0.0)
    return {TailKind::LogTail, kPi / 2.0, kPi / (2.0 * q), 0.0};
  if (p > -1.0 && p < 0.0 && q > -p)
    return {TailKind::PowerTail, kPi / 2.0, detail::tail_coefficient_integral(p) / q, p};
  throw DomainError("tail_large_r: covered regimes are p = 0 (q > 0) and -1 < p < 0 (q > -p)");
}

double phi_discriminant(const ExponentPair& pq) {
  const double p = pq.p, q = pq.q;
  return p * p - p * q + q * q + 3.0 * p - 3.0 * q;
}

double integrand_expansion_check(const ExponentPair& pq, double beta, double z, double delta) {
  if (!pq.in_domain_D()) throw DomainError("integrand_expansion_check: requires p < q");
  if (!(z > -1.0 && z < 1.0)) throw DomainError("integrand_expansion_check: z outside (-1, 1)");
  if (!(delta > 0.0 && delta < 0.5))
    throw DomainError("integrand_expansion_check: need 0 < delta < 1/2");
  const double p = pq.p, q = pq.q;
  const double kernel = integrand_transformed(pq, beta, RatioParam(1.0 + delta), z);
  const double lead =
      (q - p) * (1.0 - z * z) * (1.0 + 0.5 * z * (beta - (2.0 * q - p) / 3.0) * delta);
  return kernel - lead;
}

}  // namespace lpdm
