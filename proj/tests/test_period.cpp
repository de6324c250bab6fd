#include <cmath>
#include <numbers>
#include <random>

#include <doctest.h>

#include "lpdm/period.hpp"
#include "oracle.hpp"

using namespace lpdm;
namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_CASE("first integral closed forms") {
  CHECK(first_integral({1, 2}, RatioParam(3.0)) == doctest::Approx(-0.75).epsilon(1e-14));

  // r -> 1 limit tends to (p-q)/p
  CHECK(first_integral({1, 2}, RatioParam(1.0 + 1e-9)) == doctest::Approx(-1.0).epsilon(1e-6));
  CHECK(first_integral({-2, 2}, RatioParam(1.0 + 1e-9)) == doctest::Approx(2.0).epsilon(1e-6));

  const double e = std::exp(1.0);
  const double expected = 1.0 / (e - 1.0) - std::log(1.0 / (e - 1.0));
  CHECK(first_integral({0, 1}, RatioParam(e)) == doctest::Approx(expected).epsilon(1e-14));

  // q = 0 branch against its printed display
  const double p = -1.0, r = 2.0, lr = std::log(r);
  const double direct = 2.0 / p * std::log(p * lr / (std::pow(r, p) - 1.0)) -
                        2.0 * lr / (std::pow(r, p) - 1.0);
  CHECK(first_integral({p, 0}, RatioParam(r)) == doctest::Approx(direct).epsilon(1e-14));

  CHECK_THROWS_AS(first_integral({2, 1}, RatioParam(2.0)), DomainError);
  CHECK_THROWS_AS(RatioParam(0.5), DomainError);
}

TEST_CASE("arc endpoints") {
  const auto [um, up] = endpoint_u_minus({-2, 2}, RatioParam(2.0));
  CHECK(um == doctest::Approx(std::pow(0.25, 0.25)).epsilon(1e-14));
  CHECK(up == doctest::Approx(2.0 * um).epsilon(1e-15));

  const auto near1 = endpoint_u_minus({1, 2}, RatioParam(1.0 + 1e-10));
  CHECK(near1.u_minus == doctest::Approx(1.0).epsilon(1e-8));

  // Endpoint equation residual, all three formula branches.
  std::mt19937 rng(5);
  std::uniform_real_distribution<double> U(0.0, 1.0);
  for (int i = 0; i < 50; ++i) {
    double p = -4.0 + 8.0 * U(rng);
    double q = p + 0.3 + 4.0 * U(rng);
    if (i % 3 == 1) p = 0.0, q = 0.5 + 4.0 * U(rng);
    if (i % 3 == 2) q = 0.0, p = -4.0 + 3.7 * U(rng);
    if (!(p < q)) continue;
    const double r = 1.1 + 8.0 * U(rng);
    const auto ends = endpoint_u_minus({p, q}, RatioParam(r));
    const double E = first_integral({p, q}, RatioParam(r));
    for (double u : {ends.u_minus, ends.u_plus}) {
      double resid;
      if (q == 0.0)
        resid = std::log(u * u) - 2.0 / p * std::pow(u, p) - E;
      else if (p == 0.0)
        resid = std::pow(u, q) - q * std::log(u) - E;
      else
        resid = std::pow(u, q) - q / p * std::pow(u, p) - E;
      CHECK(std::abs(resid) < 1e-10);
    }
  }
}

TEST_CASE("raw integrand values and positivity") {
  CHECK(integrand_raw({1, 2}, RatioParam(2.0), 1.0) == 0.0);
  CHECK(integrand_raw({1, 2}, RatioParam(2.0), 2.0) == 0.0);
  CHECK(integrand_raw({1, 2}, RatioParam(2.0), 1.5) == doctest::Approx(0.25).epsilon(1e-14));
  CHECK_THROWS_AS(integrand_raw({1, 2}, RatioParam(2.0), 2.5), DomainError);

  std::mt19937 rng(17);
  std::uniform_real_distribution<double> U(0.0, 1.0);
  for (int i = 0; i < 200; ++i) {
    const double p = -5.0 + 9.0 * U(rng);
    const double q = p + 0.2 + 5.0 * U(rng);
    const double r = 1.05 + 20.0 * U(rng);
    const double x = 1.0 + (r - 1.0) * (0.01 + 0.98 * U(rng));
    const double I = integrand_raw({p, q}, RatioParam(r), x);
    CHECK(I > 0.0);
    // agree with the directly coded expression
    const double naive = oracle::raw_integrand(p, q, r, x);
    CHECK(I == doctest::Approx(naive).epsilon(1e-9));
  }
}

TEST_CASE("transformed integrand") {
  // r -> 1 limit is (q-p)(1-z^2) for any beta
  for (double z : {-0.8, -0.3, 0.0, 0.4, 0.9}) {
    const double v = integrand_transformed({-1, 2}, 1.7, RatioParam(1.0 + 1e-8), z);
    CHECK(v == doctest::Approx(3.0 * (1.0 - z * z)).epsilon(1e-6));
  }

  // at (-2,2) with beta = 2 the kernel is 4(1-z^2) for every r
  for (double r : {1.2, 2.0, 17.0, 400.0})
    for (double z : {-0.9, -0.2, 0.5})
      CHECK(integrand_transformed({-2, 2}, 2.0, RatioParam(r), z) ==
            doctest::Approx(4.0 * (1.0 - z * z)).epsilon(1e-11));

  // change-of-variables consistency against the raw integrand
  std::mt19937 rng(29);
  std::uniform_real_distribution<double> U(0.0, 1.0);
  for (int i = 0; i < 200; ++i) {
    const double p = -4.0 + 8.0 * U(rng);
    const double q = p + 0.3 + 4.0 * U(rng);
    const double r = 1.1 + 6.0 * U(rng);
    const double beta = (U(rng) < 0.3 ? -1.0 : 1.0) * (0.3 + 2.5 * U(rng));
    const double z = -0.95 + 1.9 * U(rng);
    const double kernel = integrand_transformed({p, q}, beta, RatioParam(r), z);
    const double rb = std::pow(r, beta);
    const double v = 0.5 * (rb - 1.0) * z + 0.5 * (rb + 1.0);
    const double x = std::pow(v, 1.0 / beta);
    const double expected = 4.0 * beta * beta / ((rb - 1.0) * (rb - 1.0)) *
                            std::pow(v, 2.0 * (beta - 1.0) / beta) *
                            integrand_raw({p, q}, RatioParam(r), std::min(x, r));
    CHECK(kernel == doctest::Approx(expected).epsilon(1e-12));
    // and against the directly coded kernel
    const double naive = oracle::transformed_integrand(p, q, beta, r, z);
    CHECK(kernel == doctest::Approx(naive).epsilon(1e-9));
  }

  CHECK_THROWS_AS(integrand_transformed({0, 2}, 0.0, RatioParam(2.0), 0.5), DomainError);
  CHECK_THROWS_AS(integrand_transformed({0, 2}, 1.0, RatioParam(2.0), 1.0), DomainError);
}

TEST_CASE("theta special families and methods") {
  for (double r : {1.01, 2.0, 31.0}) {
    const PeriodValue a = theta({1, 2}, RatioParam(r));
    CHECK(a.method == ThetaMethod::ExactSpecial);
    CHECK(a.theta == kPi);
    CHECK(theta({-2, -1}, RatioParam(r)).theta == kPi);
    CHECK(theta({-2, 2}, RatioParam(r)).theta == kPi / 2);
  }
  QuadratureConfig no_special;
  no_special.use_exact_special = false;
  const PeriodValue v = theta({1, 2}, RatioParam(5.0), no_special);
  CHECK(v.method == ThetaMethod::Quadrature);
  CHECK(v.theta == doctest::Approx(kPi).epsilon(1e-12));
}

TEST_CASE("special parameter lines p = 0 and q = 0") {
  CHECK(integrand_raw({-1, 0}, RatioParam(2.0), 1.5) ==
        doctest::Approx(oracle::raw_integrand(-1, 0, 2.0, 1.5)).epsilon(1e-12));
  CHECK(integrand_raw({0, 2}, RatioParam(3.0), 2.0) ==
        doctest::Approx(oracle::raw_integrand(0, 2, 3.0, 2.0)).epsilon(1e-12));
  const double b0 = 4.0 / 3.0;  // (2q-p)/3 at (0,2)
  const double kern = integrand_transformed({0, 2}, b0, RatioParam(2.0), 0.0);
  CHECK(kern > 0.0);
  CHECK(kern == doctest::Approx(oracle::transformed_integrand(0, 2, b0, 2.0, 0.0)).epsilon(1e-10));

  // near r = 1 the period approaches pi/sqrt(q-p)
  CHECK(theta({0, 4}, RatioParam(1.0 + 1e-6)).theta ==
        doctest::Approx(kPi / 2).epsilon(1e-9));

  // large-r behavior on the p = 0 line approaches pi/2 + pi/(2 q log r)
  const double r = 1e6;
  const double tail = kPi / (10.0 * std::log(r));
  const double got = theta({0, 5}, RatioParam(r)).theta;
  CHECK(std::abs(got - (kPi / 2 + tail)) < 0.2 * tail);
}

TEST_CASE("theta limits") {
  CHECK(theta_limit_r1({0, 4}) == doctest::Approx(kPi / 2).epsilon(1e-15));
  CHECK(theta_limit_r1({-2, 2}) == doctest::Approx(kPi / 2).epsilon(1e-15));
  CHECK(theta_limit_r1({1, 2}) == doctest::Approx(kPi).epsilon(1e-15));
  CHECK(theta_limit_rinf({-1, 1}) == doctest::Approx(kPi / 2).epsilon(1e-15));
  CHECK(theta_limit_rinf({1, 2}) == doctest::Approx(kPi).epsilon(1e-15));
  CHECK(theta_limit_rinf({-2, -1}) == doctest::Approx(kPi).epsilon(1e-15));
  CHECK_THROWS_AS(theta_limit_r1({2, 2}), DomainError);
}

TEST_CASE("theta matches frozen high-precision references") {
  // Values computed independently with 50-digit arithmetic on the raw
  // integral (tanh-sinh after x = 1 + (r-1) sin^2 phi), truncated to 22
  // digits.  They cover all three integrand branches and a q < 0 pair.
  const struct {
    double p, q, r, expected;
  } refs[] = {
      {-1, 2.5, 3.0, 1.665421472391869169521},
      {0.5, 4.0, 2.0, 1.708014948063256527815},
      {-3, 1.5, 7.0, 1.546442099031477880438},
      {0, 3, 5.0, 1.809846438354723706153},
      {-2.5, 0, 4.0, 1.943942383894260141968},
      {-4, -1, 2.5, 1.869023447602829371692},
      {1.5, 2.5, 10.0, 3.370835370077920545661},
      {-0.75, 0.25, 1.2, 3.139214404100800670235},
  };
  for (const auto& c : refs)
    CHECK(theta({c.p, c.q}, RatioParam(c.r)).theta ==
          doctest::Approx(c.expected).epsilon(1e-11));
}

TEST_CASE("theta agrees with the raw-integral oracle") {
  std::mt19937 rng(101);
  std::uniform_real_distribution<double> U(0.0, 1.0);
  int checked = 0;
  for (int i = 0; i < 40; ++i) {
    const double p = -4.0 + 8.0 * U(rng);
    const double q = p + 0.4 + 4.0 * U(rng);
    if (std::abs(q) < 0.05 || std::abs(p) < 0.05) continue;  // oracle's pow forms
    const double r = 1.1 + 30.0 * U(rng);
    const double mine = theta({p, q}, RatioParam(r)).theta;
    const double ref = oracle::theta_raw(p, q, r);
    CHECK(mine == doctest::Approx(ref).epsilon(1e-9));
    ++checked;
  }
  CHECK(checked >= 30);
}

TEST_CASE("theta continuity across p = 0 and q = 0") {
  for (double r : {1.5, 4.0}) {
    const double mid_p = theta({0, 2.5}, RatioParam(r)).theta;
    const double lo = theta({-1e-8, 2.5}, RatioParam(r)).theta;
    const double hi = theta({1e-8, 2.5}, RatioParam(r)).theta;
    CHECK(std::abs(lo - mid_p) < 1e-6);
    CHECK(std::abs(hi - mid_p) < 1e-6);

    const double mid_q = theta({-2.5, 0}, RatioParam(r)).theta;
    CHECK(std::abs(theta({-2.5, -1e-8}, RatioParam(r)).theta - mid_q) < 1e-6);
    CHECK(std::abs(theta({-2.5, 1e-8}, RatioParam(r)).theta - mid_q) < 1e-6);
  }
}

TEST_CASE("theta approaches its r -> infinity limit") {
  // p < 0 < q and 0 < p < q limits, sampled far out
  CHECK(std::abs(theta({-1, 1}, RatioParam(1e6)).theta - kPi / 2) < 0.01);
  CHECK(std::abs(theta({1, 3}, RatioParam(1e6)).theta - 0.75 * kPi) < 0.01);
  CHECK(std::abs(theta({-3, -2}, RatioParam(1e6)).theta - 1.5 * kPi) < 0.05);
}

TEST_CASE("theta stays in (0, pi] for p < 0 < q with q - p >= 1") {
  std::mt19937 rng(55);
  std::uniform_real_distribution<double> U(0.0, 1.0);
  for (int i = 0; i < 60; ++i) {
    const double p = -5.0 * U(rng) - 0.01;
    const double q = std::max(p + 1.0, 5.0 * U(rng) + 0.01);
    const double r = 1.01 + 40.0 * U(rng);
    const double v = theta({p, q}, RatioParam(r)).theta;
    CHECK(v > 0.0);
    CHECK(v <= kPi + 1e-12);
  }
}

TEST_CASE("quadrature error estimate is honest at moderate parameters") {
  QuadratureConfig cfg;
  cfg.use_exact_special = false;
  for (double r : {1.3, 3.0, 20.0}) {
    const PeriodValue v = theta({-1.0, 2.5}, RatioParam(r), cfg);
    const double ref = oracle::theta_raw(-1.0, 2.5, r);
    CHECK(std::abs(v.theta - ref) < std::max(1e-9, 50.0 * v.err_estimate));
  }
}
