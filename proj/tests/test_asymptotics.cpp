#include <cmath>
#include <numbers>
#include <random>

#include <doctest.h>

#include "lpdm/asymptotics.hpp"
#include "lpdm/period.hpp"

using namespace lpdm;
namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_CASE("series coefficients") {
  CHECK(series_near_one({-2, 2}).c2 == doctest::Approx(0.0).epsilon(1e-14));
  CHECK(series_near_one({1, 2}).c2 == doctest::Approx(0.0).epsilon(1e-14));
  CHECK(series_near_one({-2, -1}).c2 == doctest::Approx(0.0).epsilon(1e-14));
  CHECK(series_near_one({0, 4}).c2 == doctest::Approx(kPi / 48).epsilon(1e-14));
  CHECK(series_near_one({0, 4}).c0 == doctest::Approx(kPi / 2).epsilon(1e-15));
}

TEST_CASE("series matches a finite-difference fit of theta") {
  for (auto [p, q] : {std::pair{-1.0, 1.5}, {0.0, 4.0}, {-3.0, -1.5}, {2.0, 4.5}}) {
    const NearOneSeries s = series_near_one({p, q});
    const auto fit = [&](double d) {
      return (theta({p, q}, RatioParam(1.0 + d)).theta - s.c0) / (d * d);
    };
    // Richardson in the step removes the next even term.
    const double c2_fit = (4.0 * fit(5e-3) - fit(1e-2)) / 3.0;
    CHECK(std::abs(c2_fit - s.c2) < 0.05 * std::abs(s.c2) + 1e-4);
  }
}

TEST_CASE("large-r tails") {
  const LargeRTail t5 = tail_large_r({0, 5});
  CHECK(t5.kind == TailKind::LogTail);
  CHECK(t5.coefficient == doctest::Approx(kPi / 10).epsilon(1e-15));
  CHECK(tail_large_r({0, 1}).coefficient == doctest::Approx(kPi / 2).epsilon(1e-15));

  const LargeRTail tp = tail_large_r({-0.5, 2});
  CHECK(tp.kind == TailKind::PowerTail);
  CHECK(tp.exponent == -0.5);
  // Beta-function closed form of the coefficient integral:
  //   int_0^1 (y^p - 1)(1-y^2)^{-3/2} dy = -sqrt(pi) Gamma((p+1)/2) / Gamma(p/2).
  const double p = -0.5;
  const double closed = -std::sqrt(kPi) * std::tgamma((p + 1.0) / 2.0) / std::tgamma(p / 2.0);
  CHECK(tp.coefficient == doctest::Approx(closed / 2.0).epsilon(1e-9));

  for (double pp : {-0.25, -0.75, -0.9}) {
    const double want = -std::sqrt(kPi) * std::tgamma((pp + 1.0) / 2.0) / std::tgamma(pp / 2.0);
    CHECK(detail::tail_coefficient_integral(pp) == doctest::Approx(want).epsilon(1e-9));
  }

  CHECK_THROWS_AS(tail_large_r({-1.5, 2}), DomainError);
  CHECK_THROWS_AS(tail_large_r({0.5, 2}), DomainError);
}

TEST_CASE("phi discriminant and the local direction at r = 1") {
  CHECK(phi_discriminant({1, 2}) == 0.0);
  CHECK(phi_discriminant({-2, -1}) == 0.0);
  CHECK(phi_discriminant({0, 0}) == 0.0);

  // Positive discriminant -> theta locally increasing at 1+, negative ->
  // locally decreasing (the sign of the quadratic coefficient).
  const auto slope_sign = [](double p, double q) {
    const double a = theta({p, q}, RatioParam(1.0 + 5e-4)).theta;
    const double b = theta({p, q}, RatioParam(1.0 + 2e-3)).theta;
    return b - a;
  };
  for (auto [p, q] : {std::pair{-3.0, 3.0}, {4.0, 9.0}, {-6.0, -4.0}}) {
    REQUIRE(phi_discriminant({p, q}) > 0.0);
    CHECK(slope_sign(p, q) > 0.0);
  }
  for (auto [p, q] : {std::pair{0.0, 1.0}, {-1.0, 1.0}, {-1.5, 0.5}}) {
    REQUIRE(phi_discriminant({p, q}) < 0.0);
    CHECK(slope_sign(p, q) < 0.0);
  }
}

TEST_CASE("expansion residual is second order in r - 1") {
  // first-order term vanishes at beta = (2q-p)/3 ...
  {
    const ExponentPair pq{0.5, 2.5};
    const double beta0 = (2.0 * pq.q - pq.p) / 3.0;
    const double big = std::abs(integrand_expansion_check(pq, beta0, 0.6, 1e-3));
    const double small = std::abs(integrand_expansion_check(pq, beta0, 0.6, 5e-4));
    CHECK(big / small >= 3.5);
  }
  // ... and at z = 0 for any beta
  {
    const ExponentPair pq{-1.0, 2.0};
    const double big = std::abs(integrand_expansion_check(pq, 1.3, 0.0, 1e-3));
    const double small = std::abs(integrand_expansion_check(pq, 1.3, 0.0, 5e-4));
    CHECK(big / small >= 3.5);
  }
  // p = 0 branch, generic beta and z
  {
    const ExponentPair pq{0.0, 2.0};
    const double big = std::abs(integrand_expansion_check(pq, 1.0, 0.5, 1e-3));
    const double small = std::abs(integrand_expansion_check(pq, 1.0, 0.5, 5e-4));
    CHECK(big / small >= 3.5);
  }
}
