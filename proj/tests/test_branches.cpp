#include <cmath>
#include <numbers>

#include <doctest.h>

#include "lpdm/branches.hpp"
#include "lpdm/period.hpp"

using namespace lpdm;
namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_CASE("monotone regions") {
  CHECK(monotone_class({-3, 3}).region_case == MonotoneRegion::I);
  CHECK(monotone_class({-3, 3}).direction == MonotoneDir::IncreasingInR);
  CHECK(monotone_class({4, 9}).region_case == MonotoneRegion::II);
  CHECK(monotone_class({-5, -4.5}).region_case == MonotoneRegion::III);
  CHECK(monotone_class({0, 1}).region_case == MonotoneRegion::IV);
  CHECK(monotone_class({0, 1}).direction == MonotoneDir::DecreasingInR);
  CHECK(monotone_class({0, 5}).direction == MonotoneDir::Unknown);
  // the three constant-period pairs are excluded from every region
  CHECK(monotone_class({-2, 2}).region_case == MonotoneRegion::None);
  CHECK(monotone_class({1, 2}).region_case == MonotoneRegion::None);
  CHECK(monotone_class({-2, -1}).region_case == MonotoneRegion::None);
}

TEST_CASE("root finding") {
  // increasing from pi/sqrt(6): a target slightly above has a root near 1
  const double target = kPi / std::sqrt(6.0) + 0.05;
  const double root = find_root({-3, 3}, target, 1.0 + 1e-9, 100.0);
  CHECK(std::abs(theta({-3, 3}, RatioParam(root)).theta - target) < 1e-10);

  // constant period: no bracket anywhere
  CHECK_THROWS_AS(find_root({1, 2}, kPi / 2, 1.5, 50.0), BracketError);

  // a root of theta = pi/2 exists for (0,5)
  const double r_half = find_root({0, 5}, kPi / 2, 1.0 + 1e-6, 1e6);
  CHECK(std::abs(theta({0, 5}, RatioParam(r_half)).theta - kPi / 2) < 1e-10);
}

TEST_CASE("admissible symmetries") {
  CHECK(admissible_m({-5, 5}, 1) == std::vector<int>{3});
  CHECK(admissible_m({4, 9}, 1) == std::vector<int>{2});
  CHECK(admissible_m({-3, 3}, 1).empty());
  CHECK(admissible_m({0, 5}, 2).empty());
  CHECK(admissible_m({0, 5}, 3).empty());
  CHECK(admissible_m({0, 5}, 5) == std::vector<int>{11});
  CHECK(admissible_m({1, 2}, 1).empty());
  CHECK(admissible_m({-5, -4.5}, 1).empty());
}

TEST_CASE("branch enumeration") {
  // root locations frozen from an independent 40-digit computation
  const auto b1 = enumerate_branches({-5, 5}, 1);
  REQUIRE(b1.size() == 1);
  CHECK(b1[0].m == 3);
  CHECK(b1[0].certified);
  CHECK(b1[0].residual < 1e-10);
  CHECK(b1[0].theta_target == doctest::Approx(kPi / 3));
  CHECK(b1[0].r_root == doctest::Approx(1.4316901762965411409).epsilon(1e-9));

  CHECK(enumerate_branches({-3, 3}, 1).empty());

  const auto b2 = enumerate_branches({4, 9}, 1);
  REQUIRE(b2.size() == 1);
  CHECK(b2[0].m == 2);
  CHECK(b2[0].certified);
  CHECK(b2[0].r_root == doctest::Approx(1.7236296225050643914).epsilon(1e-9));

  // non-monotone region: the boundary target m = 2 carries a real root
  const auto b3 = enumerate_branches({0, 5}, 1);
  REQUIRE(b3.size() == 1);
  CHECK(b3[0].m == 2);
  CHECK(!b3[0].certified);
  CHECK(b3[0].residual < 1e-10);
  CHECK(b3[0].r_root == doctest::Approx(4.0818602175452029518).epsilon(1e-9));

  CHECK_THROWS_AS(enumerate_branches({1, 2}, 1), ExceptionalFamilyError);
  CHECK_THROWS_AS(enumerate_branches({2, 1}, 1), DomainError);

  // certified exhaustiveness inside monotone regions
  for (auto [p, q] : {std::pair{-4.0, 4.0}, {-6.0, 5.0}, {3.0, 8.0}}) {
    const auto found = enumerate_branches({p, q}, 1);
    CHECK(found.size() == admissible_m({p, q}, 1).size());
    for (const auto& b : found) CHECK(b.certified);
  }
}

TEST_CASE("immersed branches with n > 1") {
  // (0,5) with n = 5: m = 11 is admissible (2 < 11/5 < sqrt 5)
  const auto found = enumerate_branches({0, 5}, 5);
  bool has11 = false;
  for (const auto& b : found) {
    if (b.m == 11) has11 = true;
    CHECK(b.residual < 1e-10);
    CHECK(std::abs(theta({0, 5}, RatioParam(b.r_root)).theta - kPi * 5 / b.m) < 1e-10);
  }
  CHECK(has11);
}
