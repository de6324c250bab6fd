#include "lpdm/classify.hpp"

#include <cmath>
#include <string_view>
#include <limits>
#include <numbers>
#include <numeric>

#include "lpdm/branches.hpp"
#include "lpdm/period.hpp"

namespace lpdm {

namespace {

constexpr double kPi = std::numbers::pi;

int bucket_k(double s) {  // smallest k with s <= k^2
  int k = static_cast<int>(std::ceil(std::sqrt(s)));
  while (k > 1 && static_cast<double>(k - 1) * (k - 1) >= s) --k;
  while (static_cast<double>(k) * k < s) ++k;
  return k;
}

std::vector<int> admissible_k_list(const ExponentPair& pq) {
  const double a = std::sqrt(pq.q - pq.p), b = xi(pq);
  const double lo = std::min(a, b), hi = std::max(a, b);
  std::vector<int> out;
  for (int k = static_cast<int>(std::floor(lo)) + 1; k < hi; ++k)
    if (k >= 1 && k > lo) out.push_back(k);
  return out;
}

ClassificationReport make_report(const ExponentPair& pq, std::string_view path, Qualifier qual,
                                 int count) {
  ClassificationReport rep;
  rep.case_path = path;
  rep.qualifier = qual;
  rep.count = count;
  if (pq.in_domain_D()) {
    rep.xi = xi(pq);
    rep.k_bucket = bucket_k(pq.q - pq.p);
    rep.admissible_k = admissible_k_list(pq);
  } else {
    rep.xi = std::numeric_limits<double>::quiet_NaN();
    rep.k_bucket = 0;
  }
  return rep;
}

}  // namespace

const char* qualifier_name(Qualifier q) {
  switch (q) {
    case Qualifier::Exact: return "exact";
    case Qualifier::AtLeast: return "at_least";
    case Qualifier::UniqueUpToScaling: return "unique_up_to_scaling";
    case Qualifier::ContinuumFamily: return "continuum_family";
    case Qualifier::ExactWithPiPeriodicOpen: return "exact_with_pi_periodic_open";
  }
  return "?";
}

double xi(const ExponentPair& pq) {
  if (!pq.in_domain_D()) throw DomainError("xi: requires p < q");
  const double p = pq.p, q = pq.q;
  if (p >= 0.0) return 2.0 * (q - p) / q;
  if (q > 0.0) return 2.0;
  return 2.0 * (p - q) / p;
}

ClassificationReport classify_embedded(const ExponentPair& pq) {
  const double p = pq.p, q = pq.q;
  const double s = q - p;

  if (s <= 0.0) {
    if (q < p) return make_report(pq, "Case(1)/Subcase 1", Qualifier::Exact, 1);
    return make_report(pq, "Case(1)/Subcase 2", Qualifier::UniqueUpToScaling, 1);
  }

  if (s <= 1.0) {
    if (p == 1.0 && q == 2.0)
      return make_report(pq, "Case(2)/Subcase 1", Qualifier::ContinuumFamily, 1);
    if (p == -2.0 && q == -1.0)
      return make_report(pq, "Case(2)/Subcase 2", Qualifier::ContinuumFamily, 1);
    if (s == 1.0) return make_report(pq, "Case(2)/Subcase 3", Qualifier::Exact, 1);
    if (q <= 2.0 * p) return make_report(pq, "Case(2)/Subcase 4", Qualifier::Exact, 1);
    if (2.0 * q <= p) return make_report(pq, "Case(2)/Subcase 5", Qualifier::Exact, 1);
    return make_report(pq, "Case(2)/Subcase 6", Qualifier::Exact, 2);
  }

  if (s <= 4.0) {
    if (p == -2.0 && q == 2.0)
      return make_report(pq, "Case(3)/Subcase 1", Qualifier::ContinuumFamily, 1);
    if (q >= 2.0 * p && 2.0 * q >= p) {
      if (s <= 3.0) return make_report(pq, "Case(3)/Subcase 2", Qualifier::Exact, 1);
      if (p >= -2.0 && q <= 2.0)
        return make_report(pq, "Case(3)/Subcase 3.1", Qualifier::Exact, 1);
      if (q > 2.0) {
        if (p >= 2.0 * q / (2.0 + q))
          return make_report(pq, "Case(3)/Subcase 3.2", Qualifier::Exact, 1);
        return make_report(pq, "Case(3)/Subcase 3.3", Qualifier::ExactWithPiPeriodicOpen, 1);
      }
      if (q <= 2.0 * p / (2.0 - p))
        return make_report(pq, "Case(3)/Subcase 3.4", Qualifier::Exact, 1);
      return make_report(pq, "Case(3)/Subcase 3.5", Qualifier::ExactWithPiPeriodicOpen, 1);
    }
    if (q >= 2.0 * p) return make_report(pq, "Case(3)/Subcase 4", Qualifier::Exact, 2);
    return make_report(pq, "Case(3)/Subcase 5", Qualifier::Exact, 2);
  }

  const int k = bucket_k(s);
  if (q >= 2.0) {
    if (p <= -2.0) return make_report(pq, "Case(4)/Subcase 1", Qualifier::Exact, k - 2);
    if (p < 2.0 * q / (2.0 + q)) {
      if (p <= -1.0) {
        if (p > q / (1.0 - q) && k == 3)
          return make_report(pq, "Case(4)/Subcase 2.1", Qualifier::AtLeast, 2);
        return make_report(pq, "Case(4)/Subcase 2", Qualifier::AtLeast, k - 2);
      }
      return make_report(pq, "Case(4)/Subcase 3", Qualifier::AtLeast, k - 1);
    }
    if (q >= 2.0 * p) return make_report(pq, "Case(4)/Subcase 4", Qualifier::Exact, k - 1);
    return make_report(pq, "Case(4)/Subcase 5", Qualifier::Exact, k);
  }
  // q < 2 together with q - p > 4 forces p < -2.
  if (q > 2.0 * p / (2.0 - p)) {
    if (q >= 1.0) {
      if (q < p / (1.0 + p) && k == 3)
        return make_report(pq, "Case(4)/Subcase 6.1", Qualifier::AtLeast, 2);
      return make_report(pq, "Case(4)/Subcase 6", Qualifier::AtLeast, k - 2);
    }
    return make_report(pq, "Case(4)/Subcase 7", Qualifier::AtLeast, k - 1);
  }
  if (2.0 * q >= p) return make_report(pq, "Case(4)/Subcase 8", Qualifier::Exact, k - 1);
  return make_report(pq, "Case(4)/Subcase 9", Qualifier::Exact, k);
}

ImmersedVerdict classify_immersed(const ExponentPair& pq, int m, int n) {
  if (m < 1 || n < 1 || std::gcd(m, n) != 1)
    throw ParamError("classify_immersed: need positive coprime (m, n)");
  const double p = pq.p, q = pq.q;
  if (p >= q) return {true, false, false, false, "constants only for p >= q"};
  if (is_exceptional_pair(pq))
    return {false, true, true, false, "continuum family at an exceptional pair"};

  const double a = std::sqrt(q - p), b = xi(pq);
  const double ratio = static_cast<double>(m) / n;
  const bool adm = ratio > std::min(a, b) && ratio < std::max(a, b);
  const bool regime = (p <= -2.0 && q >= 2.0) || (p <= -2.0 && q <= 2.0 * p / (2.0 - p)) ||
                      (q >= 2.0 && p >= 2.0 * q / (2.0 + q)) ||
                      (p >= -2.0 && q <= 2.0 && q >= 2.0 * p / (2.0 - p));
  return {false, false, adm, adm && regime,
          adm ? (regime ? "unique up to rotation and scaling" : "existence only")
              : "m/n outside the admissible interval"};
}

Lemma74Verdict lemma74_bound_check(double p, RatioParam r, double x) {
  const double p_max = (std::sqrt(33.0) - 3.0) / 2.0;
  if (!(p > -1.0 && p < p_max))
    throw PreconditionError("lemma74_bound_check: requires -1 < p < (sqrt(33)-3)/2");
  if (!(x > 1.0 && x < r.value))
    throw PreconditionError("lemma74_bound_check: requires 1 < x < r");
  const double q = p + 3.0;
  const double lr = std::log(r.value);
  const auto h = [lr](double s) { return s == 0.0 ? lr : std::expm1(s * lr) / s; };

  const double rv = r.value;
  Lemma74Verdict v;
  v.small_ratio = h(q) / h(p) <= rv * rv;  // p(r^q-1)/(q(r^p-1)) <= r^2
  v.integrand = integrand_raw(ExponentPair{p, q}, r, x);
  v.bound = v.small_ratio ? rv * rv + 1.0 - rv * rv / (x * x) - x * x
                          : rv * rv - 2.0 * rv + 2.0 * x - x * x;
  v.strict_holds = v.integrand < v.bound;
  return v;
}

double lemma74_kernel_integral(int which, RatioParam r) {
  if (which != 1 && which != 2) throw ParamError("lemma74_kernel_integral: which is 1 or 2");
  const double rv = r.value;
  // x = 1 + (r-1) sin^2(phi) removes both square-root endpoints:
  //   J1: dx/sqrt(J1) = 2 x dphi / sqrt((r+x)(x+1))
  //   J2: dx/sqrt(J2) = 2 sin(phi) dphi / sqrt(1 + sin^2(phi))
  const int panels = 64, half = 8;
  static const double gx[half] = {0.0950125098376374, 0.2816035507792589, 0.4580167776572274,
                                  0.6178762444026438, 0.7554044083550030, 0.8656312023878318,
                                  0.9445750230732326, 0.9894009349916499};
  static const double gw[half] = {0.1894506104550685, 0.1826034150449236, 0.1691565193950025,
                                  0.1495959888165767, 0.1246289712555339, 0.0951585116824928,
                                  0.0622535239386479, 0.0271524594117541};
  const auto f = [&](double phi) {
    const double s = std::sin(phi);
    if (which == 2) return 2.0 * s / std::sqrt(1.0 + s * s);
    const double x = 1.0 + (rv - 1.0) * s * s;
    return 2.0 * x / std::sqrt((rv + x) * (x + 1.0));
  };
  double total = 0.0;
  for (int i = 0; i < panels; ++i) {
    const double a = kPi / 2.0 * i / panels, b = kPi / 2.0 * (i + 1) / panels;
    const double mid = 0.5 * (a + b), hw = 0.5 * (b - a);
    double sum = 0.0;
    for (int j = 0; j < half; ++j) sum += gw[j] * (f(mid + hw * gx[j]) + f(mid - hw * gx[j]));
    total += hw * sum;
  }
  return total;
}

CrosscheckReport crosscheck_counts(const ExponentPair& pq, const QuadratureConfig& cfg) {
  if (is_exceptional_pair(pq))
    throw PreconditionError("crosscheck_counts: exceptional pair has a continuum");
  ClassificationReport rep = classify_embedded(pq);
  if (rep.qualifier != Qualifier::Exact)
    throw PreconditionError("crosscheck_counts: qualifier is not Exact");

  int branches = 0;
  if (pq.in_domain_D()) branches = static_cast<int>(enumerate_branches(pq, 1, cfg).size());
  const bool pass = rep.count == 1 + branches;
  if (!pass)
    throw DiscrepancyError("crosscheck_counts: classification says " +
                           std::to_string(rep.count) + " but enumeration found 1 + " +
                           std::to_string(branches) + " at (" + std::to_string(pq.p) + ", " +
                           std::to_string(pq.q) + ")");
  return {std::move(rep), branches, pass};
}

}  // namespace lpdm
