#pragma once

#include <cmath>
#include <stdexcept>
#include <string>

namespace lpdm {

struct DomainError : std::domain_error {
  using std::domain_error::domain_error;
};
struct ConvergenceError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct BracketError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct ExceptionalFamilyError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct PeriodMismatchError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct ConvexityError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NumericalError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct ParamError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct PreconditionError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct DiscrepancyError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Exponent pair (p,q) of the support-function equation
///   u^{1-p} (u_th^2 + u^2)^{(q-2)/2} (u_thth + u) = 1.
struct ExponentPair {
  double p;
  double q;

  ExponentPair(double p_, double q_) : p(p_), q(q_) {
    if (!std::isfinite(p) || !std::isfinite(q))
      throw DomainError("ExponentPair: p and q must be finite");
  }

  // The domain D = {p < q} on which the period function is defined.
  bool in_domain_D() const { return p < q; }

  bool operator==(const ExponentPair&) const = default;
};

/// Ratio r = u_max / u_min of a non-constant solution arc, r > 1 strictly.
struct RatioParam {
  double value;

  RatioParam(double r) : value(r) {
    if (!(std::isfinite(r) && r > 1.0))
      throw DomainError("RatioParam: requires r > 1");
  }

  operator double() const { return value; }
};

struct QuadratureConfig {
  int base_nodes = 64;
  int max_nodes = 262144;
  double rel_tol = 1e-12;
  double near_one_switch = 1e-4;  // series below r-1 = this threshold
  // Test hooks: the acceptance suite evaluates identities with the
  // short-circuits off so both sides go through the quadrature.
  bool use_exact_special = true;
  bool use_dual_reduction = true;

  void validate() const {
    if (base_nodes < 8 || max_nodes < base_nodes)
      throw ParamError("QuadratureConfig: need base_nodes >= 8 and max_nodes >= base_nodes");
    if (!(rel_tol > 0.0) || !(near_one_switch >= 0.0))
      throw ParamError("QuadratureConfig: tolerances must be positive");
  }
};

enum class ThetaMethod { Quadrature, SeriesNearOne, ExactSpecial };

inline const char* to_string(ThetaMethod m) {
  switch (m) {
    case ThetaMethod::Quadrature: return "quadrature";
    case ThetaMethod::SeriesNearOne: return "series_near_one";
    case ThetaMethod::ExactSpecial: return "exact_special";
  }
  return "?";
}

/// A computed period value with an error estimate and the path that produced it.
struct PeriodValue {
  double theta;
  double err_estimate;
  ThetaMethod method;
};

/// Endpoints u_- and u_+ = r u_- of one monotone arc of the solution.
struct ArcEndpoints {
  double u_minus;
  double u_plus;
};

// The three exceptional pairs with constant period: (1,2), (-2,-1), (-2,2).
inline bool is_exceptional_pair(const ExponentPair& pq) {
  return (pq.p == 1.0 && pq.q == 2.0) || (pq.p == -2.0 && pq.q == -1.0) ||
         (pq.p == -2.0 && pq.q == 2.0);
}

}  // namespace lpdm
