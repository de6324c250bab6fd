#include <cstdlib>
#include <fstream>
#include <iostream>
#include <numbers>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "lpdm/branches.hpp"
#include "lpdm/classify.hpp"
#include "lpdm/duality.hpp"
#include "lpdm/io.hpp"
#include "lpdm/period.hpp"
#include "lpdm/reconstruct.hpp"
#include "lpdm/sweep.hpp"
#include "lpdm/verify.hpp"

namespace {

using namespace lpdm;

constexpr int kExitDomain = 2;
constexpr int kExitConvergence = 3;
constexpr int kExitNoBranch = 4;
constexpr int kExitOutput = 5;

QuadratureConfig default_config() {
  QuadratureConfig cfg;
  if (const char* env = std::getenv("LPDM_RTOL")) {
    const double v = std::atof(env);
    if (v > 0.0) cfg.rel_tol = v;
  }
  return cfg;
}

std::ofstream open_output(const std::string& path) {
  std::ofstream os(path);
  if (!os) {
    std::cerr << "cannot open output file: " << path << "\n";
    std::exit(kExitOutput);
  }
  return os;
}

int cmd_theta(double p, double q, double r, bool json, bool no_special) {
  QuadratureConfig cfg = default_config();
  cfg.use_exact_special = !no_special;
  const PeriodValue v = theta(ExponentPair{p, q}, RatioParam(r), cfg);
  if (json) {
    nlohmann::json j{{"p", p},
                     {"q", q},
                     {"r", r},
                     {"theta", v.theta},
                     {"err_estimate", v.err_estimate},
                     {"method", to_string(v.method)}};
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "theta = " << fmt17(v.theta) << "\n"
              << "err_estimate = " << fmt17(v.err_estimate) << "\n"
              << "method = " << to_string(v.method) << "\n";
  }
  return 0;
}

nlohmann::json report_to_json(const ClassificationReport& rep) {
  return {{"case_path", rep.case_path},
          {"qualifier", qualifier_name(rep.qualifier)},
          {"count", rep.count},
          {"admissible_k", rep.admissible_k},
          {"xi", rep.xi},
          {"k_bucket", rep.k_bucket}};
}

int cmd_classify(double p, double q, bool json) {
  const ClassificationReport rep = classify_embedded(ExponentPair{p, q});
  if (json) {
    std::cout << report_to_json(rep).dump(2) << "\n";
    return 0;
  }
  std::cout << rep.case_path << ", " << qualifier_name(rep.qualifier);
  if (rep.qualifier == Qualifier::Exact)
    std::cout << " " << rep.count;
  else if (rep.qualifier == Qualifier::AtLeast)
    std::cout << " >= " << rep.count;
  if (!rep.admissible_k.empty()) {
    std::cout << ", k in {";
    for (std::size_t i = 0; i < rep.admissible_k.size(); ++i)
      std::cout << (i ? "," : "") << rep.admissible_k[i];
    std::cout << "}";
  }
  if (rep.k_bucket > 0) std::cout << ", xi = " << fmt17(rep.xi);
  std::cout << "\n";
  return 0;
}

int cmd_branches(double p, double q, int n, const std::string& out) {
  const auto found = enumerate_branches(ExponentPair{p, q}, n, default_config());
  const std::string json = branches_to_json(found);
  if (out.empty()) {
    std::cout << json << "\n";
  } else {
    auto os = open_output(out);
    os << json << "\n";
  }
  return 0;
}

bool ends_with(const std::string& s, const std::string& suffix) {
  return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

int cmd_curve(double p, double q, int m, int n, double lambda, double mu, bool has_lambda,
              bool has_mu, int samples, const std::string& out) {
  const ExponentPair pq{p, q};
  SupportProfile profile{{}, {}, {}, pq, 0.0, 0, 0};

  if (has_lambda || has_mu) {
    ClosedFormParams params{ClosedFamily::Translate12, 0.0, 0.0};
    if (has_lambda && p == 1.0 && q == 2.0)
      params = {ClosedFamily::Translate12, lambda, 0.0};
    else if (has_lambda && p == -2.0 && q == 2.0)
      params = {ClosedFamily::Ellipse2, lambda, 0.0};
    else if (has_mu && p == -2.0 && q == -1.0)
      params = {ClosedFamily::Polar2m1, mu, 0.0};
    else
      throw ParamError("closed-form shapes: --lambda with (1,2) or (-2,2), --mu with (-2,-1)");
    profile = closed_form(params, samples);
  } else {
    const auto found = enumerate_branches(pq, n, default_config());
    const SolutionBranch* pick = nullptr;
    for (const auto& b : found)
      if (b.m == m) pick = &b;
    if (!pick) {
      std::cerr << "no branch with m = " << m << " (n = " << n << ") at (" << p << ", " << q
                << ")\n";
      return kExitNoBranch;
    }
    profile = assemble_closed(integrate_arc(pq, RatioParam(pick->r_root), samples), n, m);
  }

  const PlanarCurve curve = support_to_curve(profile);
  if (out.empty()) {
    write_curve_csv(std::cout, profile, curve);
  } else if (ends_with(out, ".svg")) {
    auto os = open_output(out);
    write_curve_svg(os, curve);
  } else {
    auto os = open_output(out);
    write_curve_csv(os, profile, curve);
  }
  return 0;
}

int cmd_sweep(double p_min, double p_max, double q_min, double q_max, int resolution,
              const std::string& out) {
  const SweepSpec spec{p_min, p_max, q_min, q_max, resolution};
  const auto cells = sweep_region_parallel(spec);
  if (out.empty()) {
    write_sweep_csv(std::cout, cells);
  } else {
    auto os = open_output(out);
    write_sweep_csv(os, cells);
  }
  return 0;
}

int cmd_verify(bool quick, const std::string& check) {
  std::vector<int> which;
  if (!check.empty()) {
    for (int k = 1; k <= criteria_count(); ++k)
      if (criterion_name(k) == check) which.push_back(k);
    if (which.empty()) {
      std::cerr << "unknown check: " << check << "\nknown:";
      for (int k = 1; k <= criteria_count(); ++k) std::cerr << " " << criterion_name(k);
      std::cerr << "\n";
      return 1;
    }
  } else if (quick) {
    which = quick_criteria();
  } else {
    for (int k = 1; k <= criteria_count(); ++k) which.push_back(k);
  }

  bool all_pass = true;
  for (int k : which) {
    for (const CheckResult& res : run_criterion(k)) {
      all_pass = all_pass && res.pass;
      std::cout << (res.pass ? "[PASS] " : "[FAIL] ") << res.id
                << "  observed=" << fmt17(res.observed) << " threshold=" << fmt17(res.threshold);
      if (!res.detail.empty()) std::cout << "  (" << res.detail << ")";
      std::cout << "\n";
    }
  }
  std::cout << (all_pass ? "verification passed" : "verification FAILED") << "\n";
  return all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Period function, solution branches and classification for the planar "
               "isotropic dual Minkowski equation"};
  app.require_subcommand(1);

  double p = 0, q = 0, r = 2, lambda = 0, mu = 0;
  int n = 1, m = 0, samples = 2048, resolution = 65;
  bool json = false, no_special = false, quick = false;
  std::string out, check;
  double p_min = -8, p_max = 8, q_min = -4, q_max = 12;

  auto* th = app.add_subcommand("theta", "evaluate the period function");
  th->add_option("-p", p)->required();
  th->add_option("-q", q)->required();
  th->add_option("-r", r)->required();
  th->add_flag("--json", json);
  th->add_flag("--no-special", no_special, "disable the exact-constant short-circuit");

  auto* cl = app.add_subcommand("classify", "classification of embedded solutions");
  cl->add_option("-p", p)->required();
  cl->add_option("-q", q)->required();
  cl->add_flag("--json", json);

  auto* br = app.add_subcommand("branches", "enumerate roots of theta = pi n / m");
  br->add_option("-p", p)->required();
  br->add_option("-q", q)->required();
  br->add_option("-n", n);
  br->add_option("-o,--output", out);

  auto* cv = app.add_subcommand("curve", "reconstruct a solution curve (CSV or SVG)");
  cv->add_option("-p", p)->required();
  cv->add_option("-q", q)->required();
  auto* opt_m = cv->add_option("-m", m);
  cv->add_option("-n", n);
  auto* opt_lambda = cv->add_option("--lambda", lambda);
  auto* opt_mu = cv->add_option("--mu", mu);
  cv->add_option("--samples", samples);
  cv->add_option("-o,--output", out);

  auto* sw = app.add_subcommand("sweep", "classification map over a (p,q) window");
  sw->add_option("--p-min", p_min);
  sw->add_option("--p-max", p_max);
  sw->add_option("--q-min", q_min);
  sw->add_option("--q-max", q_max);
  sw->add_option("--resolution", resolution, "samples per axis");
  sw->add_option("-o,--output", out);

  auto* vf = app.add_subcommand("verify", "run the verification suite");
  vf->add_flag("--quick", quick, "criteria 1-6 only");
  vf->add_flag("--full", "all criteria (default)");
  vf->add_option("--check", check, "run a single named criterion");

  CLI11_PARSE(app, argc, argv);

  try {
    if (th->parsed()) return cmd_theta(p, q, r, json, no_special);
    if (cl->parsed()) return cmd_classify(p, q, json);
    if (br->parsed()) return cmd_branches(p, q, n, out);
    if (cv->parsed()) {
      if (!*opt_m && !*opt_lambda && !*opt_mu)
        throw ParamError("curve: give -m (branch) or --lambda/--mu (closed form)");
      return cmd_curve(p, q, m, n, lambda, mu, !!*opt_lambda, !!*opt_mu, samples, out);
    }
    if (sw->parsed()) return cmd_sweep(p_min, p_max, q_min, q_max, resolution, out);
    if (vf->parsed()) return cmd_verify(quick, check);
  } catch (const DomainError& e) {
    std::cerr << "domain error: " << e.what() << "\n";
    return kExitDomain;
  } catch (const ConvergenceError& e) {
    std::cerr << "convergence error: " << e.what() << "\n";
    return kExitConvergence;
  } catch (const ExceptionalFamilyError& e) {
    std::cerr << "exceptional family: " << e.what() << "\n";
    return kExitDomain;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
