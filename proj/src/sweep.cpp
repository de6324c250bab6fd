#include "lpdm/sweep.hpp"

#include <cmath>
#include <limits>
#include <ostream>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "lpdm/io.hpp"
#include "lpdm/period.hpp"

namespace lpdm {

namespace {

std::vector<SweepCell> sweep_region(const SweepSpec& spec, bool parallel) {
  spec.validate();
  const int res = spec.resolution;
  std::vector<SweepCell> cells(static_cast<std::size_t>(res) * res,
                               SweepCell{0.0, 0.0, ClassificationReport{}});
#ifdef _OPENMP
#pragma omp parallel for schedule(static) if (parallel)
#else
  (void)parallel;
#endif
  for (int qi = 0; qi < res; ++qi) {
    const double q = spec.q_min + (spec.q_max - spec.q_min) * qi / (res - 1);
    for (int pi = 0; pi < res; ++pi) {
      const double p = spec.p_min + (spec.p_max - spec.p_min) * pi / (res - 1);
      cells[static_cast<std::size_t>(qi) * res + pi] = {p, q, classify_embedded({p, q})};
    }
  }
  return cells;
}

std::vector<double> theta_grid(const std::vector<double>& ps, const std::vector<double>& qs,
                               double r, const QuadratureConfig& cfg, bool parallel) {
  std::vector<double> out(ps.size() * qs.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) if (parallel)
#else
  (void)parallel;
#endif
  for (int qi = 0; qi < static_cast<int>(qs.size()); ++qi) {
    for (std::size_t pi = 0; pi < ps.size(); ++pi) {
      const ExponentPair pq{ps[pi], qs[qi]};
      out[qi * ps.size() + pi] = pq.in_domain_D()
                                     ? theta(pq, RatioParam(r), cfg).theta
                                     : std::numeric_limits<double>::quiet_NaN();
    }
  }
  return out;
}

}  // namespace

std::vector<SweepCell> sweep_region_serial(const SweepSpec& spec) {
  return sweep_region(spec, false);
}

std::vector<SweepCell> sweep_region_parallel(const SweepSpec& spec) {
  return sweep_region(spec, true);
}

void write_sweep_csv(std::ostream& os, const std::vector<SweepCell>& cells) {
  os << "p,q,case_path,qualifier,count,xi\n";
  for (const auto& c : cells) {
    os << fmt17(c.p) << ',' << fmt17(c.q) << ',' << c.report.case_path << ','
       << qualifier_name(c.report.qualifier) << ',' << c.report.count << ','
       << (std::isnan(c.report.xi) ? std::string("nan") : fmt17(c.report.xi)) << '\n';
  }
}

std::vector<double> theta_grid_serial(const std::vector<double>& ps,
                                      const std::vector<double>& qs, double r,
                                      const QuadratureConfig& cfg) {
  return theta_grid(ps, qs, r, cfg, false);
}

std::vector<double> theta_grid_parallel(const std::vector<double>& ps,
                                        const std::vector<double>& qs, double r,
                                        const QuadratureConfig& cfg) {
  return theta_grid(ps, qs, r, cfg, true);
}

}  // namespace lpdm
