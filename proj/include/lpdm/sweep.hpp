#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "lpdm/classify.hpp"
#include "lpdm/types.hpp"

namespace lpdm {

struct SweepSpec {
  double p_min, p_max;
  double q_min, q_max;
  int resolution;  // samples per axis

  void validate() const {
    if (!(p_min < p_max) || !(q_min < q_max))
      throw ParamError("SweepSpec: ranges must be nonempty finite intervals");
    if (resolution < 2) throw ParamError("SweepSpec: resolution must be at least 2");
  }
};

struct SweepCell {
  double p, q;
  ClassificationReport report;
};

/// Classification map over the grid, q-major row order.  The serial kernel is
/// the reference; the parallel kernel computes identical cells with OpenMP.
std::vector<SweepCell> sweep_region_serial(const SweepSpec& spec);
std::vector<SweepCell> sweep_region_parallel(const SweepSpec& spec);

void write_sweep_csv(std::ostream& os, const std::vector<SweepCell>& cells);

/// Theta over a (p,q) grid at fixed r (NaN off the domain); benchmark kernel
/// with the same serial/parallel pairing.
std::vector<double> theta_grid_serial(const std::vector<double>& ps,
                                      const std::vector<double>& qs, double r,
                                      const QuadratureConfig& cfg = {});
std::vector<double> theta_grid_parallel(const std::vector<double>& ps,
                                        const std::vector<double>& qs, double r,
                                        const QuadratureConfig& cfg = {});

}  // namespace lpdm
