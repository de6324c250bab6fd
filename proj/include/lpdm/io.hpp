#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "lpdm/branches.hpp"
#include "lpdm/reconstruct.hpp"

namespace lpdm {

/// Decimal with 17 significant digits: doubles round-trip losslessly.
std::string fmt17(double v);

/// CSV with header theta,u,u_theta,x,y; one sample per line.
void write_curve_csv(std::ostream& os, const SupportProfile& profile, const PlanarCurve& curve);

/// SVG 1.1, a single path fit to the bounding box with a 1% margin.
void write_curve_svg(std::ostream& os, const PlanarCurve& curve);

/// JSON array of branches (snake_case keys).
std::string branches_to_json(const std::vector<SolutionBranch>& branches);

}  // namespace lpdm
