#include "lpdm/io.hpp"

#include <algorithm>
#include <cstdio>
#include <ostream>

#include <json.hpp>

namespace lpdm {

std::string fmt17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void write_curve_csv(std::ostream& os, const SupportProfile& profile, const PlanarCurve& curve) {
  if (profile.size() != curve.points.size())
    throw ParamError("write_curve_csv: profile and curve sample counts differ");
  os << "theta,u,u_theta,x,y\n";
  for (std::size_t i = 0; i < profile.size(); ++i) {
    os << fmt17(profile.thetas[i]) << ',' << fmt17(profile.u[i]) << ','
       << fmt17(profile.u_theta[i]) << ',' << fmt17(curve.points[i][0]) << ','
       << fmt17(curve.points[i][1]) << '\n';
  }
}

void write_curve_svg(std::ostream& os, const PlanarCurve& curve) {
  if (curve.points.empty()) throw ParamError("write_curve_svg: empty curve");
  double x0 = curve.points[0][0], x1 = x0, y0 = curve.points[0][1], y1 = y0;
  for (const auto& pt : curve.points) {
    x0 = std::min(x0, pt[0]);
    x1 = std::max(x1, pt[0]);
    y0 = std::min(y0, pt[1]);
    y1 = std::max(y1, pt[1]);
  }
  const double margin = 0.01 * std::max(x1 - x0, y1 - y0);
  x0 -= margin;
  y0 -= margin;
  const double w = x1 - x0 + margin, hgt = y1 - y0 + margin;

  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
     << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" viewBox=\"" << fmt17(x0)
     << ' ' << fmt17(y0) << ' ' << fmt17(w) << ' ' << fmt17(hgt) << "\">\n<path d=\"";
  for (std::size_t i = 0; i < curve.points.size(); ++i) {
    // Flip y so the curve renders in the usual mathematical orientation.
    os << (i == 0 ? 'M' : 'L') << fmt17(curve.points[i][0]) << ' '
       << fmt17(2.0 * y0 + hgt - curve.points[i][1]);
  }
  if (curve.closed) os << 'Z';
  os << "\" fill=\"none\" stroke=\"black\" stroke-width=\"" << fmt17(0.005 * std::max(w, hgt))
     << "\"/>\n</svg>\n";
}

std::string branches_to_json(const std::vector<SolutionBranch>& branches) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& b : branches) {
    arr.push_back({{"p", b.pq.p},
                   {"q", b.pq.q},
                   {"n", b.n},
                   {"m", b.m},
                   {"r_root", b.r_root},
                   {"theta_target", b.theta_target},
                   {"residual", b.residual},
                   {"certified", b.certified}});
  }
  return arr.dump(2);
}

}  // namespace lpdm
