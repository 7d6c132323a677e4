#include "markov/plot.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <set>

#include "markov/closedform.hpp"

namespace markov {

std::vector<GVectorPoint> collect_gvectors(unsigned depth) {
  std::set<std::array<BigInt, 3>> seen;
  for (const auto& entry : enumerate(depth, kPlotDepthCap)) {
    const GMatrix g = g_matrix(entry.triple);
    for (std::size_t c = 0; c < 3; ++c) seen.insert(g.column(c));
  }
  std::vector<GVectorPoint> points;
  points.reserve(seen.size());
  for (const auto& g : seen) {
    const auto [px, py] = project_to_plane(g);
    points.push_back({g, px, py});
  }
  return points;
}

std::array<double, 2> project_to_plane(const std::array<BigInt, 3>& p) {
  const double x = p[0].convert_to<double>() - 1.0 / 3.0;
  const double y = p[1].convert_to<double>() - 1.0 / 3.0;
  const double z = p[2].convert_to<double>() - 1.0 / 3.0;
  return {(x - y) / std::sqrt(2.0), (x + y - 2.0 * z) / std::sqrt(6.0)};
}

namespace {

std::string fixed(double v, int digits = 6) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, v);
  std::string s = buf;
  if (s == "-0.000000") s = "0.000000";
  return s;
}

}  // namespace

std::string render_csv(const std::vector<GVectorPoint>& points) {
  std::string out = "gx,gy,gz,px,py\n";
  for (const auto& p : points) {
    out += p.g[0].str() + "," + p.g[1].str() + "," + p.g[2].str() + "," + fixed(p.px) + "," +
           fixed(p.py) + "\n";
  }
  return out;
}

std::string render_svg(const std::vector<GVectorPoint>& points) {
  double min_x = -1.0, max_x = 1.0, min_y = -1.0, max_y = 1.0;
  for (const auto& p : points) {
    min_x = std::min(min_x, p.px);
    max_x = std::max(max_x, p.px);
    min_y = std::min(min_y, p.py);
    max_y = std::max(max_y, p.py);
  }
  const double pad = 0.05 * std::max(max_x - min_x, max_y - min_y);
  min_x -= pad;
  max_x += pad;
  min_y -= pad;
  max_y += pad;
  const double radius = 0.004 * std::max(max_x - min_x, max_y - min_y);
  const double stroke = radius / 2.0;

  // SVG's y axis points down; flip so the picture reads like the plane.
  std::string out = "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" + fixed(min_x) + " " +
                    fixed(-max_y) + " " + fixed(max_x - min_x) + " " + fixed(max_y - min_y) +
                    "\">\n";
  out += "<line x1=\"" + fixed(min_x) + "\" y1=\"0.000000\" x2=\"" + fixed(max_x) +
         "\" y2=\"0.000000\" stroke=\"gray\" stroke-width=\"" + fixed(stroke) + "\"/>\n";
  out += "<line x1=\"0.000000\" y1=\"" + fixed(-max_y) + "\" x2=\"0.000000\" y2=\"" +
         fixed(-min_y) + "\" stroke=\"gray\" stroke-width=\"" + fixed(stroke) + "\"/>\n";
  for (const auto& p : points) {
    out += "<circle cx=\"" + fixed(p.px) + "\" cy=\"" + fixed(-p.py) + "\" r=\"" + fixed(radius) +
           "\"><title>" + p.g[0].str() + "," + p.g[1].str() + "," + p.g[2].str() +
           "</title></circle>\n";
  }
  out += "</svg>\n";
  return out;
}

}  // namespace markov
