#pragma once

// g-vector scatter data: every distinct g-vector up to a tree depth,
// projected onto the plane x + y + z = 1.

#include <array>
#include <string>
#include <vector>

#include "markov/bigint.hpp"

namespace markov {

inline constexpr unsigned kPlotDepthCap = 14;

struct GVectorPoint {
  std::array<BigInt, 3> g;
  double px = 0.0;
  double py = 0.0;
};

/// Distinct g-vector columns of all triples up to `depth`, in ascending
/// lexicographic order. Throws Errc::DepthTooLarge past kPlotDepthCap.
std::vector<GVectorPoint> collect_gvectors(unsigned depth);

/// Coordinates of p - (1/3, 1/3, 1/3) in the basis u = (1,-1,0)/sqrt 2,
/// v = (1,1,-2)/sqrt 6.
std::array<double, 2> project_to_plane(const std::array<BigInt, 3>& p);

/// Header "gx,gy,gz,px,py", one row per point.
std::string render_csv(const std::vector<GVectorPoint>& points);

/// One circle per point plus the two axes, with a viewBox fitted to the data.
std::string render_svg(const std::vector<GVectorPoint>& points);

}  // namespace markov
