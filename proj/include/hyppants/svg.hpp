#pragma once

#include <string>
#include <vector>

#include "hyppants/curve_system.hpp"

namespace hyppants {

// SVG 1.1 drawing of the polygon in the Poincare disk. Edges and the given
// curves are drawn as geodesic arcs; corners are coloured by vertex orbit.
std::string polygon_svg(const CurveSystem& cs, const std::vector<CurveSpec>& curves = {});

// Path data "M x y A r r 0 0 s x y" for the geodesic from p to q, in a
// canvas where the unit disk has centre (c, c) and radius `scale`.
std::string geodesic_path(const PlanePoint& p, const PlanePoint& q, double c, double scale);

}  // namespace hyppants
