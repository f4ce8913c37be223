#pragma once

#include <string>

#include "cevian/construction.hpp"

namespace cevian {

/// SVG 1.1 figure of the configuration in its Cartesian frame: the
/// triangle, the cevian triangle, the circumcircle, the inconic and the
/// circumconic with center O, and the main named points.
///
/// Each conic is traced by a pencil of 128 lines through one of its own
/// points, taking exact second intersections; floats appear only when
/// coordinates are written out. The viewport is fitted to the triangle.
std::string render_svg(const CevianConfig& cfg);

}  // namespace cevian
