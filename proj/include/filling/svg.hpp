#ifndef FILLING_SVG_HPP
#define FILLING_SVG_HPP

#include <string>

#include "filling/verifier.hpp"

namespace filling {

/// SVG 1.1 drawing of the polygon decomposition: one regular polygon per face
/// laid out left to right, every edge labelled outside with its face-word
/// token, an arrow at 58% of each edge following the arc's own orientation,
/// and a dot in each punctured face. Bigons are drawn as lenses.
std::string render_svg(GluedSurface const &surface);

} // namespace filling

#endif // FILLING_SVG_HPP
