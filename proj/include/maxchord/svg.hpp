#pragma once

#include "maxchord/diagram.hpp"

#include <string>

namespace maxchord {

enum class AxisOption { none, type1, type2 };

// Circle with 2n evenly spaced points labelled 1..2n (point 0 on top,
// clockwise), chords as straight segments, optional dashed symmetry axis.
std::string render_svg(const ChordDiagram& d, AxisOption axis = AxisOption::none);

} // namespace maxchord
