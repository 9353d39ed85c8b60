#ifndef GRIDFARY_SVG_H
#define GRIDFARY_SVG_H

#include <iosfwd>

#include "gridfary/drawing.h"

namespace gridfary {

/// Presentation-only SVG rendering: grid ruling, vertex dots, edge
/// length labels, original integer coordinates in tooltips. The JSON
/// drawing remains the source of truth.
void write_svg(const Drawing& d, std::ostream& out);

}  // namespace gridfary

#endif
