#ifndef FOURPAGE_CLI_SVG_HPP
#define FOURPAGE_CLI_SVG_HPP

#include <string>

#include "fourpage/binding.hpp"
#include "fourpage/ribbon.hpp"

namespace fourpage::cli {

// Binding circle with equally spaced binding points in cyclic order. Inside
// arcs are drawn as chords, outside arcs loop around the circle; colour marks
// the page and under-arcs are dashed. SVG 1.1.
std::string presentation_svg(const CircularPresentation& p);

// The ribbon schematic: squares on the axis, fold diagonals, page lanes.
std::string ribbon_svg(const Schematic& s);

}  // namespace fourpage::cli

#endif  // FOURPAGE_CLI_SVG_HPP
