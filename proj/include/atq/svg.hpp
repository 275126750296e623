#pragma once

#include <string>

#include "atq/diagram.hpp"

namespace atq {

/**
 * Deterministic SVG picture of a base diagram: polygon outline, small dots
 * on boundary lattice points (class "boundary"), filled dots on plain
 * interior lattice points (class "interior"), circled dots on nodes
 * (class "node") with dashed cut segments (class "cut"). The viewBox is the
 * bounding box plus a margin of 1; y points up.
 */
std::string render_svg(const Diagram& d);

// Both halves side by side with a fixed gap.
std::string render_svg(const ClosedBase& c);

}  // namespace atq
