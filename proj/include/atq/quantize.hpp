#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <variant>
#include <vector>

#include "atq/diagram.hpp"
#include "atq/graded.hpp"

namespace atq {

enum class FiberKind { RegularBS, EllipticBoundary, FocusFocusBS, NotBS };

struct BSClass {
    FiberKind kind = FiberKind::NotBS;
    int node_count = 0;  // used by FocusFocusBS only

    friend bool operator==(const BSClass& a, const BSClass& b)
    {
        return a.kind == b.kind && a.node_count == b.node_count;
    }
};

using Classification = std::map<IntVec2, BSClass, LexLessInt>;

/**
 * Classifies the fibers over lattice points of the diagram: interior points
 * are RegularBS unless a node sits there (FocusFocusBS with that node's
 * multiplicity), boundary points are EllipticBoundary. Points absent from
 * the map are NotBS.
 */
Classification classify_fibers(const Diagram& d);

/**
 * Counting rule for the quantization of the diagram's total space, all in
 * degree 2: one finite rank per RegularBS point, multiplicity many smooth
 * copies per FocusFocusBS point, nothing for boundary points.
 */
GradedQuant quantize(const Diagram& d);

// Direct sum over the two halves.
GradedQuant quantize_closed(const ClosedBase& c);

// Twice the polygon area (Liouville volume, 2*pi factors dropped).
Rational symplectic_volume(const RatPolygon& poly);
Rational symplectic_volume(const Diagram& d);
Rational symplectic_volume(const ClosedBase& c);

// Holomorphic-polarization comparison count for a K3-type closed base:
// vol_a/2 + vol_b/2 + 2. Requires tag "k3".
std::int64_t kaehler_dimension_k3(const ClosedBase& c);

// Points x with normal . x >= offset.
struct HalfPlane {
    IntVec2 normal;
    Rational offset;
};

// Momentum-image region of a semitoric system: a bounded polygon or an
// intersection of half-planes (possibly unbounded).
struct SemitoricRegion {
    std::variant<std::vector<HalfPlane>, RatPolygon> shape;
};

struct Window {
    Rational x0, y0, x1, y1;  // x0 <= x1 and y0 <= y1, else the window is empty
};

struct QuantReport {
    std::optional<Classification> classification;
    GradedQuant graded;
    std::optional<Rational> symplectic_volume;
    std::optional<std::int64_t> kaehler_dimension;
    bool truncated = false;
};

/**
 * Classifies and counts lattice points of region-inside-window; the window
 * only restricts enumeration, membership and boundary tests use the region.
 * Nodes at interior lattice points classify FocusFocusBS. The truncated
 * flag records, exactly, that the region is not contained in the window.
 * Throws DomainError("empty_window") when x0 > x1 or y0 > y1.
 */
QuantReport quantize_semitoric(const SemitoricRegion& region,
                               const std::vector<Node>& nodes,
                               const Window& window);

// Full reports for the CLI.
QuantReport report_for(const Diagram& d);
QuantReport report_for(const ClosedBase& c);

}  // namespace atq
