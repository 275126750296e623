#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "atq/polygon.hpp"

namespace atq {

/**
 * Focus-focus marker in a base diagram. The branch cut runs from cut_anchor
 * (a former Delzant vertex on the boundary) to the node position along the
 * eigenline: position = cut_anchor + t * eigenline with rational t > 0.
 * Fibers over several coinciding pinch points are modeled by multiplicity,
 * not by stacked records.
 */
struct Node {
    RatPoint position;
    PrimitiveVector eigenline;
    int multiplicity = 1;
    RatPoint cut_anchor;
};

/**
 * Almost toric base diagram: a convex polygon, focus-focus nodes, and the
 * set of vertex indices whose corners have been traded away. The struct is
 * freely constructible so that files can be loaded and then checked;
 * validate() reports every violated invariant.
 */
struct Diagram {
    RatPolygon polygon;
    std::vector<Node> nodes;
    std::vector<std::size_t> traded_vertices;  // sorted, unique
};

struct Violation {
    std::string code;
    std::string detail;
};

/**
 * Invariant report, empty iff the diagram is well formed:
 *  - node positions strictly interior, pairwise distinct,
 *  - each node on its cut ray (position = anchor + t*eigenline, t > 0),
 *  - each cut_anchor a polygon vertex listed in traded_vertices,
 *  - open cuts contain no other node and pairwise share no point,
 *  - untraded vertices Delzant, traded indices in range,
 *  - multiplicities positive.
 */
std::vector<Violation> validate(const Diagram& d);

// Ray parameter of a node: position = cut_anchor + t * eigenline.
Rational cut_parameter(const Node& n);

/**
 * Nodal trade: absorbs the Delzant corner at the given vertex into a new
 * focus-focus node at v + t*(u+w), where u, w are the outgoing primitive
 * edge directions; u+w is reduced to primitive form and becomes the
 * eigenline, v the cut anchor. The polygon is unchanged, the vertex is
 * marked traded. Throws when the vertex is already traded, not Delzant, or
 * the new node would be outside or collide with existing cuts.
 */
Diagram nodal_trade(const Diagram& d, std::size_t vertex, const Rational& t,
                    int multiplicity = 1);

// Moves node node_index to cut_anchor + new_t * eigenline. Everything else
// is untouched; interiority and cut disjointness are rechecked.
Diagram nodal_slide(const Diagram& d, std::size_t node_index,
                    const Rational& new_t);

/**
 * Monodromy of the torus fibration around a node with eigenline (p,q) and
 * multiplicity k:  I + k * [[-pq, p^2], [-q^2, pq]].
 * Fixes the eigenline, det 1, trace 2.
 */
UnimodularMatrix monodromy(const Node& n);

/**
 * Two half-diagrams glued along their boundary torus fibrations. The tag
 * marks special total spaces ("k3"); gluing_note records provenance.
 */
struct ClosedBase {
    Diagram half_a;
    Diagram half_b;
    std::string gluing_note;
    std::string tag;
};

/**
 * Glues two fully traded diagrams along their boundaries. Requires every
 * vertex of both polygons traded (no corners left, so each boundary is a
 * smooth torus bundle), equal boundary affine perimeters, and the caller's
 * assertion that the pre-quantum data restrict compatibly.
 */
ClosedBase symplectic_sum(const Diagram& a, const Diagram& b,
                          bool prequantum_compatible = true,
                          std::string tag = std::string());

// x -> A x + t on the polygon, node positions, anchors and eigenlines.
// Traded indices are remapped to the transformed polygon's canonical order.
Diagram apply_unimodular(const Diagram& d, const UnimodularMatrix& A,
                         const RatVec2& t);

}  // namespace atq
