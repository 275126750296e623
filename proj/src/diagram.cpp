#include "atq/diagram.hpp"

#include <algorithm>
#include <set>

#include "atq/errors.hpp"

namespace atq {

namespace {

Rational dot(const RatVec2& a, const RatVec2& b)
{
    return a.x() * b.x() + a.y() * b.y();
}

bool on_open_segment(const RatPoint& p, const RatPoint& a, const RatPoint& b)
{
    if (cross(b - a, p - a) != 0)
        return false;
    return dot(p - a, b - a) > 0 && dot(p - b, a - b) > 0;
}

// Open segments share a point iff they cross properly or overlap along a
// common line. An endpoint touching the other segment does not count, both
// sets being open; node-on-cut incidences are tested separately.
bool open_segments_intersect(const RatPoint& a1, const RatPoint& b1,
                             const RatPoint& a2, const RatPoint& b2)
{
    const Rational d1 = cross(b1 - a1, a2 - a1);
    const Rational d2 = cross(b1 - a1, b2 - a1);
    const Rational d3 = cross(b2 - a2, a1 - a2);
    const Rational d4 = cross(b2 - a2, b1 - a2);
    if (((d1 > 0 && d2 < 0) || (d1 < 0 && d2 > 0))
        && ((d3 > 0 && d4 < 0) || (d3 < 0 && d4 > 0)))
        return true;
    if (d1 == 0 && d2 == 0 && d3 == 0 && d4 == 0) {
        const RatVec2 dir = b1 - a1;
        const bool use_x = dir.x() != 0;
        auto coord = [use_x](const RatPoint& p) {
            return use_x ? p.x() : p.y();
        };
        Rational lo1 = std::min(coord(a1), coord(b1));
        Rational hi1 = std::max(coord(a1), coord(b1));
        Rational lo2 = std::min(coord(a2), coord(b2));
        Rational hi2 = std::max(coord(a2), coord(b2));
        return std::max(lo1, lo2) < std::min(hi1, hi2);
    }
    return false;
}

bool is_traded(const Diagram& d, std::size_t vertex)
{
    return std::find(d.traded_vertices.begin(), d.traded_vertices.end(),
                     vertex)
        != d.traded_vertices.end();
}

// First collision between the candidate node and the existing ones, as a
// human-readable description; empty when clear.
std::string cut_collision_detail(const std::vector<Node>& nodes,
                                 const Node& cand,
                                 std::size_t skip_index)
{
    for (std::size_t j = 0; j < nodes.size(); ++j) {
        if (j == skip_index)
            continue;
        const Node& other = nodes[j];
        if (same_point(cand.position, other.position))
            return "another node already sits at that position";
        if (on_open_segment(other.position, cand.cut_anchor, cand.position))
            return "the new cut would pass through node "
                + std::to_string(j);
        if (on_open_segment(cand.position, other.cut_anchor, other.position))
            return "the node would land on the cut of node "
                + std::to_string(j);
        if (open_segments_intersect(cand.cut_anchor, cand.position,
                                    other.cut_anchor, other.position))
            return "the cut would cross the cut of node " + std::to_string(j);
    }
    return std::string();
}

}  // namespace

Rational cut_parameter(const Node& n)
{
    const RatVec2 delta = n.position - n.cut_anchor;
    if (n.eigenline.p() != 0)
        return delta.x() / Rational(n.eigenline.p());
    return delta.y() / Rational(n.eigenline.q());
}

std::vector<Violation> validate(const Diagram& d)
{
    std::vector<Violation> out;
    const std::size_t nverts = d.polygon.size();
    for (std::size_t idx : d.traded_vertices)
        if (idx >= nverts)
            out.push_back({"traded_index_out_of_range",
                           "traded vertex " + std::to_string(idx)});
    for (std::size_t i = 0; i < d.nodes.size(); ++i) {
        const Node& n = d.nodes[i];
        const std::string tag = "node " + std::to_string(i);
        if (n.multiplicity < 1)
            out.push_back({"node_multiplicity_not_positive", tag});
        if (locate(d.polygon, n.position) != PointLocation::Interior)
            out.push_back({"node_not_interior", tag});
        const auto anchor_idx = vertex_index(d.polygon, n.cut_anchor);
        if (!anchor_idx) {
            out.push_back({"cut_anchor_not_vertex", tag});
        } else if (!is_traded(d, *anchor_idx)) {
            out.push_back({"cut_anchor_not_traded",
                           tag + " anchored at vertex "
                               + std::to_string(*anchor_idx)});
        }
        const RatVec2 delta = n.position - n.cut_anchor;
        if (cross(delta, to_rat(n.eigenline.vec())) != 0
            || (delta.x() == 0 && delta.y() == 0) || cut_parameter(n) <= 0) {
            out.push_back({"node_not_on_cut_ray", tag});
        }
    }
    for (std::size_t i = 0; i < d.nodes.size(); ++i) {
        for (std::size_t j = i + 1; j < d.nodes.size(); ++j) {
            const Node& a = d.nodes[i];
            const Node& b = d.nodes[j];
            const std::string pair_tag =
                "nodes " + std::to_string(i) + "," + std::to_string(j);
            if (same_point(a.position, b.position)) {
                out.push_back({"duplicate_node_position", pair_tag});
                continue;
            }
            if (on_open_segment(b.position, a.cut_anchor, a.position)
                || on_open_segment(a.position, b.cut_anchor, b.position))
                out.push_back({"node_on_cut", pair_tag});
            if (open_segments_intersect(a.cut_anchor, a.position,
                                        b.cut_anchor, b.position))
                out.push_back({"cuts_cross", pair_tag});
        }
    }
    for (std::size_t i = 0; i < nverts; ++i) {
        if (!is_traded(d, i) && !vertex_is_delzant(d.polygon, i))
            out.push_back({"untraded_vertex_not_delzant",
                           "vertex " + std::to_string(i)});
    }
    return out;
}

Diagram nodal_trade(const Diagram& d, std::size_t vertex, const Rational& t,
                    int multiplicity)
{
    if (vertex >= d.polygon.size())
        throw DomainError("vertex_out_of_range",
                          "vertex index " + std::to_string(vertex));
    if (is_traded(d, vertex))
        throw DomainError("vertex_already_traded",
                          "vertex " + std::to_string(vertex));
    if (!vertex_is_delzant(d.polygon, vertex))
        throw DomainError("vertex_not_delzant",
                          "vertex " + std::to_string(vertex));
    if (t <= 0)
        throw DomainError("trade_parameter_not_positive",
                          "t = " + format_rational(t));
    if (multiplicity < 1)
        throw DomainError("node_multiplicity_not_positive",
                          "multiplicity " + std::to_string(multiplicity));
    const auto [u, w] = corner_directions(d.polygon, vertex);
    const PrimitiveVector eigenline =
        PrimitiveVector::reduced(u.p() + w.p(), u.q() + w.q());
    const RatPoint anchor = d.polygon.vertex(vertex);
    Node node{anchor + t * to_rat(eigenline.vec()), eigenline, multiplicity,
              anchor};
    if (locate(d.polygon, node.position) != PointLocation::Interior)
        throw DomainError("node_not_interior",
                          "t = " + format_rational(t)
                              + " puts the node outside the open polygon");
    const std::string collision =
        cut_collision_detail(d.nodes, node, d.nodes.size());
    if (!collision.empty())
        throw DomainError("cut_collision", collision);
    Diagram out = d;
    out.nodes.push_back(std::move(node));
    out.traded_vertices.push_back(vertex);
    std::sort(out.traded_vertices.begin(), out.traded_vertices.end());
    return out;
}

Diagram nodal_slide(const Diagram& d, std::size_t node_index,
                    const Rational& new_t)
{
    if (node_index >= d.nodes.size())
        throw DomainError("node_out_of_range",
                          "node index " + std::to_string(node_index));
    if (new_t <= 0)
        throw DomainError("slide_parameter_not_positive",
                          "t = " + format_rational(new_t));
    Node moved = d.nodes[node_index];
    moved.position = moved.cut_anchor + new_t * to_rat(moved.eigenline.vec());
    if (locate(d.polygon, moved.position) != PointLocation::Interior)
        throw DomainError("node_not_interior",
                          "t = " + format_rational(new_t)
                              + " puts the node outside the open polygon");
    const std::string collision =
        cut_collision_detail(d.nodes, moved, node_index);
    if (!collision.empty())
        throw DomainError("cut_collision", collision);
    Diagram out = d;
    out.nodes[node_index] = std::move(moved);
    return out;
}

UnimodularMatrix monodromy(const Node& n)
{
    const Integer p = n.eigenline.p();
    const Integer q = n.eigenline.q();
    const Integer k = n.multiplicity;
    return UnimodularMatrix(1 - k * p * q, k * p * p, -k * q * q,
                            1 + k * p * q);
}

ClosedBase symplectic_sum(const Diagram& a, const Diagram& b,
                          bool prequantum_compatible, std::string tag)
{
    for (const Diagram* d : {&a, &b}) {
        const std::vector<Violation> report = validate(*d);
        if (!report.empty())
            throw DomainError("invalid_diagram", report.front().code + ": "
                                                     + report.front().detail);
        for (std::size_t i = 0; i < d->polygon.size(); ++i)
            if (!is_traded(*d, i))
                throw DomainError(
                    "untraded_vertex",
                    "vertex " + std::to_string(i)
                        + " still has a corner; the boundary is not a smooth "
                          "torus bundle");
    }
    const Rational pa = affine_perimeter(a.polygon);
    const Rational pb = affine_perimeter(b.polygon);
    if (pa != pb)
        throw DomainError("perimeter_mismatch",
                          format_rational(pa) + " vs " + format_rational(pb));
    if (!prequantum_compatible)
        throw DomainError("prequantum_incompatible",
                          "pre-quantum restrictions declared incompatible");
    ClosedBase out{a, b,
                   "symplectic sum along the boundary torus bundles; "
                   "affine perimeter "
                       + format_rational(pa),
                   tag};
    return out;
}

Diagram apply_unimodular(const Diagram& d, const UnimodularMatrix& A,
                         const RatVec2& t)
{
    Diagram out{apply_unimodular(d.polygon, A, t), {}, {}};
    out.nodes.reserve(d.nodes.size());
    for (const Node& n : d.nodes) {
        const IntVec2 e = A.apply(n.eigenline.vec());
        out.nodes.push_back(Node{A.apply(n.position) + t,
                                 PrimitiveVector(e.x(), e.y()),
                                 n.multiplicity, A.apply(n.cut_anchor) + t});
    }
    for (std::size_t idx : d.traded_vertices) {
        const RatPoint moved = A.apply(d.polygon.vertex(idx)) + t;
        const auto new_idx = vertex_index(out.polygon, moved);
        if (new_idx)
            out.traded_vertices.push_back(*new_idx);
    }
    std::sort(out.traded_vertices.begin(), out.traded_vertices.end());
    return out;
}

}  // namespace atq
