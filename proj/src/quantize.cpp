#include "atq/quantize.hpp"

#include <algorithm>
#include <optional>

#include "atq/errors.hpp"

namespace atq {

namespace {

std::map<IntVec2, int, LexLessInt> integral_node_multiplicities(
    const std::vector<Node>& nodes)
{
    std::map<IntVec2, int, LexLessInt> out;
    for (const Node& n : nodes) {
        if (!is_integral(n.position.x()) || !is_integral(n.position.y()))
            continue;
        const IntVec2 p = (IntVec2() << numerator(n.position.x()),
                           numerator(n.position.y()))
                              .finished();
        out[p] += n.multiplicity;
    }
    return out;
}

}  // namespace

Classification classify_fibers(const Diagram& d)
{
    const auto node_mult = integral_node_multiplicities(d.nodes);
    const LatticePartition parts = lattice_points(d.polygon);
    Classification out;
    for (const IntVec2& p : parts.interior) {
        const auto it = node_mult.find(p);
        if (it != node_mult.end())
            out[p] = {FiberKind::FocusFocusBS, it->second};
        else
            out[p] = {FiberKind::RegularBS, 0};
    }
    for (const IntVec2& p : parts.boundary)
        out[p] = {FiberKind::EllipticBoundary, 0};
    return out;
}

GradedQuant quantize(const Diagram& d)
{
    GradedQuant out;
    for (const auto& [point, cls] : classify_fibers(d)) {
        if (cls.kind == FiberKind::RegularBS)
            out.add(2, 1, 0);
        else if (cls.kind == FiberKind::FocusFocusBS)
            out.add(2, 0, cls.node_count);
    }
    return out;
}

GradedQuant quantize_closed(const ClosedBase& c)
{
    return quantize(c.half_a) + quantize(c.half_b);
}

Rational symplectic_volume(const RatPolygon& poly)
{
    return 2 * area(poly);
}

Rational symplectic_volume(const Diagram& d)
{
    return symplectic_volume(d.polygon);
}

Rational symplectic_volume(const ClosedBase& c)
{
    return symplectic_volume(c.half_a) + symplectic_volume(c.half_b);
}

std::int64_t kaehler_dimension_k3(const ClosedBase& c)
{
    if (c.tag != "k3")
        throw DomainError("not_k3",
                          "closed base is not tagged as a K3 total space");
    const Rational dim = symplectic_volume(c.half_a) / 2
        + symplectic_volume(c.half_b) / 2 + 2;
    if (!is_integral(dim))
        throw DomainError("not_integral",
                          "dimension formula gave " + format_rational(dim));
    return numerator(dim).convert_to<std::int64_t>();
}

namespace {

PointLocation locate_region(const SemitoricRegion& region, const RatPoint& p)
{
    if (const auto* poly = std::get_if<RatPolygon>(&region.shape))
        return locate(*poly, p);
    const auto& planes = std::get<std::vector<HalfPlane>>(region.shape);
    bool on_edge = false;
    for (const HalfPlane& h : planes) {
        const Rational v = Rational(h.normal.x()) * p.x()
            + Rational(h.normal.y()) * p.y() - h.offset;
        if (v < 0)
            return PointLocation::Outside;
        if (v == 0)
            on_edge = true;
    }
    return on_edge ? PointLocation::Boundary : PointLocation::Interior;
}

// 1D system b*y >= c.
struct LineConstraint {
    Rational b, c;
};

bool feasible_1d(const std::vector<LineConstraint>& cs)
{
    std::optional<Rational> lo, hi;
    for (const LineConstraint& lc : cs) {
        if (lc.b == 0) {
            if (lc.c > 0)
                return false;
        } else if (lc.b > 0) {
            const Rational bound = lc.c / lc.b;
            if (!lo || bound > *lo)
                lo = bound;
        } else {
            const Rational bound = lc.c / lc.b;
            if (!hi || bound < *hi)
                hi = bound;
        }
    }
    return !lo || !hi || *lo <= *hi;
}

// Fourier-Motzkin elimination of x from a*x + b*y >= c.
bool feasible(const std::vector<HalfPlane>& planes)
{
    std::vector<LineConstraint> ys;
    std::vector<const HalfPlane*> pos, neg;
    for (const HalfPlane& h : planes) {
        const Rational a(h.normal.x());
        if (a > 0)
            pos.push_back(&h);
        else if (a < 0)
            neg.push_back(&h);
        else
            ys.push_back({Rational(h.normal.y()), h.offset});
    }
    for (const HalfPlane* p : pos) {
        for (const HalfPlane* n : neg) {
            const Rational ap(p->normal.x()), bp(p->normal.y());
            const Rational an(n->normal.x()), bn(n->normal.y());
            // lower bound (cp - bp*y)/ap must not exceed upper bound
            // (cn - bn*y)/an; multiplying by ap*an < 0 flips the inequality.
            ys.push_back({bn * ap - bp * an, n->offset * ap - p->offset * an});
        }
    }
    return feasible_1d(ys);
}

bool recession_cone_nontrivial(const std::vector<HalfPlane>& planes)
{
    if (planes.empty())
        return true;
    std::vector<IntVec2> candidates;
    for (const HalfPlane& h : planes) {
        const IntVec2& a = h.normal;
        candidates.push_back(a);
        candidates.push_back(-a);
        candidates.push_back((IntVec2() << -a.y(), a.x()).finished());
        candidates.push_back((IntVec2() << a.y(), -a.x()).finished());
    }
    for (const IntVec2& d : candidates) {
        if (d.x() == 0 && d.y() == 0)
            continue;
        bool inside = true;
        for (const HalfPlane& h : planes)
            if (h.normal.x() * d.x() + h.normal.y() * d.y() < 0) {
                inside = false;
                break;
            }
        if (inside)
            return true;
    }
    return false;
}

bool in_window(const RatPoint& p, const Window& w)
{
    return p.x() >= w.x0 && p.x() <= w.x1 && p.y() >= w.y0 && p.y() <= w.y1;
}

bool region_exceeds_window(const SemitoricRegion& region, const Window& w)
{
    if (const auto* poly = std::get_if<RatPolygon>(&region.shape)) {
        for (const RatPoint& v : poly->vertices())
            if (!in_window(v, w))
                return true;
        return false;
    }
    const auto& planes = std::get<std::vector<HalfPlane>>(region.shape);
    if (!feasible(planes))
        return false;
    if (recession_cone_nontrivial(planes))
        return true;
    // Bounded and nonempty: contained in the window iff every vertex is.
    for (std::size_t i = 0; i < planes.size(); ++i) {
        for (std::size_t j = i + 1; j < planes.size(); ++j) {
            const Integer det = cross(planes[i].normal, planes[j].normal);
            if (det == 0)
                continue;
            const Rational x = (planes[i].offset * Rational(planes[j].normal.y())
                                - planes[j].offset
                                    * Rational(planes[i].normal.y()))
                / Rational(det);
            const Rational y = (planes[j].offset * Rational(planes[i].normal.x())
                                - planes[i].offset
                                    * Rational(planes[j].normal.x()))
                / Rational(det);
            const RatPoint p(x, y);
            if (locate_region(region, p) == PointLocation::Outside)
                continue;
            if (!in_window(p, w))
                return true;
        }
    }
    return false;
}

}  // namespace

QuantReport quantize_semitoric(const SemitoricRegion& region,
                               const std::vector<Node>& nodes,
                               const Window& window)
{
    if (window.x0 > window.x1 || window.y0 > window.y1)
        throw DomainError("empty_window", "window has no points");
    const auto node_mult = integral_node_multiplicities(nodes);
    QuantReport report;
    Classification cls;
    for (Integer x = rat_ceil(window.x0); x <= rat_floor(window.x1); ++x) {
        for (Integer y = rat_ceil(window.y0); y <= rat_floor(window.y1); ++y) {
            const IntVec2 ip = (IntVec2() << x, y).finished();
            const RatPoint p{Rational(x), Rational(y)};
            const PointLocation loc = locate_region(region, p);
            const auto node_it = node_mult.find(ip);
            if (loc == PointLocation::Interior) {
                if (node_it != node_mult.end()) {
                    cls[ip] = {FiberKind::FocusFocusBS, node_it->second};
                    report.graded.add(2, 0, node_it->second);
                } else {
                    cls[ip] = {FiberKind::RegularBS, 0};
                    report.graded.add(2, 1, 0);
                }
            } else if (loc == PointLocation::Boundary) {
                if (node_it != node_mult.end())
                    throw DomainError("node_not_interior",
                                      "node on the region boundary");
                cls[ip] = {FiberKind::EllipticBoundary, 0};
            }
        }
    }
    report.classification = std::move(cls);
    if (const auto* poly = std::get_if<RatPolygon>(&region.shape))
        report.symplectic_volume = symplectic_volume(*poly);
    report.truncated = region_exceeds_window(region, window);
    return report;
}

QuantReport report_for(const Diagram& d)
{
    QuantReport report;
    report.classification = classify_fibers(d);
    report.graded = quantize(d);
    report.symplectic_volume = symplectic_volume(d);
    report.truncated = false;
    return report;
}

QuantReport report_for(const ClosedBase& c)
{
    QuantReport report;
    report.graded = quantize_closed(c);
    report.symplectic_volume = symplectic_volume(c);
    if (c.tag == "k3")
        report.kaehler_dimension = kaehler_dimension_k3(c);
    report.truncated = false;
    return report;
}

}  // namespace atq
