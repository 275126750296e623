#include "atq/polygon.hpp"

#include <algorithm>

#include "atq/errors.hpp"

namespace atq {

namespace {

bool lex_less(const RatPoint& a, const RatPoint& b)
{
    if (a.x() != b.x())
        return a.x() < b.x();
    return a.y() < b.y();
}

// Monotone chain, strict turns only, counterclockwise from the
// lexicographically smallest point.
std::vector<RatPoint> convex_hull(std::vector<RatPoint> pts)
{
    std::sort(pts.begin(), pts.end(), lex_less);
    pts.erase(std::unique(pts.begin(), pts.end(),
                          [](const RatPoint& a, const RatPoint& b) {
                              return same_point(a, b);
                          }),
              pts.end());
    const std::size_t n = pts.size();
    if (n < 3)
        return {};
    std::vector<RatPoint> hull(2 * n);
    std::size_t k = 0;
    for (std::size_t i = 0; i < n; ++i) {
        while (k >= 2
               && cross(hull[k - 1] - hull[k - 2], pts[i] - hull[k - 1]) <= 0)
            --k;
        hull[k++] = pts[i];
    }
    for (std::size_t i = n - 1, lower = k + 1; i-- > 0;) {
        while (k >= lower
               && cross(hull[k - 1] - hull[k - 2], pts[i] - hull[k - 1]) <= 0)
            --k;
        hull[k++] = pts[i];
    }
    hull.resize(k - 1);
    return hull;
}

Rational edge_length_along(const RatVec2& delta, const PrimitiveVector& dir)
{
    if (dir.p() != 0)
        return delta.x() / Rational(dir.p());
    return delta.y() / Rational(dir.q());
}

}  // namespace

RatPolygon::RatPolygon(std::vector<RatPoint> vertices)
    : vertices_(std::move(vertices))
{
    const std::size_t n = vertices_.size();
    if (n < 3)
        throw DomainError("invalid_polygon", "need at least 3 vertices");
    std::size_t lo = 0;
    for (std::size_t i = 1; i < n; ++i)
        if (lex_less(vertices_[i], vertices_[lo]))
            lo = i;
    std::rotate(vertices_.begin(), vertices_.begin() + lo, vertices_.end());
    for (std::size_t i = 0; i < n; ++i) {
        const RatVec2 e1 = vertices_[(i + 1) % n] - vertices_[i];
        const RatVec2 e2 = vertices_[(i + 2) % n] - vertices_[(i + 1) % n];
        if (cross(e1, e2) <= 0)
            throw DomainError(
                "invalid_polygon",
                "vertices are not in strictly convex counterclockwise position");
    }
    // All strict left turns still allow a cycle that winds more than once;
    // the hull of the vertex set settles it.
    const std::vector<RatPoint> hull = convex_hull(vertices_);
    if (hull.size() != n)
        throw DomainError("invalid_polygon",
                          "vertex cycle does not bound a convex polygon");
    for (std::size_t i = 0; i < n; ++i)
        if (!same_point(hull[i], vertices_[i]))
            throw DomainError("invalid_polygon",
                              "vertex cycle does not bound a convex polygon");
}

bool operator==(const RatPolygon& a, const RatPolygon& b)
{
    if (a.vertices_.size() != b.vertices_.size())
        return false;
    for (std::size_t i = 0; i < a.vertices_.size(); ++i)
        if (!same_point(a.vertices_[i], b.vertices_[i]))
            return false;
    return true;
}

Rational area(const RatPolygon& poly)
{
    const auto& v = poly.vertices();
    Rational twice = 0;
    for (std::size_t i = 0; i < v.size(); ++i)
        twice += cross(v[i], v[(i + 1) % v.size()]);
    return twice / 2;
}

PointLocation locate(const RatPolygon& poly, const RatPoint& p)
{
    const auto& v = poly.vertices();
    bool on_edge = false;
    for (std::size_t i = 0; i < v.size(); ++i) {
        const Rational c = cross(v[(i + 1) % v.size()] - v[i], p - v[i]);
        if (c < 0)
            return PointLocation::Outside;
        if (c == 0)
            on_edge = true;
    }
    return on_edge ? PointLocation::Boundary : PointLocation::Interior;
}

LatticePartition lattice_points(const RatPolygon& poly)
{
    const auto& v = poly.vertices();
    Rational xmin = v[0].x(), xmax = v[0].x();
    Rational ymin = v[0].y(), ymax = v[0].y();
    for (const RatPoint& p : v) {
        xmin = std::min(xmin, p.x());
        xmax = std::max(xmax, p.x());
        ymin = std::min(ymin, p.y());
        ymax = std::max(ymax, p.y());
    }
    LatticePartition out;
    // Column-major scan, x then y ascending, is already lexicographic.
    for (Integer x = rat_ceil(xmin); x <= rat_floor(xmax); ++x) {
        for (Integer y = rat_ceil(ymin); y <= rat_floor(ymax); ++y) {
            const RatPoint p{Rational(x), Rational(y)};
            switch (locate(poly, p)) {
            case PointLocation::Interior:
                out.interior.push_back((IntVec2() << x, y).finished());
                break;
            case PointLocation::Boundary:
                out.boundary.push_back((IntVec2() << x, y).finished());
                break;
            case PointLocation::Outside:
                break;
            }
        }
    }
    return out;
}

namespace {

void require_integral(const RatPolygon& poly)
{
    for (const RatPoint& p : poly.vertices())
        if (!is_integral(p.x()) || !is_integral(p.y()))
            throw DomainError("non_integral_vertices",
                              "operation needs integer vertices");
}

}  // namespace

bool pick_check(const RatPolygon& poly)
{
    require_integral(poly);
    const LatticePartition parts = lattice_points(poly);
    const Rational rhs = Rational(Integer(parts.interior.size()))
        + Rational(Integer(parts.boundary.size()), 2) - 1;
    return area(poly) == rhs;
}

std::pair<PrimitiveVector, PrimitiveVector> corner_directions(
    const RatPolygon& poly, std::size_t i)
{
    const auto& v = poly.vertices();
    const std::size_t n = v.size();
    if (i >= n)
        throw DomainError("vertex_out_of_range",
                          "vertex index " + std::to_string(i));
    return {primitive_direction(v[(i + 1) % n] - v[i]),
            primitive_direction(v[(i + n - 1) % n] - v[i])};
}

bool vertex_is_delzant(const RatPolygon& poly, std::size_t i)
{
    const auto [u, w] = corner_directions(poly, i);
    const Integer d = cross(u.vec(), w.vec());
    return d == 1 || d == -1;
}

std::vector<VertexSmoothness> is_delzant(const RatPolygon& poly)
{
    require_integral(poly);
    std::vector<VertexSmoothness> out;
    out.reserve(poly.size());
    for (std::size_t i = 0; i < poly.size(); ++i)
        out.push_back({i, vertex_is_delzant(poly, i)});
    return out;
}

RatPolygon corner_chop(const RatPolygon& poly, std::size_t vertex,
                       const Rational& size)
{
    const auto& v = poly.vertices();
    const std::size_t n = v.size();
    if (vertex >= n)
        throw DomainError("vertex_out_of_range",
                          "vertex index " + std::to_string(vertex));
    if (size <= 0)
        throw DomainError("chop_size_not_positive", "size must be positive");
    if (!vertex_is_delzant(poly, vertex))
        throw DomainError("vertex_not_delzant",
                          "cannot chop a non-Delzant corner");
    const auto [u, w] = corner_directions(poly, vertex);
    const Rational lu =
        edge_length_along(v[(vertex + 1) % n] - v[vertex], u);
    const Rational lw =
        edge_length_along(v[(vertex + n - 1) % n] - v[vertex], w);
    if (size >= lu || size >= lw)
        throw DomainError("chop_too_large",
                          "chop of size " + format_rational(size)
                              + " reaches an adjacent vertex");
    std::vector<RatPoint> out;
    out.reserve(n + 1);
    for (std::size_t i = 0; i < n; ++i) {
        if (i == vertex) {
            out.push_back(v[i] + size * to_rat(w.vec()));
            out.push_back(v[i] + size * to_rat(u.vec()));
        } else {
            out.push_back(v[i]);
        }
    }
    return RatPolygon(std::move(out));
}

RatPolygon apply_unimodular(const RatPolygon& poly, const UnimodularMatrix& A,
                            const RatVec2& t)
{
    std::vector<RatPoint> mapped;
    mapped.reserve(poly.size());
    for (const RatPoint& p : poly.vertices())
        mapped.push_back(A.apply(p) + t);
    if (A.det() < 0)
        std::reverse(mapped.begin(), mapped.end());
    return RatPolygon(std::move(mapped));
}

Rational affine_perimeter(const RatPolygon& poly)
{
    const auto& v = poly.vertices();
    Rational total = 0;
    for (std::size_t i = 0; i < v.size(); ++i) {
        const RatVec2 delta = v[(i + 1) % v.size()] - v[i];
        total += edge_length_along(delta, primitive_direction(delta));
    }
    return total;
}

std::optional<std::size_t> vertex_index(const RatPolygon& poly,
                                        const RatPoint& p)
{
    for (std::size_t i = 0; i < poly.size(); ++i)
        if (same_point(poly.vertex(i), p))
            return i;
    return std::nullopt;
}

}  // namespace atq
