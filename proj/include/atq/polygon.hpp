#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "atq/geometry.hpp"

namespace atq {

/**
 * Convex polygon with rational vertices.
 *
 * Canonical form: vertices counterclockwise, starting at the
 * lexicographically smallest vertex, no three consecutive collinear.
 * Construction rotates the input into canonical form and rejects lists that
 * are not in strictly convex counterclockwise position (at least 3 vertices,
 * every turn a strict left turn, cycle equal to the convex hull of its
 * vertex set).
 */
class RatPolygon {
public:
    explicit RatPolygon(std::vector<RatPoint> vertices);

    const std::vector<RatPoint>& vertices() const noexcept { return vertices_; }
    std::size_t size() const noexcept { return vertices_.size(); }
    const RatPoint& vertex(std::size_t i) const { return vertices_.at(i); }

    friend bool operator==(const RatPolygon& a, const RatPolygon& b);
    friend bool operator!=(const RatPolygon& a, const RatPolygon& b)
    {
        return !(a == b);
    }

private:
    std::vector<RatPoint> vertices_;
};

// Shoelace area; positive for the counterclockwise canonical form.
Rational area(const RatPolygon& poly);

enum class PointLocation { Outside, Boundary, Interior };

// Exact location of a point relative to the polygon.
PointLocation locate(const RatPolygon& poly, const RatPoint& p);

struct LatticePartition {
    std::vector<IntVec2> interior;  // strictly inside, lexicographic order
    std::vector<IntVec2> boundary;  // on an edge or vertex, lexicographic order
};

// Scans the integer bounding box row by row with exact half-plane tests.
LatticePartition lattice_points(const RatPolygon& poly);

// area == interior + boundary/2 - 1 for integral-vertex polygons.
// Throws DomainError("non_integral_vertices") otherwise.
bool pick_check(const RatPolygon& poly);

// Outgoing primitive edge directions at vertex i: first toward the next
// vertex, second toward the previous one.
std::pair<PrimitiveVector, PrimitiveVector> corner_directions(
    const RatPolygon& poly, std::size_t i);

// det(u, w) is a unit at this corner. Works for rational vertices.
bool vertex_is_delzant(const RatPolygon& poly, std::size_t i);

struct VertexSmoothness {
    std::size_t vertex;
    bool delzant;
};

// Per-vertex Delzant verdicts for an integral-vertex polygon.
// Throws DomainError("non_integral_vertices") otherwise.
std::vector<VertexSmoothness> is_delzant(const RatPolygon& poly);

/**
 * Blowup at a Delzant corner: replaces vertex v by v + size*w, v + size*u
 * where u, w are the outgoing primitive edge directions. The cut triangle
 * must not reach either adjacent vertex. Area drops by size^2/2 and both new
 * corners are again Delzant.
 */
RatPolygon corner_chop(const RatPolygon& poly, std::size_t vertex,
                       const Rational& size);

// x -> A x + t on every vertex. Orientation is restored when det A = -1.
RatPolygon apply_unimodular(const RatPolygon& poly, const UnimodularMatrix& A,
                            const RatVec2& t);

// Sum over edges of the lattice length (edge vector = length * primitive
// direction). For integral polygons this is the gcd sum.
Rational affine_perimeter(const RatPolygon& poly);

// Index of an exact vertex match, if any.
std::optional<std::size_t> vertex_index(const RatPolygon& poly,
                                        const RatPoint& p);

}  // namespace atq
