#pragma once

// Independent reference implementations used only by the tests. They avoid
// the library's geometric primitives on purpose: lattice points come from
// row slicing instead of half-plane membership, ranks from plain Gaussian
// elimination over the rationals instead of fraction-free elimination.

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "atq/mv.hpp"
#include "atq/polygon.hpp"

namespace oracle {

struct Pt {
    long long x = 0, y = 0;
    friend bool operator<(const Pt& a, const Pt& b)
    {
        if (a.x != b.x)
            return a.x < b.x;
        return a.y < b.y;
    }
    friend bool operator==(const Pt& a, const Pt& b)
    {
        return a.x == b.x && a.y == b.y;
    }
};

inline long long cross3(const Pt& o, const Pt& a, const Pt& b)
{
    return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

// Monotone chain, strict turns, counterclockwise starting at the
// lexicographically smallest point.
inline std::vector<Pt> hull(std::vector<Pt> pts)
{
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    if (pts.size() < 3)
        return {};
    std::vector<Pt> lower, upper;
    for (const Pt& p : pts) {
        while (lower.size() >= 2
               && cross3(lower[lower.size() - 2], lower.back(), p) <= 0)
            lower.pop_back();
        lower.push_back(p);
    }
    for (auto it = pts.rbegin(); it != pts.rend(); ++it) {
        while (upper.size() >= 2
               && cross3(upper[upper.size() - 2], upper.back(), *it) <= 0)
            upper.pop_back();
        upper.push_back(*it);
    }
    lower.pop_back();
    upper.pop_back();
    lower.insert(lower.end(), upper.begin(), upper.end());
    if (lower.size() < 3)
        return {};
    return lower;
}

struct SliceCounts {
    std::set<Pt> interior;
    std::set<Pt> boundary;
};

// Lattice points of a convex lattice polygon by slicing each horizontal
// row: boundary from gcd steps along edges, interior from the open chord.
inline SliceCounts slice_lattice(const std::vector<Pt>& verts)
{
    using atq::Rational;
    SliceCounts out;
    const std::size_t n = verts.size();
    long long ymin = verts[0].y, ymax = verts[0].y;
    for (const Pt& v : verts) {
        ymin = std::min(ymin, v.y);
        ymax = std::max(ymax, v.y);
    }
    for (std::size_t i = 0; i < n; ++i) {
        const Pt a = verts[i];
        const Pt b = verts[(i + 1) % n];
        const long long dx = b.x - a.x, dy = b.y - a.y;
        const long long g = std::gcd(std::abs(dx), std::abs(dy));
        for (long long s = 0; s < g; ++s)
            out.boundary.insert(Pt{a.x + s * (dx / g), a.y + s * (dy / g)});
    }
    for (long long k = ymin + 1; k < ymax; ++k) {
        bool have = false;
        Rational xl, xr;
        for (std::size_t i = 0; i < n; ++i) {
            const Pt a = verts[i];
            const Pt b = verts[(i + 1) % n];
            if (std::min(a.y, b.y) > k || std::max(a.y, b.y) < k)
                continue;
            std::vector<Rational> xs;
            if (a.y == b.y) {
                xs.push_back(Rational(a.x));
                xs.push_back(Rational(b.x));
            } else {
                // Integer operands: the built-in two-argument constructor
                // reads a negative denominator as unsigned.
                xs.push_back(Rational(a.x)
                             + Rational(atq::Integer(k - a.y),
                                        atq::Integer(b.y - a.y))
                                 * Rational(b.x - a.x));
            }
            for (const Rational& x : xs) {
                if (!have) {
                    xl = xr = x;
                    have = true;
                } else {
                    xl = std::min(xl, x);
                    xr = std::max(xr, x);
                }
            }
        }
        if (!have)
            continue;
        for (atq::Integer x = atq::rat_floor(xl) + 1; Rational(x) < xr; ++x)
            out.interior.insert(Pt{x.convert_to<long long>(), k});
    }
    return out;
}

inline atq::Rational shoelace_area(const std::vector<Pt>& verts)
{
    long long twice = 0;
    for (std::size_t i = 0; i < verts.size(); ++i) {
        const Pt a = verts[i];
        const Pt b = verts[(i + 1) % verts.size()];
        twice += a.x * b.y - a.y * b.x;
    }
    return atq::Rational(twice, 2);
}

inline atq::RatPolygon to_polygon(const std::vector<Pt>& verts)
{
    std::vector<atq::RatPoint> points;
    for (const Pt& v : verts)
        points.push_back(
            atq::RatPoint{atq::Rational(v.x), atq::Rational(v.y)});
    return atq::RatPolygon(points);
}

inline std::vector<Pt> random_convex_polygon(std::mt19937_64& rng)
{
    std::uniform_int_distribution<int> count(3, 12);
    std::uniform_int_distribution<long long> coord(-8, 8);
    for (;;) {
        std::vector<Pt> pts;
        const int m = count(rng);
        for (int i = 0; i < m; ++i)
            pts.push_back(Pt{coord(rng), coord(rng)});
        std::vector<Pt> h = hull(pts);
        if (h.size() >= 3)
            return h;
    }
}

// Rank over Q, plain partial-pivot elimination.
inline Eigen::Index rational_rank(const atq::IntMatrix& m)
{
    using atq::Rational;
    std::vector<std::vector<Rational>> a(static_cast<std::size_t>(m.rows()));
    for (Eigen::Index r = 0; r < m.rows(); ++r)
        for (Eigen::Index c = 0; c < m.cols(); ++c)
            a[static_cast<std::size_t>(r)].push_back(Rational(m(r, c)));
    const std::size_t rows = a.size();
    const std::size_t cols = rows ? a[0].size() : 0;
    Eigen::Index rank = 0;
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols && row < rows; ++col) {
        std::size_t pivot = row;
        while (pivot < rows && a[pivot][col] == 0)
            ++pivot;
        if (pivot == rows)
            continue;
        std::swap(a[pivot], a[row]);
        for (std::size_t r = row + 1; r < rows; ++r) {
            if (a[r][col] == 0)
                continue;
            const Rational factor = a[r][col] / a[row][col];
            for (std::size_t c = col; c < cols; ++c)
                a[r][c] -= factor * a[row][c];
        }
        ++row;
        ++rank;
    }
    return rank;
}

// Product of random shears, optionally composed with a swap for det -1.
inline atq::UnimodularMatrix random_unimodular(std::mt19937_64& rng,
                                               bool allow_reflection = false)
{
    std::uniform_int_distribution<int> shear(-3, 3);
    std::uniform_int_distribution<int> steps(2, 5);
    std::uniform_int_distribution<int> coin(0, 1);
    atq::UnimodularMatrix m = atq::UnimodularMatrix::identity();
    const int k = steps(rng);
    for (int i = 0; i < k; ++i) {
        const int s = shear(rng);
        if (coin(rng))
            m = m * atq::UnimodularMatrix(1, s, 0, 1);
        else
            m = m * atq::UnimodularMatrix(1, 0, s, 1);
    }
    if (allow_reflection && coin(rng))
        m = m * atq::UnimodularMatrix(0, 1, 1, 0);
    return m;
}

}  // namespace oracle
