#include "atq/geometry.hpp"

#include <boost/multiprecision/gmp.hpp>

namespace atq {

namespace {

Integer gcd_abs(const Integer& a, const Integer& b)
{
    return boost::multiprecision::gcd(a, b);
}

}  // namespace

PrimitiveVector::PrimitiveVector(Integer p, Integer q)
{
    if (p == 0 && q == 0)
        throw DomainError("not_primitive", "primitive vector must be nonzero");
    if (gcd_abs(p, q) != 1)
        throw DomainError("not_primitive",
                          "entries " + p.str() + "," + q.str()
                              + " have a common factor");
    v_ << p, q;
}

PrimitiveVector PrimitiveVector::reduced(const Integer& p, const Integer& q)
{
    if (p == 0 && q == 0)
        throw DomainError("not_primitive", "cannot reduce the zero vector");
    const Integer g = gcd_abs(p, q);
    return PrimitiveVector(p / g, q / g);
}

PrimitiveVector primitive_direction(const RatVec2& delta)
{
    if (delta.x() == 0 && delta.y() == 0)
        throw DomainError("not_primitive", "zero direction");
    const Integer common =
        denominator(delta.x()) * denominator(delta.y())
        / gcd_abs(denominator(delta.x()), denominator(delta.y()));
    const Rational sx = delta.x() * common;
    const Rational sy = delta.y() * common;
    return PrimitiveVector::reduced(numerator(sx), numerator(sy));
}

UnimodularMatrix::UnimodularMatrix(IntMat2 m) : m_(std::move(m))
{
    const Integer d = det();
    if (d != 1 && d != -1)
        throw DomainError("not_unimodular",
                          "determinant " + d.str() + " is not a unit");
}

UnimodularMatrix::UnimodularMatrix(Integer a, Integer b, Integer c, Integer d)
    : UnimodularMatrix((IntMat2() << std::move(a), std::move(b), std::move(c),
                        std::move(d))
                           .finished())
{
}

UnimodularMatrix UnimodularMatrix::identity()
{
    return UnimodularMatrix(1, 0, 0, 1);
}

UnimodularMatrix UnimodularMatrix::inverse() const
{
    // adj(M) / det with det = +-1, so inverse = adj * det.
    const Integer d = det();
    return UnimodularMatrix(m_(1, 1) * d, -m_(0, 1) * d, -m_(1, 0) * d,
                            m_(0, 0) * d);
}

UnimodularMatrix UnimodularMatrix::operator*(const UnimodularMatrix& rhs) const
{
    return UnimodularMatrix(m_ * rhs.m_);
}

UnimodularMatrix UnimodularMatrix::pow(unsigned k) const
{
    UnimodularMatrix acc = identity();
    for (unsigned i = 0; i < k; ++i)
        acc = acc * *this;
    return acc;
}

IntVec2 UnimodularMatrix::apply(const IntVec2& v) const
{
    return m_ * v;
}

RatVec2 UnimodularMatrix::apply(const RatVec2& v) const
{
    RatVec2 out;
    out.x() = Rational(m_(0, 0)) * v.x() + Rational(m_(0, 1)) * v.y();
    out.y() = Rational(m_(1, 0)) * v.x() + Rational(m_(1, 1)) * v.y();
    return out;
}

}  // namespace atq
