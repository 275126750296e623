#pragma once

#include <Eigen/Dense>
#include <boost/multiprecision/eigen.hpp>

#include "atq/errors.hpp"
#include "atq/numbers.hpp"

namespace atq {

using RatVec2 = Eigen::Matrix<Rational, 2, 1>;
using RatPoint = RatVec2;
using IntVec2 = Eigen::Matrix<Integer, 2, 1>;
using IntMat2 = Eigen::Matrix<Integer, 2, 2>;

template <typename DerivedA, typename DerivedB>
typename DerivedA::Scalar cross(const Eigen::MatrixBase<DerivedA>& a,
                                const Eigen::MatrixBase<DerivedB>& b)
{
    return a.x() * b.y() - a.y() * b.x();
}

inline bool same_point(const RatPoint& a, const RatPoint& b)
{
    return a.x() == b.x() && a.y() == b.y();
}

inline RatVec2 to_rat(const IntVec2& v)
{
    return RatVec2(Rational(v.x()), Rational(v.y()));
}

// Strict weak order on integer lattice points: by x, then y.
struct LexLessInt {
    bool operator()(const IntVec2& a, const IntVec2& b) const
    {
        if (a.x() != b.x())
            return a.x() < b.x();
        return a.y() < b.y();
    }
};

struct LexLessRat {
    bool operator()(const RatPoint& a, const RatPoint& b) const
    {
        if (a.x() != b.x())
            return a.x() < b.x();
        return a.y() < b.y();
    }
};

/**
 * Nonzero integer vector with coprime entries. The checked constructor
 * rejects non-primitive input; reduced() divides out the gcd instead.
 */
class PrimitiveVector {
public:
    PrimitiveVector(Integer p, Integer q);

    static PrimitiveVector reduced(const Integer& p, const Integer& q);

    const Integer& p() const noexcept { return v_.x(); }
    const Integer& q() const noexcept { return v_.y(); }
    const IntVec2& vec() const noexcept { return v_; }

    friend bool operator==(const PrimitiveVector& a, const PrimitiveVector& b)
    {
        return a.v_.x() == b.v_.x() && a.v_.y() == b.v_.y();
    }
    friend bool operator!=(const PrimitiveVector& a, const PrimitiveVector& b)
    {
        return !(a == b);
    }

private:
    IntVec2 v_;
};

// Primitive integer direction of a nonzero rational vector. Clears
// denominators, then divides out the gcd.
PrimitiveVector primitive_direction(const RatVec2& delta);

/**
 * 2x2 integer matrix with determinant +1 or -1, the affine-lattice symmetry
 * group GL(2,Z). Inverses and products stay exact.
 */
class UnimodularMatrix {
public:
    explicit UnimodularMatrix(IntMat2 m);
    UnimodularMatrix(Integer a, Integer b, Integer c, Integer d);

    static UnimodularMatrix identity();

    const IntMat2& mat() const noexcept { return m_; }
    Integer det() const { return m_(0, 0) * m_(1, 1) - m_(0, 1) * m_(1, 0); }

    UnimodularMatrix inverse() const;
    UnimodularMatrix operator*(const UnimodularMatrix& rhs) const;
    UnimodularMatrix pow(unsigned k) const;

    IntVec2 apply(const IntVec2& v) const;
    RatVec2 apply(const RatVec2& v) const;

    friend bool operator==(const UnimodularMatrix& a, const UnimodularMatrix& b)
    {
        return a.m_(0, 0) == b.m_(0, 0) && a.m_(0, 1) == b.m_(0, 1)
            && a.m_(1, 0) == b.m_(1, 0) && a.m_(1, 1) == b.m_(1, 1);
    }
    friend bool operator!=(const UnimodularMatrix& a, const UnimodularMatrix& b)
    {
        return !(a == b);
    }

private:
    IntMat2 m_;
};

}  // namespace atq
