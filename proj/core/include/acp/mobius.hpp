#pragma once

#include <map>

#include "acp/packing.hpp"

namespace acp {

// Moebius (orientation-preserving, z -> (az+b)/(cz+d)) or anti-Moebius
// (orientation-reversing, acting on the conjugate) map, determinant
// normalized to 1 on construction.
struct MobiusMap {
    BigComplex a, b, c, d;
    bool reversing = false;

    static MobiusMap create(BigComplex a, BigComplex b, BigComplex c, BigComplex d, bool reversing);
    static MobiusMap identity(Precision p);

    BigComplex apply(const BigComplex& z) const;
};

// Composition with conjugation bookkeeping: reversing XOR reversing = preserving.
MobiusMap compose(const MobiusMap& m1, const MobiusMap& m2);

struct Circle {
    BigComplex center;
    BigReal radius;  // > 0

    static Circle create(BigComplex center, BigReal radius);
};

// Inversion along the circle: z -> center + r^2 / conj(z - center).
BigComplex invert_in_circle(const Circle& c, const BigComplex& z);

// The inversion as an anti-Moebius map.
MobiusMap inversion_map(const Circle& c);

// Fixed point of the composed inversions of two externally tangent circles,
// with the orientation-preserving composition itself.
struct TangencyFixedPoint {
    BigComplex point;
    MobiusMap composition;  // sigma_1 sigma_2
};
TangencyFixedPoint tangency_fixed_point(const Circle& c1, const Circle& c2, const BigReal& tol);

// Circumcircle of the three pairwise tangency points of each face: the dual
// packing.  Every dual circle is orthogonal to its three primal circles.
std::map<int, Circle> dual_packing(const EuclideanPacking& p, const BigReal& tol);

// Circumcircle of three points; DegeneratePacking if they are collinear.
Circle circumcircle(const BigComplex& p1, const BigComplex& p2, const BigComplex& p3);

// Tangency point of two externally tangent circles (radius-weighted convex
// combination of the centers).
BigComplex tangency_point(const Circle& c1, const Circle& c2);

}  // namespace acp
