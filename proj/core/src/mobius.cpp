#include "acp/mobius.hpp"

namespace acp {

MobiusMap MobiusMap::create(BigComplex a, BigComplex b, BigComplex c, BigComplex d, bool reversing) {
    BigComplex det = a * d - b * c;
    if (abs(det).is_zero()) throw Error("DomainError", "moebius map with zero determinant");
    BigComplex s = sqrt(det);
    return {a / s, b / s, c / s, d / s, reversing};
}

MobiusMap MobiusMap::identity(Precision p) {
    BigComplex one(BigReal(1, p), BigReal(p)), zero(p);
    return {one, zero, zero, one, false};
}

BigComplex MobiusMap::apply(const BigComplex& z) const {
    BigComplex w = reversing ? conj(z) : z;
    BigComplex den = c * w + d;
    if (abs(den).is_zero()) throw Error("CenterPole", "moebius map pole");
    return (a * w + b) / den;
}

MobiusMap compose(const MobiusMap& m1, const MobiusMap& m2) {
    // m1 after m2; when m1 reverses, it conjugates m2's matrix entries
    BigComplex a2 = m2.a, b2 = m2.b, c2 = m2.c, d2 = m2.d;
    if (m1.reversing) { a2 = conj(a2); b2 = conj(b2); c2 = conj(c2); d2 = conj(d2); }
    return MobiusMap::create(m1.a * a2 + m1.b * c2, m1.a * b2 + m1.b * d2,
                             m1.c * a2 + m1.d * c2, m1.c * b2 + m1.d * d2,
                             m1.reversing != m2.reversing);
}

Circle Circle::create(BigComplex center, BigReal radius) {
    if (radius.sign() <= 0) throw Error("DomainError", "circle radius must be positive");
    return {std::move(center), std::move(radius)};
}

BigComplex invert_in_circle(const Circle& c, const BigComplex& z) {
    BigComplex d = z - c.center;
    if (abs(d).is_zero()) throw Error("CenterPole", "inversion at the circle center");
    Precision p = d.precision();
    return c.center + (c.radius * c.radius) * (BigComplex(BigReal(1, p), BigReal(p)) / conj(d));
}

MobiusMap inversion_map(const Circle& c) {
    // z -> (center conj(z) + r^2 - |center|^2) / (conj(z) - conj(center))
    Precision p = c.center.precision();
    BigComplex one(BigReal(1, p), BigReal(p));
    return MobiusMap::create(c.center, BigComplex(c.radius * c.radius - norm(c.center), BigReal(p)),
                             one, -conj(c.center), true);
}

BigComplex tangency_point(const Circle& c1, const Circle& c2) {
    return (c2.radius * c1.center + c1.radius * c2.center) / (c1.radius + c2.radius);
}

TangencyFixedPoint tangency_fixed_point(const Circle& c1, const Circle& c2, const BigReal& tol) {
    BigReal gap = abs(abs(c1.center - c2.center) - (c1.radius + c2.radius));
    if (gap > tol) throw Error("NotTangent", "circles are not externally tangent at tolerance");
    TangencyFixedPoint out{tangency_point(c1, c2), compose(inversion_map(c1), inversion_map(c2))};
    return out;
}

Circle circumcircle(const BigComplex& p1, const BigComplex& p2, const BigComplex& p3) {
    Precision pr = p1.precision();
    BigReal two(2, pr);
    // perpendicular bisector intersection via the linear system
    BigReal ax = p2.re - p1.re, ay = p2.im - p1.im;
    BigReal bx = p3.re - p1.re, by = p3.im - p1.im;
    BigReal det = two * (ax * by - ay * bx);
    BigReal scale = max(max(abs(ax) + abs(ay), abs(bx) + abs(by)), pow10(-pr.digits, pr));
    if (abs(det) <= scale * scale * pow10(-(pr.digits - 8), pr))
        throw Error("DegeneratePacking", "tangency points are collinear");
    BigReal na = ax * ax + ay * ay;
    BigReal nb = bx * bx + by * by;
    BigReal ux = (by * na - ay * nb) / det;
    BigReal uy = (ax * nb - bx * na) / det;
    BigComplex center(p1.re + ux, p1.im + uy);
    return Circle::create(center, hypot(ux, uy));
}

std::map<int, Circle> dual_packing(const EuclideanPacking& p, const BigReal& tol) {
    std::map<int, Circle> out;
    const auto& t = p.triangulation;
    for (size_t fi = 0; fi < t.faces.size(); ++fi) {
        auto& f = t.faces[fi];
        std::array<BigComplex, 3> pts = {BigComplex(Precision(p.precision_digits)),
                                         BigComplex(Precision(p.precision_digits)),
                                         BigComplex(Precision(p.precision_digits))};
        for (int k = 0; k < 3; ++k) {
            int u = f[k], v = f[(k + 1) % 3];
            Circle cu = Circle::create(p.centers[u], p.radii[u]);
            Circle cv = Circle::create(p.centers[v], p.radii[v]);
            BigReal gap = abs(abs(cu.center - cv.center) - (cu.radius + cv.radius));
            if (gap > tol) throw Error("DegeneratePacking", "face edge is not tangent at tolerance");
            pts[k] = tangency_point(cu, cv);
        }
        out.emplace(static_cast<int>(fi), circumcircle(pts[0], pts[1], pts[2]));
    }
    return out;
}

}  // namespace acp
