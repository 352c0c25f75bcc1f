#include "acp/bigcomplex.hpp"

namespace acp {

BigComplex operator/(const BigComplex& a, const BigComplex& b) {
    BigReal d = norm(b);
    if (d.is_zero()) throw Error("DomainError", "complex division by zero");
    return {(a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d};
}

BigComplex conj(const BigComplex& z) { return {z.re, -z.im}; }

BigReal abs(const BigComplex& z) { return hypot(z.re, z.im); }

BigReal norm(const BigComplex& z) { return z.re * z.re + z.im * z.im; }

BigReal arg(const BigComplex& z) { return atan2(z.im, z.re); }

BigComplex sqrt(const BigComplex& z) {
    Precision p = z.precision();
    if (z.im.is_zero()) {
        if (z.re.sign() >= 0) return {sqrt(z.re), BigReal(p)};
        return {BigReal(p), sqrt(-z.re)};
    }
    // principal branch
    BigReal r = abs(z);
    BigReal two(2, p);
    if (z.re.sign() >= 0) {
        BigReal u = sqrt((r + z.re) / two);
        return {u, z.im / (two * u)};
    }
    BigReal t = sqrt((r - z.re) / two);
    BigReal u = abs(z.im) / (two * t);
    return {u, z.im.sign() >= 0 ? t : -t};
}

BigComplex unit_circle_point(const BigReal& angle) {
    BigReal s(angle.precision()), c(angle.precision());
    mpfr_sin_cos(s.raw(), c.raw(), angle.raw(), MPFR_RNDN);
    return {c, s};
}

}  // namespace acp
