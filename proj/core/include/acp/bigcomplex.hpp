#pragma once

#include "acp/bigreal.hpp"

namespace acp {

struct BigComplex {
    BigReal re;
    BigReal im;

    BigComplex() = default;
    explicit BigComplex(Precision p) : re(p), im(p) {}
    BigComplex(BigReal r, BigReal i) : re(std::move(r)), im(std::move(i)) {}
    BigComplex(long r, long i, Precision p) : re(r, p), im(i, p) {}

    Precision precision() const { return Precision(std::max(re.digits(), im.digits())); }

    friend BigComplex operator+(const BigComplex& a, const BigComplex& b) { return {a.re + b.re, a.im + b.im}; }
    friend BigComplex operator-(const BigComplex& a, const BigComplex& b) { return {a.re - b.re, a.im - b.im}; }
    friend BigComplex operator-(const BigComplex& a) { return {-a.re, -a.im}; }
    friend BigComplex operator*(const BigComplex& a, const BigComplex& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend BigComplex operator*(const BigReal& s, const BigComplex& a) { return {s * a.re, s * a.im}; }
    friend BigComplex operator/(const BigComplex& a, const BigComplex& b);
    friend BigComplex operator/(const BigComplex& a, const BigReal& s) { return {a.re / s, a.im / s}; }

    BigComplex& operator+=(const BigComplex& b) { *this = *this + b; return *this; }
    BigComplex& operator-=(const BigComplex& b) { *this = *this - b; return *this; }
    BigComplex& operator*=(const BigComplex& b) { *this = *this * b; return *this; }

    friend bool operator==(const BigComplex& a, const BigComplex& b) { return a.re == b.re && a.im == b.im; }
};

BigComplex conj(const BigComplex& z);
BigReal abs(const BigComplex& z);
BigReal norm(const BigComplex& z);  // |z|^2
BigReal arg(const BigComplex& z);
BigComplex sqrt(const BigComplex& z);
BigComplex unit_circle_point(const BigReal& angle);  // e^{i*angle}

}  // namespace acp
