#include "acp/bigreal.hpp"

#include <algorithm>
#include <cstdlib>
#include <cstring>

namespace acp {

BigReal BigReal::from_string(const std::string& s, Precision p) {
    BigReal r(p);
    if (s.empty() || mpfr_set_str(r.v_, s.c_str(), 10, MPFR_RNDN) != 0)
        throw Error("DomainError", "unparseable decimal value: '" + s + "'");
    return r;
}

BigReal BigReal::from_double(double value, Precision p) {
    BigReal r(p);
    mpfr_set_d(r.v_, value, MPFR_RNDN);
    return r;
}

std::string BigReal::to_string() const {
    // bits -> decimal digits that guarantee exact reparse
    int n = static_cast<int>(static_cast<double>(mpfr_get_prec(v_)) * 0.30102999566398119) + 3;
    return to_string(n);
}

std::string BigReal::to_string(int n) const {
    if (is_nan()) return "nan";
    if (mpfr_inf_p(v_)) return sign() > 0 ? "inf" : "-inf";
    if (is_zero()) return "0";
    mpfr_exp_t e;
    char* raw = mpfr_get_str(nullptr, &e, 10, static_cast<size_t>(std::max(n, 2)), v_, MPFR_RNDN);
    std::string digits(raw);
    mpfr_free_str(raw);
    std::string sign_part;
    if (!digits.empty() && digits[0] == '-') { sign_part = "-"; digits.erase(0, 1); }
    // trim trailing zeros but keep at least one digit
    size_t last = digits.find_last_not_of('0');
    digits.erase(std::min(digits.size(), last + 1));
    if (digits.empty()) digits = "0";
    // value = 0.digits * 10^e; render positionally for moderate exponents
    long exp = static_cast<long>(e);
    long len = static_cast<long>(digits.size());
    if (exp > -6 && exp <= len + 8) {
        if (exp <= 0) return sign_part + "0." + std::string(static_cast<size_t>(-exp), '0') + digits;
        if (exp >= len) return sign_part + digits + std::string(static_cast<size_t>(exp - len), '0');
        return sign_part + digits.substr(0, static_cast<size_t>(exp)) + "." +
               digits.substr(static_cast<size_t>(exp));
    }
    return sign_part + "0." + digits + "e" + std::to_string(exp);
}

BigReal unary(int (*fn)(mpfr_ptr, mpfr_srcptr, mpfr_rnd_t), const BigReal& x) {
    BigReal r(Precision(x.digits_));
    fn(r.v_, x.v_, MPFR_RNDN);
    return r;
}

BigReal binary(int (*fn)(mpfr_ptr, mpfr_srcptr, mpfr_srcptr, mpfr_rnd_t), const BigReal& a, const BigReal& b) {
    BigReal r(Precision(std::max(a.digits_, b.digits_)));
    fn(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
}

BigReal operator+(const BigReal& a, const BigReal& b) { return binary(mpfr_add, a, b); }
BigReal operator-(const BigReal& a, const BigReal& b) { return binary(mpfr_sub, a, b); }
BigReal operator*(const BigReal& a, const BigReal& b) { return binary(mpfr_mul, a, b); }

BigReal operator/(const BigReal& a, const BigReal& b) {
    if (b.is_zero()) throw Error("DomainError", "division by zero");
    return binary(mpfr_div, a, b);
}

BigReal operator-(const BigReal& a) { return unary(mpfr_neg, a); }

BigReal abs(const BigReal& x) { return unary(mpfr_abs, x); }

BigReal sqrt(const BigReal& x) {
    if (x.sign() < 0) throw Error("DomainError", "sqrt of negative value");
    return unary(mpfr_sqrt, x);
}

BigReal ln(const BigReal& x) {
    if (x.sign() <= 0) throw Error("DomainError", "ln of non-positive value");
    return unary(mpfr_log, x);
}

BigReal exp(const BigReal& x) { return unary(mpfr_exp, x); }

BigReal arccos(const BigReal& x) {
    BigReal one(1, x.precision());
    if (x > one || x < -one) throw Error("DomainError", "arccos argument outside [-1, 1]");
    return unary(mpfr_acos, x);
}

BigReal arcosh(const BigReal& x) {
    BigReal one(1, x.precision());
    if (x < one) throw Error("DomainError", "arcosh argument below 1");
    // ln(x + sqrt(x+1) sqrt(x-1)); exact at x = 1
    return ln(x + sqrt(x + one) * sqrt(x - one));
}

BigReal atan2(const BigReal& y, const BigReal& x) {
    if (x.is_zero() && y.is_zero()) throw Error("DomainError", "atan2(0, 0) undefined");
    return binary(mpfr_atan2, y, x);
}

BigReal sin(const BigReal& x) { return unary(mpfr_sin, x); }
BigReal cos(const BigReal& x) { return unary(mpfr_cos, x); }

BigReal arcsin(const BigReal& x) {
    BigReal one(1, x.precision());
    if (x > one || x < -one) throw Error("DomainError", "arcsin argument outside [-1, 1]");
    return unary(mpfr_asin, x);
}

BigReal sinh(const BigReal& x) { return unary(mpfr_sinh, x); }
BigReal cosh(const BigReal& x) { return unary(mpfr_cosh, x); }
BigReal tanh(const BigReal& x) { return unary(mpfr_tanh, x); }
BigReal arsinh(const BigReal& x) { return unary(mpfr_asinh, x); }

BigReal artanh(const BigReal& x) {
    BigReal one(1, x.precision());
    if (x >= one || x <= -one) throw Error("DomainError", "artanh argument outside (-1, 1)");
    return unary(mpfr_atanh, x);
}

BigReal hypot(const BigReal& x, const BigReal& y) { return binary(mpfr_hypot, x, y); }

BigReal pow_ui(const BigReal& x, unsigned long e) {
    BigReal r(x.precision());
    mpfr_pow_ui(r.raw(), x.raw(), e, MPFR_RNDN);
    return r;
}

BigReal pi(Precision p) {
    BigReal r(p);
    mpfr_const_pi(r.raw(), MPFR_RNDN);
    return r;
}

BigReal max(const BigReal& a, const BigReal& b) { return a >= b ? a : b; }
BigReal min(const BigReal& a, const BigReal& b) { return a <= b ? a : b; }

BigReal pow10(long e, Precision p) {
    BigReal r(p);
    mpfr_set_si(r.raw(), 10, MPFR_RNDN);
    if (e >= 0) {
        mpfr_pow_ui(r.raw(), r.raw(), static_cast<unsigned long>(e), MPFR_RNDN);
    } else {
        mpfr_pow_ui(r.raw(), r.raw(), static_cast<unsigned long>(-e), MPFR_RNDN);
        mpfr_ui_div(r.raw(), 1, r.raw(), MPFR_RNDN);
    }
    return r;
}

BigReal elem(ElemFn fn, const BigReal& x) {
    switch (fn) {
        case ElemFn::Sqrt: return sqrt(x);
        case ElemFn::Ln: return ln(x);
        case ElemFn::Exp: return exp(x);
        case ElemFn::Arccos: return arccos(x);
        case ElemFn::Arcosh: return arcosh(x);
        case ElemFn::Atan2: throw Error("DomainError", "atan2 requires two arguments");
    }
    throw Error("DomainError", "unknown elementary function");
}

BigReal elem(ElemFn fn, const BigReal& y, const BigReal& x) {
    if (fn != ElemFn::Atan2) throw Error("DomainError", "two-argument form is atan2 only");
    return atan2(y, x);
}

}  // namespace acp
