#pragma once

#include <mpfr.h>

#include <string>
#include <vector>

#include "acp/error.hpp"

namespace acp {

// Working precision in significant decimal digits.  Precision is passed
// explicitly wherever values are created; results of arithmetic inherit the
// widest operand precision, so no global state is consulted anywhere.
struct Precision {
    int digits;

    explicit Precision(int d) : digits(d) {
        if (d < 2) throw Error("DomainError", "precision must be at least 2 digits");
    }

    // binary precision with guard bits so decimal-digit contracts hold
    mpfr_prec_t bits() const {
        return static_cast<mpfr_prec_t>(static_cast<double>(digits) * 3.3219280948873626) + 24;
    }
};

// Arbitrary-precision real number.  Thin value-semantics wrapper over mpfr_t;
// every operation rounds to nearest at the result's own precision.
class BigReal {
public:
    BigReal() { mpfr_init2(v_, MPFR_PREC_MIN); mpfr_set_nan(v_); digits_ = 2; }
    explicit BigReal(Precision p) : digits_(p.digits) { mpfr_init2(v_, p.bits()); mpfr_set_zero(v_, 1); }
    BigReal(long value, Precision p) : digits_(p.digits) { mpfr_init2(v_, p.bits()); mpfr_set_si(v_, value, MPFR_RNDN); }
    BigReal(const BigReal& o) : digits_(o.digits_) { mpfr_init2(v_, mpfr_get_prec(o.v_)); mpfr_set(v_, o.v_, MPFR_RNDN); }
    BigReal(BigReal&& o) noexcept : digits_(o.digits_) { mpfr_init2(v_, MPFR_PREC_MIN); mpfr_swap(v_, o.v_); }
    ~BigReal() { mpfr_clear(v_); }

    BigReal& operator=(const BigReal& o) {
        if (this != &o) {
            mpfr_set_prec(v_, mpfr_get_prec(o.v_));
            mpfr_set(v_, o.v_, MPFR_RNDN);
            digits_ = o.digits_;
        }
        return *this;
    }
    BigReal& operator=(BigReal&& o) noexcept {
        if (this != &o) { mpfr_swap(v_, o.v_); digits_ = o.digits_; }
        return *this;
    }

    static BigReal from_string(const std::string& s, Precision p);
    static BigReal from_double(double value, Precision p);

    int digits() const { return digits_; }
    Precision precision() const { return Precision(digits_); }

    bool is_nan() const { return mpfr_nan_p(v_) != 0; }
    bool is_zero() const { return mpfr_zero_p(v_) != 0; }
    int sign() const { return mpfr_sgn(v_); }

    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
    long to_long() const { return mpfr_get_si(v_, MPFR_RNDN); }

    // Decimal string with enough digits to reparse bit-exactly.
    std::string to_string() const;
    // Exactly n significant digits (rounded).
    std::string to_string(int n) const;

    friend BigReal operator+(const BigReal& a, const BigReal& b);
    friend BigReal operator-(const BigReal& a, const BigReal& b);
    friend BigReal operator*(const BigReal& a, const BigReal& b);
    friend BigReal operator/(const BigReal& a, const BigReal& b);
    friend BigReal operator-(const BigReal& a);

    BigReal& operator+=(const BigReal& b) { *this = *this + b; return *this; }
    BigReal& operator-=(const BigReal& b) { *this = *this - b; return *this; }
    BigReal& operator*=(const BigReal& b) { *this = *this * b; return *this; }
    BigReal& operator/=(const BigReal& b) { *this = *this / b; return *this; }

    friend bool operator<(const BigReal& a, const BigReal& b) { return mpfr_cmp(a.v_, b.v_) < 0; }
    friend bool operator>(const BigReal& a, const BigReal& b) { return mpfr_cmp(a.v_, b.v_) > 0; }
    friend bool operator<=(const BigReal& a, const BigReal& b) { return mpfr_cmp(a.v_, b.v_) <= 0; }
    friend bool operator>=(const BigReal& a, const BigReal& b) { return mpfr_cmp(a.v_, b.v_) >= 0; }
    friend bool operator==(const BigReal& a, const BigReal& b) { return mpfr_equal_p(a.v_, b.v_) != 0; }
    friend bool operator!=(const BigReal& a, const BigReal& b) { return !(a == b); }

    friend int cmp_si(const BigReal& a, long b) { return mpfr_cmp_si(a.v_, b); }

    const mpfr_t& raw() const { return v_; }
    mpfr_t& raw() { return v_; }

private:
    mpfr_t v_;
    int digits_;

    friend BigReal unary(int (*fn)(mpfr_ptr, mpfr_srcptr, mpfr_rnd_t), const BigReal& x);
    friend BigReal binary(int (*fn)(mpfr_ptr, mpfr_srcptr, mpfr_srcptr, mpfr_rnd_t), const BigReal& a, const BigReal& b);
};

BigReal abs(const BigReal& x);
BigReal sqrt(const BigReal& x);   // DomainError for x < 0
BigReal ln(const BigReal& x);     // DomainError for x <= 0
BigReal exp(const BigReal& x);
BigReal arccos(const BigReal& x); // DomainError for |x| > 1
BigReal arcosh(const BigReal& x); // DomainError for x < 1; ln(x + sqrt(x+1)sqrt(x-1))
BigReal atan2(const BigReal& y, const BigReal& x);

// Internal helpers used by the packers; not part of the elementary-function
// contract above.
BigReal sin(const BigReal& x);
BigReal cos(const BigReal& x);
BigReal arcsin(const BigReal& x);
BigReal sinh(const BigReal& x);
BigReal cosh(const BigReal& x);
BigReal tanh(const BigReal& x);
BigReal arsinh(const BigReal& x);
BigReal artanh(const BigReal& x);
BigReal hypot(const BigReal& x, const BigReal& y);
BigReal pow_ui(const BigReal& x, unsigned long e);
BigReal pi(Precision p);

BigReal max(const BigReal& a, const BigReal& b);
BigReal min(const BigReal& a, const BigReal& b);

// 10^e at precision p (e may be negative); used for tolerances.
BigReal pow10(long e, Precision p);

enum class ElemFn { Sqrt, Ln, Exp, Arccos, Arcosh, Atan2 };

// Single-argument elementary-function dispatcher (atan2 takes y then x).
BigReal elem(ElemFn fn, const BigReal& x);
BigReal elem(ElemFn fn, const BigReal& y, const BigReal& x);

}  // namespace acp
