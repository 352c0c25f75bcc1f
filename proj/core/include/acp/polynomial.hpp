#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "acp/linalg.hpp"

namespace acp {

using Int = boost::multiprecision::cpp_int;

// One term of a multivariate polynomial: integer coefficient times a product
// of variable powers.  Exponents are stored sparsely, sorted by variable.
struct Monomial {
    Int coef;
    std::vector<std::pair<uint32_t, uint32_t>> exps;  // (variable index, exponent), exponent > 0

    static int cmp_exps(const Monomial& a, const Monomial& b);
};

// Sparse multivariate polynomial with exact integer coefficients.
class Poly {
public:
    Poly() = default;

    static Poly constant(Int c);
    static Poly variable(uint32_t var);

    const std::vector<Monomial>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }
    uint32_t total_degree() const;

    friend Poly operator+(const Poly& a, const Poly& b);
    friend Poly operator-(const Poly& a, const Poly& b);
    friend Poly operator*(const Poly& a, const Poly& b);
    friend Poly operator-(const Poly& a);
    Poly& operator+=(const Poly& b) { *this = *this + b; return *this; }
    Poly& operator-=(const Poly& b) { *this = *this - b; return *this; }
    Poly& operator*=(const Poly& b) { *this = *this * b; return *this; }

    friend bool operator==(const Poly& a, const Poly& b) { return a.terms_ == b.terms_; }

    Poly scaled(const Int& c) const;
    Poly derivative(uint32_t var) const;

    // Evaluate with a shared per-variable power cache (for system evaluation).
    BigReal eval(const Vec& point, Precision p) const;

    // Called by PolySystem for batched evaluation.
    BigReal eval_cached(const std::vector<std::vector<BigReal>>& powers, Precision p) const;
    uint32_t max_exponent(uint32_t var) const;
    uint32_t max_var() const;

    static Poly from_terms(std::vector<Monomial> terms);  // normalizes

private:
    std::vector<Monomial> terms_;  // sorted by exponent vector, no zero coefs

    void normalize();
};

inline bool operator==(const Monomial& a, const Monomial& b) {
    return a.coef == b.coef && a.exps == b.exps;
}

// A polynomial system over named real variables: equalities p = 0, strict
// inequalities p > 0, and a designated square slice of the equalities used
// for Newton refinement and isolation evidence.  The first `primary_count`
// variables are the geometric coordinates; any further ones are auxiliary
// (for example a symbol pinned to sqrt(3) by a defining equation).
struct PolySystem {
    std::vector<std::string> vars;
    size_t primary_count = 0;
    std::vector<Poly> equalities;
    std::vector<Poly> inequalities;
    std::vector<size_t> square_slice;  // indices into equalities, |slice| == |vars|

    size_t var_count() const { return vars.size(); }

    Vec eval_equalities(const Vec& point, Precision p) const;
    Vec eval_inequalities(const Vec& point, Precision p) const;
    BigReal max_equality_residual(const Vec& point, Precision p) const;

    // Jacobian of the designated square slice at a point.
    Mat slice_jacobian(const Vec& point, Precision p) const;
    Vec slice_values(const Vec& point, Precision p) const;

    // Pick a well-conditioned square slice at a reference point: forced rows
    // first (normalization rows), then greedy selection by projected norm.
    void designate_square_slice(const Vec& point, Precision p, const std::vector<size_t>& forced);

    std::vector<std::vector<BigReal>> power_cache(const Vec& point, Precision p) const;
};

}  // namespace acp
