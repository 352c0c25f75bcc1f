#pragma once

#include "acp/packing.hpp"
#include "acp/polynomial.hpp"

namespace acp {

struct AlgebraicCertificate {
    std::string quantity;
    BigReal value;
    std::vector<Int> poly;   // ascending degree, primitive, positive leading coefficient
    int degree_bound = 0;
    Int height_bound;
    BigReal root_residual;   // |poly(value)| at the value's precision
    bool verified = false;
};

// Exact-integer LLL reduction (delta = 99/100) of the rows of `basis`.
// Rows must be linearly independent.
void lll_reduce(std::vector<std::vector<Int>>& basis);

struct FindMinPolyResult {
    bool found = false;
    AlgebraicCertificate certificate;  // verified when found; best rejected otherwise
};

// Integer-relation search on the row lattice of (1, x, ..., x^d) scaled by
// 10^(p-10).  A candidate is accepted only when its residual clears the
// height-dependent threshold, a genuine root of it lies within 10^(-p/2) of
// the value, and the value's precision suffices to separate the relation from
// noise at the candidate's own degree and height (2 d log10 H + 40 digits).
// InsufficientPrecision below 40 digits.
FindMinPolyResult find_min_poly(const BigReal& value, int degree_bound, const Int& height_bound);

enum class CertifyTarget { Radii, Centers, Tangencies, Tau, ExpRadii };

CertifyTarget parse_target(const std::string& name);

std::vector<std::pair<std::string, BigReal>> certify_quantities(const EuclideanPacking& p,
                                                                CertifyTarget target);
std::vector<std::pair<std::string, BigReal>> certify_quantities(const TorusPacking& p,
                                                                CertifyTarget target);
std::vector<std::pair<std::string, BigReal>> certify_quantities(const HyperbolicPacking& p,
                                                                CertifyTarget target);

// One certificate per quantity; equal values share one lattice reduction.
std::vector<AlgebraicCertificate> certify_values(
    const std::vector<std::pair<std::string, BigReal>>& quantities, int degree_bound,
    const Int& height_bound);

}  // namespace acp
