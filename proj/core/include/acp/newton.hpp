#pragma once

#include "acp/polynomial.hpp"

namespace acp {

struct NewtonResult {
    Vec values;
    BigReal residual;          // max |p(values)| over the full equality set
    int steps = 0;
    std::vector<BigReal> residual_history;  // slice residual after each accepted step
};

// Sharpen a root of the system's designated square equality slice.
// Preconditions checked here: the slice Jacobian is nonsingular at start and
// the starting residual is below 1e-6.  Each accepted step must not increase
// the slice residual; stops once it drops below 10^-target_digits.
NewtonResult newton_refine(const PolySystem& system, const Vec& start, int target_digits,
                           int max_steps = 200);

}  // namespace acp
