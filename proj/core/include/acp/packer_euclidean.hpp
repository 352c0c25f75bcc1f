#pragma once

#include "acp/radius_iteration.hpp"

namespace acp {

// Pack a genus-0 triangulation with the marked face's circles fixed as unit
// circles at (-1,0), (1,0), (0,sqrt(3)); every other circle ends up in the
// bounded interstice.  tol bounds the angle-sum residual at non-marked
// vertices; layout mismatches beyond 10*tol fail loudly.
EuclideanPacking solve_interstice(const Triangulation& t, const std::array<int, 3>& marked_face,
                                  const BigReal& tol, long max_iters = 500000);

}  // namespace acp
