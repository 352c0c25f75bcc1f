#pragma once

#include "acp/development.hpp"
#include "acp/mobius.hpp"

namespace acp {

// Hyperbolic distance in the Poincare disk; declared in development.hpp,
// re-exported here as part of the hyperbolic packer surface.
using acp::hyp_distance;

// Action of a disk-preserving orientation-preserving map on a point of the
// open disk; checks the domain on both sides.
BigComplex apply_isometry(const MobiusMap& m, const BigComplex& z);

MobiusMap to_mobius(const DiskIsometry& m);

// Pack a genus >= 2 triangulation in the Poincare disk: hyperbolic radii via
// angle sums, a developed fundamental set (spanning tree of faces) with the
// marked vertex's lift at the origin and the marked neighbor's lift on the
// positive real axis, side pairings per seam, and 2g holonomy generators.
HyperbolicPacking solve_hyperbolic(const Triangulation& t, int marked_vertex, int marked_neighbor,
                                   const BigReal& tol, long max_iters = 500000);

}  // namespace acp
