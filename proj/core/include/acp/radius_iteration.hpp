#pragma once

#include <map>

#include "acp/packing.hpp"

namespace acp {

// Angle at the circle of radius r_v between the tangent circles of radii
// r_u, r_w in a mutually tangent triple, Euclidean law of cosines on side
// lengths r_v+r_u, r_v+r_w, r_u+r_w.
BigReal euclid_angle(const BigReal& r_v, const BigReal& r_u, const BigReal& r_w);

// Hyperbolic counterpart (geodesic triangle of centers).  Strictly below the
// Euclidean angle for the same radii.
BigReal hyp_angle(const BigReal& r_v, const BigReal& r_u, const BigReal& r_w);

BigReal angle_sum(const Triangulation& t, int vertex, const std::vector<BigReal>& radii,
                  Geometry geom, Precision p);

struct RadiusResult {
    std::vector<BigReal> radii;
    long iterations = 0;
    BigReal residual;
};

// Fixed-point radius solver: adjust every non-boundary vertex until its angle
// sum hits 2*pi within tol.  Uniform-neighbor updates swept Gauss-Seidel style
// with a global acceleration step when the contraction rate looks stable.
// boundary maps vertex -> fixed radius; empty for closed (torus/hyperbolic)
// surfaces.  In the closed Euclidean case radii are determined only up to
// scale and are normalized so the first vertex has radius 1.
RadiusResult radius_iteration(const Triangulation& t, const std::map<int, BigReal>& boundary,
                              Geometry geom, const BigReal& tol, long max_iters = 500000);

}  // namespace acp
