#pragma once

#include "acp/development.hpp"

namespace acp {

struct ModularReduction {
    BigComplex tau;
    std::vector<std::string> word;  // moves applied in order: "T+" (tau+1), "T-" (tau-1), "S" (-1/tau)
};

// Reduce into the fundamental region of the modular group, with the boundary
// convention |z| > 1 with |Re| < 1/2,  or |z| >= 1 with Re = -1/2,  or
// |z| = 1 with -1/2 < Re <= 0.
ModularReduction reduce_to_fundamental_region(const BigComplex& tau0);

bool in_fundamental_region(const BigComplex& tau, const BigReal& snap);

// Membership in the half-open fundamental parallelogram spanned by 1 and tau:
// the origin corner and the open bottom and left sides are included.
bool fundamental_parallelogram_membership(const BigComplex& z, const BigComplex& tau);

// Integers (s, t) placing z - s - t*tau inside the half-open parallelogram;
// coordinates within snap of a lattice line count as on it.
std::array<int, 2> lattice_class(const BigComplex& z, const BigComplex& tau, const BigReal& snap);

// Solve a genus-1 triangulation: radii by angle sums, lattice from the two
// homology-loop holonomies, tau reduced into the fundamental region, the
// marked vertex's lift at the origin, ties among lattice automorphisms broken
// by the marked neighbor's argument in [0, pi).
TorusPacking solve_torus(const Triangulation& t, int marked_vertex, int marked_neighbor,
                         const BigReal& tol, long max_iters = 500000);

// The 2x2 block of translated copies P, P+1, P+tau, P+1+tau used by the
// sentence encoder: disk index = copy*n + vertex.
struct TorusBlock {
    int n = 0;
    BigComplex tau;
    std::vector<BigComplex> centers;                // 4n
    std::vector<BigReal> radii;                     // 4n
    std::vector<std::pair<int, int>> contact_edges; // tangent pairs, i < j, lexicographic
    std::vector<std::array<int, 4>> identified;     // {j, k, s, t}: disk j = disk k + s + t*tau
    int z_index = 0;       // lift of the marked disk in P
    int t_one_index = 0;   // its copy in P+1
    int t_tau_index = 0;   // its copy in P+tau
};

TorusBlock build_torus_block(const TorusPacking& packing);

}  // namespace acp
