#pragma once

#include "acp/packer_torus.hpp"
#include "acp/sentence.hpp"

namespace acp {

// Existence of a packing with the given contact graph: variables x_i, y_i, r_i
// per vertex; atoms r_i > 0, tangency equalities per edge, strict separations
// per non-edge.
Sentence encode_sentence_sphere(const SimpleGraph& g);

struct TorusSentence {
    Sentence sentence;
    size_t r_atoms = 0;       // 4n
    size_t edge_preds = 0;    // tangencies inside the 2x2 block
    size_t nonedge_preds = 0;
    size_t u_preds = 0;       // identified-pair predicates
    size_t k_preds = 0;       // 4n parallelogram memberships
};

// The genus-1 sentence over the 2x2 block of translated copies, with the
// normalization predicates Z and T, the fundamental-region predicate W on
// (a, b), the identification predicates U_i with literal integer offsets,
// and per-disk parallelogram memberships K_i.
TorusSentence encode_sentence_torus(const Triangulation& t, const TorusBlock& block);

// Polynomial varieties.  Variable counts: sphere 3n primary plus one
// auxiliary pinned to sqrt(3); torus 3n+2; hyperbolic (genus g) 3n+8g.
PolySystem encode_variety_sphere(const Triangulation& t, const std::array<int, 3>& marked_face);
PolySystem encode_variety_torus(const TorusPacking& packing);
PolySystem encode_variety_hyperbolic(const HyperbolicPacking& packing);

// Numeric points of the varieties read off a solved packing.
Vec variety_point(const PolySystem& sys, const EuclideanPacking& packing);
Vec variety_point(const PolySystem& sys, const TorusPacking& packing);
Vec variety_point(const PolySystem& sys, const HyperbolicPacking& packing);

// Write a refined variety point back into the packing's geometric fields.
void apply_variety_point(const Vec& point, EuclideanPacking& packing);
void apply_variety_point(const Vec& point, TorusPacking& packing);
void apply_variety_point(const Vec& point, HyperbolicPacking& packing);

struct IsolationReport {
    BigReal max_residual;          // over all equality polynomials
    BigReal sigma_min_bound;       // of the square-slice Jacobian
    Vec inequality_margins;
};

IsolationReport residual_and_isolation(const PolySystem& sys, const Vec& point);

// Text emission: header "vars: ...", one polynomial per line as monomials
// "coef exp_1 ... exp_V", the designated slice, and the strict inequalities.
std::string polysystem_text(const PolySystem& sys);

}  // namespace acp
