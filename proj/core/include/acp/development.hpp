#pragma once

#include <map>
#include <optional>

#include "acp/packing.hpp"
#include "acp/radius_iteration.hpp"

namespace acp {

// Orientation-preserving similarity z -> rot*z + trans with |rot| = 1.
// Deck transformations of a flat torus are pure translations; the rotation
// part is carried through the side-pairing algebra and checked against 1.
struct EuclidMotion {
    BigComplex rot;
    BigComplex trans;

    BigComplex apply(const BigComplex& z) const { return rot * z + trans; }
    EuclidMotion inverse() const;
    friend EuclidMotion operator*(const EuclidMotion& g, const EuclidMotion& h);
    static EuclidMotion identity(Precision p);
    // unique orientation-preserving similarity with a1 -> b1, a2 -> b2 (rigid
    // when the two segments have equal length)
    static EuclidMotion from_pairs(const BigComplex& a1, const BigComplex& a2,
                                   const BigComplex& b1, const BigComplex& b2);
    BigReal dist_to_identity() const;
};

// Poincare-disk helpers (also used by the public packer_hyperbolic surface).
BigReal hyp_distance(const BigComplex& z1, const BigComplex& z2);
DiskIsometry disk_translation(const BigComplex& w);          // 0 -> w
DiskIsometry disk_rotation(const BigReal& angle);            // about 0
DiskIsometry disk_isometry_from_pairs(const BigComplex& a1, const BigComplex& a2,
                                      const BigComplex& b1, const BigComplex& b2);
BigReal disk_isometry_dist_to_identity(const DiskIsometry& m);

// Third corner of an oriented tangent triple: circle c tangent to both a and
// b, placed to the left of the directed segment a -> b.
BigComplex euclid_third_point(const BigComplex& za, const BigComplex& zb, const BigReal& ra,
                              const BigReal& rb, const BigReal& rc);
BigComplex hyp_third_point(const BigComplex& za, const BigComplex& zb, const BigReal& ra,
                           const BigReal& rb, const BigReal& rc);

// Development of a closed-surface packing label over a breadth-first spanning
// tree of the face-adjacency graph, with the full side-pairing bookkeeping:
// seam deck elements, a 2g generator extraction, generator words for every
// seam, the surface relator, and per-edge tangency routes expressed as words.
template <class Motion>
struct Development {
    std::vector<std::array<BigComplex, 3>> face_pos;  // per face, aligned with face vertex order
    std::vector<BigComplex> canonical;                // per vertex: first developed position
    std::vector<int> first_face;                      // per vertex
    std::vector<VertexPair> seam_edges;               // sorted; edges whose two charts disagree
    std::map<VertexPair, Motion> seam_values;         // crossing dart(u->v)-face into dart(v->u)-face
    std::vector<VertexPair> generator_edges;          // the 2g seam edges left out of the seam tree
    std::vector<Motion> generator_values;
    std::map<VertexPair, GenWord> seam_words;         // every seam edge as a generator word
    GenWord relator;
    // per edge: route through the dart(u->v) face, as d(c_u, w(c_v)) = r_u+r_v;
    // seams carry a second route through the other face when the words differ
    std::vector<std::pair<VertexPair, GenWord>> edge_routes;
    std::vector<std::pair<VertexPair, GenWord>> extra_routes;

    Motion eval_word(const GenWord& w, Precision p) const;
};

Development<EuclidMotion> develop_euclidean(const Triangulation& t, const std::vector<BigReal>& radii,
                                            int v0, int u0, const BigReal& tol);
Development<DiskIsometry> develop_hyperbolic(const Triangulation& t, const std::vector<BigReal>& radii,
                                             int v0, int u0, const BigReal& tol);

GenWord invert_word(const GenWord& w);
GenWord reduce_word(GenWord w);
GenWord concat_words(const GenWord& a, const GenWord& b);

}  // namespace acp
