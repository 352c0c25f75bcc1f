#pragma once

#include <array>
#include <optional>
#include <vector>

#include "acp/bigcomplex.hpp"
#include "acp/triangulation.hpp"

namespace acp {

enum class Geometry { Euclidean, Hyperbolic };

struct ResidualReport {
    BigReal max_angle_sum;   // max |angle sum - 2*pi| over solved vertices
    BigReal max_tangency;    // max |dist(c_i,c_j) - (r_i+r_j)| over realized edges
    long iterations = 0;
};

// Sphere triangulation packed in the plane: the marked face's three circles
// are unit circles at (-1,0), (1,0), (0,sqrt(3)); everything else lies in the
// bounded interstice between them.
struct EuclideanPacking {
    Triangulation triangulation;
    std::array<int, 3> marked_face;
    int precision_digits = 0;
    std::vector<BigComplex> centers;
    std::vector<BigReal> radii;
    ResidualReport residuals;
};

// Genus-1 packing: one fundamental set of n circles, lattice <1, tau> with
// tau reduced into the modular fundamental region, the marked vertex's lift
// centered at the origin.
struct TorusPacking {
    Triangulation triangulation;
    int marked_vertex = 0;
    int marked_neighbor = 0;
    int precision_digits = 0;
    BigComplex tau;
    std::vector<std::string> reduction_word;      // applied moves: "T+", "T-", "S"
    std::vector<BigComplex> centers;              // canonical lift per vertex
    std::vector<BigReal> radii;
    // per-edge deck offsets: center(j) + s + t*tau is tangent to center(i)
    // for edge (i, j) with i < j
    std::vector<std::array<int, 4>> edge_offsets;  // {i, j, s, t}
    // translation class of each canonical lift relative to the parallelogram P
    std::vector<std::array<int, 2>> vertex_classes;
    ResidualReport residuals;
};

// Disk-preserving isometry in SU(1,1) form  z -> (a z + b) / (conj(b) z + conj(a)),
// stored as the two complex entries.  det = |a|^2 - |b|^2, normalized to 1.
struct DiskIsometry {
    BigComplex a;
    BigComplex b;

    BigComplex apply(const BigComplex& z) const;
    DiskIsometry inverse() const;
    friend DiskIsometry operator*(const DiskIsometry& m1, const DiskIsometry& m2);
    static DiskIsometry identity(Precision p);
    BigReal trace_abs() const;  // |2 Re(a)|
};

// A word over the 2g holonomy generators: signed 1-based indices, so  +k
// means generator k-1, -k its inverse.
using GenWord = std::vector<int>;

struct SeamPairing {
    VertexPair edge;      // quotient edge
    GenWord word;         // deck element as a generator word
    DiskIsometry value;   // the same element, numerically
};

// Genus >= 2 packing in the Poincare disk: canonical lift positions, radii r_i
// with exponentials R_i = e^{r_i}, holonomy generators, and the seam bookkeeping
// of the developed fundamental set (a spanning tree of faces).
struct HyperbolicPacking {
    Triangulation triangulation;
    int marked_vertex = 0;
    int marked_neighbor = 0;
    int precision_digits = 0;
    std::vector<BigComplex> centers;        // inside the unit disk
    std::vector<BigReal> radii;             // hyperbolic radii r_i
    std::vector<BigReal> exp_radii;         // R_i = e^{r_i}
    std::vector<DiskIsometry> generators;   // 2g of them, deterministic order
    std::vector<SeamPairing> pairings;
    // tangency equations realized by the developed fundamental set: for each
    // edge, the word w with  d(center_i, w(center_j)) = r_i + r_j  (w often empty);
    // seam edges carry a second route when its word differs
    std::vector<std::pair<VertexPair, GenWord>> edge_words;
    std::vector<std::pair<VertexPair, GenWord>> extra_edge_words;
    GenWord relator;                        // surface relation, evaluates to +-identity
    ResidualReport residuals;
};

}  // namespace acp
