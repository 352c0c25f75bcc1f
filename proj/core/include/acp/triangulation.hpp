#pragma once

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "acp/error.hpp"

namespace acp {

using VertexPair = std::pair<int, int>;  // normalized first < second

// Loopless undirected graph without parallel edges.
struct SimpleGraph {
    int vertex_count = 0;
    std::vector<VertexPair> edges;  // normalized and sorted

    static SimpleGraph create(int vertex_count, std::vector<VertexPair> edges);
    bool has_edge(int a, int b) const;
};

// Per-vertex cyclic order of neighbors; the embedding data used to complete
// a planar graph to a sphere triangulation.
struct RotationSystem {
    std::vector<std::vector<int>> neighbors;
};

// Combinatorial triangulation of a closed oriented surface.  Faces are vertex
// triples listed counterclockwise with respect to the surface orientation.
struct Triangulation {
    int vertex_count = 0;
    int genus = 0;
    std::vector<std::array<int, 3>> faces;

    std::vector<VertexPair> edge_list() const;  // sorted, deduplicated
    int edge_count() const { return static_cast<int>(edge_list().size()); }
};

// Returns every invariant violation (empty means valid): face shape, index
// range, edge/face incidences, orientation parity, pairwise face meetings,
// and the Euler count for the declared genus.
std::vector<std::string> validate_triangulation(const Triangulation& t);

struct CompletionResult {
    Triangulation triangulation;
    std::vector<int> vertex_injection;  // old index -> new index
};

// Deterministically extend an embedded connected planar graph to a sphere
// triangulation containing it.  Faces traced from the rotation system; faces
// whose boundary walk repeats a vertex get an interior ring before the final
// stellation, so original edges are never subdivided.
CompletionResult complete_to_triangulation(const SimpleGraph& g, const RotationSystem& rot);

// All unordered vertex pairs that do not share an edge, lexicographic order.
std::vector<VertexPair> nonedges(const SimpleGraph& g);

// Directed-edge-to-face index: for each face (a,b,c) the darts a->b, b->c,
// c->a belong to that face.  Every dart belongs to exactly one face in a
// valid triangulation.
struct DartMap {
    explicit DartMap(const Triangulation& t);
    // face containing the dart u->v, or -1
    int face_of(int u, int v) const;

private:
    int n_;
    std::vector<std::pair<long, int>> darts_;  // key u*n+v -> face
};

}  // namespace acp
