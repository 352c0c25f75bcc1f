#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>

#include "acp/triangulation.hpp"

namespace acp::fixtures {

inline Triangulation tetrahedron() {
    return {4, 0, {{0, 1, 2}, {0, 2, 3}, {0, 3, 1}, {1, 3, 2}}};
}

inline Triangulation octahedron() {
    return {6, 0,
            {{0, 1, 2}, {0, 2, 3}, {0, 3, 4}, {0, 4, 1}, {5, 2, 1}, {5, 3, 2}, {5, 4, 3}, {5, 1, 4}}};
}

inline Triangulation icosahedron() {
    std::vector<std::array<int, 3>> faces;
    auto u = [](int i) { return 1 + ((i - 1) % 5 + 5) % 5; };       // upper ring 1..5
    auto l = [](int i) { return 6 + ((i - 1) % 5 + 5) % 5; };       // lower ring 6..10
    for (int i = 1; i <= 5; ++i) {
        faces.push_back({0, u(i), u(i + 1)});
        faces.push_back({u(i), l(i), u(i + 1)});
        faces.push_back({u(i + 1), l(i), l(i + 1)});
        faces.push_back({11, l(i + 1), l(i)});
    }
    return {12, 0, faces};
}

// index-7 quotient of the triangular lattice; 1-skeleton is K7
inline Triangulation k7_torus() {
    std::vector<std::array<int, 3>> faces;
    for (int i = 0; i < 7; ++i) {
        faces.push_back({i, (i + 1) % 7, (i + 3) % 7});
        faces.push_back({i, (i + 3) % 7, (i + 2) % 7});
    }
    return {7, 1, faces};
}

// 3x3 square grid on the torus with consistent diagonals (combinatorially the
// triangular lattice again)
inline Triangulation square_torus() {
    auto v = [](int i, int j) { return 3 * ((i % 3 + 3) % 3) + ((j % 3 + 3) % 3); };
    std::vector<std::array<int, 3>> faces;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            faces.push_back({v(i, j), v(i + 1, j), v(i + 1, j + 1)});
            faces.push_back({v(i, j), v(i + 1, j + 1), v(i, j + 1)});
        }
    return {9, 1, faces};
}

// Genus-2 surface: octagon with sides identified in the pattern
// a b a' b' c d c' d', sides subdivided into three segments, interior coned
// from a hub, and one global 1->4 subdivision to remove parallel edges.
inline Triangulation genus2() {
    const int segs = 24;  // boundary segments of the octagon
    // partner segment under the side pairing (side i of three segments glues
    // reversed onto side p(i))
    auto partner = [&](int k) {
        static const int pside[8] = {2, 3, 0, 1, 6, 7, 4, 5};
        int side = k / 3, off = k % 3;
        return 3 * pside[side] + (2 - off);
    };

    // boundary vertex classes via union-find: gluing segment k (B_k -> B_{k+1})
    // onto segment m reversed identifies B_k ~ B_{m+1} and B_{k+1} ~ B_m
    std::vector<int> parent(segs);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
    auto unite = [&](int x, int y) { parent[find(x)] = find(y); };
    for (int k = 0; k < segs; ++k) {
        int m = partner(k);
        unite(k, (m + 1) % segs);
        unite((k + 1) % segs, m);
    }

    // pre-subdivision vertices: hub, then one id per boundary class
    std::vector<int> cls(segs, -1);
    int next_class = 1;  // 0 is the hub
    for (int k = 0; k < segs; ++k) {
        int root = find(k);
        if (cls[root] < 0) cls[root] = next_class++;
        cls[k] = cls[root];
    }
    auto bclass = [&](int k) { return cls[find(k % segs)]; };
    const int hub = 0;

    // pre-subdivision faces (hub, B_k, B_{k+1}) with explicit edge classes:
    // spoke k joins hub and B_k (one class per k); boundary segment classes
    // pair k with partner(k)
    auto spoke_class = [&](int k) { return k % segs; };                 // 0..23
    auto seg_class = [&](int k) { return segs + std::min(k, partner(k)); };  // 24..35 used sparsely

    // remap edge classes densely: spokes 0..23, segments 24..35
    std::vector<int> seg_ids(segs, -1);
    int seg_count = 0;
    for (int k = 0; k < segs; ++k) {
        int base = std::min(k, partner(k));
        if (seg_ids[base] < 0) seg_ids[base] = seg_count++;
    }
    auto seg_id = [&](int k) { return segs + seg_ids[std::min(k, partner(k))]; };
    (void)seg_class;

    const int pre_vertices = next_class;            // hub + boundary classes
    const int edge_classes = segs + seg_count;      // 24 spokes + 12 segments
    // subdivided vertex ids: pre-vertex v -> v; edge class e -> pre_vertices + e
    auto mid = [&](int e) { return pre_vertices + e; };

    std::vector<std::array<int, 3>> faces;
    for (int k = 0; k < segs; ++k) {
        int a = hub, b = bclass(k), c = bclass(k + 1);
        int mab = mid(spoke_class(k));
        int mbc = mid(seg_id(k));
        int mca = mid(spoke_class((k + 1) % segs));
        faces.push_back({a, mab, mca});
        faces.push_back({b, mbc, mab});
        faces.push_back({c, mca, mbc});
        faces.push_back({mab, mbc, mca});
    }
    return {pre_vertices + edge_classes, 2, faces};
}

// --- graphs with embeddings ---

struct EmbeddedGraph {
    SimpleGraph graph;
    RotationSystem rotation;
};

// rotation system from straight-line coordinates (counterclockwise sort)
inline RotationSystem rotation_from_coords(const SimpleGraph& g,
                                           const std::vector<std::pair<double, double>>& xy) {
    RotationSystem rot;
    rot.neighbors.resize(static_cast<size_t>(g.vertex_count));
    for (int v = 0; v < g.vertex_count; ++v) {
        std::vector<int> nb;
        for (auto& e : g.edges) {
            if (e.first == v) nb.push_back(e.second);
            if (e.second == v) nb.push_back(e.first);
        }
        std::sort(nb.begin(), nb.end(), [&](int a, int b) {
            double ta = std::atan2(xy[a].second - xy[v].second, xy[a].first - xy[v].first);
            double tb = std::atan2(xy[b].second - xy[v].second, xy[b].first - xy[v].first);
            return ta < tb;
        });
        rot.neighbors[v] = std::move(nb);
    }
    return rot;
}

inline EmbeddedGraph k4_graph() {
    SimpleGraph g = SimpleGraph::create(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
    std::vector<std::pair<double, double>> xy = {{0, 0}, {1, 0}, {-0.5, 0.9}, {-0.5, -0.9}};
    return {g, rotation_from_coords(g, xy)};
}

inline EmbeddedGraph c4_graph() {
    SimpleGraph g = SimpleGraph::create(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}});
    std::vector<std::pair<double, double>> xy = {{0, 0}, {1, 0}, {1, 1}, {0, 1}};
    return {g, rotation_from_coords(g, xy)};
}

inline EmbeddedGraph p2_graph() {
    SimpleGraph g = SimpleGraph::create(2, {{0, 1}});
    std::vector<std::pair<double, double>> xy = {{0, 0}, {1, 0}};
    return {g, rotation_from_coords(g, xy)};
}

inline EmbeddedGraph p3_graph() {
    SimpleGraph g = SimpleGraph::create(3, {{0, 1}, {1, 2}});
    std::vector<std::pair<double, double>> xy = {{0, 0}, {1, 0}, {2, 0}};
    return {g, rotation_from_coords(g, xy)};
}

inline EmbeddedGraph wheel5_graph() {
    std::vector<VertexPair> edges;
    for (int i = 1; i <= 5; ++i) {
        edges.push_back({0, i});
        edges.push_back({i, i % 5 + 1});
    }
    SimpleGraph g = SimpleGraph::create(6, std::move(edges));
    std::vector<std::pair<double, double>> xy = {{0, 0}};
    for (int i = 0; i < 5; ++i)
        xy.push_back({std::cos(2 * M_PI * i / 5), std::sin(2 * M_PI * i / 5)});
    return {g, rotation_from_coords(g, xy)};
}

inline EmbeddedGraph cube_graph() {
    std::vector<VertexPair> edges;
    for (int i = 0; i < 4; ++i) {
        edges.push_back({i, (i + 1) % 4});
        edges.push_back({i + 4, (i + 1) % 4 + 4});
        edges.push_back({i, i + 4});
    }
    SimpleGraph g = SimpleGraph::create(8, std::move(edges));
    std::vector<std::pair<double, double>> xy;
    for (int i = 0; i < 4; ++i)
        xy.push_back({2 * std::cos(2 * M_PI * i / 4 + 0.4), 2 * std::sin(2 * M_PI * i / 4 + 0.4)});
    for (int i = 0; i < 4; ++i)
        xy.push_back({std::cos(2 * M_PI * i / 4 + 0.4), std::sin(2 * M_PI * i / 4 + 0.4)});
    return {g, rotation_from_coords(g, xy)};
}

}  // namespace acp::fixtures
