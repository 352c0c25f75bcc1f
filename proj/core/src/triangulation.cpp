#include "acp/triangulation.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace acp {

SimpleGraph SimpleGraph::create(int vertex_count, std::vector<VertexPair> edges) {
    if (vertex_count < 1) throw Error("DomainError", "graph needs at least one vertex");
    for (auto& e : edges) {
        if (e.first == e.second) throw Error("DomainError", "loop edge rejected");
        if (e.first > e.second) std::swap(e.first, e.second);
        if (e.first < 0 || e.second >= vertex_count) throw Error("DomainError", "edge index out of range");
    }
    std::sort(edges.begin(), edges.end());
    if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
        throw Error("DomainError", "parallel edge rejected");
    return SimpleGraph{vertex_count, std::move(edges)};
}

bool SimpleGraph::has_edge(int a, int b) const {
    if (a > b) std::swap(a, b);
    return std::binary_search(edges.begin(), edges.end(), VertexPair{a, b});
}

std::vector<VertexPair> Triangulation::edge_list() const {
    std::set<VertexPair> s;
    for (auto& f : faces)
        for (int k = 0; k < 3; ++k) {
            int a = f[k], b = f[(k + 1) % 3];
            s.insert({std::min(a, b), std::max(a, b)});
        }
    return {s.begin(), s.end()};
}

std::vector<std::string> validate_triangulation(const Triangulation& t) {
    std::vector<std::string> bad;
    auto facestr = [&](size_t i) {
        auto& f = t.faces[i];
        return "face " + std::to_string(i) + " (" + std::to_string(f[0]) + "," +
               std::to_string(f[1]) + "," + std::to_string(f[2]) + ")";
    };

    for (size_t i = 0; i < t.faces.size(); ++i) {
        auto& f = t.faces[i];
        for (int v : f)
            if (v < 0 || v >= t.vertex_count) {
                bad.push_back(facestr(i) + ": vertex index out of range");
                break;
            }
        if (f[0] == f[1] || f[1] == f[2] || f[0] == f[2])
            bad.push_back(facestr(i) + ": face repeats a vertex");
    }
    if (!bad.empty()) return bad;  // incidence checks assume well-formed faces

    // darts: each undirected edge must carry exactly one dart per direction
    std::map<std::pair<int, int>, std::vector<size_t>> darts;
    for (size_t i = 0; i < t.faces.size(); ++i) {
        auto& f = t.faces[i];
        for (int k = 0; k < 3; ++k) darts[{f[k], f[(k + 1) % 3]}].push_back(i);
    }
    std::set<VertexPair> edges;
    for (auto& [d, fs] : darts) edges.insert({std::min(d.first, d.second), std::max(d.first, d.second)});
    for (auto& e : edges) {
        auto fwd = darts.find({e.first, e.second});
        auto rev = darts.find({e.second, e.first});
        size_t nf = fwd == darts.end() ? 0 : fwd->second.size();
        size_t nr = rev == darts.end() ? 0 : rev->second.size();
        std::string ename = "edge (" + std::to_string(e.first) + "," + std::to_string(e.second) + ")";
        if (nf + nr != 2) {
            bad.push_back(ename + ": contained in " + std::to_string(nf + nr) + " faces, expected 2");
        } else if (nf != 1 || nr != 1) {
            bad.push_back(ename + ": edge with two same-orientation faces");
        }
    }

    // pairwise meetings: at most one shared edge, otherwise at most one vertex
    for (size_t i = 0; i < t.faces.size(); ++i) {
        for (size_t j = i + 1; j < t.faces.size(); ++j) {
            std::vector<int> shared;
            for (int a : t.faces[i])
                for (int b : t.faces[j])
                    if (a == b) shared.push_back(a);
            if (shared.size() < 2) continue;
            if (shared.size() >= 3) {
                bad.push_back(facestr(i) + " and " + facestr(j) + ": identical vertex sets");
                continue;
            }
            bool is_edge_i = false, is_edge_j = false;
            for (int k = 0; k < 3; ++k) {
                auto chk = [&](const std::array<int, 3>& f) {
                    int a = f[k], b = f[(k + 1) % 3];
                    return (a == shared[0] && b == shared[1]) || (a == shared[1] && b == shared[0]);
                };
                is_edge_i |= chk(t.faces[i]);
                is_edge_j |= chk(t.faces[j]);
            }
            if (!(is_edge_i && is_edge_j))
                bad.push_back(facestr(i) + " and " + facestr(j) +
                              ": meet at two vertices without a shared edge");
        }
    }

    long v = t.vertex_count;
    long e = static_cast<long>(edges.size());
    long f = static_cast<long>(t.faces.size());
    if (v - e + f != 2 - 2L * t.genus)
        bad.push_back("Euler count V-E+F = " + std::to_string(v - e + f) + " does not match genus " +
                      std::to_string(t.genus));
    return bad;
}

namespace {

// Trace the faces induced by a rotation system.  Dart (u -> v); the next dart
// of the same face is (v -> w) where w precedes u in the rotation at v.
// With counterclockwise rotations this walks each face clockwise, visiting
// every dart exactly once.
struct TracedFaces {
    std::vector<std::vector<int>> walks;  // vertex sequences, one per face
};

TracedFaces trace_faces(const SimpleGraph& g, const RotationSystem& rot) {
    if (static_cast<int>(rot.neighbors.size()) != g.vertex_count)
        throw Error("DomainError", "rotation system size does not match vertex count");
    std::map<std::pair<int, int>, int> pos;  // (v, neighbor) -> index in rot[v]
    for (int v = 0; v < g.vertex_count; ++v) {
        auto& nb = rot.neighbors[v];
        for (size_t i = 0; i < nb.size(); ++i) {
            if (!g.has_edge(v, nb[i])) throw Error("DomainError", "rotation lists a non-edge");
            if (!pos.emplace(std::make_pair(v, nb[i]), static_cast<int>(i)).second)
                throw Error("DomainError", "rotation repeats a neighbor");
        }
        size_t deg = 0;
        for (auto& e : g.edges) deg += (e.first == v || e.second == v) ? 1 : 0;
        if (nb.size() != deg) throw Error("DomainError", "rotation misses a neighbor");
    }

    std::set<std::pair<int, int>> seen;
    TracedFaces out;
    for (auto& e : g.edges) {
        for (auto start : {std::make_pair(e.first, e.second), std::make_pair(e.second, e.first)}) {
            if (seen.count(start)) continue;
            std::vector<int> walk;
            auto d = start;
            do {
                seen.insert(d);
                walk.push_back(d.first);
                auto& nb = rot.neighbors[d.second];
                int i = pos.at({d.second, d.first});
                int w = nb[(i + static_cast<int>(nb.size()) - 1) % nb.size()];
                d = {d.second, w};
            } while (d != start);
            out.walks.push_back(std::move(walk));
        }
    }
    return out;
}

}  // namespace

CompletionResult complete_to_triangulation(const SimpleGraph& g, const RotationSystem& rot) {
    // connectivity
    {
        std::vector<int> stack{0};
        std::vector<char> vis(g.vertex_count, 0);
        vis[0] = 1;
        int cnt = 1;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (auto& e : g.edges) {
                int o = e.first == v ? e.second : (e.second == v ? e.first : -1);
                if (o >= 0 && !vis[o]) { vis[o] = 1; ++cnt; stack.push_back(o); }
            }
        }
        if (cnt != g.vertex_count) throw Error("Disconnected", "graph is not connected");
    }

    int next = g.vertex_count;
    std::vector<std::array<int, 3>> faces;

    if (g.edges.empty() || (g.vertex_count == 2 && g.edges.size() == 1)) {
        // a single vertex or a single edge embeds in the tetrahedron directly
        while (next < 4) ++next;
        faces = {{0, 1, 2}, {0, 2, 3}, {0, 3, 1}, {1, 3, 2}};
        Triangulation t{next, 0, faces};
        auto bad = validate_triangulation(t);
        if (!bad.empty()) throw Error("DomainError", "internal: tetrahedron completion invalid");
        std::vector<int> inj(g.vertex_count);
        for (int i = 0; i < g.vertex_count; ++i) inj[i] = i;
        return {t, inj};
    }

    TracedFaces traced = trace_faces(g, rot);
    long v = g.vertex_count, e = static_cast<long>(g.edges.size()),
         f = static_cast<long>(traced.walks.size());
    long euler = v - e + f;
    if (euler != 2) throw Error("NonPlanarEmbedding", "face tracing gives genus " + std::to_string((2 - euler) / 2));

    for (auto& walk : traced.walks) {
        const size_t k = walk.size();
        std::set<int> distinct(walk.begin(), walk.end());
        bool repeats = distinct.size() != k;
        if (!repeats && k == 3) {
            faces.push_back({walk[0], walk[1], walk[2]});
            continue;
        }
        if (!repeats) {
            // plain stellation
            int c = next++;
            for (size_t i = 0; i < k; ++i)
                faces.push_back({walk[i], walk[(i + 1) % k], c});
            continue;
        }
        // boundary walk repeats a vertex: insert a ring with one vertex per
        // walk step, then stellate the (repeat-free) inner ring face
        std::vector<int> ring(k);
        for (size_t i = 0; i < k; ++i) ring[i] = next++;
        int c = next++;
        for (size_t i = 0; i < k; ++i) {
            size_t j = (i + 1) % k;
            faces.push_back({walk[i], walk[j], ring[i]});
            faces.push_back({ring[i], walk[j], ring[j]});
            faces.push_back({ring[i], ring[j], c});
        }
    }

    // traced walks run clockwise (see trace_faces); flip for counterclockwise faces
    for (auto& fc : faces) std::swap(fc[1], fc[2]);

    Triangulation t{next, 0, faces};
    auto bad = validate_triangulation(t);
    if (!bad.empty())
        throw Error("DomainError", "internal: completion produced an invalid triangulation: " + bad[0]);
    std::vector<int> inj(g.vertex_count);
    for (int i = 0; i < g.vertex_count; ++i) inj[i] = i;
    return {t, inj};
}

std::vector<VertexPair> nonedges(const SimpleGraph& g) {
    std::vector<VertexPair> out;
    for (int a = 0; a < g.vertex_count; ++a)
        for (int b = a + 1; b < g.vertex_count; ++b)
            if (!g.has_edge(a, b)) out.push_back({a, b});
    return out;
}

DartMap::DartMap(const Triangulation& t) : n_(t.vertex_count) {
    darts_.reserve(t.faces.size() * 3);
    for (size_t i = 0; i < t.faces.size(); ++i) {
        auto& f = t.faces[i];
        for (int k = 0; k < 3; ++k)
            darts_.push_back({static_cast<long>(f[k]) * n_ + f[(k + 1) % 3], static_cast<int>(i)});
    }
    std::sort(darts_.begin(), darts_.end());
}

int DartMap::face_of(int u, int v) const {
    long key = static_cast<long>(u) * n_ + v;
    auto it = std::lower_bound(darts_.begin(), darts_.end(), std::make_pair(key, -1));
    if (it == darts_.end() || it->first != key) return -1;
    return it->second;
}

}  // namespace acp
