#include "acp/development.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace acp {

// ---------- motions ----------

EuclidMotion EuclidMotion::inverse() const {
    Precision p = rot.precision();
    BigComplex one(BigReal(1, p), BigReal(p));
    BigComplex ir = one / rot;
    return {ir, -(ir * trans)};
}

EuclidMotion operator*(const EuclidMotion& g, const EuclidMotion& h) {
    // (g*h)(z) = g(h(z))
    return {g.rot * h.rot, g.rot * h.trans + g.trans};
}

EuclidMotion EuclidMotion::identity(Precision p) {
    return {BigComplex(BigReal(1, p), BigReal(p)), BigComplex(p)};
}

EuclidMotion EuclidMotion::from_pairs(const BigComplex& a1, const BigComplex& a2,
                                      const BigComplex& b1, const BigComplex& b2) {
    BigComplex rot = (b2 - b1) / (a2 - a1);
    return {rot, b1 - rot * a1};
}

BigReal EuclidMotion::dist_to_identity() const {
    Precision p = rot.precision();
    BigComplex one(BigReal(1, p), BigReal(p));
    return abs(rot - one) + abs(trans);
}

BigComplex DiskIsometry::apply(const BigComplex& z) const {
    return (a * z + b) / (conj(b) * z + conj(a));
}

DiskIsometry DiskIsometry::inverse() const { return {conj(a), -b}; }

DiskIsometry operator*(const DiskIsometry& m1, const DiskIsometry& m2) {
    return {m1.a * m2.a + m1.b * conj(m2.b), m1.a * m2.b + m1.b * conj(m2.a)};
}

DiskIsometry DiskIsometry::identity(Precision p) {
    return {BigComplex(BigReal(1, p), BigReal(p)), BigComplex(p)};
}

BigReal DiskIsometry::trace_abs() const {
    Precision p = a.precision();
    return abs(BigReal(2, p) * a.re);
}

BigReal hyp_distance(const BigComplex& z1, const BigComplex& z2) {
    Precision p = Precision(std::max(z1.precision().digits, z2.precision().digits));
    BigReal one(1, p), two(2, p);
    BigReal n1 = norm(z1), n2 = norm(z2);
    if (n1 >= one || n2 >= one) throw Error("DomainError", "hyp_distance needs points inside the unit disk");
    BigReal delta = two * norm(z1 - z2) / ((one - n1) * (one - n2));
    return arcosh(one + delta);
}

DiskIsometry disk_translation(const BigComplex& w) {
    Precision p = w.precision();
    BigReal one(1, p);
    BigReal d = one - norm(w);
    if (d.sign() <= 0) throw Error("DomainError", "translation target outside the unit disk");
    BigReal s = one / sqrt(d);
    return {BigComplex(s, BigReal(p)), BigComplex(s * w.re, s * w.im)};
}

DiskIsometry disk_rotation(const BigReal& angle) {
    Precision p = angle.precision();
    BigComplex half = unit_circle_point(angle / BigReal(2, p));
    return {half, BigComplex(p)};
}

DiskIsometry disk_isometry_from_pairs(const BigComplex& a1, const BigComplex& a2,
                                      const BigComplex& b1, const BigComplex& b2) {
    // translate a1 and b1 to the origin, rotate to match directions
    DiskIsometry ta = disk_translation(a1).inverse();
    DiskIsometry tb = disk_translation(b1).inverse();
    BigComplex a2p = ta.apply(a2);
    BigComplex b2p = tb.apply(b2);
    BigReal theta = arg(b2p) - arg(a2p);
    return tb.inverse() * (disk_rotation(theta) * ta);
}

BigReal disk_isometry_dist_to_identity(const DiskIsometry& m) {
    Precision p = m.a.precision();
    BigComplex one(BigReal(1, p), BigReal(p));
    // projective: +-identity are the same isometry
    return min(abs(m.a - one) + abs(m.b), abs(m.a + one) + abs(m.b));
}

BigComplex euclid_third_point(const BigComplex& za, const BigComplex& zb, const BigReal& ra,
                              const BigReal& rb, const BigReal& rc) {
    BigReal beta = euclid_angle(ra, rb, rc);
    BigComplex dir = (zb - za) / abs(zb - za);
    return za + (ra + rc) * (dir * unit_circle_point(beta));
}

BigComplex hyp_third_point(const BigComplex& za, const BigComplex& zb, const BigReal& ra,
                           const BigReal& rb, const BigReal& rc) {
    Precision p = Precision(std::max(za.precision().digits, zb.precision().digits));
    BigReal beta = hyp_angle(ra, rb, rc);
    DiskIsometry ta = disk_translation(za).inverse();
    BigReal dir = arg(ta.apply(zb));
    BigReal rho = tanh((ra + rc) / BigReal(2, p));
    BigComplex local = rho * unit_circle_point(dir + beta);
    return ta.inverse().apply(local);
}

// ---------- word helpers ----------

GenWord invert_word(const GenWord& w) {
    GenWord out;
    out.reserve(w.size());
    for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back(-*it);
    return out;
}

GenWord reduce_word(GenWord w) {
    GenWord out;
    for (int s : w) {
        if (!out.empty() && out.back() == -s)
            out.pop_back();
        else
            out.push_back(s);
    }
    return out;
}

GenWord concat_words(const GenWord& a, const GenWord& b) {
    GenWord out = a;
    out.insert(out.end(), b.begin(), b.end());
    return reduce_word(std::move(out));
}

// ---------- development ----------

namespace {

struct EuclidGeomTraits {
    using Motion = EuclidMotion;
    static BigComplex third(const BigComplex& za, const BigComplex& zb, const BigReal& ra,
                            const BigReal& rb, const BigReal& rc) {
        return euclid_third_point(za, zb, ra, rb, rc);
    }
    static Motion from_pairs(const BigComplex& a1, const BigComplex& a2, const BigComplex& b1,
                             const BigComplex& b2) {
        return EuclidMotion::from_pairs(a1, a2, b1, b2);
    }
    static Motion id(Precision p) { return EuclidMotion::identity(p); }
    static BigComplex start_second(const BigReal& r0, const BigReal& r1, Precision p) {
        return {r0 + r1, BigReal(p)};
    }
    static BigReal mismatch(const Motion& m) { return m.dist_to_identity(); }
    static BigReal dist(const BigComplex& z1, const BigComplex& z2) { return abs(z1 - z2); }
};

struct HypGeomTraits {
    using Motion = DiskIsometry;
    static BigComplex third(const BigComplex& za, const BigComplex& zb, const BigReal& ra,
                            const BigReal& rb, const BigReal& rc) {
        return hyp_third_point(za, zb, ra, rb, rc);
    }
    static Motion from_pairs(const BigComplex& a1, const BigComplex& a2, const BigComplex& b1,
                             const BigComplex& b2) {
        return disk_isometry_from_pairs(a1, a2, b1, b2);
    }
    static Motion id(Precision p) { return DiskIsometry::identity(p); }
    static BigComplex start_second(const BigReal& r0, const BigReal& r1, Precision p) {
        return {tanh((r0 + r1) / BigReal(2, p)), BigReal(p)};
    }
    static BigReal mismatch(const Motion& m) { return disk_isometry_dist_to_identity(m); }
    static BigReal dist(const BigComplex& z1, const BigComplex& z2) { return hyp_distance(z1, z2); }
};

template <class M>
M eval_generator_word(const GenWord& w, const std::vector<M>& gens, Precision p) {
    M acc = M::identity(p);
    for (int s : w) {
        const M& g = gens[static_cast<size_t>(std::abs(s)) - 1];
        acc = acc * (s > 0 ? g : g.inverse());
    }
    return acc;
}

// faces around a vertex in rotation order, with the crossing edge after each
struct StarCycle {
    std::vector<int> faces;
    std::vector<VertexPair> cross;  // cross[i] between faces[i] and faces[i+1 mod deg]
};

template <class Traits>
Development<typename Traits::Motion> develop_impl(const Triangulation& t,
                                                  const std::vector<BigReal>& radii, int v0, int u0,
                                                  const BigReal& tol) {
    using Motion = typename Traits::Motion;
    const int n = t.vertex_count;
    if (static_cast<int>(radii.size()) != n) throw Error("DimensionMismatch", "radius vector size mismatch");
    Precision p(tol.digits());
    for (auto& r : radii) p = Precision(std::max(p.digits, r.digits()));

    DartMap darts(t);
    const int f0 = darts.face_of(v0, u0);
    if (f0 < 0) throw Error("DomainError", "marked neighbor is not adjacent to the marked vertex");

    const size_t fcount = t.faces.size();
    Development<Motion> dev;
    dev.face_pos.assign(fcount, {BigComplex(p), BigComplex(p), BigComplex(p)});
    dev.canonical.assign(n, BigComplex(p));
    dev.first_face.assign(n, -1);

    auto corner_index = [&](int f, int v) {
        for (int k = 0; k < 3; ++k)
            if (t.faces[f][k] == v) return k;
        throw Error("DomainError", "internal: vertex not in face");
    };

    auto note_vertex = [&](int f, int k) {
        int v = t.faces[f][k];
        if (dev.first_face[v] < 0) {
            dev.first_face[v] = f;
            dev.canonical[v] = dev.face_pos[f][k];
        }
    };

    // base face: dart v0 -> u0
    {
        int k = corner_index(f0, v0);
        int u = t.faces[f0][(k + 1) % 3];
        int w = t.faces[f0][(k + 2) % 3];
        if (u != u0) throw Error("DomainError", "internal: base face dart mismatch");
        dev.face_pos[f0][k] = BigComplex(p);
        dev.face_pos[f0][(k + 1) % 3] = Traits::start_second(radii[v0], radii[u0], p);
        dev.face_pos[f0][(k + 2) % 3] =
            Traits::third(dev.face_pos[f0][k], dev.face_pos[f0][(k + 1) % 3], radii[v0], radii[u0], radii[w]);
        for (int c = 0; c < 3; ++c) note_vertex(f0, c);
    }

    std::vector<char> placed(fcount, 0);
    placed[f0] = 1;
    std::deque<int> queue{f0};
    while (!queue.empty()) {
        int f = queue.front();
        queue.pop_front();
        for (int k = 0; k < 3; ++k) {
            int a = t.faces[f][k], b = t.faces[f][(k + 1) % 3];
            int fn = darts.face_of(b, a);
            if (fn < 0) throw Error("DomainError", "edge without an opposite face");
            if (placed[fn]) continue;
            int kb = corner_index(fn, b);
            if (t.faces[fn][(kb + 1) % 3] != a) throw Error("DomainError", "internal: dart structure broken");
            int c = t.faces[fn][(kb + 2) % 3];
            dev.face_pos[fn][kb] = dev.face_pos[f][(k + 1) % 3];
            dev.face_pos[fn][(kb + 1) % 3] = dev.face_pos[f][k];
            dev.face_pos[fn][(kb + 2) % 3] =
                Traits::third(dev.face_pos[fn][kb], dev.face_pos[fn][(kb + 1) % 3], radii[b], radii[a], radii[c]);
            for (int cc = 0; cc < 3; ++cc) note_vertex(fn, cc);
            placed[fn] = 1;
            queue.push_back(fn);
        }
    }

    // classify edges: do both charts of (u,v) agree?
    BigReal ctol = pow10(-(p.digits / 4), p);
    auto edges = t.edge_list();
    std::map<VertexPair, int> seam_id;  // 0-based symbol index
    for (auto& e : edges) {
        int fp = darts.face_of(e.first, e.second);
        int fm = darts.face_of(e.second, e.first);
        const BigComplex& au = dev.face_pos[fp][corner_index(fp, e.first)];
        const BigComplex& av = dev.face_pos[fp][corner_index(fp, e.second)];
        const BigComplex& bu = dev.face_pos[fm][corner_index(fm, e.first)];
        const BigComplex& bv = dev.face_pos[fm][corner_index(fm, e.second)];
        if (abs(au - bu) + abs(av - bv) < ctol) continue;  // flat
        seam_id[e] = static_cast<int>(dev.seam_edges.size());
        dev.seam_edges.push_back(e);
        dev.seam_values.emplace(e, Traits::from_pairs(bu, bv, au, av));
    }

    // star cycles
    std::vector<StarCycle> star(n);
    std::vector<int> deg(n, 0);
    for (auto& f : t.faces)
        for (int v : f) deg[v] += 1;
    for (int v = 0; v < n; ++v) {
        int f = dev.first_face[v];
        StarCycle& sc = star[v];
        do {
            sc.faces.push_back(f);
            int k = corner_index(f, v);
            int w = t.faces[f][(k + 2) % 3];
            sc.cross.push_back({std::min(v, w), std::max(v, w)});
            f = darts.face_of(v, w);
            if (f < 0) throw Error("DomainError", "internal: open vertex star");
        } while (f != dev.first_face[v]);
        if (static_cast<int>(sc.faces.size()) != deg[v])
            throw Error("DomainError", "vertex star is not a single cycle");
    }

    // crossing symbol between consecutive star faces: +(symbol) when leaving
    // the dart(u->v) face of the seam, -(symbol) the other way
    auto crossing_symbol = [&](int f_from, const VertexPair& e) -> int {
        auto it = seam_id.find(e);
        if (it == seam_id.end()) return 0;
        int fp = darts.face_of(e.first, e.second);
        return f_from == fp ? (it->second + 1) : -(it->second + 1);
    };

    // vertex link relations over seam symbols
    std::vector<GenWord> relation(n);
    for (int v = 0; v < n; ++v) {
        StarCycle& sc = star[v];
        for (size_t i = 0; i < sc.faces.size(); ++i) {
            int s = crossing_symbol(sc.faces[i], sc.cross[i]);
            if (s != 0) relation[v].push_back(s);
        }
    }

    // numeric sanity of the link relations
    {
        Precision pp = p;
        for (int v = 0; v < n; ++v) {
            Motion acc = Traits::id(pp);
            for (int s : relation[v]) {
                const Motion& g = dev.seam_values.at(dev.seam_edges[static_cast<size_t>(std::abs(s)) - 1]);
                acc = acc * (s > 0 ? g : g.inverse());
            }
            if (Traits::mismatch(acc) > pow10(-(p.digits / 4), pp))
                throw Error("NoConvergence", "vertex link holonomy is not the identity");
        }
    }

    // seam graph: spanning tree, leftover edges become the generators
    std::set<int> kverts;
    for (auto& e : dev.seam_edges) { kverts.insert(e.first); kverts.insert(e.second); }
    std::map<int, std::vector<std::pair<int, int>>> kadj;  // vertex -> (other, symbol index)
    for (size_t i = 0; i < dev.seam_edges.size(); ++i) {
        auto& e = dev.seam_edges[i];
        kadj[e.first].push_back({e.second, static_cast<int>(i)});
        kadj[e.second].push_back({e.first, static_cast<int>(i)});
    }
    std::map<int, int> kparent_edge;  // vertex -> symbol index of tree edge to parent
    std::map<int, int> kdepth;
    std::vector<int> korder;
    std::vector<char> tree_edge(dev.seam_edges.size(), 0);
    if (!kverts.empty()) {
        int root = *kverts.begin();
        std::deque<int> bfs{root};
        kdepth[root] = 0;
        while (!bfs.empty()) {
            int v = bfs.front();
            bfs.pop_front();
            korder.push_back(v);
            for (auto& [w, sym] : kadj[v]) {
                if (kdepth.count(w)) continue;
                kdepth[w] = kdepth[v] + 1;
                kparent_edge[w] = sym;
                tree_edge[sym] = 1;
                bfs.push_back(w);
            }
        }
        if (korder.size() != kverts.size())
            throw Error("NoConvergence", "seam graph is disconnected; unsupported development");
    }

    for (size_t i = 0; i < dev.seam_edges.size(); ++i)
        if (!tree_edge[i]) dev.generator_edges.push_back(dev.seam_edges[i]);
    const size_t two_g = dev.generator_edges.size();
    if (two_g != dev.seam_edges.size() - (kverts.empty() ? 0 : kverts.size() - 1))
        throw Error("NoConvergence", "internal: generator count bookkeeping broken");

    std::map<VertexPair, int> gen_id;  // 1-based
    for (size_t i = 0; i < dev.generator_edges.size(); ++i) {
        gen_id[dev.generator_edges[i]] = static_cast<int>(i) + 1;
        dev.generator_values.push_back(dev.seam_values.at(dev.generator_edges[i]));
    }

    // eliminate tree-seam symbols leaf-to-root
    std::vector<std::optional<GenWord>> elim(dev.seam_edges.size());
    auto substitute = [&](const GenWord& w, int skip_symbol) -> std::pair<GenWord, std::pair<size_t, int>> {
        // returns the substituted word with a marker gap for skip_symbol
        GenWord out;
        size_t marker_pos = static_cast<size_t>(-1);
        int marker_sign = 0;
        for (int s : w) {
            int idx = std::abs(s) - 1;
            if (idx == skip_symbol) {
                marker_pos = out.size();
                marker_sign = s > 0 ? 1 : -1;
                out.push_back(0);  // placeholder
                continue;
            }
            GenWord piece;
            auto& e = dev.seam_edges[static_cast<size_t>(idx)];
            if (auto g = gen_id.find(e); g != gen_id.end()) {
                piece = {g->second};
            } else if (elim[static_cast<size_t>(idx)]) {
                piece = *elim[static_cast<size_t>(idx)];
            } else {
                throw Error("NoConvergence", "internal: elimination order broken");
            }
            if (s < 0) piece = invert_word(piece);
            out.insert(out.end(), piece.begin(), piece.end());
        }
        return {out, {marker_pos, marker_sign}};
    };

    std::vector<int> korder_rev(korder.rbegin(), korder.rend());
    for (int v : korder_rev) {
        if (!kparent_edge.count(v)) continue;  // root
        int target = kparent_edge[v];
        auto [sub, marker] = substitute(relation[v], target);
        auto [pos, sign] = marker;
        if (sign == 0) throw Error("NoConvergence", "internal: parent seam missing from link relation");
        GenWord before(sub.begin(), sub.begin() + static_cast<long>(pos));
        GenWord after(sub.begin() + static_cast<long>(pos) + 1, sub.end());
        // before * target^sign * after = 1
        GenWord value = concat_words(invert_word(before), invert_word(after));
        if (sign < 0) value = invert_word(value);
        elim[static_cast<size_t>(target)] = reduce_word(value);
    }

    // seam words and the relator (root link with everything substituted)
    for (size_t i = 0; i < dev.seam_edges.size(); ++i) {
        auto& e = dev.seam_edges[i];
        if (auto g = gen_id.find(e); g != gen_id.end())
            dev.seam_words[e] = {g->second};
        else
            dev.seam_words[e] = *elim[i];
    }
    if (!korder.empty()) {
        auto [sub, marker] = substitute(relation[korder.front()], -1);
        dev.relator = reduce_word(sub);
    }

    // validate each seam word against its numeric side pairing
    BigReal vtol = max(tol * pow10(8, p), pow10(-(p.digits * 3 / 4), p));
    for (auto& e : dev.seam_edges) {
        Motion m = eval_generator_word(dev.seam_words.at(e), dev.generator_values, p);
        Motion diff = m * dev.seam_values.at(e).inverse();
        if (Traits::mismatch(diff) > vtol)
            throw Error("NoConvergence", "seam word does not reproduce its side pairing");
    }
    if (!dev.relator.empty()) {
        Motion m = eval_generator_word(dev.relator, dev.generator_values, p);
        if (Traits::mismatch(m) > vtol)
            throw Error("NoConvergence", "surface relator does not evaluate to the identity");
    }

    // per-edge tangency routes
    auto walk_word = [&](int x, int f_target) -> GenWord {
        // crossings around x from first_face[x] to f_target, shorter direction
        StarCycle& sc = star[x];
        size_t d = sc.faces.size();
        size_t ti = 0;
        while (ti < d && sc.faces[ti] != f_target) ++ti;
        if (ti == d) throw Error("DomainError", "internal: face not in star");
        GenWord fwd;  // crossings 0..ti-1
        for (size_t i = 0; i < ti; ++i) {
            int s = crossing_symbol(sc.faces[i], sc.cross[i]);
            if (s == 0) continue;
            GenWord piece = dev.seam_words.at(dev.seam_edges[static_cast<size_t>(std::abs(s)) - 1]);
            if (s < 0) piece = invert_word(piece);
            fwd.insert(fwd.end(), piece.begin(), piece.end());
        }
        fwd = reduce_word(std::move(fwd));
        GenWord bwd;  // walk the other way: crossings d-1..ti, inverted
        for (size_t i = d; i-- > ti;) {
            int s = crossing_symbol(sc.faces[i], sc.cross[i]);
            if (s == 0) continue;
            GenWord piece = dev.seam_words.at(dev.seam_edges[static_cast<size_t>(std::abs(s)) - 1]);
            if (s < 0) piece = invert_word(piece);
            piece = invert_word(piece);
            bwd.insert(bwd.end(), piece.begin(), piece.end());
        }
        bwd = reduce_word(std::move(bwd));
        return bwd.size() < fwd.size() ? bwd : fwd;
    };

    auto check_route = [&](const VertexPair& e, const GenWord& w) {
        Motion m = eval_generator_word(w, dev.generator_values, p);
        BigReal d = Traits::dist(dev.canonical[e.first], m.apply(dev.canonical[e.second]));
        if (abs(d - (radii[e.first] + radii[e.second])) > vtol)
            throw Error("NoConvergence", "edge route word does not realize its tangency");
    };

    for (auto& e : edges) {
        int fp = darts.face_of(e.first, e.second);
        GenWord du = walk_word(e.first, fp);
        GenWord dv = walk_word(e.second, fp);
        GenWord w = concat_words(du, invert_word(dv));
        check_route(e, w);
        dev.edge_routes.push_back({e, w});
        if (seam_id.count(e)) {
            int fm = darts.face_of(e.second, e.first);
            GenWord du2 = walk_word(e.first, fm);
            GenWord dv2 = walk_word(e.second, fm);
            GenWord w2 = concat_words(du2, invert_word(dv2));
            if (w2 != w) {
                check_route(e, w2);
                dev.extra_routes.push_back({e, w2});
            }
        }
    }

    return dev;
}

}  // namespace

template <class Motion>
Motion Development<Motion>::eval_word(const GenWord& w, Precision p) const {
    return eval_generator_word(w, generator_values, p);
}

template struct Development<EuclidMotion>;
template struct Development<DiskIsometry>;

Development<EuclidMotion> develop_euclidean(const Triangulation& t, const std::vector<BigReal>& radii,
                                            int v0, int u0, const BigReal& tol) {
    return develop_impl<EuclidGeomTraits>(t, radii, v0, u0, tol);
}

Development<DiskIsometry> develop_hyperbolic(const Triangulation& t, const std::vector<BigReal>& radii,
                                             int v0, int u0, const BigReal& tol) {
    return develop_impl<HypGeomTraits>(t, radii, v0, u0, tol);
}

}  // namespace acp
