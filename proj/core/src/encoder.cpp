#include "acp/encoder.hpp"

#include <sstream>

namespace acp {

namespace {

Poly pvar(uint32_t i) { return Poly::variable(i); }
Poly pc(long c) { return Poly::constant(Int(c)); }

Poly sq(const Poly& p) { return p * p; }

std::string idx_name(const char* base, int i) { return std::string(base) + std::to_string(i); }

}  // namespace

Sentence encode_sentence_sphere(const SimpleGraph& g) {
    const int n = g.vertex_count;
    Sentence s;
    for (int i = 0; i < n; ++i) s.vars.push_back(idx_name("x", i));
    for (int i = 0; i < n; ++i) s.vars.push_back(idx_name("y", i));
    for (int i = 0; i < n; ++i) s.vars.push_back(idx_name("r", i));
    auto X = [&](int i) { return pvar(static_cast<uint32_t>(i)); };
    auto Y = [&](int i) { return pvar(static_cast<uint32_t>(n + i)); };
    auto R = [&](int i) { return pvar(static_cast<uint32_t>(2 * n + i)); };

    std::vector<Formula> atoms;
    for (int i = 0; i < n; ++i) atoms.push_back(Formula::atom_gt(R(i)));
    for (auto& [a, b] : g.edges)
        atoms.push_back(Formula::atom_eq(sq(X(a) - X(b)) + sq(Y(a) - Y(b)) - sq(R(a) + R(b))));
    for (auto& [a, b] : nonedges(g))
        atoms.push_back(Formula::atom_gt(sq(X(a) - X(b)) + sq(Y(a) - Y(b)) - sq(R(a) + R(b))));
    s.body = Formula::make_and(std::move(atoms));
    return s;
}

namespace {

// membership of (zx, zy) in the half-open parallelogram spanned by 1 and
// tau = a + b i: bottom and left sides plus the origin corner included
Formula parallelogram_membership(const Poly& zx, const Poly& zy, const Poly& a, const Poly& b) {
    Poly q = b * zx - a * zy;
    std::vector<Formula> kids;
    kids.push_back(Formula::make_or({Formula::atom_gt(zy), Formula::atom_eq(zy)}));
    kids.push_back(Formula::atom_gt(b - zy));
    kids.push_back(Formula::make_or({Formula::atom_gt(q), Formula::atom_eq(q)}));
    kids.push_back(Formula::atom_gt(b - q));
    return Formula::make_and(std::move(kids));
}

}  // namespace

TorusSentence encode_sentence_torus(const Triangulation& t, const TorusBlock& block) {
    const int n = block.n;
    if (t.vertex_count != n) throw Error("BlockInconsistent", "block size does not match the triangulation");
    const int total = 4 * n;
    Precision p = block.tau.precision();

    // verify the identification table against the block geometry
    {
        BigReal snap = pow10(-(p.digits / 4), p);
        for (auto& [j, k, s, tt] : block.identified) {
            BigComplex lat = BigComplex(BigReal(s, p), BigReal(p)) +
                             BigComplex(BigReal(tt, p), BigReal(p)) * block.tau;
            if (abs(block.centers[j] - (block.centers[k] + lat)) > snap)
                throw Error("BlockInconsistent", "identified pair disagrees with the deck action");
        }
    }

    TorusSentence out;
    Sentence& s = out.sentence;
    for (int i = 0; i < total; ++i) s.vars.push_back(idx_name("x", i));
    for (int i = 0; i < total; ++i) s.vars.push_back(idx_name("y", i));
    for (int i = 0; i < total; ++i) s.vars.push_back(idx_name("r", i));
    s.vars.push_back("a");
    s.vars.push_back("b");
    s.vars.push_back("xD0");
    s.vars.push_back("yD0");
    s.vars.push_back("rD0");
    auto X = [&](int i) { return pvar(static_cast<uint32_t>(i)); };
    auto Y = [&](int i) { return pvar(static_cast<uint32_t>(total + i)); };
    auto R = [&](int i) { return pvar(static_cast<uint32_t>(2 * total + i)); };
    Poly A = pvar(static_cast<uint32_t>(3 * total));
    Poly B = pvar(static_cast<uint32_t>(3 * total + 1));
    Poly X0 = pvar(static_cast<uint32_t>(3 * total + 2));
    Poly Y0 = pvar(static_cast<uint32_t>(3 * total + 3));
    Poly R0 = pvar(static_cast<uint32_t>(3 * total + 4));

    std::vector<Formula> parts;
    for (int i = 0; i < total; ++i) parts.push_back(Formula::atom_gt(R(i)));
    out.r_atoms = static_cast<size_t>(total);

    std::vector<char> is_edge(static_cast<size_t>(total) * total, 0);
    for (auto& [i, j] : block.contact_edges) {
        is_edge[static_cast<size_t>(i) * total + j] = 1;
        parts.push_back(Formula::atom_eq(sq(X(i) - X(j)) + sq(Y(i) - Y(j)) - sq(R(i) + R(j))));
        out.edge_preds += 1;
    }
    for (int i = 0; i < total; ++i)
        for (int j = i + 1; j < total; ++j) {
            if (is_edge[static_cast<size_t>(i) * total + j]) continue;
            parts.push_back(Formula::atom_gt(sq(X(i) - X(j)) + sq(Y(i) - Y(j)) - sq(R(i) + R(j))));
            out.nonedge_preds += 1;
        }

    for (auto& [j, k, st, tt] : block.identified) {
        std::vector<Formula> u;
        u.push_back(Formula::atom_eq(R(j) - R(k)));
        u.push_back(Formula::atom_eq(X(j) - (X(k) + pc(st) + A.scaled(Int(tt)))));
        u.push_back(Formula::atom_eq(Y(j) - (Y(k) + B.scaled(Int(tt)))));
        parts.push_back(Formula::make_and(std::move(u)));
        out.u_preds += 1;
    }

    for (int copy = 0; copy < 4; ++copy) {
        for (int v = 0; v < n; ++v) {
            int i = copy * n + v;
            Poly zx = X(i), zy = Y(i);
            if (copy == 1 || copy == 3) zx -= pc(1);
            if (copy == 2 || copy == 3) { zx -= A; zy -= B; }
            parts.push_back(parallelogram_membership(zx, zy, A, B));
            out.k_preds += 1;
        }
    }

    {
        std::vector<Formula> z;
        z.push_back(Formula::atom_eq(X(block.z_index) - X0));
        z.push_back(Formula::atom_eq(Y(block.z_index) - Y0));
        z.push_back(Formula::atom_eq(R(block.z_index) - R0));
        z.push_back(Formula::atom_eq(X0));
        z.push_back(Formula::atom_eq(Y0));
        parts.push_back(Formula::make_and(std::move(z)));
    }
    {
        std::vector<Formula> tt;
        tt.push_back(Formula::atom_eq(X(block.t_tau_index) - A));
        tt.push_back(Formula::atom_eq(Y(block.t_tau_index) - B));
        tt.push_back(Formula::atom_eq(X(block.t_one_index) - pc(1)));
        tt.push_back(Formula::atom_eq(Y(block.t_one_index)));
        parts.push_back(Formula::make_and(std::move(tt)));
    }
    {
        // W: b > 0 and tau in the fundamental region, three-part union
        Poly n2 = sq(A) + sq(B) - pc(1);
        Poly re_hi = pc(1) - A.scaled(Int(2));   // 1 - 2a > 0  <=>  Re < 1/2
        Poly re_lo = A.scaled(Int(2)) + pc(1);   // 2a + 1
        Formula interior = Formula::make_and(
            {Formula::atom_gt(n2), Formula::atom_gt(re_hi), Formula::atom_gt(re_lo)});
        Formula left_side = Formula::make_and(
            {Formula::atom_eq(re_lo), Formula::make_or({Formula::atom_gt(n2), Formula::atom_eq(n2)})});
        Formula arc = Formula::make_and(
            {Formula::atom_eq(n2), Formula::atom_gt(re_lo),
             Formula::make_or({Formula::atom_gt(-A), Formula::atom_eq(A)})});
        parts.push_back(Formula::make_and(
            {Formula::atom_gt(B), Formula::make_or({interior, left_side, arc})}));
    }

    s.body = Formula::make_and(std::move(parts));
    return out;
}

// ---------- varieties ----------

PolySystem encode_variety_sphere(const Triangulation& t, const std::array<int, 3>& marked_face) {
    {
        bool found = false;
        for (auto& f : t.faces)
            for (int r = 0; r < 3 && !found; ++r)
                found = f[r] == marked_face[0] && f[(r + 1) % 3] == marked_face[1] &&
                        f[(r + 2) % 3] == marked_face[2];
        if (!found) throw Error("UnsupportedFace", "marked triple is not an oriented face");
    }
    const int n = t.vertex_count;
    PolySystem sys;
    for (int i = 0; i < n; ++i) sys.vars.push_back(idx_name("x", i));
    for (int i = 0; i < n; ++i) sys.vars.push_back(idx_name("y", i));
    for (int i = 0; i < n; ++i) sys.vars.push_back(idx_name("r", i));
    sys.primary_count = static_cast<size_t>(3 * n);
    sys.vars.push_back("w");  // auxiliary, pinned to sqrt(3)
    auto X = [&](int i) { return pvar(static_cast<uint32_t>(i)); };
    auto Y = [&](int i) { return pvar(static_cast<uint32_t>(n + i)); };
    auto R = [&](int i) { return pvar(static_cast<uint32_t>(2 * n + i)); };
    Poly W = pvar(static_cast<uint32_t>(3 * n));

    auto edges = t.edge_list();
    std::vector<size_t> slice;
    auto in_marked = [&](int v) {
        return v == marked_face[0] || v == marked_face[1] || v == marked_face[2];
    };
    for (auto& [a, b] : edges) {
        sys.equalities.push_back(sq(X(a) - X(b)) + sq(Y(a) - Y(b)) - sq(R(a) + R(b)));
        if (!(in_marked(a) && in_marked(b))) slice.push_back(sys.equalities.size() - 1);
    }
    const int v1 = marked_face[0], v2 = marked_face[1], v3 = marked_face[2];
    for (Poly q : {R(v1) - pc(1), R(v2) - pc(1), R(v3) - pc(1), X(v1) + pc(1), Y(v1), X(v2) - pc(1),
                   Y(v2), X(v3), Y(v3) - W, sq(W) - pc(3)}) {
        sys.equalities.push_back(std::move(q));
        slice.push_back(sys.equalities.size() - 1);
    }
    for (int i = 0; i < n; ++i) sys.inequalities.push_back(R(i));
    sys.inequalities.push_back(W);
    if (slice.size() != sys.vars.size())
        throw Error("DimensionMismatch", "sphere slice bookkeeping broken");
    sys.square_slice = std::move(slice);
    return sys;
}

PolySystem encode_variety_torus(const TorusPacking& packing) {
    const int n = packing.triangulation.vertex_count;
    PolySystem sys;
    for (int i = 0; i < n; ++i) sys.vars.push_back(idx_name("x", i));
    for (int i = 0; i < n; ++i) sys.vars.push_back(idx_name("y", i));
    for (int i = 0; i < n; ++i) sys.vars.push_back(idx_name("r", i));
    sys.vars.push_back("a");
    sys.vars.push_back("b");
    sys.primary_count = sys.vars.size();
    auto X = [&](int i) { return pvar(static_cast<uint32_t>(i)); };
    auto Y = [&](int i) { return pvar(static_cast<uint32_t>(n + i)); };
    auto R = [&](int i) { return pvar(static_cast<uint32_t>(2 * n + i)); };
    Poly A = pvar(static_cast<uint32_t>(3 * n));
    Poly B = pvar(static_cast<uint32_t>(3 * n + 1));

    for (auto& [i, j, s, tt] : packing.edge_offsets) {
        Poly dx = X(i) - (X(j) + pc(s) + A.scaled(Int(tt)));
        Poly dy = Y(i) - (Y(j) + B.scaled(Int(tt)));
        sys.equalities.push_back(sq(dx) + sq(dy) - sq(R(i) + R(j)));
    }
    sys.equalities.push_back(X(packing.marked_vertex));
    sys.equalities.push_back(Y(packing.marked_vertex));
    for (int i = 0; i < n; ++i) sys.inequalities.push_back(R(i));
    sys.inequalities.push_back(B);
    if (sys.equalities.size() != sys.vars.size())
        throw Error("DimensionMismatch", "torus system is not square");
    sys.square_slice.resize(sys.vars.size());
    for (size_t i = 0; i < sys.square_slice.size(); ++i) sys.square_slice[i] = i;
    return sys;
}

namespace {

// complex polynomial over real variables
struct CPoly {
    Poly re, im;

    friend CPoly operator+(const CPoly& x, const CPoly& y) { return {x.re + y.re, x.im + y.im}; }
    friend CPoly operator-(const CPoly& x, const CPoly& y) { return {x.re - y.re, x.im - y.im}; }
    friend CPoly operator*(const CPoly& x, const CPoly& y) {
        return {x.re * y.re - x.im * y.im, x.re * y.im + x.im * y.re};
    }
};

CPoly cconj(const CPoly& x) { return {x.re, -x.im}; }
Poly cnorm(const CPoly& x) { return x.re * x.re + x.im * x.im; }

struct MatrixPoly {
    CPoly a, b;  // SU(1,1) form [[a, b], [conj b, conj a]]
};

MatrixPoly mat_identity() { return {{pc(1), Poly()}, {Poly(), Poly()}}; }

MatrixPoly mat_mul(const MatrixPoly& m, const MatrixPoly& h) {
    return {m.a * h.a + m.b * cconj(h.b), m.a * h.b + m.b * cconj(h.a)};
}

MatrixPoly mat_inv(const MatrixPoly& m) {
    // unit determinant: inverse is [[conj a, -b], [-conj b, a]]
    return {cconj(m.a), {-m.b.re, -m.b.im}};
}

}  // namespace

PolySystem encode_variety_hyperbolic(const HyperbolicPacking& packing) {
    const int n = packing.triangulation.vertex_count;
    const int g = packing.triangulation.genus;
    const int gens = 2 * g;
    if (static_cast<int>(packing.generators.size()) != gens)
        throw Error("DimensionMismatch", "packing does not carry 2g generators");

    PolySystem sys;
    for (int i = 0; i < n; ++i) sys.vars.push_back(idx_name("x", i));
    for (int i = 0; i < n; ++i) sys.vars.push_back(idx_name("y", i));
    for (int i = 0; i < n; ++i) sys.vars.push_back(idx_name("R", i));
    for (int k = 0; k < gens; ++k) {
        sys.vars.push_back(idx_name("gp", k));
        sys.vars.push_back(idx_name("gq", k));
        sys.vars.push_back(idx_name("gs", k));
        sys.vars.push_back(idx_name("gt", k));
    }
    sys.primary_count = sys.vars.size();

    auto X = [&](int i) { return pvar(static_cast<uint32_t>(i)); };
    auto Y = [&](int i) { return pvar(static_cast<uint32_t>(n + i)); };
    auto R = [&](int i) { return pvar(static_cast<uint32_t>(2 * n + i)); };
    auto gen_mat = [&](int k) -> MatrixPoly {
        uint32_t base = static_cast<uint32_t>(3 * n + 4 * k);
        return {{pvar(base), pvar(base + 1)}, {pvar(base + 2), pvar(base + 3)}};
    };
    auto word_mat = [&](const GenWord& w) {
        MatrixPoly m = mat_identity();
        for (int sgn : w) {
            MatrixPoly gm = gen_mat(std::abs(sgn) - 1);
            m = mat_mul(m, sgn > 0 ? gm : mat_inv(gm));
        }
        return m;
    };

    // cleared tangency: with u = 1 + delta the squared identity
    //   2 R_u R_v u = R_u^2 R_v^2 + 1
    // becomes, after clearing both disk denominators and the word's Moebius
    // denominator |D|^2,
    //   2 R_u R_v [ e1 (DD - NN) + 2 M ] - (R_u^2 R_v^2 + 1) e1 (DD - NN) = 0
    auto tangency = [&](int u, int v, const GenWord& w) -> Poly {
        MatrixPoly m = word_mat(w);
        CPoly zv{X(v), Y(v)};
        CPoly N = m.a * zv + m.b;
        CPoly D = cconj(m.b) * zv + cconj(m.a);
        Poly e1 = pc(1) - sq(X(u)) - sq(Y(u));
        Poly dd_nn = cnorm(D) - cnorm(N);
        CPoly zu{X(u), Y(u)};
        Poly mterm = cnorm(zu * D - N);
        Poly ruv = R(u) * R(v);
        return ruv.scaled(Int(2)) * (e1 * dd_nn + mterm.scaled(Int(2))) -
               (sq(ruv) + pc(1)) * (e1 * dd_nn);
    };

    size_t term_budget = 2000000;  // guard against pathological word lengths
    size_t total_terms = 0;
    for (auto& [e, w] : packing.edge_words) {
        sys.equalities.push_back(tangency(e.first, e.second, w));
        total_terms += sys.equalities.back().term_count();
    }
    for (auto& [e, w] : packing.extra_edge_words) {
        sys.equalities.push_back(tangency(e.first, e.second, w));
        total_terms += sys.equalities.back().term_count();
    }
    if (total_terms > term_budget)
        throw Error("DomainError", "emitted hyperbolic system is too large; seam words too long");

    std::vector<size_t> forced;
    sys.equalities.push_back(X(packing.marked_vertex));
    forced.push_back(sys.equalities.size() - 1);
    sys.equalities.push_back(Y(packing.marked_vertex));
    forced.push_back(sys.equalities.size() - 1);
    sys.equalities.push_back(Y(packing.marked_neighbor));
    forced.push_back(sys.equalities.size() - 1);

    for (int k = 0; k < gens; ++k) {
        uint32_t base = static_cast<uint32_t>(3 * n + 4 * k);
        sys.equalities.push_back(sq(pvar(base)) + sq(pvar(base + 1)) - sq(pvar(base + 2)) -
                                 sq(pvar(base + 3)) - pc(1));
    }
    {
        MatrixPoly rel = word_mat(packing.relator);
        sys.equalities.push_back(rel.b.re);
        sys.equalities.push_back(rel.b.im);
        sys.equalities.push_back(rel.a.im);
    }

    for (int i = 0; i < n; ++i) sys.inequalities.push_back(R(i) - pc(1));
    for (int i = 0; i < n; ++i) sys.inequalities.push_back(pc(1) - sq(X(i)) - sq(Y(i)));

    // slice designation happens at the solved point
    Precision p(packing.precision_digits);
    Vec point = variety_point(sys, packing);
    sys.designate_square_slice(point, p, forced);
    return sys;
}

Vec variety_point(const PolySystem& sys, const EuclideanPacking& packing) {
    const int n = packing.triangulation.vertex_count;
    Precision p(packing.precision_digits);
    if (sys.vars.size() != static_cast<size_t>(3 * n + 1))
        throw Error("DimensionMismatch", "system does not match the packing");
    Vec point(sys.vars.size(), BigReal(p));
    for (int i = 0; i < n; ++i) {
        point[static_cast<size_t>(i)] = packing.centers[i].re;
        point[static_cast<size_t>(n + i)] = packing.centers[i].im;
        point[static_cast<size_t>(2 * n + i)] = packing.radii[i];
    }
    point[static_cast<size_t>(3 * n)] = sqrt(BigReal(3, p));
    return point;
}

Vec variety_point(const PolySystem& sys, const TorusPacking& packing) {
    const int n = packing.triangulation.vertex_count;
    Precision p(packing.precision_digits);
    if (sys.vars.size() != static_cast<size_t>(3 * n + 2))
        throw Error("DimensionMismatch", "system does not match the packing");
    Vec point(sys.vars.size(), BigReal(p));
    for (int i = 0; i < n; ++i) {
        point[static_cast<size_t>(i)] = packing.centers[i].re;
        point[static_cast<size_t>(n + i)] = packing.centers[i].im;
        point[static_cast<size_t>(2 * n + i)] = packing.radii[i];
    }
    point[static_cast<size_t>(3 * n)] = packing.tau.re;
    point[static_cast<size_t>(3 * n + 1)] = packing.tau.im;
    return point;
}

Vec variety_point(const PolySystem& sys, const HyperbolicPacking& packing) {
    const int n = packing.triangulation.vertex_count;
    const int gens = 2 * packing.triangulation.genus;
    Precision p(packing.precision_digits);
    if (sys.vars.size() != static_cast<size_t>(3 * n + 4 * gens))
        throw Error("DimensionMismatch", "system does not match the packing");
    Vec point(sys.vars.size(), BigReal(p));
    for (int i = 0; i < n; ++i) {
        point[static_cast<size_t>(i)] = packing.centers[i].re;
        point[static_cast<size_t>(n + i)] = packing.centers[i].im;
        point[static_cast<size_t>(2 * n + i)] = packing.exp_radii[i];
    }
    for (int k = 0; k < gens; ++k) {
        size_t base = static_cast<size_t>(3 * n + 4 * k);
        point[base] = packing.generators[k].a.re;
        point[base + 1] = packing.generators[k].a.im;
        point[base + 2] = packing.generators[k].b.re;
        point[base + 3] = packing.generators[k].b.im;
    }
    return point;
}

void apply_variety_point(const Vec& point, EuclideanPacking& packing) {
    const int n = packing.triangulation.vertex_count;
    if (point.size() != static_cast<size_t>(3 * n + 1))
        throw Error("DimensionMismatch", "point does not match the packing");
    for (int i = 0; i < n; ++i) {
        packing.centers[i] = BigComplex(point[static_cast<size_t>(i)], point[static_cast<size_t>(n + i)]);
        packing.radii[i] = point[static_cast<size_t>(2 * n + i)];
    }
}

void apply_variety_point(const Vec& point, TorusPacking& packing) {
    const int n = packing.triangulation.vertex_count;
    if (point.size() != static_cast<size_t>(3 * n + 2))
        throw Error("DimensionMismatch", "point does not match the packing");
    for (int i = 0; i < n; ++i) {
        packing.centers[i] = BigComplex(point[static_cast<size_t>(i)], point[static_cast<size_t>(n + i)]);
        packing.radii[i] = point[static_cast<size_t>(2 * n + i)];
    }
    packing.tau = BigComplex(point[static_cast<size_t>(3 * n)], point[static_cast<size_t>(3 * n + 1)]);
}

void apply_variety_point(const Vec& point, HyperbolicPacking& packing) {
    const int n = packing.triangulation.vertex_count;
    const int gens = 2 * packing.triangulation.genus;
    if (point.size() != static_cast<size_t>(3 * n + 4 * gens))
        throw Error("DimensionMismatch", "point does not match the packing");
    for (int i = 0; i < n; ++i) {
        packing.centers[i] = BigComplex(point[static_cast<size_t>(i)], point[static_cast<size_t>(n + i)]);
        packing.exp_radii[i] = point[static_cast<size_t>(2 * n + i)];
        packing.radii[i] = ln(packing.exp_radii[i]);
    }
    for (int k = 0; k < gens; ++k) {
        size_t base = static_cast<size_t>(3 * n + 4 * k);
        packing.generators[k].a = BigComplex(point[base], point[base + 1]);
        packing.generators[k].b = BigComplex(point[base + 2], point[base + 3]);
    }
}

IsolationReport residual_and_isolation(const PolySystem& sys, const Vec& point) {
    if (point.size() != sys.vars.size())
        throw Error("DimensionMismatch", "point dimension does not match system variables");
    int digits = 2;
    for (auto& x : point) digits = std::max(digits, x.digits());
    Precision p(digits);
    IsolationReport out{BigReal(p), BigReal(p), {}};
    out.max_residual = sys.max_equality_residual(point, p);
    out.sigma_min_bound = min_singular_value_lower_bound(sys.slice_jacobian(point, p));
    out.inequality_margins = sys.eval_inequalities(point, p);
    return out;
}

std::string polysystem_text(const PolySystem& sys) {
    std::ostringstream os;
    os << "vars:";
    for (auto& v : sys.vars) os << " " << v;
    os << "\nprimary: " << sys.primary_count << "\n";
    auto line = [&](const Poly& poly) {
        std::ostringstream ls;
        bool first = true;
        for (auto& m : poly.terms()) {
            if (!first) ls << "  ";
            first = false;
            ls << m.coef.str();
            size_t k = 0;
            for (uint32_t v = 0; v < sys.vars.size(); ++v) {
                uint32_t e = 0;
                while (k < m.exps.size() && m.exps[k].first < v) ++k;
                if (k < m.exps.size() && m.exps[k].first == v) e = m.exps[k].second;
                ls << " " << e;
            }
        }
        if (first) ls << "0";
        return ls.str();
    };
    for (auto& q : sys.equalities) os << "eq " << line(q) << "\n";
    for (auto& q : sys.inequalities) os << "gt " << line(q) << "\n";
    os << "slice:";
    for (size_t i : sys.square_slice) os << " " << i;
    os << "\n";
    return os.str();
}

}  // namespace acp
