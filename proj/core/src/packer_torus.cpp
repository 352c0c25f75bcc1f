#include "acp/packer_torus.hpp"

#include <algorithm>

namespace acp {

namespace {

long nearest_long(const BigReal& x) {
    Precision p = x.precision();
    if (abs(x) > pow10(15, p)) throw Error("DomainError", "value too large for integer rounding");
    BigReal r(p);
    mpfr_rint(r.raw(), x.raw(), MPFR_RNDN);
    return r.to_long();
}

long snapped_floor(const BigReal& x, const BigReal& snap) {
    long r = nearest_long(x);
    BigReal rr(r, x.precision());
    if (abs(x - rr) <= snap) return r;
    BigReal f(x.precision());
    mpfr_floor(f.raw(), x.raw());
    return f.to_long();
}

}  // namespace

ModularReduction reduce_to_fundamental_region(const BigComplex& tau0) {
    Precision p = tau0.precision();
    if (tau0.im.sign() <= 0) throw Error("NotUpperHalfPlane", "tau must have positive imaginary part");
    BigReal snap = pow10(-(p.digits - 12), p);
    BigReal one(1, p), half = one / BigReal(2, p);

    ModularReduction out;
    out.tau = tau0;
    BigComplex& tau = out.tau;
    auto apply_s = [&]() {
        BigComplex m1(BigReal(-1, p), BigReal(p));
        tau = m1 / tau;
        out.word.push_back("S");
    };

    for (int guard = 0; guard < 100000; ++guard) {
        long k = nearest_long(tau.re);
        if (k != 0) {
            tau.re -= BigReal(k, p);
            for (long i = 0; i < std::labs(k); ++i) out.word.push_back(k > 0 ? "T-" : "T+");
        }
        if (norm(tau) < one - snap) {
            apply_s();
            continue;
        }
        break;
    }
    // boundary conventions: Re = +1/2 folds to -1/2; the right unit-circle arc
    // folds to the left one
    if (abs(tau.re - half) <= snap) {
        tau.re -= one;
        out.word.push_back("T-");
    }
    if (abs(norm(tau) - one) <= BigReal(2, p) * snap && tau.re > snap) apply_s();
    return out;
}

bool in_fundamental_region(const BigComplex& tau, const BigReal& snap) {
    Precision p = tau.precision();
    if (tau.im.sign() <= 0) return false;
    BigReal one(1, p), half = one / BigReal(2, p);
    BigReal n2 = norm(tau);
    BigReal two_snap = BigReal(2, p) * snap;
    if (abs(tau.re + half) <= snap) return n2 >= one - two_snap;          // left vertical side
    if (abs(n2 - one) <= two_snap) return tau.re > -half && tau.re <= snap;  // unit arc (-1/2, 0]
    return n2 > one && abs(tau.re) < half;                                 // interior
}

bool fundamental_parallelogram_membership(const BigComplex& z, const BigComplex& tau) {
    if (tau.im.sign() <= 0) throw Error("NotUpperHalfPlane", "tau must have positive imaginary part");
    Precision p = Precision(std::max(z.precision().digits, tau.precision().digits));
    const BigReal& a = tau.re;
    const BigReal& b = tau.im;
    BigReal zero(p);
    if (z.im < zero || z.im >= b) return false;
    BigReal q = b * z.re - a * z.im;
    return q >= zero && q < b;
}

std::array<int, 2> lattice_class(const BigComplex& z, const BigComplex& tau, const BigReal& snap) {
    // integers (s, t) with z - s - t*tau in the half-open parallelogram
    Precision p = z.precision();
    long t = snapped_floor(z.im / tau.im, snap);
    BigReal y = z.im - BigReal(t, p) * tau.im;
    BigReal x = z.re - BigReal(t, p) * tau.re;
    long s = snapped_floor(x - tau.re * y / tau.im, snap);
    return {static_cast<int>(s), static_cast<int>(t)};
}

TorusPacking solve_torus(const Triangulation& t, int marked_vertex, int marked_neighbor,
                         const BigReal& tol, long max_iters) {
    if (t.genus != 1) throw Error("WrongGenus", "torus packing needs a genus-1 triangulation");
    {
        auto bad = validate_triangulation(t);
        if (!bad.empty()) throw Error("DomainError", "invalid triangulation: " + bad[0]);
    }
    if (marked_vertex < 0 || marked_vertex >= t.vertex_count)
        throw Error("DomainError", "marked vertex out of range");
    DartMap darts(t);
    int u0 = marked_neighbor;
    if (u0 < 0) {
        for (int w = 0; w < t.vertex_count && u0 < 0; ++w)
            if (w != marked_vertex && darts.face_of(marked_vertex, w) >= 0) u0 = w;
    }
    if (u0 < 0 || darts.face_of(marked_vertex, u0) < 0)
        throw Error("DomainError", "marked neighbor is not adjacent to the marked vertex");

    Precision p(tol.digits());
    RadiusResult rr = radius_iteration(t, {}, Geometry::Euclidean, tol, max_iters);
    auto dev = develop_euclidean(t, rr.radii, marked_vertex, u0, tol);
    if (dev.generator_values.size() != 2)
        throw Error("NoConvergence", "torus development did not produce two holonomy generators");

    BigReal vtol = max(tol * pow10(8, p), pow10(-(p.digits * 3 / 4), p));
    BigComplex one_c(BigReal(1, p), BigReal(p));
    for (auto& g : dev.generator_values)
        if (abs(g.rot - one_c) > vtol)
            throw Error("NoConvergence", "torus holonomy generator is not a translation");

    BigComplex wa = dev.generator_values[0].trans;
    BigComplex wb = dev.generator_values[1].trans;
    BigComplex tau0 = wb / wa;
    if (abs(tau0.im) <= vtol) throw Error("NoConvergence", "degenerate holonomy lattice");
    if (tau0.im.sign() < 0) {
        std::swap(wa, wb);
        tau0 = wb / wa;
    }

    ModularReduction red = reduce_to_fundamental_region(tau0);
    BigComplex w1 = wa, w2 = wb;
    for (auto& move : red.word) {
        if (move == "T+") {
            w2 += w1;
        } else if (move == "T-") {
            w2 -= w1;
        } else {  // S: (w1, w2) -> (w2, -w1)
            BigComplex tmp = w1;
            w1 = w2;
            w2 = -tmp;
        }
    }
    if (abs(w2 / w1 - red.tau) > pow10(-(p.digits / 2), p))
        throw Error("NoConvergence", "modular reduction bookkeeping mismatch");

    BigComplex lambda = one_c / w1;
    BigReal scale = abs(lambda);
    const int n = t.vertex_count;
    std::vector<BigComplex> centers(n, BigComplex(p));
    std::vector<BigReal> radii(n, BigReal(p));
    for (int v = 0; v < n; ++v) {
        centers[v] = lambda * dev.canonical[v];
        radii[v] = scale * rr.radii[v];
    }
    BigComplex tau = red.tau;

    // lattice automorphism tie-break: argument of the marked neighbor in [0, pi)
    {
        BigReal snap = pow10(-(p.digits / 2), p);
        auto in_lattice = [&](const BigComplex& z) {
            auto st = lattice_class(z, tau, snap);
            BigComplex res = z - BigComplex(BigReal(st[0], p), BigReal(p)) -
                             BigComplex(BigReal(st[1], p), BigReal(p)) * tau;
            return abs(res) <= snap;
        };
        BigReal pi_v = pi(p);
        BigComplex best_u = one_c;
        BigReal best_arg(p);
        bool have = false;
        for (int k = 0; k < 12; ++k) {
            BigComplex u = unit_circle_point(pi_v * BigReal(k, p) / BigReal(6, p));
            if (!in_lattice(u) || !in_lattice(u * tau)) continue;
            BigComplex zu = u * centers[u0];
            BigReal theta = arg(zu);  // (-pi, pi]
            if (abs(theta) <= snap) theta = BigReal(p);
            if (abs(theta - pi_v) <= snap) theta = pi_v;
            if (theta < BigReal(p) || theta >= pi_v) continue;
            if (!have || theta < best_arg) {
                have = true;
                best_arg = theta;
                best_u = u;
            }
        }
        if (have && !(best_u == one_c))
            for (int v = 0; v < n; ++v) centers[v] = best_u * centers[v];
        if (have) lambda = best_u * lambda;
    }

    TorusPacking out;
    out.triangulation = t;
    out.marked_vertex = marked_vertex;
    out.marked_neighbor = u0;
    out.precision_digits = p.digits;
    out.tau = tau;
    out.reduction_word = red.word;
    out.centers = std::move(centers);
    out.radii = std::move(radii);
    out.residuals.iterations = rr.iterations;
    out.residuals.max_angle_sum = rr.residual;

    // per-edge deck offsets from the route words, transported to the
    // normalized frame
    BigReal worst(p);
    for (auto& [e, w] : dev.edge_routes) {
        EuclidMotion m = dev.eval_word(w, p);
        if (abs(m.rot - one_c) > vtol)
            throw Error("NoConvergence", "edge route is not a translation");
        BigComplex off = lambda * m.trans;
        long tt = nearest_long(off.im / tau.im);
        long ss = nearest_long(off.re - BigReal(tt, p) * tau.re);
        BigComplex lat = BigComplex(BigReal(ss, p), BigReal(p)) + BigComplex(BigReal(tt, p), BigReal(p)) * tau;
        if (abs(off - lat) > pow10(-(p.digits / 4), p))
            throw Error("NoConvergence", "edge deck offset is not a lattice point");
        out.edge_offsets.push_back({e.first, e.second, static_cast<int>(ss), static_cast<int>(tt)});
        BigReal d = abs(out.centers[e.first] - (out.centers[e.second] + lat));
        worst = max(worst, abs(d - (out.radii[e.first] + out.radii[e.second])));
    }
    out.residuals.max_tangency = worst;
    BigReal class_snap = pow10(-(p.digits / 4), p);
    for (int v = 0; v < n; ++v) out.vertex_classes.push_back(lattice_class(out.centers[v], tau, class_snap));
    return out;
}

TorusBlock build_torus_block(const TorusPacking& packing) {
    Precision p(packing.precision_digits);
    const int n = packing.triangulation.vertex_count;
    BigReal snap = pow10(-(p.digits / 4), p);

    TorusBlock block;
    block.n = n;
    block.tau = packing.tau;
    block.centers.assign(static_cast<size_t>(4) * n, BigComplex(p));
    block.radii.assign(static_cast<size_t>(4) * n, BigReal(p));

    BigComplex one_c(BigReal(1, p), BigReal(p));
    std::array<BigComplex, 4> shift = {BigComplex(p), one_c, packing.tau, one_c + packing.tau};
    for (int v = 0; v < n; ++v) {
        auto st = lattice_class(packing.centers[v], packing.tau, snap);
        BigComplex base = packing.centers[v] - BigComplex(BigReal(st[0], p), BigReal(p)) -
                          BigComplex(BigReal(st[1], p), BigReal(p)) * packing.tau;
        for (int c = 0; c < 4; ++c) {
            block.centers[static_cast<size_t>(c) * n + v] = base + shift[c];
            block.radii[static_cast<size_t>(c) * n + v] = packing.radii[v];
        }
    }

    const int total = 4 * n;
    for (int i = 0; i < total; ++i)
        for (int j = i + 1; j < total; ++j) {
            BigReal d = abs(block.centers[i] - block.centers[j]);
            if (abs(d - (block.radii[i] + block.radii[j])) < snap) block.contact_edges.push_back({i, j});
        }

    static constexpr int kOff[4][2] = {{0, 0}, {1, 0}, {0, 1}, {1, 1}};
    for (int v = 0; v < n; ++v)
        for (int ck = 0; ck < 4; ++ck)
            for (int cj = ck + 1; cj < 4; ++cj)
                block.identified.push_back({cj * n + v, ck * n + v, kOff[cj][0] - kOff[ck][0],
                                            kOff[cj][1] - kOff[ck][1]});

    block.z_index = packing.marked_vertex;
    block.t_one_index = n + packing.marked_vertex;
    block.t_tau_index = 2 * n + packing.marked_vertex;
    return block;
}

}  // namespace acp
