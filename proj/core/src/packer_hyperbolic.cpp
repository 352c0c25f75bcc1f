#include "acp/packer_hyperbolic.hpp"

namespace acp {

BigComplex apply_isometry(const MobiusMap& m, const BigComplex& z) {
    Precision p = z.precision();
    BigReal one(1, p);
    if (norm(z) >= one) throw Error("DomainError", "point is not inside the unit disk");
    BigComplex w = m.apply(z);
    if (norm(w) >= one) throw Error("DomainError", "map does not preserve the unit disk at this point");
    return w;
}

MobiusMap to_mobius(const DiskIsometry& m) {
    return MobiusMap::create(m.a, m.b, conj(m.b), conj(m.a), false);
}

HyperbolicPacking solve_hyperbolic(const Triangulation& t, int marked_vertex, int marked_neighbor,
                                   const BigReal& tol, long max_iters) {
    if (t.genus < 2) throw Error("WrongGenus", "hyperbolic packing needs genus at least 2");
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
    RadiusResult rr = radius_iteration(t, {}, Geometry::Hyperbolic, tol, max_iters);
    auto dev = develop_hyperbolic(t, rr.radii, marked_vertex, u0, tol);
    if (dev.generator_values.size() != static_cast<size_t>(2 * t.genus))
        throw Error("NoConvergence", "holonomy extraction did not yield 2g generators");

    HyperbolicPacking out;
    out.triangulation = t;
    out.marked_vertex = marked_vertex;
    out.marked_neighbor = u0;
    out.precision_digits = p.digits;
    out.centers = dev.canonical;
    out.radii = rr.radii;
    for (auto& r : rr.radii) out.exp_radii.push_back(exp(r));
    out.generators = dev.generator_values;
    for (auto& e : dev.seam_edges)
        out.pairings.push_back({e, dev.seam_words.at(e), dev.seam_values.at(e)});
    out.edge_words = dev.edge_routes;
    out.extra_edge_words = dev.extra_routes;
    out.relator = dev.relator;

    BigReal one(1, p);
    for (auto& z : out.centers)
        if (norm(z) >= one) throw Error("NoConvergence", "developed center escaped the unit disk");

    out.residuals.iterations = rr.iterations;
    out.residuals.max_angle_sum = rr.residual;
    BigReal worst(p);
    for (auto& [e, w] : out.edge_words) {
        DiskIsometry m = dev.eval_word(w, p);
        BigReal d = hyp_distance(out.centers[e.first], m.apply(out.centers[e.second]));
        worst = max(worst, abs(d - (out.radii[e.first] + out.radii[e.second])));
    }
    out.residuals.max_tangency = worst;
    return out;
}

}  // namespace acp
