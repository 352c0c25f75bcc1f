#include "acp/packer_euclidean.hpp"

#include "acp/development.hpp"

namespace acp {

namespace {

// Third corner on the *right* of the directed placed pair: with the marked
// face spanning the outer boundary, interior faces develop clockwise in the
// plane.
BigComplex euclid_third_point_cw(const BigComplex& za, const BigComplex& zb, const BigReal& ra,
                                 const BigReal& rb, const BigReal& rc) {
    BigReal beta = euclid_angle(ra, rb, rc);
    BigComplex dir = (zb - za) / abs(zb - za);
    return za + (ra + rc) * (dir * unit_circle_point(-beta));
}

}  // namespace

EuclideanPacking solve_interstice(const Triangulation& t, const std::array<int, 3>& marked_face,
                                  const BigReal& tol, long max_iters) {
    if (t.genus != 0) throw Error("WrongGenus", "interstice packing needs a genus-0 triangulation");
    {
        auto bad = validate_triangulation(t);
        if (!bad.empty()) throw Error("DomainError", "invalid triangulation: " + bad[0]);
    }
    // the marked triple must be a stored face, up to cyclic rotation
    int marked_index = -1;
    std::array<int, 3> mf = marked_face;
    for (size_t i = 0; i < t.faces.size() && marked_index < 0; ++i) {
        auto& f = t.faces[i];
        for (int r = 0; r < 3; ++r) {
            if (f[r] == mf[0] && f[(r + 1) % 3] == mf[1] && f[(r + 2) % 3] == mf[2]) {
                marked_index = static_cast<int>(i);
                break;
            }
        }
    }
    if (marked_index < 0) throw Error("InvalidMarkedFace", "marked triple is not an oriented face");

    Precision p(tol.digits());
    BigReal one(1, p);

    std::map<int, BigReal> boundary;
    for (int v : mf) boundary.emplace(v, one);
    RadiusResult rr = radius_iteration(t, boundary, Geometry::Euclidean, tol, max_iters);

    // layout: marked circles pinned, then breadth-first placement
    const int n = t.vertex_count;
    std::vector<BigComplex> centers(n, BigComplex(p));
    std::vector<char> placed(n, 0);
    BigReal sqrt3 = sqrt(BigReal(3, p));
    centers[mf[0]] = BigComplex(BigReal(-1, p), BigReal(p));
    centers[mf[1]] = BigComplex(BigReal(1, p), BigReal(p));
    centers[mf[2]] = BigComplex(BigReal(p), sqrt3);
    placed[mf[0]] = placed[mf[1]] = placed[mf[2]] = 1;

    BigReal mismatch_tol = BigReal(10, p) * tol;
    bool progress = true;
    while (progress) {
        progress = false;
        for (size_t fi = 0; fi < t.faces.size(); ++fi) {
            auto& f = t.faces[fi];
            for (int k = 0; k < 3; ++k) {
                int a = f[k], b = f[(k + 1) % 3], c = f[(k + 2) % 3];
                if (!placed[a] || !placed[b]) continue;
                BigComplex pos = euclid_third_point_cw(centers[a], centers[b], rr.radii[a],
                                                       rr.radii[b], rr.radii[c]);
                if (!placed[c]) {
                    centers[c] = pos;
                    placed[c] = 1;
                    progress = true;
                } else if (static_cast<int>(fi) != marked_index) {
                    if (abs(pos - centers[c]) > mismatch_tol)
                        throw Error("NoConvergence",
                                    "layout reached a circle along two paths with disagreeing positions");
                }
            }
        }
    }
    for (int v = 0; v < n; ++v)
        if (!placed[v]) throw Error("NoConvergence", "layout did not reach every circle");

    EuclideanPacking out;
    out.triangulation = t;
    out.marked_face = mf;
    out.precision_digits = p.digits;
    out.centers = std::move(centers);
    out.radii = rr.radii;
    out.residuals.iterations = rr.iterations;
    out.residuals.max_angle_sum = rr.residual;
    BigReal worst(p);
    for (auto& e : t.edge_list()) {
        BigReal d = abs(out.centers[e.first] - out.centers[e.second]);
        worst = max(worst, abs(d - (out.radii[e.first] + out.radii[e.second])));
    }
    out.residuals.max_tangency = worst;
    return out;
}

}  // namespace acp
