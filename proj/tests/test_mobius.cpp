#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "acp/mobius.hpp"
#include "acp/packer_euclidean.hpp"
#include "support/fixtures.hpp"

using namespace acp;
using namespace acp::fixtures;

namespace {
const Precision P64(64);
BigReal tol64() { return pow10(-32, P64); }
BigReal tiny() { return pow10(-58, P64); }
BigComplex C(double re, double im) {
    return {BigReal::from_double(re, P64), BigReal::from_double(im, P64)};
}
}  // namespace

TEST_CASE("inversion basics") {
    Circle unit = Circle::create(BigComplex(P64), BigReal(1, P64));
    CHECK(abs(invert_in_circle(unit, C(2, 0)) - C(0.5, 0)) < tiny());
    // points on the circle are fixed
    BigComplex z = unit_circle_point(BigReal::from_string("0.7", P64));
    CHECK(abs(invert_in_circle(unit, z) - z) < tiny());
    // involution
    BigComplex w = C(0.3, -1.2);
    CHECK(abs(invert_in_circle(unit, invert_in_circle(unit, w)) - w) < tiny());
    CHECK_THROWS_AS(invert_in_circle(unit, BigComplex(P64)), Error);
}

TEST_CASE("composed inversions of the two unit circles fix the origin") {
    Circle c1 = Circle::create(C(1, 0), BigReal(1, P64));
    Circle c2 = Circle::create(C(-1, 0), BigReal(1, P64));
    BigComplex z(P64);  // origin
    BigComplex w = invert_in_circle(c1, invert_in_circle(c2, C(0.0, 1e-30)));
    // direct evaluation via the map composition
    auto fp = tangency_fixed_point(c1, c2, tol64());
    CHECK(abs(fp.point) < tiny());
    CHECK(!fp.composition.reversing);
    CHECK(abs(fp.composition.apply(fp.point) - fp.point) < tiny());
    (void)w;
}

TEST_CASE("inversion map equals pointwise inversion") {
    Circle c = Circle::create(C(0.4, -0.3), BigReal::from_string("1.7", P64));
    MobiusMap m = inversion_map(c);
    CHECK(m.reversing);
    std::mt19937_64 rng(99);
    std::uniform_real_distribution<double> d(-2, 2);
    for (int i = 0; i < 20; ++i) {
        BigComplex z = C(d(rng), d(rng));
        CHECK(abs(m.apply(z) - invert_in_circle(c, z)) < pow10(-55, P64));
    }
    // involution: sigma composed with itself is the identity map
    MobiusMap mm = compose(m, m);
    CHECK(!mm.reversing);
    BigComplex z = C(0.2, 0.9);
    CHECK(abs(mm.apply(z) - z) < pow10(-55, P64));
}

TEST_CASE("composition orientation parity and associativity") {
    Circle c = Circle::create(C(1, 0), BigReal(1, P64));
    MobiusMap sigma = inversion_map(c);
    MobiusMap rot = MobiusMap::create(C(0, 1), BigComplex(P64), BigComplex(P64),
                                      BigComplex(BigReal(1, P64), BigReal(P64)), false);
    CHECK(compose(rot, sigma).reversing);
    CHECK(!compose(sigma, sigma).reversing);
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> d(-1, 1);
    auto random_map = [&]() {
        return MobiusMap::create(C(d(rng), d(rng)), C(d(rng), d(rng)), C(d(rng), d(rng)),
                                 C(2 + d(rng), d(rng)), rng() % 2 == 0);
    };
    for (int i = 0; i < 10; ++i) {
        MobiusMap a = random_map();
        MobiusMap b = random_map();
        BigComplex z = C(0.3 * d(rng), 0.3 * d(rng));
        BigComplex lhs = compose(a, b).apply(z);
        BigComplex rhs = a.apply(b.apply(z));
        CHECK(abs(lhs - rhs) < pow10(-50, P64));
    }
    // associativity on random triples
    for (int i = 0; i < 10; ++i) {
        MobiusMap a = random_map(), b = random_map(), c = random_map();
        BigComplex z = C(0.2 * d(rng), 0.2 * d(rng));
        BigComplex lhs = compose(compose(a, b), c).apply(z);
        BigComplex rhs = compose(a, compose(b, c)).apply(z);
        CHECK(abs(lhs - rhs) < pow10(-48, P64));
    }
}

TEST_CASE("inverse pair of tangent-circle inversions") {
    Circle c1 = Circle::create(C(1, 0), BigReal(1, P64));
    Circle c2 = Circle::create(C(0, std::sqrt(3.0)), BigReal(1, P64));
    // |centers| = 2 = r1 + r2 up to double rounding; use exact sqrt(3)
    c2 = Circle::create(BigComplex(BigReal(0, P64), sqrt(BigReal(3, P64))), BigReal(1, P64));
    MobiusMap fwd = compose(inversion_map(c1), inversion_map(c2));
    MobiusMap bwd = compose(inversion_map(c2), inversion_map(c1));
    MobiusMap id = compose(fwd, bwd);
    BigComplex z = C(0.1, 0.4);
    CHECK(abs(id.apply(z) - z) < pow10(-50, P64));
}

TEST_CASE("circumcircle of explicit points") {
    BigReal half = BigReal(1, P64) / BigReal(2, P64);
    BigReal s3h = sqrt(BigReal(3, P64)) / BigReal(2, P64);
    Circle c = circumcircle(BigComplex(P64), BigComplex(half, s3h), BigComplex(-half, s3h));
    BigReal inv_sqrt3 = BigReal(1, P64) / sqrt(BigReal(3, P64));
    CHECK(abs(c.center.re) < tiny());
    CHECK(abs(c.center.im - inv_sqrt3) < tiny());
    CHECK(abs(c.radius - inv_sqrt3) < tiny());
    CHECK_THROWS_AS(circumcircle(C(0, 0), C(1, 0), C(2, 0)), Error);
}

TEST_CASE("dual packing of the tetrahedron") {
    auto packing = solve_interstice(tetrahedron(), {0, 1, 2}, tol64());
    auto dual = dual_packing(packing, pow10(-16, P64));
    REQUIRE(dual.size() == 4);
    // the marked face's dual circle
    const Circle& c0 = dual.at(0);
    BigReal inv_sqrt3 = BigReal(1, P64) / sqrt(BigReal(3, P64));
    CHECK(abs(c0.center.re) < pow10(-30, P64));
    CHECK(abs(c0.center.im - inv_sqrt3) < pow10(-30, P64));
    CHECK(abs(c0.radius - inv_sqrt3) < pow10(-30, P64));
    // orthogonality against the unit circle at (1, 0): d^2 = 4/3 = 1 + 1/3
    BigReal d2 = norm(c0.center - packing.centers[1]);
    CHECK(abs(d2 - BigReal(1, P64) - c0.radius * c0.radius) < pow10(-30, P64));
}

TEST_CASE("octahedron dual: eight circles, 24 orthogonality relations") {
    auto t = octahedron();
    auto packing = solve_interstice(t, t.faces[0], tol64());
    auto dual = dual_packing(packing, pow10(-16, P64));
    REQUIRE(dual.size() == 8);
    int relations = 0;
    for (auto& [fi, c] : dual) {
        for (int v : t.faces[static_cast<size_t>(fi)]) {
            BigReal d2 = norm(c.center - packing.centers[v]);
            BigReal want = c.radius * c.radius + packing.radii[v] * packing.radii[v];
            CHECK(abs(d2 - want) < pow10(-28, P64));
            ++relations;
        }
    }
    CHECK(relations == 24);
}

TEST_CASE("dual disks pairwise interiorwise disjoint on the sphere") {
    // in the plane the marked (outer) face's dual disk is the complement of
    // its circle, so interior dual disks must lie inside it; interior pairs
    // must be disjoint or tangent
    auto t = octahedron();
    auto packing = solve_interstice(t, t.faces[0], tol64());
    auto dual = dual_packing(packing, pow10(-16, P64));
    BigReal slack = pow10(-28, P64);
    for (auto& [fi, ci] : dual)
        for (auto& [fj, cj] : dual) {
            if (fj <= fi) continue;
            BigReal d = abs(ci.center - cj.center);
            if (fi == 0)
                CHECK(d <= ci.radius - cj.radius + slack);  // contained in the outer dual disk
            else
                CHECK(d >= ci.radius + cj.radius - slack);
        }
}

TEST_CASE("face interstice points are covered by the dual disk") {
    auto packing = solve_interstice(tetrahedron(), {0, 1, 2}, tol64());
    auto dual = dual_packing(packing, pow10(-16, P64));
    // sample the incenter-ish point of each face's curvilinear triangle: the
    // average of its three tangency points lies in the face's dual disk
    for (auto& [fi, c] : dual) {
        auto& f = packing.triangulation.faces[static_cast<size_t>(fi)];
        BigComplex acc(P64);
        for (int k = 0; k < 3; ++k) {
            int u = f[k], v = f[(k + 1) % 3];
            Circle cu = Circle::create(packing.centers[u], packing.radii[u]);
            Circle cv = Circle::create(packing.centers[v], packing.radii[v]);
            acc += tangency_point(cu, cv);
        }
        acc = acc / BigReal(3, P64);
        CHECK(abs(acc - c.center) < c.radius);
    }
}

TEST_CASE("tangency fixed point per edge of the tetrahedron packing") {
    auto packing = solve_interstice(tetrahedron(), {0, 1, 2}, tol64());
    for (auto& e : packing.triangulation.edge_list()) {
        Circle c1 = Circle::create(packing.centers[e.first], packing.radii[e.first]);
        Circle c2 = Circle::create(packing.centers[e.second], packing.radii[e.second]);
        auto fp = tangency_fixed_point(c1, c2, pow10(-16, P64));
        CHECK(abs(fp.composition.apply(fp.point) - fp.point) < pow10(-30, P64));
        // the point lies on both circles
        CHECK(abs(abs(fp.point - c1.center) - c1.radius) < pow10(-30, P64));
    }
}

TEST_CASE("non-tangent circles are rejected") {
    Circle c1 = Circle::create(C(0, 0), BigReal(1, P64));
    Circle c2 = Circle::create(C(5, 0), BigReal(1, P64));
    try {
        tangency_fixed_point(c1, c2, pow10(-16, P64));
        FAIL("expected NotTangent");
    } catch (const Error& e) {
        CHECK(e.code() == "NotTangent");
    }
}
