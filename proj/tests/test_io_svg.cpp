#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>

#include "acp/io.hpp"
#include "acp/packer_euclidean.hpp"
#include "acp/packer_hyperbolic.hpp"
#include "acp/packer_torus.hpp"
#include "acp/svg.hpp"
#include "support/fixtures.hpp"

using namespace acp;
using namespace acp::fixtures;

namespace {
const Precision P64(64);
BigReal tol64() { return pow10(-32, P64); }

size_t count_occurrences(const std::string& hay, const std::string& needle) {
    size_t n = 0, pos = 0;
    while ((pos = hay.find(needle, pos)) != std::string::npos) {
        ++n;
        pos += needle.size();
    }
    return n;
}
}  // namespace

TEST_CASE("decimal round trip") {
    BigReal x = sqrt(BigReal(7, P64)) / BigReal(3, P64);
    std::string s = encode_decimal(x);
    CHECK(s.find("@64") != std::string::npos);
    CHECK(decode_decimal(s) == x);
    CHECK_THROWS_AS(decode_decimal("1.5"), Error);
}

TEST_CASE("triangulation json round trip") {
    auto t = octahedron();
    auto j = to_json(t);
    auto t2 = triangulation_from_json(j);
    CHECK(t2.vertex_count == t.vertex_count);
    CHECK(t2.genus == t.genus);
    CHECK(t2.faces == t.faces);
}

TEST_CASE("euclidean packing json round trip preserves values and residuals") {
    auto packing = solve_interstice(tetrahedron(), {0, 1, 2}, tol64());
    auto j = to_json(packing);
    auto p2 = euclidean_packing_from_json(j);
    for (int i = 0; i < 4; ++i) {
        CHECK(p2.centers[i].re == packing.centers[i].re);
        CHECK(p2.centers[i].im == packing.centers[i].im);
        CHECK(p2.radii[i] == packing.radii[i]);
    }
    CHECK(p2.residuals.max_tangency == packing.residuals.max_tangency);
    // byte-identical re-serialization
    CHECK(to_json(p2).dump() == j.dump());
}

TEST_CASE("torus packing json round trip") {
    auto packing = solve_torus(k7_torus(), 0, -1, tol64());
    auto p2 = torus_packing_from_json(to_json(packing));
    CHECK(p2.tau.re == packing.tau.re);
    CHECK(p2.tau.im == packing.tau.im);
    CHECK(p2.edge_offsets == packing.edge_offsets);
    CHECK(p2.vertex_classes == packing.vertex_classes);
    CHECK(to_json(p2).dump() == to_json(packing).dump());
}

TEST_CASE("hyperbolic packing json round trip") {
    auto packing = solve_hyperbolic(genus2(), 0, -1, tol64());
    auto p2 = hyperbolic_packing_from_json(to_json(packing));
    CHECK(p2.generators.size() == packing.generators.size());
    CHECK(p2.relator == packing.relator);
    CHECK(p2.edge_words == packing.edge_words);
    CHECK(to_json(p2).dump() == to_json(packing).dump());
}

TEST_CASE("polysystem json round trip") {
    auto sys = encode_variety_sphere(tetrahedron(), {0, 1, 2});
    auto sys2 = polysystem_from_json(to_json(sys));
    CHECK(sys2.vars == sys.vars);
    CHECK(sys2.primary_count == sys.primary_count);
    CHECK(sys2.square_slice == sys.square_slice);
    REQUIRE(sys2.equalities.size() == sys.equalities.size());
    for (size_t i = 0; i < sys.equalities.size(); ++i) CHECK(sys2.equalities[i] == sys.equalities[i]);
    CHECK(polysystem_text(sys2) == polysystem_text(sys));
}

TEST_CASE("svg output structure") {
    auto packing = solve_interstice(tetrahedron(), {0, 1, 2}, tol64());
    SvgOptions opt;
    auto circles = svg_circles(packing);
    std::string svg = render_svg(circles, opt, false);
    CHECK(count_occurrences(svg, "<circle") == 4);
    CHECK(svg.find("stroke-dasharray") == std::string::npos);
    CHECK(svg.find("</svg>") != std::string::npos);

    auto dual = dual_packing(packing, pow10(-16, P64));
    auto dual_circles = svg_dual_circles(packing, dual);
    circles.insert(circles.end(), dual_circles.begin(), dual_circles.end());
    std::string svg2 = render_svg(circles, opt, false);
    CHECK(count_occurrences(svg2, "<circle") == 8);
    CHECK(count_occurrences(svg2, "stroke-dasharray") == 4);

    // determinism
    CHECK(render_svg(circles, opt, false) == render_svg(circles, opt, false));

    // empty packing: frame only
    std::string empty = render_svg({}, opt, true);
    CHECK(count_occurrences(empty, "<circle") == 1);
}

TEST_CASE("hyperbolic svg stays inside the unit frame") {
    auto packing = solve_hyperbolic(genus2(), 0, -1, tol64());
    auto circles = svg_circles(packing);
    for (auto& c : circles) {
        double d = std::sqrt(c.x * c.x + c.y * c.y);
        CHECK(d + c.r <= 1.0 + 1e-12);
    }
    std::string svg = render_svg(circles, SvgOptions{}, true);
    CHECK(count_occurrences(svg, "<circle") == circles.size() + 1);
}

TEST_CASE("atomic write leaves no temp file") {
    std::string path = "/tmp/acp_io_test.json";
    write_text_file_atomic(path, "{}\n");
    CHECK(read_text_file(path) == "{}\n");
    std::remove(path.c_str());
    std::FILE* f = std::fopen((path + ".tmp").c_str(), "r");
    CHECK(f == nullptr);
    if (f) std::fclose(f);
}
