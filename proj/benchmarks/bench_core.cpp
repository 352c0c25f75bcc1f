#include <benchmark/benchmark.h>

#include "acp/certifier.hpp"
#include "acp/encoder.hpp"
#include "acp/newton.hpp"
#include "acp/packer_euclidean.hpp"
#include "acp/packer_hyperbolic.hpp"
#include "acp/packer_torus.hpp"
#include "support/fixtures.hpp"

using namespace acp;
using namespace acp::fixtures;

namespace {

BigReal tol(int digits) { return pow10(-(digits / 2), Precision(digits)); }

void BM_RadiusIterationOctahedron(benchmark::State& state) {
    auto t = octahedron();
    int digits = static_cast<int>(state.range(0));
    std::map<int, BigReal> boundary;
    for (int v : t.faces[0]) boundary.emplace(v, BigReal(1, Precision(digits)));
    for (auto _ : state) {
        auto rr = radius_iteration(t, boundary, Geometry::Euclidean, tol(digits));
        benchmark::DoNotOptimize(rr.radii);
    }
}
BENCHMARK(BM_RadiusIterationOctahedron)->Arg(32)->Arg(64)->Arg(128);

void BM_PackIcosahedron(benchmark::State& state) {
    auto t = icosahedron();
    for (auto _ : state) {
        auto packing = solve_interstice(t, t.faces[0], tol(64));
        benchmark::DoNotOptimize(packing.radii);
    }
}
BENCHMARK(BM_PackIcosahedron);

void BM_PackTorusK7(benchmark::State& state) {
    auto t = k7_torus();
    for (auto _ : state) {
        auto packing = solve_torus(t, 0, -1, tol(64));
        benchmark::DoNotOptimize(packing.tau);
    }
}
BENCHMARK(BM_PackTorusK7);

void BM_PackGenus2(benchmark::State& state) {
    auto t = genus2();
    for (auto _ : state) {
        auto packing = solve_hyperbolic(t, 0, -1, tol(64));
        benchmark::DoNotOptimize(packing.generators);
    }
}
BENCHMARK(BM_PackGenus2)->Unit(benchmark::kMillisecond);

void BM_NewtonRefineOctahedron(benchmark::State& state) {
    auto t = octahedron();
    auto packing = solve_interstice(t, t.faces[0], tol(64));
    auto sys = encode_variety_sphere(t, t.faces[0]);
    Vec start = variety_point(sys, packing);
    for (auto _ : state) {
        auto res = newton_refine(sys, start, 56);
        benchmark::DoNotOptimize(res.values);
    }
}
BENCHMARK(BM_NewtonRefineOctahedron);

void BM_LatticeReduction(benchmark::State& state) {
    int degree = static_cast<int>(state.range(0));
    Precision p(64);
    BigReal value = BigReal(1, p) / (BigReal(3, p) + BigReal(2, p) * sqrt(BigReal(3, p)));
    for (auto _ : state) {
        auto res = find_min_poly(value, degree, Int("10000000000"));
        benchmark::DoNotOptimize(res.found);
    }
}
BENCHMARK(BM_LatticeReduction)->Arg(4)->Arg(12)->Arg(24);

void BM_HypAngle(benchmark::State& state) {
    Precision p(64);
    BigReal r = BigReal(1, p) / BigReal(3, p);
    for (auto _ : state) {
        benchmark::DoNotOptimize(hyp_angle(r, r, r));
    }
}
BENCHMARK(BM_HypAngle);

}  // namespace

BENCHMARK_MAIN();
