#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "acp/bigcomplex.hpp"

using namespace acp;

namespace {
const Precision P64(64);

bool close(const BigReal& a, const BigReal& b, long tol_exp) {
    return abs(a - b) < pow10(tol_exp, P64);
}
}  // namespace

TEST_CASE("arcosh at the domain edge and the ln 3 identity") {
    CHECK(arcosh(BigReal(1, P64)).is_zero());
    // arcosh(5/3) = ln 3
    BigReal x = BigReal(5, P64) / BigReal(3, P64);
    CHECK(close(arcosh(x), ln(BigReal(3, P64)), -60));
    CHECK_THROWS_AS(arcosh(BigReal::from_string("0.99", P64)), Error);
}

TEST_CASE("sqrt(3) to 64 digits") {
    std::string s = sqrt(BigReal(3, P64)).to_string(64);
    CHECK(s.substr(0, 24) == "1.7320508075688772935274");
    CHECK(s.size() == 65);  // 64 significant digits plus the point
    CHECK_THROWS_AS(sqrt(BigReal(-1, P64)), Error);
}

TEST_CASE("exp(ln x) round trip within 4 ulp") {
    std::mt19937_64 rng(12345);
    std::uniform_real_distribution<double> dist(-3.0, 3.0);
    BigReal ulp4 = pow10(-60, P64);
    for (int i = 0; i < 100; ++i) {
        BigReal x = exp(BigReal::from_double(dist(rng), P64));  // positive
        BigReal y = exp(ln(x));
        CHECK(abs(y - x) / x < ulp4);
    }
}

TEST_CASE("elementary function domains and dispatcher") {
    CHECK_THROWS_AS(ln(BigReal(0, P64)), Error);
    CHECK_THROWS_AS(arccos(BigReal(2, P64)), Error);
    CHECK_THROWS_AS(atan2(BigReal(0, P64), BigReal(0, P64)), Error);
    CHECK(close(elem(ElemFn::Exp, BigReal(0, P64)), BigReal(1, P64), -60));
    CHECK(close(elem(ElemFn::Atan2, BigReal(1, P64), BigReal(1, P64)),
                pi(P64) / BigReal(4, P64), -60));
    CHECK_THROWS_AS(elem(ElemFn::Atan2, BigReal(1, P64)), Error);
}

TEST_CASE("serialization round trips at precision") {
    BigReal x = sqrt(BigReal(2, P64)) / BigReal(7, P64);
    BigReal y = BigReal::from_string(x.to_string(), P64);
    CHECK(x == y);
    BigReal neg = -x;
    CHECK(BigReal::from_string(neg.to_string(), P64) == neg);
    CHECK(BigReal(0, P64).to_string() == "0");
}

TEST_CASE("mixed-precision arithmetic widens") {
    BigReal a(1, Precision(32));
    BigReal b(1, Precision(128));
    CHECK((a + b).digits() == 128);
}

TEST_CASE("complex arithmetic basics") {
    BigComplex i(BigReal(0, P64), BigReal(1, P64));
    BigComplex z = i * i;
    CHECK(close(z.re, BigReal(-1, P64), -60));
    CHECK(close(z.im, BigReal(0, P64), -60));
    BigComplex w = sqrt(BigComplex(BigReal(-4, P64), BigReal(0, P64)));
    CHECK(close(w.im, BigReal(2, P64), -60));
    BigComplex q(BigReal(3, P64), BigReal(4, P64));
    CHECK(close(abs(q), BigReal(5, P64), -60));
    BigComplex r = q / q;
    CHECK(close(r.re, BigReal(1, P64), -60));
}
