#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "afx/parse.hpp"
#include "afx/weight.hpp"

#include <cmath>
#include <random>

using namespace afx;

namespace {
Poly P(const std::string& s) { return parse(s); }
}

TEST_CASE("incommensurable weights pick out the quasi-homogeneous top part") {
    // d_x = -3N, d_y = -2N, d_z = sqrt(2), d_u = 6N + 2*sqrt(2), N = 100
    int N = 100;
    Weights w{{'x', WeightValue(Rat(-3 * N))},
              {'y', WeightValue(Rat(-2 * N))},
              {'z', WeightValue(Rat(0), Rat(1))},
              {'u', WeightValue(Rat(6 * N), Rat(2))}};
    Poly p = P("(x^2 - y^3)*u + z^2 + x");
    CHECK(principal_part(p, w) == P("(x^2 - y^3)*u + z^2"));
    CHECK(weight_degree(p, w) == WeightValue(Rat(0), Rat(2)));
}

TEST_CASE("constants") {
    Weights w{{'x', WeightValue(Rat(5))}};
    CHECK(weight_degree(P("5"), w) == WeightValue(Rat(0)));
    CHECK(principal_part(P("5"), w) == P("5"));
    CHECK_THROWS_AS(weight_degree(P("0"), w), std::domain_error);
    CHECK_THROWS_AS(principal_part(P("0"), w), std::domain_error);
}

TEST_CASE("ties keep all attaining monomials") {
    Weights w{{'x', WeightValue(Rat(0))}, {'y', WeightValue(Rat(0))}};
    CHECK(principal_part(P("x + y"), w) == P("x + y"));
}

TEST_CASE("ordering matches floating point evaluation") {
    std::mt19937 rng(20240823);
    std::uniform_int_distribution<int> num(-50, 50);
    std::uniform_int_distribution<int> den(1, 20);
    const double s2 = std::sqrt(2.0);
    for (int i = 0; i < 10000; ++i) {
        WeightValue a(Rat(num(rng), den(rng)), Rat(num(rng), den(rng)));
        WeightValue b(Rat(num(rng), den(rng)), Rat(num(rng), den(rng)));
        double fa = static_cast<double>(a.rat) + static_cast<double>(a.irr) * s2;
        double fb = static_cast<double>(b.rat) + static_cast<double>(b.irr) * s2;
        if (std::abs(fa - fb) < 1e-9) continue;  // too close to trust the float side
        CHECK((a < b) == (fa < fb));
        // total order sanity
        CHECK(((a < b) || (b < a) || (a == b)));
        CHECK(!((a < b) && (b < a)));
    }
}

TEST_CASE("weight arithmetic") {
    WeightValue a(Rat(1), Rat(-1));  // 1 - sqrt(2) < 0
    CHECK(a.sign() == -1);
    WeightValue b(Rat(3), Rat(-2));  // 3 - 2*sqrt(2) > 0
    CHECK(b.sign() == 1);
    CHECK(WeightValue(Rat(0), Rat(0)).sign() == 0);
    CHECK((a + b) == WeightValue(Rat(4), Rat(-3)));
    CHECK((b * 2) == WeightValue(Rat(6), Rat(-4)));
}
