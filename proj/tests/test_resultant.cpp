#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "afx/parse.hpp"
#include "afx/resultant.hpp"

#include <random>

using namespace afx;

namespace {
Poly P(const std::string& s) { return parse(s); }

Poly random_poly(std::mt19937& rng, const std::string& vars, int max_deg, int max_terms) {
    std::uniform_int_distribution<int> nt(1, max_terms);
    std::uniform_int_distribution<int> coeff(-5, 5);
    std::uniform_int_distribution<int> deg(0, max_deg);
    Poly p = Poly::zero(vars);
    int n = nt(rng);
    for (int i = 0; i < n; ++i) {
        int c = coeff(rng);
        if (c == 0) c = 1;
        Poly t = Poly::constant(Rat(c), vars);
        int budget = deg(rng);
        for (char v : vars) {
            if (budget <= 0) break;
            std::uniform_int_distribution<int> e(0, budget);
            int k = e(rng);
            t = t * pow(Poly::variable(v), k);
            budget -= k;
        }
        p = p + t;
    }
    return p;
}
}  // namespace

TEST_CASE("linear resultant is the 2x2 determinant") {
    // res_z(x*z + y, u*z + v) = x*v - y*u
    CHECK(resultant(P("x*z + y"), P("u*z + v"), 'z') == P("x*v - y*u"));
}

TEST_CASE("hand-expanded Sylvester example") {
    CHECK(resultant(P("z^2 - x"), P("z - y"), 'z') == P("y^2 - x"));
}

TEST_CASE("evaluation at the common root") {
    CHECK(resultant(P("y"), P("y + x"), 'y') == P("x"));
}

TEST_CASE("degenerate degree handling") {
    CHECK_THROWS_AS(resultant(P("x"), P("x + 1"), 'z'), std::domain_error);
    CHECK(resultant(P("x"), P("z^2 + 1"), 'z') == P("x^2"));
    CHECK(resultant(P("0"), P("z"), 'z').is_zero());
}

TEST_CASE("resultant vanishes iff common factor with positive degree in var") {
    std::mt19937 rng(4242);
    int planted = 0;
    for (int i = 0; i < 120; ++i) {
        Poly a = random_poly(rng, "xz", 2, 3);
        Poly b = random_poly(rng, "xz", 2, 3);
        Poly c = random_poly(rng, "xz", 2, 2);
        if (a.is_zero() || b.is_zero() || c.is_zero()) continue;
        if (a.degree_in('z') + b.degree_in('z') == 0) continue;
        if (c.degree_in('z') > 0) {
            CHECK(resultant(a * c, b * c, 'z').is_zero());
            ++planted;
        }
        Poly r = resultant(a, b, 'z');
        bool common = gcd(a, b).degree_in('z') > 0;
        if (common) CHECK(r.is_zero());
        if (!r.is_zero()) CHECK(!common);
    }
    CHECK(planted > 20);
}

TEST_CASE("multiplicativity spot check") {
    Poly a = P("z^2 + x"), b = P("z - y"), c = P("x*z + 1");
    CHECK(resultant(a * b, c, 'z') == resultant(a, c, 'z') * resultant(b, c, 'z'));
}
