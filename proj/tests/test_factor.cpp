#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "afx/factor.hpp"
#include "afx/parse.hpp"

#include <random>

using namespace afx;

namespace {
Poly P(const std::string& s) { return parse(s); }

Poly random_poly(std::mt19937& rng, const std::string& vars, int max_deg, int max_terms) {
    std::uniform_int_distribution<int> nt(1, max_terms);
    std::uniform_int_distribution<int> coeff(-6, 6);
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

bool has_factor(const Factorization& f, const std::string& s, int mult) {
    Poly target = P(s);
    for (const auto& part : f.parts) {
        if (part.factor == target && part.multiplicity == mult) return true;
    }
    return false;
}
}  // namespace

TEST_CASE("monomial split") {
    Factorization f = factor(P("x*y"));
    CHECK(f.unit == 1);
    CHECK(f.parts.size() == 2);
    CHECK(has_factor(f, "x", 1));
    CHECK(has_factor(f, "y", 1));
    CHECK(f.parts[0].abs_irreducible == Tri::Yes);
    CHECK(f.parts[1].abs_irreducible == Tri::Yes);
}

TEST_CASE("irreducible over Q and over C") {
    Factorization f = factor(P("x^2 + y^3"));
    REQUIRE(f.parts.size() == 1);
    CHECK(f.parts[0].multiplicity == 1);
    CHECK(f.parts[0].abs_irreducible == Tri::Yes);
    CHECK(irreducible_over_q(P("x^2 + y^3")));
}

TEST_CASE("difference of squares") {
    Factorization f = factor(P("x^2 - y^2"));
    CHECK(f.parts.size() == 2);
    CHECK(has_factor(f, "x - y", 1));
    CHECK(has_factor(f, "x + y", 1));
}

TEST_CASE("sum of squares splits over C only") {
    Factorization f = factor(P("x^2 + y^2"));
    REQUIRE(f.parts.size() == 1);
    CHECK(f.parts[0].abs_irreducible == Tri::No);
    CHECK(absolute_factor_count(P("x^2 + y^2")) == 2);
    CHECK(absolute_factor_count(P("x^2 + y^3")) == 1);
    CHECK(absolute_factor_count(P("x^2 - y^2")) == 2);
    CHECK(absolute_factor_count(P("x^2 - y^3")) == 1);
    CHECK(absolute_factor_count(P("x*y - 1")) == 1);
}

TEST_CASE("univariate examples") {
    Factorization f = factor(P("2*x^4 - 2"));
    CHECK(f.unit == 2);
    CHECK(has_factor(f, "x - 1", 1));
    CHECK(has_factor(f, "x + 1", 1));
    CHECK(has_factor(f, "x^2 + 1", 1));
    CHECK(factor(P("x^2 + x + 1")).parts.size() == 1);
    Factorization g = factor(P("6*x^2 + 5*x + 1"));
    CHECK(has_factor(g, "2*x + 1", 1));
    CHECK(has_factor(g, "3*x + 1", 1));
    // multiplicities
    Factorization h = factor(P("x^3*(x + 1)^2*(x^2 + 1)"));
    CHECK(has_factor(h, "x", 3));
    CHECK(has_factor(h, "x + 1", 2));
    CHECK(has_factor(h, "x^2 + 1", 1));
}

TEST_CASE("the classified family members factor as expected") {
    Factorization f = factor(P("x*y^2"));
    CHECK(has_factor(f, "x", 1));
    CHECK(has_factor(f, "y", 2));
    Factorization g = factor(P("x^2 + y^3"));
    CHECK(g.parts.size() == 1);
    // canonical factor normalization: positive graded-lex leading coefficient
    Factorization h = factor(P("(x^2 - y^3)^2*(x + y)"));
    CHECK(has_factor(h, "y^3 - x^2", 2));
    CHECK(has_factor(h, "x + y", 1));
}

TEST_CASE("linear in a variable with coprime cofactors is absolutely irreducible") {
    CHECK(absolutely_irreducible(P("x^2*u + x + y^2 + z^3")) == Tri::Yes);
    CHECK(absolutely_irreducible(P("x*y^2*u + y + x^2*z + x*y*z^2")) == Tri::Yes);
}

TEST_CASE("round trip on random products") {
    std::mt19937 rng(31337);
    int done = 0;
    for (int i = 0; i < 1000 && done < 1000; ++i) {
        Poly a = random_poly(rng, "xy", 3, 3);
        Poly b = random_poly(rng, "xy", 3, 2);
        Poly p = a * b;
        if (p.is_zero()) continue;
        Factorization f = factor(p);
        CHECK(f.product() == p);
        for (const auto& part : f.parts) {
            CHECK(part.multiplicity >= 1);
            CHECK(!part.factor.is_constant());
        }
        ++done;
    }
    CHECK(done > 900);
}

TEST_CASE("rational roots") {
    auto roots = rational_roots(P("(2*y - 1)*(y + 3)^2*(y^2 + 1)"));
    REQUIRE(roots.size() == 2);
    CHECK(roots[0] == std::make_pair(Rat(-3), 2));
    CHECK(roots[1] == std::make_pair(Rat(1, 2), 1));
    CHECK(rational_roots(P("y^2 + 1")).empty());
}

TEST_CASE("errors") {
    CHECK_THROWS_AS(factor(P("0")), std::domain_error);
}

TEST_CASE("trivariate products") {
    Poly p = P("(x + y + z)*(x*z + y)*(y - z)^2");
    Factorization f = factor(p);
    CHECK(f.product() == p);
    CHECK(has_factor(f, "x + y + z", 1));
    CHECK(has_factor(f, "x*z + y", 1));
    CHECK(has_factor(f, "y - z", 2));
}
