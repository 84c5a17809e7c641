#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "afx/parse.hpp"
#include "afx/poly.hpp"

#include <random>

using namespace afx;

namespace {

Poly P(const std::string& s) { return parse(s); }

Poly random_poly(std::mt19937& rng, const std::string& vars, int max_deg, int max_terms) {
    std::uniform_int_distribution<int> nt(1, max_terms);
    std::uniform_int_distribution<int> coeff(-9, 9);
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

TEST_CASE("parse examples") {
    Poly russell = P("x^2*u + x + y^2 + z^3");
    CHECK(russell == Poly::variable('x') * Poly::variable('x') * Poly::variable('u') +
                         Poly::variable('x') + pow(Poly::variable('y'), 2) +
                         pow(Poly::variable('z'), 3));

    CHECK(P("0").is_zero());
    CHECK(P("0").terms().empty());

    Poly p2 = P("x*y^2*u + y + x^2*z + x*y*z^2");
    Poly x = Poly::variable('x'), y = Poly::variable('y'), z = Poly::variable('z'),
         u = Poly::variable('u');
    CHECK(p2 == x * y * y * u + y + x * x * z + x * y * z * z);
}

TEST_CASE("parse rationals, parens, signs") {
    CHECK(P("3/2").constant_value() == Rat(3, 2));
    CHECK(P("-x + 2") == Poly::constant(2) - Poly::variable('x'));
    CHECK(P("(x + y)^2") == P("x^2 + 2*x*y + y^2"));
    CHECK(P("2^3").constant_value() == 8);
    CHECK(P("x - (y - z)") == P("x - y + z"));
}

TEST_CASE("parse errors carry a position") {
    CHECK_THROWS_AS(P("x +"), ParseError);
    CHECK_THROWS_AS(P("w"), ParseError);
    CHECK_THROWS_AS(P("x y"), ParseError);  // implicit multiplication rejected
    CHECK_THROWS_AS(P("1/0"), ParseError);
    CHECK_THROWS_AS(P("(x"), ParseError);
    CHECK_THROWS_AS(parse("z", "xy"), ParseError);
    try {
        P("x + + y");
    } catch (const ParseError& e) {
        CHECK(e.pos == 4);
    }
}

TEST_CASE("print is canonical graded lex and round-trips") {
    CHECK(P("x^2*u + x + y^2 + z^3").str() == "x^2*u + z^3 + y^2 + x");
    CHECK(P("0").str() == "0");
    CHECK(P("y - x").str() == "-x + y");
    CHECK(P("3/2*x - 1").str() == "3/2*x - 1");
    for (const char* s : {"x^2*u + x + y^2 + z^3", "x*y^2*u + y + x^2*z + x*y*z^2",
                          "-x + 3/7*y^4 - 2*z*u*v", "1/2"}) {
        Poly p = P(s);
        CHECK(parse(p.str()) == p);
        CHECK(parse(p.str()).str() == p.str());
    }
}

TEST_CASE("ring axioms on random polynomials") {
    std::mt19937 rng(12345);
    for (int i = 0; i < 200; ++i) {
        Poly a = random_poly(rng, "xyz", 4, 4);
        Poly b = random_poly(rng, "xyz", 4, 4);
        Poly c = random_poly(rng, "xyz", 4, 4);
        CHECK((a + b) * c == a * c + b * c);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a + b == b + a);
        CHECK((a + b) - b == a);
    }
}

TEST_CASE("exact division") {
    std::mt19937 rng(777);
    for (int i = 0; i < 200; ++i) {
        Poly a = random_poly(rng, "xyu", 3, 3);
        Poly b = random_poly(rng, "xyu", 3, 3);
        if (b.is_zero()) continue;
        CHECK(exact_div(a * b, b) == a);
    }
    CHECK(!try_exact_div(P("x + 1"), P("y")).has_value());
    CHECK_THROWS_AS(exact_div(P("x"), P("0")), std::domain_error);
}

TEST_CASE("gcd") {
    CHECK(gcd(P("x^2 - y^2"), P("x^2 + 2*x*y + y^2")) == P("x + y"));
    CHECK(gcd(P("0"), P("-2*x")) == P("x"));
    CHECK(gcd(P("6"), P("4*x")).is_constant());
    std::mt19937 rng(999);
    for (int i = 0; i < 60; ++i) {
        Poly a = random_poly(rng, "xy", 2, 2);
        Poly b = random_poly(rng, "xy", 2, 2);
        Poly c = random_poly(rng, "xy", 2, 2);
        if (a.is_zero() || b.is_zero() || c.is_zero()) continue;
        Poly g = gcd(a * c, b * c);
        CHECK(divides(g, a * c));
        CHECK(divides(g, b * c));
        CHECK(divides(c, g * Poly::constant(1)));  // planted common factor found
    }
}

TEST_CASE("pseudo division") {
    Poly a = P("x^2*y + x + 1"), b = P("2*y*x + 1");
    PseudoDiv pd = pseudo_divmod(a, b, 'x');
    CHECK(pow(b.lc_in('x'), pd.power) * a == pd.quot * b + pd.rem);
    CHECK(pd.rem.degree_in('x') < b.degree_in('x'));
}

TEST_CASE("content and squarefree part") {
    CHECK(content_in(P("2*x*y + 4*y^2"), 'x') == P("2*y"));
    CHECK(primitive_in(P("2*x*y + 4*y^2"), 'x') == P("x + 2*y"));
    CHECK(squarefree_part(P("x^2*y^3")) == P("x*y"));
    CHECK(squarefree_part(P("(x + y)^2")) == P("x + y"));
    CHECK(squarefree_part(P("x^2 + y^3")) == P("x^2 + y^3"));
}

TEST_CASE("substitution and evaluation") {
    Poly p = P("x^2*u + x + y^2 + z^3");
    CHECK(p.subst('x', P("0")) == P("y^2 + z^3"));
    CHECK(p.subst('u', P("u - z^3")) == P("x^2*u - x^2*z^3 + x + y^2 + z^3"));
    CHECK(p.eval({{'x', Rat(1)}, {'y', Rat(2)}, {'z', Rat(0)}, {'u', Rat(3)}}) == Rat(8));
    Poly q = P("x*y").subst({{'x', P("y")}, {'y', P("x")}});
    CHECK(q == P("x*y"));
    CHECK(P("x - y").subst({{'x', P("y")}, {'y', P("x")}}) == P("y - x"));
}

TEST_CASE("degrees and coefficients") {
    Poly p = P("x*y^2*u + y + x^2*z + x*y*z^2");
    CHECK(p.total_degree() == 4);
    CHECK(p.degree_in('z') == 2);
    CHECK(p.coeff_of('z', 2) == P("x*y"));
    CHECK(p.coeff_of('z', 1) == P("x^2"));
    CHECK(p.coeff_of('z', 0) == P("x*y^2*u + y"));
    CHECK(P("0").total_degree() == -1);
}
