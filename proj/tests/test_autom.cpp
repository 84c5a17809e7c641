#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "afx/autom.hpp"
#include "afx/parse.hpp"

#include <random>

using namespace afx;

namespace {
Poly P(const std::string& s) { return parse(s); }

Poly random_univariate(std::mt19937& rng, char v, int max_deg) {
    std::uniform_int_distribution<int> coeff(-4, 4);
    std::uniform_int_distribution<int> deg(0, max_deg);
    Poly p = Poly::zero(std::string(1, v));
    int d = deg(rng);
    for (int k = 0; k <= d; ++k) {
        int c = coeff(rng);
        if (c != 0) p = p + pow(Poly::variable(v), k) * Rat(c);
    }
    return p;
}
}  // namespace

TEST_CASE("apply and compose") {
    PolyMap id = identity_map("yz");
    CHECK(id.is_identity());
    CHECK(apply(id, P("y^2 + z")) == P("y^2 + z"));

    PolyMap t = elementary_map(ElementaryMap::triangular('y', P("z^2")));
    PolyMap s = elementary_map(ElementaryMap::triangular('z', P("y^3")));
    Poly q = P("y + z");
    CHECK(apply(compose(t, s), q) == apply(t, apply(s, q)));
    CHECK(apply(compose(s, t), q) == apply(s, apply(t, q)));
}

TEST_CASE("tracked inverses") {
    std::vector<ElementaryMap> fs = {
        ElementaryMap::triangular('y', P("z^2 + 1")),
        ElementaryMap::affine("yz", {{0, 1}, {-1, 0}}, {Rat(2), Rat(0)}),
        ElementaryMap::triangular('z', P("y^3 - y")),
    };
    PolyMap m = from_factors("yz", fs);
    PolyMap mi = inverse(m);
    CHECK(compose(m, mi).is_identity());
    CHECK(compose(mi, m).is_identity());
    CHECK(jacobian_det(m).is_constant());
    CHECK(jacobian_det(m).constant_value() == 1);
}

TEST_CASE("gamma with q = 0") {
    PolyMap g = gamma_pq(P("y^2 + 1"), P("0"));
    CHECK(g.image_of('y') == P("v"));
    CHECK(g.image_of('v') == P("y - v^2 - 1"));
    CHECK(maps_principal_ideal(g, P("y"), P("y - 1")));
}

TEST_CASE("gamma images and ideal transport") {
    PolyMap g = gamma_pq(P("y^2"), P("-2*y"));
    CHECK(g.image_of('y') == P("v - 2*y"));
    CHECK(maps_principal_ideal(g, P("y + 2*y^2"), P("y - 4*y^2")));

    PolyMap h = gamma_pq(P("y^2 + 1"), P("y + 1"));
    Poly hf = P("y") - P("y + 1").subst('y', P("y^2 + 1"));
    Poly ht = P("y") - P("y^2 + 1").subst('y', P("y + 1"));
    CHECK(maps_principal_ideal(h, hf, ht));
}

TEST_CASE("gamma over a coefficient ring") {
    // B = Q[x]: coefficients in x pass through untouched
    PolyMap g = gamma_pq(P("x*y^2"), P("y - x"));
    CHECK(g.image_of('y') == P("v + y - x"));
    CHECK(apply(g, P("x")) == P("x"));
}

TEST_CASE("gamma iteration base case") {
    // k = 0 is a single three-factor gamma
    PolyMap g = gamma_k(P("y^2 + 2"), P("2"), 0);
    CHECK(g.factors.size() == 3);
    // a = 1 leaves the ideal in place
    PolyMap h = gamma_k(P("y^3 - y + 5"), P("1"), 2);
    CHECK(maps_principal_ideal(h, P("y + y^3 - y + 5"), P("y + y^3 - y + 5")));
}

TEST_CASE("gamma iteration over B = C[x,z,u]") {
    Poly p = P("y*(y*u + z^2) + x*z");
    PolyMap g = gamma_k(p, P("x"), 1);
    Poly target = P("y + x^3*y^2*u + x*y*z^2 + z");
    CHECK(maps_principal_ideal(g, P("y") + P("x") * p, target));
}

TEST_CASE("gamma iteration divisibility errors") {
    // constant a is a unit over Q, so only nonconstant a can fail
    CHECK_THROWS_AS(gamma_k(P("y + 3"), P("x"), 2), std::invalid_argument);
    CHECK_THROWS_AS(gamma_k(P("y + x*z + x^2"), P("x^2"), 1), std::invalid_argument);
    CHECK_THROWS_AS(gamma_k(P("y + 1"), P("0"), 1), std::invalid_argument);
}

TEST_CASE("plane decomposition examples") {
    CHECK(jvdk_decompose(P("y"), P("z")).empty());

    auto fs = jvdk_decompose(P("y + z^2"), P("z"));
    REQUIRE(fs.size() == 1);
    CHECK(fs[0].kind == ElementaryMap::Kind::Triangular);
    CHECK(fs[0].tvar == 'y');
    CHECK(fs[0].tpoly == P("z^2"));

    auto gs = jvdk_decompose(P("z"), P("-y - z^3"));
    REQUIRE(gs.size() == 2);
    CHECK(gs[0].kind == ElementaryMap::Kind::Affine);
    CHECK(gs[1].kind == ElementaryMap::Kind::Triangular);
}

TEST_CASE("plane decomposition rejects non-automorphisms") {
    CHECK_THROWS_AS(jvdk_decompose(P("y^2"), P("z")), std::invalid_argument);
    CHECK_THROWS_AS(jvdk_decompose(P("y"), P("y*z")), std::invalid_argument);
    CHECK_THROWS_AS(jvdk_decompose(P("y + z^2"), P("z + y^2")), std::invalid_argument);
}

TEST_CASE("plane decomposition round trips") {
    std::mt19937 rng(424242);
    std::uniform_int_distribution<int> nfac(1, 5);
    std::uniform_int_distribution<int> which(0, 2);
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<ElementaryMap> fs;
        int n = nfac(rng);
        for (int i = 0; i < n; ++i) {
            switch (which(rng)) {
                case 0:
                    fs.push_back(ElementaryMap::triangular('y', random_univariate(rng, 'z', 2)));
                    break;
                case 1:
                    fs.push_back(ElementaryMap::triangular('z', random_univariate(rng, 'y', 2)));
                    break;
                default:
                    fs.push_back(
                        ElementaryMap::affine("yz", {{1, 2}, {1, 1}}, {Rat(1), Rat(-1)}));
            }
        }
        PolyMap m = from_factors("yz", fs);
        auto dec = jvdk_decompose(m.image_of('y'), m.image_of('z'));
        PolyMap re = from_factors("yz", dec);
        CHECK(re.image_of('y') == m.image_of('y'));
        CHECK(re.image_of('z') == m.image_of('z'));
    }
}

TEST_CASE("multi-specialization interpolation") {
    PolyMap id = identity_map("yz");
    PolyMap shear = elementary_map(ElementaryMap::triangular('y', P("z^2")));

    PolyMap g = interpolate_multispec({Rat(0), Rat(1)}, {id, shear});
    CHECK(g.image_of('y') == P("y + x*z^2"));
    CHECK(g.image_of('z') == P("z"));

    PolyMap single = interpolate_multispec({Rat(5)}, {id});
    CHECK(single.is_identity());

    PolyMap tz = elementary_map(ElementaryMap::triangular('z', P("y^3")));
    PolyMap h = interpolate_multispec({Rat(0), Rat(1), Rat(2)}, {id, tz, id});
    CHECK(h.image_of('z') == P("z + (2*x - x^2)*y^3"));
    CHECK(h.image_of('y') == P("y"));
}

TEST_CASE("interpolation of affine targets") {
    PolyMap rot = elementary_map(ElementaryMap::affine("yz", {{0, 1}, {-1, 0}}, {Rat(0), Rat(0)}));
    PolyMap id = identity_map("yz");
    PolyMap g = interpolate_multispec({Rat(0), Rat(1)}, {id, rot});
    CHECK(g.image_of('y').subst('x', Poly::constant(1)) == P("z"));
    CHECK(g.image_of('z').subst('x', Poly::constant(1)) == P("-y"));
    CHECK(g.image_of('y').subst('x', Poly::constant(0)) == P("y"));
    CHECK(g.image_of('z').subst('x', Poly::constant(0)) == P("z"));
}

TEST_CASE("witness verification") {
    PolyMap id = identity_map("yz");
    CHECK(verify_witness(id, P("y"), 'y'));
    PolyMap g = gamma_pq(P("y^2"), P("-2*y"));
    CHECK(verify_witness(g, g.image_of('y'), 'y'));
    CHECK(!verify_witness(g, g.image_of('y') + Poly::constant(1), 'y'));
    PolyMap untracked;
    untracked.vars = "y";
    untracked.images['y'] = P("y");
    CHECK_THROWS_AS(verify_witness(untracked, P("y"), 'y'), std::invalid_argument);
}

TEST_CASE("witness serialization round trip") {
    PolyMap g = gamma_pq(P("x*y^2 + 1"), P("y - x"));
    std::string text = witness_to_json(g);
    PolyMap back = witness_from_json(text);
    CHECK(back.image_of('y') == g.image_of('y'));
    CHECK(back.image_of('v') == g.image_of('v'));
    CHECK(witness_to_json(back) == text);
}
