#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "afx/parse.hpp"
#include "afx/solve.hpp"

using namespace afx;

namespace {
Poly P(const std::string& s) { return parse(s); }

std::vector<Poly> PS(std::initializer_list<std::string> ss) {
    std::vector<Poly> out;
    for (const auto& s : ss) out.push_back(parse(s));
    return out;
}
}  // namespace

TEST_CASE("trivial systems") {
    CHECK(system_has_solution({}, {}) == Tri::Yes);
    CHECK(system_has_common_zero(PS({"1"})) == Tri::No);
    CHECK(system_has_common_zero(PS({"0"})) == Tri::Yes);
    CHECK(system_has_common_zero(PS({"x - x"})) == Tri::Yes);
    CHECK(system_has_solution({}, PS({"0"})) == Tri::No);
    CHECK(system_has_solution({}, PS({"7"})) == Tri::Yes);
}

TEST_CASE("hypersurfaces and points") {
    CHECK(system_has_common_zero(PS({"x^2 + y^3"})) == Tri::Yes);
    CHECK(system_has_common_zero(PS({"x", "y"})) == Tri::Yes);
    CHECK(system_has_common_zero(PS({"x", "x + 1"})) == Tri::No);
    CHECK(system_has_common_zero(PS({"x - 1", "y - 2", "x + y - 3"})) == Tri::Yes);
    CHECK(system_has_common_zero(PS({"x - 1", "y - 2", "x + y"})) == Tri::No);
    CHECK(system_has_common_zero(PS({"x^2 + y^2 + 1", "x", "y"})) == Tri::No);
}

TEST_CASE("complex solutions count") {
    // x = y, 2x^2 = 0 still has the origin
    CHECK(system_has_common_zero(PS({"x^2 + y^2", "x - y"})) == Tri::Yes);
    // substitution leaves a nontrivial univariate with complex roots
    CHECK(system_has_common_zero(PS({"x^2 + y^2 + 1", "x^2 - y"})) == Tri::Yes);
    CHECK(system_has_common_zero(PS({"x^2 + y^2 + z^2", "x + y + z"})) == Tri::Yes);
}

TEST_CASE("inequations") {
    CHECK(system_has_solution(PS({"x*y"}), PS({"x"})) == Tri::Yes);
    CHECK(system_has_solution(PS({"x"}), PS({"x"})) == Tri::No);
    CHECK(system_has_solution(PS({"y^2 - x^3"}), PS({"x"})) == Tri::Yes);
    CHECK(system_has_solution(PS({"y^2 - x^3", "y"}), PS({"x"})) == Tri::No);
    CHECK(system_has_solution(PS({"y^2 - x", "x"}), PS({"y"})) == Tri::No);
    CHECK(system_has_solution(PS({"x*z - 1", "x"}), {}) == Tri::No);
    CHECK(system_has_solution(PS({"x*z - 1"}), PS({"x", "z"})) == Tri::Yes);
    // off-variety inequation: x^2 + y^2 vanishes only on two lines
    CHECK(system_has_solution(PS({"x^2 + y^2"}), PS({"x*y"})) == Tri::Yes);
}

TEST_CASE("inequation in a free variable") {
    CHECK(system_has_solution(PS({"x"}), PS({"y"})) == Tri::Yes);
    CHECK(system_has_solution(PS({"x"}), PS({"x*y"})) == Tri::No);
    CHECK(system_has_solution(PS({"x"}), PS({"x*y + x"})) == Tri::No);
    CHECK(system_has_solution(PS({"x"}), PS({"x*y + y"})) == Tri::Yes);
}

TEST_CASE("vanishing on a zero set") {
    CHECK(vanishes_on_zero_set(P("x + y"), PS({"x^2", "y^2"})) == Tri::Yes);
    CHECK(vanishes_on_zero_set(P("x"), PS({"x^2", "x*y"})) == Tri::Yes);
    CHECK(vanishes_on_zero_set(P("y"), PS({"x^2", "x*y"})) == Tri::No);
    CHECK(vanishes_on_zero_set(P("x"), PS({"x*y"})) == Tri::No);
    CHECK(vanishes_on_zero_set(P("x*y"), PS({"x^2 + y^2"})) == Tri::No);
    CHECK(vanishes_on_zero_set(P("x^2 + y^2"), PS({"x + y", "x - y"})) == Tri::Yes);
}

TEST_CASE("singular point search on a smooth cubic") {
    // f = x^2, g = x + y^2 + z^3: the critical system has no solution
    Poly f = P("x^2"), g = P("x + y^2 + z^3");
    Poly gz = g.derivative('z');
    Poly J = f.derivative('x') * g.derivative('y') - f.derivative('y') * g.derivative('x');
    CHECK(system_has_solution({f, g, gz, J}, {f.derivative('x')}) == Tri::No);
    CHECK(system_has_solution({f, g, gz, J}, {f.derivative('y')}) == Tri::No);
    CHECK(system_has_solution({f, g, gz, f.derivative('x'), f.derivative('y'),
                               g.derivative('x'), g.derivative('y')},
                              {}) == Tri::No);
}

TEST_CASE("singular point search on a second smooth cubic") {
    Poly f = P("x^2 + y^3"), g = P("x + z^2");
    Poly gz = g.derivative('z');
    Poly J = f.derivative('x') * g.derivative('y') - f.derivative('y') * g.derivative('x');
    CHECK(system_has_solution({f, g, gz, J}, {f.derivative('x')}) == Tri::No);
    CHECK(system_has_solution({f, g, gz, J}, {f.derivative('y')}) == Tri::No);
    CHECK(system_has_solution({f, g, gz, f.derivative('x'), f.derivative('y'),
                               g.derivative('x'), g.derivative('y')},
                              {}) == Tri::No);
}

TEST_CASE("singular point found on a singular hypersurface") {
    // f = x, g = y^2 + z^3: the surface x*u + y^2 + z^3 = 0 is singular at 0
    Poly f = P("x"), g = P("y^2 + z^3");
    Poly gz = g.derivative('z');
    Poly J = f.derivative('x') * g.derivative('y') - f.derivative('y') * g.derivative('x');
    CHECK(system_has_solution({f, g, gz, J}, {f.derivative('x')}) == Tri::Yes);
}

TEST_CASE("answers never flip under duplication or scaling") {
    auto eqs = PS({"x^2 + y^3", "x + z^2", "2*z"});
    Tri base = system_has_common_zero(eqs);
    auto eqs2 = eqs;
    eqs2.push_back(eqs[0] * Rat(5));
    eqs2.push_back(eqs[1]);
    CHECK(system_has_common_zero(eqs2) == base);
}
