#pragma once

#include "afx/autom.hpp"
#include "afx/geometry.hpp"
#include "afx/poly.hpp"
#include "afx/tri.hpp"

#include <optional>
#include <string>
#include <vector>

namespace afx {

// Full classification of the hypersurface {f(x,y)u + g(x,y,z) = 0} ⊂ C^4.
struct Verdict {
    enum class Outcome { Reducible, Singular, NotAcyclic, ExoticC3, IsomorphicC3, Unknown };
    Outcome outcome;
    // NotAcyclic: the failed condition ("alpha".."delta");
    // Unknown: the first three-valued subdecision that returned Unknown.
    std::string failed;
    struct Record {
        std::string condition;
        Tri result;
        std::string data;
    };
    std::vector<Record> evidence;
    // plane automorphism applied to (x, y) so that the non-horizontal part
    // of f becomes a polynomial in x alone
    std::optional<PolyMap> coordinate_change;
};

Verdict classify(const Poly& f, const Poly& g);

// Is every specialization p(λ, y, z, u) of f·u + g a variable of C[y,z,u]?
struct ResidualResult {
    Tri verdict;
    std::optional<Rat> lambda;  // failing specialization, when rational
    std::string reason;         // for No
};
ResidualResult residual_x_variable(const Poly& f, const Poly& g);

// Decision for p = d(x,y)·(a·u + b·v) + c(x,y) with gcd(a,b) = 1, d ≠ 0.
struct Linear2Result {
    enum class Kind { XVariable, NotC3, Unknown };
    Kind kind;
    std::string failed_clause;       // for NotC3
    std::optional<PolyMap> witness;  // for XVariable: maps y to p
};
Linear2Result classify_linear2(const Poly& a, const Poly& b, const Poly& c, const Poly& d);

// Plane automorphism ν with apply(ν, curve) = c·x, built by elementary
// degree reduction from an injective smooth polynomial parametrization of
// the curve; nullopt when the reduction stalls.
std::optional<PolyMap> rectify_plane_curve(const Poly& curve, const Parametrization& par);

// Coefficients [q_0, ..., q_m] with target = Σ q_j · base^j, when such a
// univariate composition exists (base nonconstant).
std::optional<std::vector<Rat>> compose_coeffs(const Poly& target, const Poly& base);

}  // namespace afx
