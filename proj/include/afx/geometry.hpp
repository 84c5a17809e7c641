#pragma once

#include "afx/poly.hpp"
#include "afx/tri.hpp"

#include <optional>
#include <string>
#include <vector>

namespace afx {

// Analysis of the modification C^4 ⊇ X = {f(x,y)u + g(x,y,z) = 0} → C^3
// along Γ = {f = 0} ⊂ C^2 and the center curve C = {f = g = 0} ⊂ C^3.

enum class ComponentClass { Horizontal, Slanted, Vertical };

// Injective polynomial parametrization t ↦ (p1(t), p2(t)) of the plane
// curve {F(var1, var2) = 0}.
struct Parametrization {
    char var1, var2;
    Poly p1, p2;
};

struct HomeoLineResult {
    Tri verdict;
    std::optional<Parametrization> witness;  // for Yes
    std::string certificate;                 // for No
};

// Is the irreducible plane curve {F = 0} homeomorphic to the affine line?
// Yes carries a verified injective polynomial parametrization; No carries a
// certificate (reducible over C, several points at infinity, or several
// branches at infinity); otherwise Unknown.
HomeoLineResult homeo_line(const Poly& F, int degree_bound = 12,
                           const std::string& plane = "");

// Largest j such that the z^j-coefficient of g is not divisible by f_i
// (the degree of the projection C ∩ {f_i = 0} → Γ_i).  Throws
// std::domain_error when f_i divides g entirely.
int z_degree_mod(const Poly& g, const Poly& f_i);

struct ComponentReport {
    Poly factor;       // irreducible f_i
    int multiplicity;  // a_i
    int z_degree;      // d_i
    ComponentClass cls;
    Tri gamma_smooth;  // Γ_i smooth?
    Tri c_smooth;      // part of C over Γ_i smooth?
    Tri isolated;      // Γ_i disjoint from the other components?
    HomeoLineResult homeo;
};

struct CanonicalFactorization {
    Poly f_horiz, f_slant, f_vert;  // product reconstruction is exact
    std::vector<ComponentReport> reports;
    Tri classes_certain;  // No factor of ambiguous absolute irreducibility
};

// Partition of the irreducible factors of f by the degree of the center
// curve over them.  Throws std::domain_error on f = 0 or when some factor
// divides g (reducible total space).
CanonicalFactorization canonical_factorization(const Poly& f, const Poly& g);

struct SmoothResult {
    Tri verdict;
    std::vector<Poly> witness_system;  // for No: equations with a common zero
};

// Is the hypersurface {f·u + g = 0} ⊂ C^4 smooth?  Throws
// std::invalid_argument when f·u + g is reducible.
SmoothResult hypersurface_smooth(const Poly& f, const Poly& g);

struct MultiplicityStructure {
    // incidence[i][j]: the part of C over Γ_j meets/lies in {f_i = 0}
    std::vector<std::vector<bool>> incidence;
    // transversal[i][i]: {f_i = 0} × C and {g = 0} meet transversally at
    // general points of the curve part over Γ_i (multiplicity one)
    std::vector<std::vector<Tri>> transversal;
    Tri matches_delta_form;
};

// Incidence and generic-transversality structure of the exceptional
// components; matches_delta_form aggregates the block-identity pattern
// (diagonal transversal, slanted components isolated, vertical block
// identity).
MultiplicityStructure multiplicity_structure(const Poly& f, const Poly& g,
                                             const CanonicalFactorization& cf);

}  // namespace afx
