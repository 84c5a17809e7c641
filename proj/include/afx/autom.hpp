#pragma once

#include "afx/poly.hpp"
#include "afx/tri.hpp"

#include <map>
#include <string>
#include <vector>

namespace afx {

// One generator of an automorphism group of an affine space: either an
// affine map with an invertible rational matrix, or a triangular map adding
// to one variable a polynomial in the remaining variables (which may involve
// fixed coefficient variables).
struct ElementaryMap {
    enum class Kind { Affine, Triangular };
    Kind kind;

    // Affine: moving variables (canonical order), images[i] = sum_j
    // matrix[i][j] * vars[j] + shift[i].
    std::string vars;
    std::vector<std::vector<Rat>> matrix;
    std::vector<Rat> shift;

    // Triangular: tvar += tpoly, tpoly must not use tvar.
    char tvar = 0;
    Poly tpoly;

    static ElementaryMap affine(const std::string& vars, std::vector<std::vector<Rat>> m,
                                std::vector<Rat> t);
    static ElementaryMap triangular(char tvar, const Poly& tpoly);

    ElementaryMap inverse() const;
    bool is_identity() const;
};

// Endomorphism of a polynomial ring given by the images of its moving
// variables; variables without a listed image are fixed.  When `tracked`,
// `factors` is a list of elementary maps whose left-to-right composition
// (as ring homomorphisms) equals the map, certifying invertibility.
struct PolyMap {
    std::string vars;  // moving variables, canonical order
    std::map<char, Poly> images;
    bool tracked = false;
    std::vector<ElementaryMap> factors;

    Poly image_of(char v) const;  // v itself when not moving
    bool is_identity() const;
};

Poly apply(const PolyMap& m, const Poly& p);

PolyMap identity_map(const std::string& vars);
PolyMap elementary_map(const ElementaryMap& e);

// compose(a, b) applies b first: apply(compose(a,b), p) = apply(a, apply(b, p)).
PolyMap compose(const PolyMap& a, const PolyMap& b);

// Tracked map from a factor list (left-to-right ring composition).
PolyMap from_factors(const std::string& vars, const std::vector<ElementaryMap>& factors);

// Inverse of a tracked map; the two-sided identity is asserted.
PolyMap inverse(const PolyMap& m);

// Determinant of the Jacobian matrix of the moving variables.
Poly jacobian_det(const PolyMap& m);

// Automorphism gamma of B[y,v] (coefficient variables fixed) with
//   gamma(y) = v + q(y),  gamma(v) = y - p(v + q(y)),
// mapping the ideal (y - q(p(y)), v) onto (y - p(q(y)), v).
// p, q must not use yvar/vvar except as the argument y.
PolyMap gamma_pq(const Poly& p, const Poly& q, char yvar = 'y', char vvar = 'v');

// Automorphism gamma_k of B[y,v] with
//   gamma_k((y + a*p(y), v)) = (y + p(a^(k+1) y)/a^k, v),
// built by iterating gamma_pq; requires a^k | p(0).
PolyMap gamma_k(const Poly& p, const Poly& a, int k, char yvar = 'y', char vvar = 'v');

// Does m map the ideal (h_from(y), v) onto (h_to(y), v)?  Both inclusions
// are checked by exact reduction.
bool maps_principal_ideal(const PolyMap& m, const Poly& h_from, const Poly& h_to,
                          char yvar = 'y', char vvar = 'v');

// Factor a plane automorphism given by the images of yvar and zvar into
// alternating affine/triangular maps by leading-form degree reduction.
// Throws std::invalid_argument when the reduction stalls (not an
// automorphism).  The identity yields an empty list.
std::vector<ElementaryMap> jvdk_decompose(const Poly& py, const Poly& pz, char yvar = 'y',
                                          char zvar = 'z');

// An automorphism of C[x][y,z] specializing at x = points[i] to targets[i].
// Targets must be plane automorphisms of C[y,z] with Jacobian 1 and
// constant coefficients.  Specializations are verified exactly.
PolyMap interpolate_multispec(const std::vector<Rat>& points,
                              const std::vector<PolyMap>& targets, char xvar = 'x');

// True iff m is tracked, m(coordinate) = target, recomposing the factors
// reproduces the images, and m composed with its inverse is the identity.
bool verify_witness(const PolyMap& m, const Poly& target, char coordinate);

// Witness serialization (round-trip stable).
std::string witness_to_json(const PolyMap& m);
PolyMap witness_from_json(const std::string& text);

}  // namespace afx
