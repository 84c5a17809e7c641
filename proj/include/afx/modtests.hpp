#pragma once

#include "afx/poly.hpp"
#include "afx/tri.hpp"

namespace afx {

// Coefficient ring for residue-class tests modulo f.
enum class RingSpec {
    UnivariateQ,   // Q[v], one variable
    UnivariateQx,  // Q(x)[v], polynomials in x and one main variable
    BivariateQ,    // Q[v,w], two variables
};

struct ModTestResult {
    Tri invertible;  // is b a unit mod f?
    bool nilpotent;  // is b nilpotent mod f, i.e. does f^red divide b?
};

// Residue-class membership tests for b in R/(f).  Nilpotency is decided by
// exact division against the squarefree part of f; invertibility via gcd in
// the univariate rings and via the common-zero test in the bivariate ring
// (which may report Unknown).  Throws std::domain_error on f = 0 and
// std::invalid_argument when the inputs do not fit the ring.
ModTestResult mod_tests(const Poly& b, const Poly& f, RingSpec spec);

}  // namespace afx
