#pragma once

#include "afx/poly.hpp"
#include "afx/tri.hpp"

#include <vector>

namespace afx {

// Exact factorization over Q.  Factors are primitive integer polynomials
// with positive graded-lex leading coefficient, pairwise non-associate,
// irreducible over Q; unit * prod(factor^mult) == input exactly.
struct Factorization {
    struct Part {
        Poly factor;
        int multiplicity;
        Tri abs_irreducible;  // irreducible over C?
    };
    Rat unit;
    std::vector<Part> parts;

    Poly product() const;
};

Factorization factor(const Poly& p);  // throws std::domain_error on zero

// For p irreducible over Q: is it irreducible over C?
// Yes for degree one and for polynomials linear in some variable with
// coprime cofactors; univariate degree >= 2 is No; squarefree bivariate is
// decided by the closed-1-form coefficient search; otherwise Unknown.
Tri absolutely_irreducible(const Poly& p);

// Number of absolutely irreducible factors of a squarefree polynomial in
// exactly two variables (closed-1-form linear algebra); -1 when not
// applicable.
int absolute_factor_count(const Poly& p);

// Rational roots (with multiplicity) of a univariate polynomial.
std::vector<std::pair<Rat, int>> rational_roots(const Poly& p);

// True iff p is irreducible over Q (and nonconstant).
bool irreducible_over_q(const Poly& p);

}  // namespace afx
