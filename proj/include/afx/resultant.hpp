#pragma once

#include "afx/poly.hpp"

namespace afx {

// Sylvester resultant with respect to var, computed by fraction-free
// (Bareiss) elimination on the Sylvester matrix.
// Throws std::domain_error when both inputs have degree zero in var.
Poly resultant(const Poly& p, const Poly& q, char var);

// Determinant of a square polynomial matrix (fraction-free).
Poly det(std::vector<std::vector<Poly>> m);

}  // namespace afx
