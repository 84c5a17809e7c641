#pragma once

#include "afx/poly.hpp"
#include "afx/tri.hpp"

#include <vector>

namespace afx {

// Decision procedures for complex zero sets of small polynomial systems,
// via resultant/gcd elimination with branching on leading coefficients.
// All answers are certified; Unknown is returned when elimination cannot
// decide (conservative).

// Is there a point of C^n with all eqs = 0 and all neqs != 0?
Tri system_has_solution(const std::vector<Poly>& eqs, const std::vector<Poly>& neqs);

// Is there a common zero of eqs?
Tri system_has_common_zero(const std::vector<Poly>& eqs);

// Does h vanish on every common zero of eqs?
Tri vanishes_on_zero_set(const Poly& h, const std::vector<Poly>& eqs);

}  // namespace afx
