#pragma once

#include "afx/poly.hpp"

#include <map>

namespace afx {

// Exact element of Q + Q*sqrt(2), ordered as a real number.
struct WeightValue {
    Rat rat;  // rational part
    Rat irr;  // coefficient of sqrt(2)

    WeightValue(Rat r = 0, Rat i = 0) : rat(std::move(r)), irr(std::move(i)) {}

    WeightValue operator+(const WeightValue& o) const { return {rat + o.rat, irr + o.irr}; }
    WeightValue operator-(const WeightValue& o) const { return {rat - o.rat, irr - o.irr}; }
    WeightValue operator*(int k) const { return {rat * k, irr * k}; }
    bool operator==(const WeightValue& o) const { return rat == o.rat && irr == o.irr; }
    bool operator!=(const WeightValue& o) const { return !(*this == o); }
    bool operator<(const WeightValue& o) const;
    bool operator<=(const WeightValue& o) const { return *this < o || *this == o; }
    bool operator>(const WeightValue& o) const { return o < *this; }
    bool operator>=(const WeightValue& o) const { return o <= *this; }

    // -1, 0, +1 as a real number.
    int sign() const;
    std::string str() const;
};

using Weights = std::map<char, WeightValue>;

// Max monomial weight; throws std::domain_error on the zero polynomial.
WeightValue weight_degree(const Poly& p, const Weights& w);

// Sum of the monomials attaining the max weight.
Poly principal_part(const Poly& p, const Weights& w);

}  // namespace afx
