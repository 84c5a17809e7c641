#include "afx/weight.hpp"

#include <sstream>

namespace afx {

int WeightValue::sign() const {
    // sign of rat + irr*sqrt(2); sqrt(2) irrational, so zero only at (0,0)
    if (rat == 0 && irr == 0) return 0;
    if (rat >= 0 && irr >= 0) return 1;
    if (rat <= 0 && irr <= 0) return -1;
    // opposite signs: compare rat^2 with 2*irr^2
    bool rat_pos = rat > 0;
    Rat lhs = rat * rat, rhs = irr * irr * 2;
    if (lhs == rhs) throw std::logic_error("weight comparison hit rat^2 == 2*irr^2");
    bool rat_dominates = lhs > rhs;
    return rat_dominates == rat_pos ? 1 : -1;
}

bool WeightValue::operator<(const WeightValue& o) const { return (*this - o).sign() < 0; }

std::string WeightValue::str() const {
    std::ostringstream os;
    os << rat;
    if (irr != 0) os << (irr > 0 ? " + " : " - ") << boost::multiprecision::abs(irr) << "*sqrt(2)";
    return os.str();
}

namespace {

WeightValue mono_weight(const std::string& vars, const std::vector<int>& e, const Weights& w) {
    WeightValue out;
    for (size_t i = 0; i < vars.size(); ++i) {
        if (e[i] == 0) continue;
        auto it = w.find(vars[i]);
        WeightValue wi = it != w.end() ? it->second : WeightValue(Rat(1));
        out = out + wi * e[i];
    }
    return out;
}

}  // namespace

WeightValue weight_degree(const Poly& p, const Weights& w) {
    if (p.is_zero()) throw std::domain_error("weight_degree of zero polynomial");
    bool first = true;
    WeightValue best;
    for (const auto& [e, c] : p.terms()) {
        WeightValue wv = mono_weight(p.vars(), e, w);
        if (first || best < wv) best = wv;
        first = false;
    }
    return best;
}

Poly principal_part(const Poly& p, const Weights& w) {
    if (p.is_zero()) throw std::domain_error("principal_part of zero polynomial");
    WeightValue top = weight_degree(p, w);
    Poly::TermMap keep;
    for (const auto& [e, c] : p.terms()) {
        if (mono_weight(p.vars(), e, w) == top) keep.emplace(e, c);
    }
    return Poly::from_terms(p.vars(), std::move(keep));
}

}  // namespace afx
