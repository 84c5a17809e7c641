#include "afx/modtests.hpp"

#include "afx/factor.hpp"
#include "afx/solve.hpp"

#include <stdexcept>

namespace afx {

namespace {

void require_vars_within(const Poly& p, const std::string& allowed) {
    for (char v : p.used_vars())
        if (allowed.find(v) == std::string::npos)
            throw std::invalid_argument("polynomial does not fit the ring");
}

// product of the distinct irreducible factors
Poly reduced_part(const Poly& f) {
    Factorization fac = factor(f);
    Poly r = Poly::constant(1);
    for (const auto& part : fac.parts) r = r * part.factor;
    return r;
}

}  // namespace

ModTestResult mod_tests(const Poly& b, const Poly& f, RingSpec spec) {
    if (f.is_zero()) throw std::domain_error("mod_tests: f = 0");

    switch (spec) {
        case RingSpec::UnivariateQ: {
            std::string uf = f.used_vars();
            if (uf.size() > 1) throw std::invalid_argument("f is not univariate");
            if (uf.empty()) return {Tri::Yes, true};  // f is a unit: zero ring
            require_vars_within(b, uf);
            Poly fred = squarefree_part(f);
            bool nil = b.is_zero() || divides(fred, b);
            Tri inv = tri_of(gcd(b, f).is_constant());
            return {inv, nil};
        }
        case RingSpec::UnivariateQx: {
            std::string uf = f.used_vars();
            char v = 0;
            for (char w : uf)
                if (w != 'x') {
                    if (v) throw std::invalid_argument("f is not univariate over Q(x)");
                    v = w;
                }
            if (!v) return {Tri::Yes, true};  // f in Q(x)^*: zero ring
            require_vars_within(b, std::string("x") + v);
            // squarefree part with respect to v; x-content is invertible
            Factorization fac = factor(f);
            Poly fred = Poly::constant(1);
            for (const auto& part : fac.parts)
                if (part.factor.uses(v)) fred = fred * part.factor;
            bool nil = b.is_zero() || pseudo_divmod(b, fred, v).rem.is_zero();
            Tri inv = tri_of(!gcd(b, f).uses(v));
            return {inv, nil};
        }
        case RingSpec::BivariateQ: {
            std::string vars = normalize_varset(f.used_vars() + b.used_vars());
            if (vars.size() > 2) throw std::invalid_argument("inputs are not bivariate");
            if (f.is_constant()) return {Tri::Yes, true};  // f is a unit: zero ring
            Poly fred = reduced_part(f);
            bool nil = b.is_zero() || divides(fred, b);
            // unit mod f <=> b and f have no common zero
            Tri inv = b.is_zero() ? Tri::No : tri_not(system_has_common_zero({f, b}));
            return {inv, nil};
        }
    }
    throw std::invalid_argument("mod_tests: bad ring spec");
}

}  // namespace afx
