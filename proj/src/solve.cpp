#include "afx/solve.hpp"

#include "afx/factor.hpp"
#include "afx/resultant.hpp"

#include <algorithm>
#include <climits>
#include <set>

namespace afx {

namespace {

struct Sys {
    std::vector<Poly> eqs;   // irreducible after preprocessing
    std::vector<Poly> neqs;  // irreducible after preprocessing
};

Poly norm_factor(const Poly& p) {
    Rat u;
    return normalize_primitive(p, u).shrunk();
}

Tri tri_or(Tri a, Tri b) {
    if (a == Tri::Yes || b == Tri::Yes) return Tri::Yes;
    if (a == Tri::Unknown || b == Tri::Unknown) return Tri::Unknown;
    return Tri::No;
}

Tri solve_rec(const std::vector<Poly>& eqs_in, const std::vector<Poly>& neqs_in, int depth);

// Branch over the irreducible factors of each side; returns preprocessed
// system or an early verdict.
struct Prep {
    Tri verdict;  // Unknown means "continue with sys"
    Sys sys;
};

Prep preprocess(const std::vector<Poly>& eqs_in, const std::vector<Poly>& neqs_in, int depth) {
    Prep out{Tri::Unknown, {}};
    std::set<std::string> eq_seen, neq_seen;
    std::vector<std::vector<Poly>> eq_branches;  // factor lists of reducible eqs
    for (const Poly& e : eqs_in) {
        Poly p = e.shrunk();
        if (p.is_zero()) continue;
        if (p.is_constant()) {
            out.verdict = Tri::No;
            return out;
        }
        Factorization f = factor(p);
        if (f.parts.size() == 1) {
            Poly g = norm_factor(f.parts[0].factor);
            if (eq_seen.insert(g.str()).second) out.sys.eqs.push_back(g);
        } else {
            std::vector<Poly> alts;
            for (const auto& part : f.parts) alts.push_back(norm_factor(part.factor));
            eq_branches.push_back(std::move(alts));
        }
    }
    for (const Poly& h : neqs_in) {
        Poly p = h.shrunk();
        if (p.is_zero()) {
            out.verdict = Tri::No;
            return out;
        }
        if (p.is_constant()) continue;
        Factorization f = factor(p);
        for (const auto& part : f.parts) {
            Poly g = norm_factor(part.factor);
            if (neq_seen.insert(g.str()).second) out.sys.neqs.push_back(g);
        }
    }
    if (!eq_branches.empty()) {
        // expand the first reducible equation into a disjunction
        Tri acc = Tri::No;
        for (const Poly& alt : eq_branches[0]) {
            std::vector<Poly> eqs = out.sys.eqs;
            eqs.push_back(alt);
            for (size_t i = 1; i < eq_branches.size(); ++i) {
                // keep the other reducible eqs unexpanded; recursion refactors
                Poly prod = Poly::constant(1);
                for (const Poly& f : eq_branches[i]) prod = prod * f;
                eqs.push_back(prod);
            }
            acc = tri_or(acc, solve_rec(eqs, neqs_in, depth + 1));
            if (acc == Tri::Yes) break;
        }
        out.verdict = acc;
        return out;
    }
    // contradiction: same irreducible required zero and nonzero
    for (const Poly& e : out.sys.eqs) {
        if (neq_seen.count(e.str())) {
            out.verdict = Tri::No;
            return out;
        }
    }
    return out;
}

// reductum: drop the leading v-coefficient block
Poly drop_leading(const Poly& p, char v) {
    int d = p.degree_in(v);
    return p - p.lc_in(v) * pow(Poly::variable(v), d);
}

Tri solve_sys(Sys s, int depth) {
    if (depth > 64) return Tri::Unknown;
    if (s.eqs.empty()) return Tri::Yes;  // neqs are nonzero polynomials

    // variable choice: highest canonical variable used by an equation
    std::string eqvars;
    for (const Poly& e : s.eqs) {
        for (char v : e.used_vars())
            if (eqvars.find(v) == std::string::npos) eqvars.push_back(v);
    }
    eqvars = normalize_varset(eqvars);
    if (eqvars.empty()) return Tri::Unknown;  // cannot happen: eqs nonconstant

    // neq in a variable no equation touches: some coefficient must survive
    for (size_t i = 0; i < s.neqs.size(); ++i) {
        std::string hv = s.neqs[i].used_vars();
        char freev = 0;
        for (char v : hv)
            if (eqvars.find(v) == std::string::npos) freev = v;
        if (!freev) continue;
        Tri acc = Tri::No;
        const Poly h = s.neqs[i];
        std::vector<Poly> rest_neqs;
        for (size_t j = 0; j < s.neqs.size(); ++j)
            if (j != i) rest_neqs.push_back(s.neqs[j]);
        for (int k = 0; k <= h.degree_in(freev); ++k) {
            Poly c = h.coeff_of(freev, k);
            if (c.is_zero()) continue;
            std::vector<Poly> neqs = rest_neqs;
            neqs.push_back(c);
            acc = tri_or(acc, solve_rec(s.eqs, neqs, depth + 1));
            if (acc == Tri::Yes) return Tri::Yes;
        }
        return acc;
    }

    // variable choice: smallest positive minimum degree across equations
    // (prefers exact degree-one eliminations); ties go to the last
    // canonical variable
    char v = 0;
    int best = INT_MAX;
    for (char w : eqvars) {
        int mn = INT_MAX;
        for (const Poly& e : s.eqs) {
            int d = e.degree_in(w);
            if (d > 0) mn = std::min(mn, d);
        }
        if (mn <= best) {
            best = mn;
            v = w;
        }
    }
    // f0: minimal positive degree in v among equations using v
    size_t i0 = SIZE_MAX;
    for (size_t i = 0; i < s.eqs.size(); ++i) {
        int d = s.eqs[i].degree_in(v);
        if (d <= 0) continue;
        if (i0 == SIZE_MAX || d < s.eqs[i0].degree_in(v)) i0 = i;
    }
    const Poly f0 = s.eqs[i0];
    const int d0 = f0.degree_in(v);
    const Poly lc0 = f0.lc_in(v);
    size_t users = 0;
    for (const Poly& e : s.eqs)
        if (e.uses(v)) ++users;

    auto branch_lc_zero = [&]() -> Tri {
        if (lc0.is_constant()) return Tri::No;  // leading coefficient cannot vanish
        std::vector<Poly> eqs;
        for (size_t i = 0; i < s.eqs.size(); ++i)
            if (i != i0) eqs.push_back(s.eqs[i]);
        eqs.push_back(lc0);
        eqs.push_back(drop_leading(f0, v));
        return solve_rec(eqs, s.neqs, depth + 1);
    };

    if (users == 1) {
        // single equation in v; eliminate v from the fiber
        // Branch A: lc0 != 0 -- f0 has a v-root in every base point; the root
        // must avoid the neqs that involve v.
        std::vector<Poly> eqs, neqs;
        bool exact = true;
        for (size_t i = 0; i < s.eqs.size(); ++i)
            if (i != i0) eqs.push_back(s.eqs[i]);
        if (!lc0.is_constant()) neqs.push_back(lc0);
        for (const Poly& h : s.neqs) {
            if (!h.uses(v)) {
                neqs.push_back(h);
                continue;
            }
            if (h == f0) return branch_lc_zero();  // impossible on branch A
            // require no shared root at all (sufficient, not necessary)
            Poly r = resultant(f0, h, v);
            if (r.is_zero()) return branch_lc_zero();  // f0 divides h: no valid root
            neqs.push_back(r);
            if (d0 > 1 && !r.is_constant()) exact = false;
        }
        Tri a = solve_rec(eqs, neqs, depth + 1);
        if (a == Tri::Yes) return Tri::Yes;
        Tri b = branch_lc_zero();
        if (b == Tri::Yes) return Tri::Yes;
        if (a == Tri::No && b == Tri::No && exact) return Tri::No;
        return Tri::Unknown;
    }

    if (d0 == 1) {
        // substitute the exact root of f0 = A*v + B via resultants
        std::vector<Poly> eqs, neqs;
        for (size_t i = 0; i < s.eqs.size(); ++i) {
            if (i == i0) continue;
            const Poly& g = s.eqs[i];
            eqs.push_back(g.uses(v) ? resultant(f0, g, v) : g);
        }
        for (const Poly& h : s.neqs) neqs.push_back(h.uses(v) ? resultant(f0, h, v) : h);
        if (!lc0.is_constant()) neqs.push_back(lc0);
        Tri a = solve_rec(eqs, neqs, depth + 1);
        if (a == Tri::Yes) return Tri::Yes;
        Tri b = branch_lc_zero();
        return tri_or(a, b) == Tri::Yes ? Tri::Yes
                                        : (a == Tri::Unknown || b == Tri::Unknown ? Tri::Unknown
                                                                                  : Tri::No);
    }

    // several equations in v, min degree >= 2: reduce one of the others
    size_t ig = SIZE_MAX;
    for (size_t i = 0; i < s.eqs.size(); ++i)
        if (i != i0 && s.eqs[i].uses(v)) ig = i;
    std::vector<Poly> eqs;
    for (size_t i = 0; i < s.eqs.size(); ++i)
        if (i != ig) eqs.push_back(s.eqs[i]);
    eqs.push_back(pseudo_divmod(s.eqs[ig], f0, v).rem);
    std::vector<Poly> neqs = s.neqs;
    if (!lc0.is_constant()) neqs.push_back(lc0);
    Tri a = solve_rec(eqs, neqs, depth + 1);
    if (a == Tri::Yes) return Tri::Yes;
    Tri b = branch_lc_zero();
    if (b == Tri::Yes) return Tri::Yes;
    if (a == Tri::Unknown || b == Tri::Unknown) return Tri::Unknown;
    return Tri::No;
}

Tri solve_rec(const std::vector<Poly>& eqs_in, const std::vector<Poly>& neqs_in, int depth) {
    if (depth > 64) return Tri::Unknown;
    Prep prep = preprocess(eqs_in, neqs_in, depth);
    if (prep.verdict != Tri::Unknown) return prep.verdict;
    return solve_sys(prep.sys, depth);
}

}  // namespace

Tri system_has_solution(const std::vector<Poly>& eqs, const std::vector<Poly>& neqs) {
    return solve_rec(eqs, neqs, 0);
}

Tri system_has_common_zero(const std::vector<Poly>& eqs) {
    return system_has_solution(eqs, {});
}

Tri vanishes_on_zero_set(const Poly& h, const std::vector<Poly>& eqs) {
    return tri_not(system_has_solution(eqs, {h}));
}

}  // namespace afx
