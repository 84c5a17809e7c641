#include "afx/geometry.hpp"

#include "afx/factor.hpp"
#include "afx/resultant.hpp"
#include "afx/solve.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace afx {

namespace {

Poly leading_form(const Poly& p) {
    int d = p.total_degree();
    Poly::TermMap terms;
    for (const auto& [e, c] : p.terms()) {
        int t = std::accumulate(e.begin(), e.end(), 0);
        if (t == d) terms[e] = c;
    }
    return Poly::from_terms(p.vars(), terms);
}

// The three 2x2 minors of the Jacobian of (f_i, g) with f_i free of z.
std::vector<Poly> jacobian_minors(const Poly& fi, const Poly& g) {
    Poly fx = fi.derivative('x'), fy = fi.derivative('y');
    return {fx * g.derivative('y') - fy * g.derivative('x'), fx * g.derivative('z'),
            fy * g.derivative('z')};
}

// Try to certify that the common zero set of eqs is finite by producing a
// nonzero univariate polynomial of the ideal in every used variable, via
// pairwise resultant cascades.  Yes = certified finite (or empty);
// Unknown otherwise.
Tri zero_dimensional_once(const std::vector<Poly>& eqs_in) {
    std::vector<Poly> eqs;
    for (const Poly& p : eqs_in) {
        if (p.is_zero()) continue;
        if (p.is_constant()) return Tri::Yes;  // empty set
        eqs.push_back(p.shrunk());
    }
    if (eqs.empty()) return Tri::Unknown;
    std::string vars;
    for (const Poly& p : eqs)
        for (char v : p.used_vars())
            if (vars.find(v) == std::string::npos) vars.push_back(v);
    vars = normalize_varset(vars);
    for (char w : vars) {
        std::vector<Poly> s = eqs;
        for (char v : vars) {
            if (v == w) continue;
            std::vector<Poly> users, keep;
            for (const Poly& p : s) (p.uses(v) ? users : keep).push_back(p);
            for (size_t i = 0; i + 1 < users.size(); ++i) {
                Poly r = resultant(users[i], users.back(), v);
                if (!r.is_zero()) keep.push_back(r.shrunk());
            }
            s = keep;
        }
        bool found = false;
        for (const Poly& p : s) {
            std::string uv = p.used_vars();
            if (!p.is_zero() && (uv.empty() || uv == std::string(1, w))) {
                if (!uv.empty()) found = true;
                if (p.is_constant()) return Tri::Yes;  // empty set
            }
        }
        if (!found) return Tri::Unknown;
    }
    return Tri::Yes;
}

Tri zero_dimensional(const std::vector<Poly>& eqs) {
    Tri t = zero_dimensional_once(eqs);
    if (t == Tri::Yes) return t;
    // one deterministic linear change of coordinates before giving up
    std::string vars;
    for (const Poly& p : eqs)
        for (char v : p.used_vars())
            if (vars.find(v) == std::string::npos) vars.push_back(v);
    vars = normalize_varset(vars);
    if (vars.size() < 2) return t;
    std::map<char, Poly> change;
    for (size_t i = 0; i + 1 < vars.size(); ++i)
        change[vars[i]] =
            Poly::variable(vars[i]) + Poly::variable(vars[i + 1]) * Rat(int(i) + 2);
    std::vector<Poly> moved;
    for (const Poly& p : eqs) moved.push_back(p.subst(change));
    return zero_dimensional_once(moved);
}

}  // namespace

int z_degree_mod(const Poly& g, const Poly& f_i) {
    int dz = std::max(g.degree_in('z'), 0);
    for (int j = dz; j >= 0; --j) {
        Poly bj = g.coeff_of('z', j);
        if (bj.is_zero()) continue;
        if (!divides(f_i, bj)) return j;
    }
    throw std::domain_error("factor divides g: reducible total space");
}

// ---------------------------------------------------------------------------
// homeo_line

namespace {

char pick_free_var(const std::string& taken) {
    for (char v : std::string("uvzyx"))
        if (taken.find(v) == std::string::npos) return v;
    throw std::logic_error("no free variable");
}

Tri injective_over_c(const Poly& p1, const Poly& p2, char tvar, char dvar) {
    Poly d1 = p1 - p1.subst(tvar, Poly::variable(dvar));
    Poly d2 = p2 - p2.subst(tvar, Poly::variable(dvar));
    Poly diag = Poly::variable(tvar) - Poly::variable(dvar);
    return tri_not(system_has_solution({d1, d2}, {diag}));
}

// Number of first-level branch clusters of {G = 0} at its single point at
// infinity; G has pure leading form c*small^e.  Counts the distinct edge
// roots of the Newton polygon at infinity plus the finite limits of the
// small variable.  A count >= 2 certifies several branches.
int infinity_branch_clusters(const Poly& G, char bigv, char smallv) {
    // support points (b = exponent of smallv, a = exponent of bigv)
    std::vector<std::pair<int, int>> pts;
    std::map<std::pair<int, int>, Rat> coeff;
    int e = G.total_degree();
    for (const auto& [ex, c] : G.terms()) {
        int b = 0, a = 0;
        for (size_t i = 0; i < ex.size(); ++i) {
            if (G.vars()[i] == smallv) b = ex[i];
            if (G.vars()[i] == bigv) a = ex[i];
        }
        pts.push_back({b, a});
        coeff[{b, a}] = c;
    }
    int clusters = 0;
    // positive-slope chain from (e, 0)
    std::pair<int, int> cur = {e, 0};
    while (true) {
        std::pair<int, int> best = cur;
        bool have = false;
        for (const auto& p : pts) {
            if (p.first >= cur.first || p.second <= cur.second) continue;
            if (!have) {
                best = p;
                have = true;
                continue;
            }
            // compare slopes (a - cur.a)/(cur.b - b); ties -> farthest
            long lhs = long(p.second - cur.second) * (cur.first - best.first);
            long rhs = long(best.second - cur.second) * (cur.first - p.first);
            if (lhs > rhs || (lhs == rhs && p.first < best.first)) best = p;
        }
        if (!have) break;
        int db = cur.first - best.first, da = best.second - cur.second;
        int d = std::gcd(db, da);
        int q = db / d;
        // edge polynomial in mu = gamma^q
        Poly edge = Poly::zero("t");
        for (const auto& p : pts) {
            int bb = cur.first - p.first, aa = p.second - cur.second;
            if (aa < 0 || bb < 0 || bb > db) continue;
            if (long(bb) * da != long(aa) * db) continue;  // not on the edge
            edge = edge + pow(Poly::variable('t'), bb / q) * coeff[p];
        }
        // distinct nonzero roots: strip the trailing power, count sq-free deg
        int k = 0;
        while (edge.coeff_of('t', k).is_zero()) ++k;
        Poly stripped = Poly::zero("t");
        int dd = edge.degree_in('t');
        for (int i = k; i <= dd; ++i)
            stripped = stripped + pow(Poly::variable('t'), i - k) * edge.coeff_of('t', k + i - k)
                                      .constant_value();
        clusters += squarefree_part(stripped).total_degree();
        cur = best;
    }
    // finite limits of the small variable: roots of the big-leading coefficient
    Poly lc = G.lc_in(bigv);
    if (!lc.is_constant()) clusters += squarefree_part(lc).total_degree();
    return clusters;
}

}  // namespace

HomeoLineResult homeo_line(const Poly& F_in, int degree_bound, const std::string& plane_in) {
    Poly F = F_in.shrunk();
    if (F.is_zero() || F.is_constant()) throw std::invalid_argument("not a curve");
    std::string used = F.used_vars();
    if (used.find('t') != std::string::npos)
        throw std::invalid_argument("curve must not use the parameter variable");
    std::string plane = plane_in;
    if (plane.empty()) {
        plane = used;
        if (plane.size() == 1) plane = normalize_varset(plane + (plane == "x" ? "y" : "x"));
    }
    plane = normalize_varset(plane);
    if (plane.size() != 2 || plane.find('t') != std::string::npos)
        throw std::invalid_argument("bad plane");
    for (char v : used)
        if (plane.find(v) == std::string::npos) throw std::invalid_argument("bad plane");
    char v1 = plane[0], v2 = plane[1];
    char tv = 't';
    Poly t = Poly::variable(tv);

    auto make_yes = [&](const Poly& p1, const Poly& p2) -> HomeoLineResult {
        // verified: on-curve and injective
        std::map<char, Poly> sub = {{v1, p1}, {v2, p2}};
        if (!F.subst(sub).is_zero()) return {Tri::Unknown, std::nullopt, ""};
        char dv = pick_free_var(std::string() + v1 + v2 + tv);
        if (injective_over_c(p1, p2, tv, dv) != Tri::Yes) return {Tri::Unknown, std::nullopt, ""};
        return {Tri::Yes, Parametrization{v1, v2, p1.shrunk(), p2.shrunk()}, ""};
    };

    if (F.total_degree() == 1) {
        Rat a = F.derivative(v1).constant_value();
        Rat b = F.derivative(v2).constant_value();
        Rat c = F.subst({{v1, Poly::constant(0)}, {v2, Poly::constant(0)}}).constant_value();
        HomeoLineResult r = b != 0 ? make_yes(t, (t * a + Poly::constant(c)) * (Rat(-1) / b))
                                   : make_yes(Poly::constant(-c / a), t);
        if (r.verdict != Tri::Yes) throw std::logic_error("line parametrization failed");
        return r;
    }

    Factorization fac = factor(F);
    if (fac.parts.size() != 1 || fac.parts[0].multiplicity != 1)
        throw std::invalid_argument("reducible curve");
    Tri abs = absolutely_irreducible(F);
    if (abs == Tri::No) return {Tri::No, std::nullopt, "reducible over C"};
    if (abs == Tri::Unknown) return {Tri::Unknown, std::nullopt, ""};

    Poly top = leading_form(F);
    Poly L = squarefree_part(top);
    if (L.total_degree() >= 2)
        return {Tri::No, std::nullopt, "several points at infinity"};

    // single point at infinity: top = c * L^e with L linear
    Rat alpha = L.derivative(v1).constant_value();
    Rat beta = L.derivative(v2).constant_value();
    Poly G = F;
    bool sheared = false;
    char bigv, smallv;
    if (beta != 0) {
        // substitute v2 <- (v2' - alpha*v1)/beta so the top form is v2'^e
        sheared = true;
        bigv = v1;
        smallv = v2;
        G = F.subst(v2, (Poly::variable(v2) - Poly::variable(v1) * alpha) * (Rat(1) / beta));
    } else {
        bigv = v2;
        smallv = v1;
    }
    int e = G.total_degree();
    int m = G.degree_in(bigv);
    if (e > degree_bound) return {Tri::Unknown, std::nullopt, ""};

    if (m >= 1) {
        std::vector<std::pair<Poly, Poly>> candidates;
        for (int sign = 1; sign >= -1; sign -= 2) {
            Poly small_t = pow(t, m) * Rat(sign);
            Poly H = G.subst(smallv, small_t);
            if (H.is_zero()) continue;
            for (const auto& part : factor(H).parts) {
                if (part.factor.degree_in(bigv) != 1) continue;
                Poly lc = part.factor.lc_in(bigv);
                if (!lc.is_constant()) continue;
                Poly big_t =
                    part.factor.coeff_of(bigv, 0) * (Rat(-1) / lc.constant_value());
                // back to the original coordinates
                if (sheared)  // bigv == v1
                    candidates.push_back({big_t, (small_t - big_t * alpha) * (Rat(1) / beta)});
                else  // smallv == v1
                    candidates.push_back({small_t, big_t});
            }
        }
        // deterministic preference for the positively-oriented witness
        std::stable_sort(candidates.begin(), candidates.end(),
                         [](const auto& a, const auto& b) {
                             auto key = [](const std::pair<Poly, Poly>& c) {
                                 bool neg = !c.first.is_zero() && c.first.leading_coeff() < 0;
                                 return std::make_pair(neg, c.first.str() + "|" + c.second.str());
                             };
                             return key(a) < key(b);
                         });
        for (const auto& [p1, p2] : candidates) {
            HomeoLineResult r = make_yes(p1, p2);
            if (r.verdict == Tri::Yes) return r;
        }
    }

    if (infinity_branch_clusters(G, bigv, smallv) >= 2)
        return {Tri::No, std::nullopt, "several branches at infinity"};
    return {Tri::Unknown, std::nullopt, ""};
}

// ---------------------------------------------------------------------------
// canonical factorization

namespace {

Tri curve_part_smooth(const Poly& fi, const Poly& g, ComponentClass cls) {
    if (cls == ComponentClass::Vertical) return Tri::Yes;  // disjoint lines
    std::vector<Poly> sing = {fi, g};
    for (const Poly& mnr : jacobian_minors(fi, g))
        if (!mnr.is_zero()) sing.push_back(mnr);
    Tri sol = system_has_solution(sing, {});
    if (sol == Tri::No) return Tri::Yes;
    if (sol == Tri::Unknown) return Tri::Unknown;
    // a singular point exists; genuine unless extra vertical lines hide in
    // the factor-level curve (all z-coefficients of g vanishing somewhere
    // on the component)
    std::vector<Poly> contamination = {fi};
    for (int j = 0; j <= std::max(g.degree_in('z'), 0); ++j) {
        Poly bj = g.coeff_of('z', j);
        if (!bj.is_zero()) contamination.push_back(bj);
    }
    Tri extra = system_has_solution(contamination, {});
    if (extra == Tri::No) return Tri::No;
    return Tri::Unknown;
}

}  // namespace

CanonicalFactorization canonical_factorization(const Poly& f, const Poly& g) {
    if (f.is_zero()) throw std::domain_error("f = 0");
    if (f.uses('z') || f.uses('u') || g.uses('u'))
        throw std::invalid_argument("f must be in C[x,y] and g in C[x,y,z]");
    Factorization fac = factor(f);
    CanonicalFactorization out;
    out.f_horiz = Poly::constant(fac.unit);
    out.f_slant = Poly::constant(1);
    out.f_vert = Poly::constant(1);
    out.classes_certain = Tri::Yes;
    for (const auto& part : fac.parts) {
        ComponentReport r;
        r.factor = part.factor;
        r.multiplicity = part.multiplicity;
        r.z_degree = z_degree_mod(g, part.factor);
        r.cls = r.z_degree == 0   ? ComponentClass::Vertical
                : r.z_degree == 1 ? ComponentClass::Horizontal
                                  : ComponentClass::Slanted;
        if (part.abs_irreducible != Tri::Yes) out.classes_certain = Tri::Unknown;
        r.gamma_smooth = tri_not(system_has_solution(
            {part.factor, part.factor.derivative('x'), part.factor.derivative('y')}, {}));
        r.c_smooth = curve_part_smooth(part.factor, g, r.cls);
        r.homeo = homeo_line(part.factor, 12, "xy");
        r.isolated = Tri::Yes;
        out.reports.push_back(std::move(r));
    }
    for (size_t i = 0; i < out.reports.size(); ++i) {
        Tri iso = Tri::Yes;
        for (size_t j = 0; j < out.reports.size(); ++j) {
            if (i == j) continue;
            iso = tri_and(iso, tri_not(system_has_solution(
                                   {out.reports[i].factor, out.reports[j].factor}, {})));
        }
        out.reports[i].isolated = iso;
    }
    for (const auto& r : out.reports) {
        Poly powed = pow(r.factor, r.multiplicity);
        switch (r.cls) {
            case ComponentClass::Horizontal: out.f_horiz = out.f_horiz * powed; break;
            case ComponentClass::Slanted: out.f_slant = out.f_slant * powed; break;
            case ComponentClass::Vertical: out.f_vert = out.f_vert * powed; break;
        }
    }
    if (out.f_horiz * out.f_slant * out.f_vert != f)
        throw std::logic_error("canonical factorization does not reconstruct f");
    return out;
}

// ---------------------------------------------------------------------------
// smoothness of the hypersurface

SmoothResult hypersurface_smooth(const Poly& f, const Poly& g) {
    if (f.is_zero()) throw std::domain_error("f = 0");
    if (!gcd(f, g).is_constant()) throw std::invalid_argument("reducible hypersurface");
    Poly fx = f.derivative('x'), fy = f.derivative('y');
    Poly gz = g.derivative('z');
    Poly J = fx * g.derivative('y') - fy * g.derivative('x');
    // singular <=> on {f = g = g_z = 0} the 1-forms dg and df are
    // proportional: either J = 0 with (f_x, f_y) != 0, or all four x,y
    // partials vanish
    std::vector<Poly> base = {f, g, gz, J};
    Tri a1 = system_has_solution(base, {fx});
    Tri a2 = system_has_solution(base, {fy});
    std::vector<Poly> degen = {f, g, gz, fx, fy, g.derivative('x'), g.derivative('y')};
    Tri b = system_has_solution(degen, {});
    SmoothResult out;
    Tri sing = a1;
    if (sing != Tri::Yes) sing = (a2 == Tri::Yes) ? Tri::Yes : (a2 == Tri::Unknown ? Tri::Unknown : sing);
    if (sing != Tri::Yes) sing = (b == Tri::Yes) ? Tri::Yes : (b == Tri::Unknown ? Tri::Unknown : sing);
    out.verdict = tri_not(sing);
    if (a1 == Tri::Yes || a2 == Tri::Yes)
        out.witness_system = base;
    else if (b == Tri::Yes)
        out.witness_system = degen;
    return out;
}

// ---------------------------------------------------------------------------
// multiplicity structure

namespace {

// Multiplicity-one test along the curve part over a non-vertical Γ_i:
// the pullback of {f_i = 0} is reduced along the matching exceptional
// component iff the differential of f_i stays independent of dp at general
// points, i.e. g_z and f_ix*g_y - f_iy*g_x do not both vanish there.  The
// z-truncation g_i and the inequation b_{d_i} != 0 cut away the vertical
// part of the zero set.
Tri transversal_nonvertical(const Poly& fi, const Poly& g, int di) {
    Poly gi = Poly::zero(g.vars());
    for (int j = 0; j <= di; ++j) gi = gi + g.coeff_of('z', j) * pow(Poly::variable('z'), j);
    Poly bd = g.coeff_of('z', di);
    Poly gz = g.derivative('z');
    Poly m1 = fi.derivative('x') * g.derivative('y') - fi.derivative('y') * g.derivative('x');
    std::vector<Poly> bad = {fi, gi};
    for (const Poly& h : {gz, m1})
        if (!h.is_zero()) bad.push_back(h);
    if (bad.size() == 2) return Tri::No;  // both criteria vanish identically
    Tri sol = system_has_solution(bad, {bd});
    if (sol == Tri::No) return Tri::Yes;
    if (sol == Tri::Unknown) return Tri::Unknown;
    // bad points exist; still fine when they are finitely many
    if (zero_dimensional(bad) == Tri::Yes) return Tri::Yes;
    // nowhere transversal when both criteria vanish on the whole curve part
    Tri some_gz = gz.is_zero() ? Tri::No : system_has_solution({fi, gi}, {gz, bd});
    Tri some_m1 = m1.is_zero() ? Tri::No : system_has_solution({fi, gi}, {m1, bd});
    if (some_gz == Tri::No && some_m1 == Tri::No) return Tri::No;
    return Tri::Unknown;
}

// Multiplicity-one test for the vertical lines over {f_i = b0 = 0}: each
// base point must be a smooth point of {f_i = 0} and some z-coefficient of
// g_z or of f_ix*g_y - f_iy*g_x must survive there.
Tri transversal_vertical(const Poly& fi, const Poly& g) {
    Poly b0 = g.coeff_of('z', 0);
    Poly fx = fi.derivative('x'), fy = fi.derivative('y');
    Tri sing = system_has_solution({fi, b0, fx, fy}, {});
    std::vector<Poly> bad = {fi, b0};
    Poly gz = g.derivative('z');
    Poly m1 = fx * g.derivative('y') - fy * g.derivative('x');
    for (const Poly& h : {gz, m1})
        for (int j = 0; j <= std::max(h.degree_in('z'), 0); ++j) {
            Poly c = h.coeff_of('z', j);
            if (!c.is_zero()) bad.push_back(c);
        }
    Tri degen = system_has_solution(bad, {});
    if (sing == Tri::Yes || degen == Tri::Yes) return Tri::No;
    if (sing == Tri::Unknown || degen == Tri::Unknown) return Tri::Unknown;
    return Tri::Yes;
}

}  // namespace

MultiplicityStructure multiplicity_structure(const Poly& f, const Poly& g,
                                             const CanonicalFactorization& cf) {
    (void)f;
    size_t n = cf.reports.size();
    MultiplicityStructure out;
    out.incidence.assign(n, std::vector<bool>(n, false));
    out.transversal.assign(n, std::vector<Tri>(n, Tri::Unknown));
    Poly b0 = g.coeff_of('z', 0);

    Tri ok = Tri::Yes;
    for (size_t j = 0; j < n; ++j) {
        const ComponentReport& rj = cf.reports[j];
        out.incidence[j][j] = true;
        if (rj.cls == ComponentClass::Vertical) {
            // the vertical lines over Γ_j
            Tri lines = system_has_solution({rj.factor, b0}, {});
            ok = tri_and(ok, lines);  // an empty exceptional row breaks the form
            out.transversal[j][j] = transversal_vertical(rj.factor, g);
            for (size_t i = 0; i < n; ++i) {
                if (i == j) continue;
                Tri inside = system_has_solution({rj.factor, b0, cf.reports[i].factor}, {});
                if (inside == Tri::Yes) out.incidence[i][j] = true;
                if (cf.reports[i].cls != ComponentClass::Horizontal)
                    ok = tri_and(ok, tri_not(inside));  // only B_0 entries allowed
            }
        } else {
            out.transversal[j][j] = transversal_nonvertical(rj.factor, g, rj.z_degree);
        }
        ok = tri_and(ok, out.transversal[j][j]);
    }
    ok = tri_and(ok, cf.classes_certain);
    out.matches_delta_form = ok;
    return out;
}

}  // namespace afx
