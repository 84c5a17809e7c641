#include "afx/autom.hpp"

#include "afx/parse.hpp"
#include "afx/resultant.hpp"

#include <json.hpp>

#include <stdexcept>

namespace afx {

namespace {

using Json = nlohmann::ordered_json;

Rat rat_det(std::vector<std::vector<Rat>> m) {
    size_t n = m.size();
    Rat det = 1;
    for (size_t col = 0; col < n; ++col) {
        size_t piv = col;
        while (piv < n && m[piv][col] == 0) ++piv;
        if (piv == n) return 0;
        if (piv != col) {
            std::swap(m[piv], m[col]);
            det = -det;
        }
        det *= m[col][col];
        for (size_t r = col + 1; r < n; ++r) {
            Rat f = m[r][col] / m[col][col];
            for (size_t c = col; c < n; ++c) m[r][c] -= f * m[col][c];
        }
    }
    return det;
}

std::vector<std::vector<Rat>> rat_inverse(std::vector<std::vector<Rat>> m) {
    size_t n = m.size();
    std::vector<std::vector<Rat>> inv(n, std::vector<Rat>(n, 0));
    for (size_t i = 0; i < n; ++i) inv[i][i] = 1;
    for (size_t col = 0; col < n; ++col) {
        size_t piv = col;
        while (piv < n && m[piv][col] == 0) ++piv;
        if (piv == n) throw std::invalid_argument("singular matrix");
        std::swap(m[piv], m[col]);
        std::swap(inv[piv], inv[col]);
        Rat d = m[col][col];
        for (size_t c = 0; c < n; ++c) {
            m[col][c] /= d;
            inv[col][c] /= d;
        }
        for (size_t r = 0; r < n; ++r) {
            if (r == col || m[r][col] == 0) continue;
            Rat f = m[r][col];
            for (size_t c = 0; c < n; ++c) {
                m[r][c] -= f * m[col][c];
                inv[r][c] -= f * inv[col][c];
            }
        }
    }
    return inv;
}

// sum of the terms of maximal total degree
Poly leading_form(const Poly& p) {
    int d = p.total_degree();
    Poly out = Poly::zero(p.vars());
    Poly::TermMap terms;
    for (const auto& [e, c] : p.terms()) {
        int t = 0;
        for (int k : e) t += k;
        if (t == d) terms[e] = c;
    }
    return Poly::from_terms(p.vars(), terms);
}

}  // namespace

ElementaryMap ElementaryMap::affine(const std::string& vars, std::vector<std::vector<Rat>> m,
                                    std::vector<Rat> t) {
    std::string nv = normalize_varset(vars);
    if (nv != vars) throw std::invalid_argument("affine: variables not canonical");
    size_t n = vars.size();
    if (m.size() != n || t.size() != n) throw std::invalid_argument("affine: bad shape");
    for (const auto& row : m)
        if (row.size() != n) throw std::invalid_argument("affine: bad shape");
    if (rat_det(m) == 0) throw std::invalid_argument("affine: singular matrix");
    ElementaryMap e;
    e.kind = Kind::Affine;
    e.vars = vars;
    e.matrix = std::move(m);
    e.shift = std::move(t);
    return e;
}

ElementaryMap ElementaryMap::triangular(char tvar, const Poly& tpoly) {
    if (tpoly.uses(tvar)) throw std::invalid_argument("triangular: polynomial uses its variable");
    ElementaryMap e;
    e.kind = Kind::Triangular;
    e.tvar = tvar;
    e.tpoly = tpoly.shrunk();
    return e;
}

ElementaryMap ElementaryMap::inverse() const {
    if (kind == Kind::Triangular) return triangular(tvar, -tpoly);
    auto inv = rat_inverse(matrix);
    std::vector<Rat> t(shift.size(), 0);
    for (size_t i = 0; i < t.size(); ++i) {
        for (size_t j = 0; j < t.size(); ++j) t[i] -= inv[i][j] * shift[j];
    }
    return affine(vars, std::move(inv), std::move(t));
}

bool ElementaryMap::is_identity() const {
    if (kind == Kind::Triangular) return tpoly.is_zero();
    for (size_t i = 0; i < vars.size(); ++i) {
        if (shift[i] != 0) return false;
        for (size_t j = 0; j < vars.size(); ++j)
            if (matrix[i][j] != (i == j ? 1 : 0)) return false;
    }
    return true;
}

Poly PolyMap::image_of(char v) const {
    auto it = images.find(v);
    return it == images.end() ? Poly::variable(v) : it->second;
}

bool PolyMap::is_identity() const {
    for (const auto& [v, im] : images)
        if (im != Poly::variable(v)) return false;
    return true;
}

Poly apply(const PolyMap& m, const Poly& p) { return p.subst(m.images); }

PolyMap identity_map(const std::string& vars) {
    PolyMap m;
    m.vars = normalize_varset(vars);
    for (char v : m.vars) m.images[v] = Poly::variable(v);
    m.tracked = true;
    return m;
}

PolyMap elementary_map(const ElementaryMap& e) {
    if (e.kind == ElementaryMap::Kind::Triangular) {
        PolyMap m = identity_map(normalize_varset(e.tpoly.used_vars() + e.tvar));
        m.images[e.tvar] = Poly::variable(e.tvar) + e.tpoly;
        m.factors = {e};
        return m;
    }
    PolyMap m = identity_map(e.vars);
    for (size_t i = 0; i < e.vars.size(); ++i) {
        Poly im = Poly::constant(e.shift[i]);
        for (size_t j = 0; j < e.vars.size(); ++j)
            im = im + Poly::variable(e.vars[j]) * e.matrix[i][j];
        m.images[e.vars[i]] = im;
    }
    m.factors = {e};
    return m;
}

PolyMap compose(const PolyMap& a, const PolyMap& b) {
    PolyMap m;
    std::string vars = a.vars + b.vars;
    m.vars = normalize_varset(vars);
    for (char v : m.vars) m.images[v] = apply(a, b.image_of(v));
    m.tracked = a.tracked && b.tracked;
    if (m.tracked) {
        m.factors = a.factors;
        m.factors.insert(m.factors.end(), b.factors.begin(), b.factors.end());
    }
    return m;
}

PolyMap from_factors(const std::string& vars, const std::vector<ElementaryMap>& factors) {
    PolyMap m = identity_map(vars);
    for (const auto& f : factors) m = compose(m, elementary_map(f));
    m.vars = normalize_varset(m.vars + vars);
    for (char v : m.vars)
        if (!m.images.count(v)) m.images[v] = Poly::variable(v);
    m.tracked = true;
    m.factors = factors;
    return m;
}

namespace {

// Inverse via the reversed factor inverses; each factor pair is checked to
// cancel, which makes the composite a two-sided inverse without composing
// the (possibly large) full maps.
PolyMap inverse_by_factors(const PolyMap& m) {
    if (!m.tracked) throw std::invalid_argument("inverse of an untracked map");
    std::vector<ElementaryMap> inv;
    for (auto it = m.factors.rbegin(); it != m.factors.rend(); ++it) {
        ElementaryMap fi = it->inverse();
        if (!compose(elementary_map(*it), elementary_map(fi)).is_identity())
            throw std::logic_error("elementary factor does not invert");
        inv.push_back(fi);
    }
    return from_factors(m.vars, inv);
}

}  // namespace

PolyMap inverse(const PolyMap& m) {
    PolyMap r = inverse_by_factors(m);
    if (!compose(m, r).is_identity() || !compose(r, m).is_identity())
        throw std::logic_error("tracked factors do not invert the map");
    return r;
}

Poly jacobian_det(const PolyMap& m) {
    size_t n = m.vars.size();
    std::vector<std::vector<Poly>> j(n, std::vector<Poly>(n));
    for (size_t r = 0; r < n; ++r) {
        for (size_t c = 0; c < n; ++c) j[r][c] = m.image_of(m.vars[r]).derivative(m.vars[c]);
    }
    return det(j);
}

PolyMap gamma_pq(const Poly& p, const Poly& q, char yvar, char vvar) {
    if (p.uses(vvar) || q.uses(vvar)) throw std::invalid_argument("p, q must not use v");
    std::string yv = normalize_varset(std::string() + yvar + vvar);
    std::vector<std::vector<Rat>> swp = {{0, 1}, {1, 0}};
    std::vector<ElementaryMap> fs = {
        ElementaryMap::triangular(vvar, q),
        ElementaryMap::affine(yv, swp, {0, 0}),
        ElementaryMap::triangular(vvar, -p),
    };
    PolyMap g = from_factors(yv, fs);
    Poly y = Poly::variable(yvar);
    Poly h_from = y - q.subst(yvar, p);
    Poly h_to = y - p.subst(yvar, q);
    if (!maps_principal_ideal(g, h_from, h_to, yvar, vvar))
        throw std::logic_error("gamma_pq ideal check failed");
    return g;
}

bool maps_principal_ideal(const PolyMap& m, const Poly& h_from, const Poly& h_to, char yvar,
                          char vvar) {
    (void)yvar;
    PolyMap mi = inverse_by_factors(m);
    Poly zero = Poly::constant(0);
    auto in_ideal = [&](const Poly& f, const Poly& h) {
        Poly r = f.subst(vvar, zero);
        return r.is_zero() || divides(h, r);
    };
    Poly v = Poly::variable(vvar);
    return in_ideal(apply(m, h_from), h_to) && in_ideal(apply(m, v), h_to) &&
           in_ideal(apply(mi, h_to), h_from) && in_ideal(apply(mi, v), h_from);
}

PolyMap gamma_k(const Poly& p, const Poly& a, int k, char yvar, char vvar) {
    if (k < 0) throw std::invalid_argument("gamma_k: negative k");
    if (a.uses(yvar) || a.uses(vvar)) throw std::invalid_argument("gamma_k: a must be in B");
    Poly zero = Poly::constant(0);
    Poly p0 = p.subst(yvar, zero);
    if (k >= 1 && a.is_zero()) throw std::invalid_argument("gamma_k: a = 0");
    if (!p0.is_zero() && !a.is_zero() && !divides(pow(a, k), p0))
        throw std::invalid_argument("gamma_k: a^k does not divide p(0)");

    Poly y = Poly::variable(yvar);
    Poly pj = p;
    PolyMap g;
    bool first = true;
    for (int j = 0; j <= k; ++j) {
        PolyMap step = gamma_pq(-pj, a * y, yvar, vvar);
        g = first ? step : compose(step, g);
        first = false;
        if (j < k) pj = exact_div(pj.subst(yvar, a * y), a);
    }
    Poly target = pj.subst(yvar, a * y);  // p(a^(k+1) y) / a^k
    if (!maps_principal_ideal(g, y + a * p, y + target, yvar, vvar))
        throw std::logic_error("gamma_k ideal check failed");
    return g;
}

std::vector<ElementaryMap> jvdk_decompose(const Poly& py, const Poly& pz, char yvar, char zvar) {
    std::string yz = normalize_varset(std::string() + yvar + zvar);
    for (char v : (py.used_vars() + pz.used_vars()))
        if (yz.find(v) == std::string::npos)
            throw std::invalid_argument("plane map must use only its two variables");
    Poly jac = py.derivative(yvar) * pz.derivative(zvar) - py.derivative(zvar) * pz.derivative(yvar);
    if (jac.is_zero() || !jac.is_constant())
        throw std::invalid_argument("not an automorphism: Jacobian not a nonzero constant");

    Poly P = py, Q = pz;
    std::vector<ElementaryMap> tail;  // inverses of the peeled maps, in peel order
    while (P.total_degree() > 1 || Q.total_degree() > 1) {
        int dP = P.total_degree(), dQ = Q.total_degree();
        bool on_y = dP >= dQ;
        const Poly& big = on_y ? P : Q;
        const Poly& small = on_y ? Q : P;
        int db = big.total_degree(), ds = small.total_degree();
        if (ds <= 0 || db % ds != 0)
            throw std::invalid_argument("not an automorphism: degree reduction stalls");
        int kexp = db / ds;
        Poly lb = leading_form(big), ls = pow(leading_form(small), kexp);
        Rat c = lb.leading_coeff() / ls.leading_coeff();
        if (lb - ls * c != Poly::zero())
            throw std::invalid_argument("not an automorphism: degree reduction stalls");
        Poly reduced = big - pow(small, kexp) * c;
        if (reduced.total_degree() >= db)
            throw std::invalid_argument("not an automorphism: degree reduction stalls");
        char tv = on_y ? yvar : zvar;
        char ov = on_y ? zvar : yvar;
        tail.push_back(ElementaryMap::triangular(tv, pow(Poly::variable(ov), kexp) * c));
        if (on_y)
            P = reduced;
        else
            Q = reduced;
    }
    // affine head
    Poly zero = Poly::constant(0);
    std::map<char, Poly> origin = {{yvar, zero}, {zvar, zero}};
    std::vector<std::vector<Rat>> m(2, std::vector<Rat>(2));
    std::vector<Rat> t(2);
    const Poly* img[2] = {yz[0] == yvar ? &P : &Q, yz[0] == yvar ? &Q : &P};
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) m[i][j] = img[i]->derivative(yz[j]).constant_value();
        t[i] = img[i]->subst(origin).constant_value();
    }
    std::vector<ElementaryMap> out;
    ElementaryMap head = ElementaryMap::affine(yz, m, t);
    if (!head.is_identity()) out.push_back(head);
    for (auto it = tail.rbegin(); it != tail.rend(); ++it) out.push_back(*it);

    PolyMap check = from_factors(yz, out);
    if (check.image_of(yvar) != py || check.image_of(zvar) != pz)
        throw std::logic_error("plane decomposition does not recompose");
    return out;
}

namespace {

// Rewrite an elementary plane map as triangular shears (Jacobian-1 affine
// maps split into transvections and translations).
std::vector<ElementaryMap> as_shears(const ElementaryMap& e, char yvar, char zvar) {
    if (e.kind == ElementaryMap::Kind::Triangular) return {e};
    const auto& m = e.matrix;
    char r0 = e.vars[0], r1 = e.vars[1];
    Rat a = m[0][0], b = m[0][1], c = m[1][0], d = m[1][1];
    if (a * d - b * c != 1)
        throw std::invalid_argument("only Jacobian-1 targets are accepted");
    (void)yvar;
    (void)zvar;
    Poly v0 = Poly::variable(r0), v1 = Poly::variable(r1);
    std::vector<ElementaryMap> out;
    auto emit_linear = [&](Rat aa, Rat cc, Rat dd) {
        // factor list order [U2, L, U1] yields matrix U1*L*U2
        if (cc == 0) throw std::logic_error("transvection split needs c != 0");
        Rat u1 = (aa - 1) / cc, u2 = (dd - 1) / cc;
        if (u2 != 0) out.push_back(ElementaryMap::triangular(r0, v1 * u2));
        out.push_back(ElementaryMap::triangular(r1, v0 * cc));
        if (u1 != 0) out.push_back(ElementaryMap::triangular(r0, v1 * u1));
    };
    if (c != 0) {
        emit_linear(a, c, d);
    } else if (b == 0 && a == 1) {
        // identity linear part
    } else {
        // premultiply by E = [[1,0],[1,1]]: E*M has lower-left a != 0
        emit_linear(a, a + c, b + d);
        out.push_back(ElementaryMap::triangular(r1, -v0));  // E^{-1}
    }
    // translation applied innermost: affine = linear ∘ translation
    if (e.shift[0] != 0)
        out.push_back(ElementaryMap::triangular(r0, Poly::constant(e.shift[0])));
    if (e.shift[1] != 0)
        out.push_back(ElementaryMap::triangular(r1, Poly::constant(e.shift[1])));
    return out;
}

}  // namespace

PolyMap interpolate_multispec(const std::vector<Rat>& points, const std::vector<PolyMap>& targets,
                              char xvar) {
    if (points.size() != targets.size() || points.empty())
        throw std::invalid_argument("points/targets size mismatch");
    for (size_t i = 0; i < points.size(); ++i)
        for (size_t j = i + 1; j < points.size(); ++j)
            if (points[i] == points[j]) throw std::invalid_argument("points must be distinct");

    Poly x = Poly::variable(xvar);
    std::string vars;
    for (const PolyMap& t : targets) vars = normalize_varset(vars + t.vars);
    if (vars.size() != 2 || vars.find(xvar) != std::string::npos)
        throw std::invalid_argument("targets must be plane maps not using the parameter");
    char yv = vars[0], zv = vars[1];
    std::vector<ElementaryMap> factors;
    for (size_t i = 0; i < targets.size(); ++i) {
        const PolyMap& t = targets[i];
        std::vector<ElementaryMap> elems =
            t.tracked ? t.factors : jvdk_decompose(t.image_of(yv), t.image_of(zv), yv, zv);
        // Lagrange basis polynomial: 1 at points[i], 0 elsewhere
        Poly phi = Poly::constant(1);
        Rat denom = 1;
        for (size_t j = 0; j < points.size(); ++j) {
            if (j == i) continue;
            phi = phi * (x - Poly::constant(points[j]));
            denom *= points[i] - points[j];
        }
        phi = phi * (Rat(1) / denom);
        for (const auto& e : elems) {
            for (const auto& shear : as_shears(e, yv, zv))
                factors.push_back(ElementaryMap::triangular(shear.tvar, shear.tpoly * phi));
        }
    }
    PolyMap g = from_factors(vars, factors);
    // exact specialization check
    for (size_t i = 0; i < points.size(); ++i) {
        Poly lam = Poly::constant(points[i]);
        for (char v : vars) {
            if (g.image_of(v).subst(xvar, lam) != targets[i].image_of(v))
                throw std::logic_error("specialization mismatch");
        }
    }
    return g;
}

bool verify_witness(const PolyMap& m, const Poly& target, char coordinate) {
    if (!m.tracked) throw std::invalid_argument("untracked map");
    PolyMap re = from_factors(m.vars, m.factors);
    for (char v : m.vars)
        if (re.image_of(v) != m.image_of(v)) return false;
    try {
        (void)inverse(m);
    } catch (const std::logic_error&) {
        return false;
    }
    Poly a = m.image_of(coordinate), b = target;
    align(a, b);
    return a == b;
}

std::string witness_to_json(const PolyMap& m) {
    if (!m.tracked) throw std::invalid_argument("untracked map");
    Json j;
    j["dim"] = m.vars.size();
    j["vars"] = m.vars;
    std::string fixed;
    for (const auto& f : m.factors) {
        std::string used = f.kind == ElementaryMap::Kind::Triangular
                               ? f.tpoly.used_vars() + std::string(1, f.tvar)
                               : f.vars;
        for (char v : used)
            if (m.vars.find(v) == std::string::npos && fixed.find(v) == std::string::npos)
                fixed.push_back(v);
    }
    j["fixed"] = normalize_varset(fixed);
    Json fs = Json::array();
    for (const auto& f : m.factors) {
        Json e;
        if (f.kind == ElementaryMap::Kind::Affine) {
            e["kind"] = "affine";
            e["vars"] = f.vars;
            Json rows = Json::array();
            for (const auto& row : f.matrix) {
                Json r = Json::array();
                for (const Rat& c : row) r.push_back(c.str());
                rows.push_back(r);
            }
            e["matrix"] = rows;
            Json t = Json::array();
            for (const Rat& c : f.shift) t.push_back(c.str());
            e["shift"] = t;
        } else {
            e["kind"] = "triangular";
            e["var"] = std::string(1, f.tvar);
            e["poly"] = f.tpoly.str();
        }
        fs.push_back(e);
    }
    j["factors"] = fs;
    return j.dump();
}

PolyMap witness_from_json(const std::string& text) {
    Json j = Json::parse(text);
    std::string vars = j.at("vars").get<std::string>();
    std::vector<ElementaryMap> factors;
    for (const auto& e : j.at("factors")) {
        std::string kind = e.at("kind").get<std::string>();
        if (kind == "affine") {
            std::vector<std::vector<Rat>> m;
            for (const auto& row : e.at("matrix")) {
                std::vector<Rat> r;
                for (const auto& c : row) r.emplace_back(c.get<std::string>());
                m.push_back(std::move(r));
            }
            std::vector<Rat> t;
            for (const auto& c : e.at("shift")) t.emplace_back(c.get<std::string>());
            factors.push_back(
                ElementaryMap::affine(e.at("vars").get<std::string>(), std::move(m), std::move(t)));
        } else if (kind == "triangular") {
            factors.push_back(ElementaryMap::triangular(e.at("var").get<std::string>()[0],
                                                        parse(e.at("poly").get<std::string>())));
        } else {
            throw std::invalid_argument("unknown factor kind");
        }
    }
    return from_factors(vars, factors);
}

}  // namespace afx
