#include "afx/poly.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace afx {

int var_rank(char v) {
    auto pos = kVarUniverse.find(v);
    return pos == std::string::npos ? -1 : static_cast<int>(pos);
}

std::string normalize_varset(const std::string& vars) {
    std::string out;
    for (char v : kVarUniverse) {
        if (vars.find(v) != std::string::npos) out.push_back(v);
    }
    for (char v : vars) {
        if (var_rank(v) < 0) throw std::invalid_argument(std::string("unknown variable: ") + v);
    }
    return out;
}

bool GrlexLess::operator()(const std::vector<int>& a, const std::vector<int>& b) const {
    long da = std::accumulate(a.begin(), a.end(), 0L);
    long db = std::accumulate(b.begin(), b.end(), 0L);
    if (da != db) return da < db;
    size_t n = std::max(a.size(), b.size());
    for (size_t i = 0; i < n; ++i) {
        int ea = i < a.size() ? a[i] : 0;
        int eb = i < b.size() ? b[i] : 0;
        if (ea != eb) return ea < eb;
    }
    return false;
}

Poly Poly::zero(const std::string& vars) {
    Poly p;
    p.vars_ = normalize_varset(vars);
    return p;
}

Poly Poly::constant(const Rat& c, const std::string& vars) {
    Poly p = zero(vars);
    if (c != 0) p.terms_.emplace(std::vector<int>(p.vars_.size(), 0), c);
    return p;
}

Poly Poly::variable(char v) {
    if (var_rank(v) < 0) throw std::invalid_argument(std::string("unknown variable: ") + v);
    Poly p;
    p.vars_ = std::string(1, v);
    p.terms_.emplace(std::vector<int>{1}, Rat(1));
    return p;
}

Poly Poly::from_terms(const std::string& vars, TermMap terms) {
    Poly p = zero(vars);
    for (auto& [e, c] : terms) {
        if (e.size() != p.vars_.size()) throw std::invalid_argument("exponent vector length mismatch");
        for (int k : e)
            if (k < 0) throw std::invalid_argument("negative exponent");
        if (c != 0) p.terms_.emplace(e, c);
    }
    return p;
}

bool Poly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && total_degree() == 0);
}

Rat Poly::constant_value() const {
    if (terms_.empty()) return Rat(0);
    if (!is_constant()) throw std::domain_error("not a constant");
    return terms_.begin()->second;
}

bool Poly::is_one() const { return is_constant() && constant_value() == 1; }

int Poly::total_degree() const {
    if (terms_.empty()) return -1;
    const auto& e = terms_.rbegin()->first;
    return std::accumulate(e.begin(), e.end(), 0);
}

int Poly::degree_in(char v) const {
    if (terms_.empty()) return -1;
    auto pos = vars_.find(v);
    if (pos == std::string::npos) return 0;
    int d = 0;
    for (const auto& [e, c] : terms_) d = std::max(d, e[pos]);
    return d;
}

std::string Poly::used_vars() const {
    std::string out;
    for (char v : vars_)
        if (uses(v)) out.push_back(v);
    return out;
}

Poly Poly::with_vars(const std::string& vars) const {
    std::string target = normalize_varset(vars_ + vars);
    if (target == vars_) return *this;
    std::vector<int> map(vars_.size());
    for (size_t i = 0; i < vars_.size(); ++i) map[i] = static_cast<int>(target.find(vars_[i]));
    Poly out = zero(target);
    for (const auto& [e, c] : terms_) {
        std::vector<int> ne(target.size(), 0);
        for (size_t i = 0; i < e.size(); ++i) ne[map[i]] = e[i];
        out.terms_.emplace(std::move(ne), c);
    }
    return out;
}

Poly Poly::shrunk() const {
    std::string keep = used_vars();
    if (keep == vars_) return *this;
    std::vector<int> idx;
    for (char v : keep) idx.push_back(static_cast<int>(vars_.find(v)));
    Poly out = zero(keep);
    for (const auto& [e, c] : terms_) {
        std::vector<int> ne(keep.size());
        for (size_t i = 0; i < idx.size(); ++i) ne[i] = e[idx[i]];
        out.terms_.emplace(std::move(ne), c);
    }
    return out;
}

void align(Poly& a, Poly& b) {
    if (a.vars_ == b.vars_) return;
    std::string u = normalize_varset(a.vars_ + b.vars_);
    a = a.with_vars(u);
    b = b.with_vars(u);
}

void Poly::add_term(const std::vector<int>& e, const Rat& c) {
    if (c == 0) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_.emplace(e, c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Poly Poly::operator-() const {
    Poly out = *this;
    for (auto& [e, c] : out.terms_) c = -c;
    return out;
}

Poly Poly::operator+(const Poly& o) const {
    Poly a = *this, b = o;
    align(a, b);
    for (const auto& [e, c] : b.terms_) a.add_term(e, c);
    return a;
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator*(const Poly& o) const {
    Poly a = *this, b = o;
    align(a, b);
    Poly out = zero(a.vars_);
    std::vector<int> e(a.vars_.size());
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            for (size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            out.add_term(e, ca * cb);
        }
    }
    return out;
}

Poly Poly::operator*(const Rat& c) const {
    if (c == 0) return zero(vars_);
    Poly out = *this;
    for (auto& [e, k] : out.terms_) k *= c;
    return out;
}

bool Poly::operator==(const Poly& o) const {
    Poly a = *this, b = o;
    align(a, b);
    return a.terms_ == b.terms_;
}

Poly Poly::coeff_of(char v, int k) const {
    auto pos = vars_.find(v);
    if (pos == std::string::npos) return k == 0 ? *this : zero(vars_);
    Poly out = zero(vars_);
    for (const auto& [e, c] : terms_) {
        if (e[pos] != k) continue;
        std::vector<int> ne = e;
        ne[pos] = 0;
        out.terms_.emplace(std::move(ne), c);
    }
    return out;
}

Poly Poly::derivative(char v) const {
    auto pos = vars_.find(v);
    Poly out = zero(vars_);
    if (pos == std::string::npos) return out;
    for (const auto& [e, c] : terms_) {
        if (e[pos] == 0) continue;
        std::vector<int> ne = e;
        ne[pos] -= 1;
        out.add_term(ne, c * e[pos]);
    }
    return out;
}

Poly Poly::subst(char v, const Poly& value) const {
    auto pos = vars_.find(v);
    if (pos == std::string::npos) {
        Poly a = *this, b = value;
        align(a, b);
        return a;
    }
    int d = degree_in(v);
    // Horner in v.
    Poly acc = zero(vars_);
    for (int k = std::max(d, 0); k >= 0; --k) {
        acc = acc * value + coeff_of(v, k);
    }
    return acc;
}

Poly Poly::subst(const std::map<char, Poly>& values) const {
    // Route through fresh temporaries so simultaneous substitution is exact:
    // expand term by term.
    Poly out;
    for (const auto& [e, c] : terms_) {
        Poly t = Poly::constant(c);
        for (size_t i = 0; i < vars_.size(); ++i) {
            if (e[i] == 0) continue;
            auto it = values.find(vars_[i]);
            Poly base = it != values.end() ? it->second : Poly::variable(vars_[i]);
            t = t * pow(base, e[i]);
        }
        out = out + t;
    }
    return out.with_vars(vars_);
}

Rat Poly::eval(const std::map<char, Rat>& point) const {
    Rat out = 0;
    for (const auto& [e, c] : terms_) {
        Rat t = c;
        for (size_t i = 0; i < vars_.size(); ++i) {
            if (e[i] == 0) continue;
            auto it = point.find(vars_[i]);
            if (it == point.end()) throw std::invalid_argument(std::string("eval: missing variable ") + vars_[i]);
            Rat base = it->second;
            for (int k = 0; k < e[i]; ++k) t *= base;
        }
        out += t;
    }
    return out;
}

const std::pair<const std::vector<int>, Rat>& Poly::leading() const {
    if (terms_.empty()) throw std::domain_error("leading term of zero");
    return *terms_.rbegin();
}

Rat Poly::leading_coeff() const { return leading().second; }

namespace {

std::string rat_str(const Rat& r) {
    std::ostringstream os;
    os << r;
    return os.str();
}

std::string mono_str(const std::string& vars, const std::vector<int>& e) {
    std::string out;
    for (size_t i = 0; i < vars.size(); ++i) {
        if (e[i] == 0) continue;
        if (!out.empty()) out += "*";
        out.push_back(vars[i]);
        if (e[i] > 1) out += "^" + std::to_string(e[i]);
    }
    return out;
}

}  // namespace

std::string Poly::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        bool neg = c < 0;
        Rat a = neg ? Rat(-c) : c;
        std::string mono = mono_str(vars_, e);
        std::string body;
        if (mono.empty()) {
            body = rat_str(a);
        } else if (a == 1) {
            body = mono;
        } else {
            body = rat_str(a) + "*" + mono;
        }
        if (out.empty()) {
            out = (neg ? "-" : "") + body;
        } else {
            out += (neg ? " - " : " + ") + body;
        }
    }
    return out;
}

Poly pow(const Poly& p, int n) {
    if (n < 0) throw std::invalid_argument("negative power");
    Poly out = Poly::constant(1, p.vars());
    Poly base = p;
    while (n > 0) {
        if (n & 1) out = out * base;
        base = n > 1 ? base * base : base;
        n >>= 1;
    }
    return out;
}

std::optional<Poly> try_exact_div(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw std::domain_error("division by zero polynomial");
    Poly r = a, d = b;
    align(r, d);
    Poly q = Poly::zero(r.vars());
    const auto& [de, dc] = d.leading();
    while (!r.is_zero()) {
        const auto& [re, rc] = r.leading();
        std::vector<int> e(re.size());
        for (size_t i = 0; i < e.size(); ++i) {
            e[i] = re[i] - de[i];
            if (e[i] < 0) return std::nullopt;
        }
        Poly t = Poly::from_terms(r.vars(), {{e, rc / dc}});
        q = q + t;
        r = r - t * d;
        // Each step removes the leading term; grlex strictly decreases.
    }
    return q;
}

Poly exact_div(const Poly& a, const Poly& b) {
    auto q = try_exact_div(a, b);
    if (!q) throw std::domain_error("inexact polynomial division");
    return *q;
}

bool divides(const Poly& b, const Poly& a) { return try_exact_div(a, b).has_value(); }

PseudoDiv pseudo_divmod(const Poly& a, const Poly& b, char v) {
    if (b.is_zero()) throw std::domain_error("pseudo-division by zero");
    int db = b.degree_in(v);
    Poly lcb = b.lc_in(v);
    Poly q = Poly::zero(a.vars());
    Poly r = a;
    int k = 0;
    Poly xv = Poly::variable(v);
    while (!r.is_zero() && r.degree_in(v) >= db) {
        int dr = r.degree_in(v);
        Poly t = r.coeff_of(v, dr) * pow(xv, dr - db);
        q = q * lcb + t;
        r = r * lcb - t * b;
        ++k;
        if (!r.is_zero() && r.degree_in(v) >= dr && dr > 0)
            throw std::logic_error("pseudo-division failed to reduce degree");
    }
    return {q, r, k};
}

namespace {

Rat rat_content(const Poly& p) {
    // gcd of numerators / lcm of denominators, sign of leading coefficient.
    Int num = 0, den = 1;
    for (const auto& [e, c] : p.terms()) {
        Int n = boost::multiprecision::numerator(c);
        Int d = boost::multiprecision::denominator(c);
        num = boost::multiprecision::gcd(num, n);
        den = den / boost::multiprecision::gcd(den, d) * d;
    }
    if (num == 0) return Rat(0);
    Rat c(num, den);
    if (p.leading_coeff() < 0) c = -c;
    return c;
}

Poly gcd_univariate(const Poly& a, const Poly& b, char v);
Poly gcd_inner(const Poly& a, const Poly& b);

// Primitive PRS gcd for multivariate input, recursing on the content.
Poly gcd_multivariate(const Poly& a, const Poly& b, char v) {
    Poly ca = content_in(a, v), cb = content_in(b, v);
    Poly pa = exact_div(a, ca), pb = exact_div(b, cb);
    Poly cont = gcd_inner(ca, cb);
    Poly g = pa, h = pb;
    if (g.degree_in(v) < h.degree_in(v)) std::swap(g, h);
    while (!h.is_zero()) {
        PseudoDiv pd = pseudo_divmod(g, h, v);
        g = h;
        h = pd.rem;
        if (!h.is_zero()) h = exact_div(h, content_in(h, v));
    }
    Rat unit;
    g = normalize_primitive(g, unit);
    return cont * g;
}

Poly gcd_univariate(const Poly& a, const Poly& b, char v) {
    Poly g = a, h = b;
    if (g.degree_in(v) < h.degree_in(v)) std::swap(g, h);
    while (!h.is_zero()) {
        PseudoDiv pd = pseudo_divmod(g, h, v);
        g = h;
        h = pd.rem;
        if (!h.is_zero()) {
            Rat unit;
            h = normalize_primitive(h, unit);
        }
    }
    Rat unit;
    return normalize_primitive(g, unit);
}

Poly gcd_inner(const Poly& a, const Poly& b) {
    if (a.is_zero() && b.is_zero()) return Poly::zero();
    if (a.is_zero()) {
        Rat u;
        return normalize_primitive(b, u);
    }
    if (b.is_zero()) {
        Rat u;
        return normalize_primitive(a, u);
    }
    if (a.is_constant() || b.is_constant()) return Poly::constant(1);
    std::string au = a.used_vars();
    std::string bu = b.used_vars();
    std::string common;
    for (char v : au)
        if (bu.find(v) != std::string::npos) common.push_back(v);
    if (common.empty()) return Poly::constant(1);
    char v = common.back();  // latest common variable
    bool multi = au.size() > 1 || bu.size() > 1;
    if (!multi) return gcd_univariate(a, b, v);
    return gcd_multivariate(a, b, v);
}

}  // namespace

Poly normalize_primitive(const Poly& p, Rat& unit) {
    if (p.is_zero()) throw std::domain_error("normalize_primitive(0)");
    unit = rat_content(p);
    return p * Rat(Rat(1) / unit);
}

Poly gcd(const Poly& a, const Poly& b) {
    Poly x = a, y = b;
    align(x, y);
    Poly g = gcd_inner(x, y);
    return g.with_vars(x.vars());
}

Poly content_in(const Poly& p, char v) {
    if (p.is_zero()) return Poly::zero(p.vars());
    int d = p.degree_in(v);
    Poly c = Poly::zero(p.vars());
    for (int k = 0; k <= d; ++k) {
        Poly ck = p.coeff_of(v, k);
        if (!ck.is_zero()) c = gcd(c, ck);
        if (c.is_one()) break;
    }
    // Keep the sign/scale convention of gcd (primitive, positive leading);
    // rational scale goes into the primitive part's caller.
    if (c.is_constant()) {
        Rat u;
        Poly prim = normalize_primitive(p, u);
        (void)prim;
        return Poly::constant(u, p.vars());
    }
    Rat u;
    Poly rest = exact_div(p, c);
    normalize_primitive(rest, u);
    return c * u;
}

Poly primitive_in(const Poly& p, char v) { return exact_div(p, content_in(p, v)); }

Poly squarefree_part(const Poly& p) {
    if (p.is_zero()) throw std::domain_error("squarefree_part(0)");
    if (p.is_constant()) return Poly::constant(1, p.vars());
    Poly g = Poly::zero(p.vars());
    for (char v : p.used_vars()) g = gcd(g, p.derivative(v));
    g = gcd(p, g);
    Poly sf = exact_div(p, g);
    Rat u;
    return normalize_primitive(sf, u).with_vars(p.vars());
}

}  // namespace afx
