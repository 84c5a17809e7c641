#include "afx/factor.hpp"

#include <algorithm>
#include <map>
#include <random>

namespace afx {

namespace {

// ---------- arithmetic mod a word-sized prime ----------

using i64 = long long;

i64 mulmod(i64 a, i64 b, i64 p) { return static_cast<i64>(__int128(a) * b % p); }

i64 powmod_i(i64 a, i64 e, i64 p) {
    i64 r = 1;
    a %= p;
    while (e > 0) {
        if (e & 1) r = mulmod(r, a, p);
        a = mulmod(a, a, p);
        e >>= 1;
    }
    return r;
}

i64 invmod(i64 a, i64 p) { return powmod_i(((a % p) + p) % p, p - 2, p); }

bool is_prime(i64 n) {
    if (n < 2) return false;
    for (i64 d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// Dense poly over F_p, coefficient i of T^i, no trailing zeros.
using PP = std::vector<i64>;

void pp_trim(PP& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

int pp_deg(const PP& a) { return static_cast<int>(a.size()) - 1; }

PP pp_mul(const PP& a, const PP& b, i64 p) {
    if (a.empty() || b.empty()) return {};
    PP c(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) c[i + j] = (c[i + j] + __int128(a[i]) * b[j]) % p;
    pp_trim(c);
    return c;
}

PP pp_sub(PP a, const PP& b, i64 p) {
    if (a.size() < b.size()) a.resize(b.size(), 0);
    for (size_t i = 0; i < b.size(); ++i) a[i] = ((a[i] - b[i]) % p + p) % p;
    pp_trim(a);
    return a;
}

// remainder of a by monic-izable b
PP pp_rem(PP a, const PP& b, i64 p) {
    i64 inv = invmod(b.back(), p);
    while (pp_deg(a) >= pp_deg(b)) {
        i64 c = mulmod(a.back(), inv, p);
        size_t shift = a.size() - b.size();
        for (size_t i = 0; i < b.size(); ++i)
            a[shift + i] = ((a[shift + i] - __int128(c) * b[i]) % p + p) % p;
        pp_trim(a);
        if (a.empty()) break;
    }
    return a;
}

PP pp_monic(PP a, i64 p) {
    if (a.empty()) return a;
    i64 inv = invmod(a.back(), p);
    for (auto& c : a) c = mulmod(c, inv, p);
    return a;
}

PP pp_gcd(PP a, PP b, i64 p) {
    while (!b.empty()) {
        PP r = pp_rem(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return pp_monic(a, p);
}

PP pp_deriv(const PP& a, i64 p) {
    PP d;
    for (size_t i = 1; i < a.size(); ++i) d.push_back(static_cast<i64>(__int128(a[i]) * i % p));
    pp_trim(d);
    return d;
}

PP pp_powmod(PP base, Int e, const PP& mod, i64 p) {
    PP r{1};
    base = pp_rem(std::move(base), mod, p);
    while (e > 0) {
        if ((e & 1) != 0) r = pp_rem(pp_mul(r, base, p), mod, p);
        base = pp_rem(pp_mul(base, base, p), mod, p);
        e >>= 1;
    }
    return r;
}

// Equal-degree splitting (Cantor-Zassenhaus), f squarefree monic, all
// irreducible factors of degree d.
void pp_edf(const PP& f, int d, i64 p, std::mt19937_64& rng, std::vector<PP>& out) {
    int n = pp_deg(f);
    if (n == d) {
        out.push_back(f);
        return;
    }
    Int e = (boost::multiprecision::pow(Int(p), unsigned(d)) - 1) / 2;
    while (true) {
        PP a(n, 0);
        for (auto& c : a) c = static_cast<i64>(rng() % p);
        pp_trim(a);
        if (pp_deg(a) < 1) continue;
        PP b = pp_powmod(a, e, f, p);
        if (b.empty())
            b = PP{p - 1};
        else
            b[0] = (b[0] + p - 1) % p;  // a^e - 1
        pp_trim(b);
        PP g = pp_gcd(f, b, p);
        if (pp_deg(g) > 0 && pp_deg(g) < n) {
            // divide f by g and recurse on both halves
            PP q{}, r = f;
            // exact division by monic g
            {
                PP a2 = f;
                PP quo(a2.size() - g.size() + 1, 0);
                while (pp_deg(a2) >= pp_deg(g)) {
                    i64 c = a2.back();  // g monic
                    size_t shift = a2.size() - g.size();
                    quo[shift] = c;
                    for (size_t i = 0; i < g.size(); ++i)
                        a2[shift + i] = ((a2[shift + i] - __int128(c) * g[i]) % p + p) % p;
                    pp_trim(a2);
                    if (a2.empty()) break;
                }
                q = quo;
                pp_trim(q);
            }
            pp_edf(g, d, p, rng, out);
            pp_edf(q, d, p, rng, out);
            return;
        }
    }
}

// Distinct-degree then equal-degree factorization; f monic squarefree.
std::vector<PP> pp_factor_squarefree(PP f, i64 p, std::mt19937_64& rng) {
    std::vector<PP> out;
    PP h{0, 1};  // T
    int d = 0;
    while (pp_deg(f) > 0) {
        ++d;
        if (2 * d > pp_deg(f)) {
            out.push_back(f);
            break;
        }
        h = pp_powmod(h, Int(p), f, p);  // T^(p^d) mod f
        PP hx = h;
        if (hx.size() < 2) hx.resize(2, 0);
        hx[1] = ((hx[1] - 1) % p + p) % p;  // h - T
        pp_trim(hx);
        PP g = pp_gcd(f, hx, p);
        if (pp_deg(g) > 0) {
            pp_edf(g, d, p, rng, out);
            // f /= g (g monic)
            PP a2 = f;
            PP quo(a2.size() - g.size() + 1, 0);
            while (pp_deg(a2) >= pp_deg(g)) {
                i64 c = a2.back();
                size_t shift = a2.size() - g.size();
                quo[shift] = c;
                for (size_t i = 0; i < g.size(); ++i)
                    a2[shift + i] = ((a2[shift + i] - __int128(c) * g[i]) % p + p) % p;
                pp_trim(a2);
                if (a2.empty()) break;
            }
            pp_trim(quo);
            f = quo;
            h = pp_rem(h, f, p);
        }
    }
    return out;
}

// ---------- integer polynomials mod p^k (for Hensel lifting) ----------

using IP = std::vector<Int>;  // dense, coefficient i of T^i

void ip_trim(IP& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

IP ip_mul(const IP& a, const IP& b, const Int& m) {
    if (a.empty() || b.empty()) return {};
    IP c(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) c[i + j] = (c[i + j] + a[i] * b[j]) % m;
    ip_trim(c);
    return c;
}

IP ip_sub(IP a, const IP& b, const Int& m) {
    if (a.size() < b.size()) a.resize(b.size(), 0);
    for (size_t i = 0; i < b.size(); ++i) a[i] = ((a[i] - b[i]) % m + m) % m;
    ip_trim(a);
    return a;
}

// reduce symmetric: coefficients in (-m/2, m/2]
IP ip_symmetric(IP a, const Int& m) {
    for (auto& c : a) {
        c %= m;
        if (c < 0) c += m;
        if (c * 2 > m) c -= m;
    }
    ip_trim(a);
    return a;
}

PP ip_to_pp(const IP& a, i64 p) {
    PP out;
    for (const auto& c : a) out.push_back(static_cast<i64>(((c % p) + p) % p));
    pp_trim(out);
    return out;
}

IP pp_to_ip(const PP& a) {
    IP out;
    for (i64 c : a) out.push_back(Int(c));
    return out;
}

// Lift f = G*H from mod p to mod target (f, G, H monic; p prime).
void hensel2(const IP& f, IP& G, IP& H, i64 p, const Int& target) {
    // Bezout s*G + t*H = 1 mod p via extended Euclid over F_p
    PP g0 = ip_to_pp(G, p), h0 = ip_to_pp(H, p);
    PP r0 = g0, r1 = h0, s0{1}, s1{}, t0{}, t1{1};
    while (!r1.empty()) {
        // r0 = q*r1 + r
        PP q;
        {
            PP a2 = r0;
            i64 inv = invmod(r1.back(), p);
            PP quo(std::max<size_t>(1, a2.size() >= r1.size() ? a2.size() - r1.size() + 1 : 1), 0);
            while (pp_deg(a2) >= pp_deg(r1)) {
                i64 c = mulmod(a2.back(), inv, p);
                size_t shift = a2.size() - r1.size();
                if (shift >= quo.size()) quo.resize(shift + 1, 0);
                quo[shift] = c;
                for (size_t i = 0; i < r1.size(); ++i)
                    a2[shift + i] = ((a2[shift + i] - __int128(c) * r1[i]) % p + p) % p;
                pp_trim(a2);
                if (a2.empty()) break;
            }
            pp_trim(quo);
            q = quo;
            r0 = r1;
            r1 = a2;
        }
        PP ns = pp_sub(s0, pp_mul(q, s1, p), p);
        PP nt = pp_sub(t0, pp_mul(q, t1, p), p);
        s0 = s1;
        s1 = ns;
        t0 = t1;
        t1 = nt;
    }
    // r0 = gcd (a unit since G,H coprime mod p); normalize
    i64 inv = invmod(r0[0], p);
    for (auto& c : s0) c = mulmod(c, inv, p);
    for (auto& c : t0) c = mulmod(c, inv, p);
    // now s0*g0 + t0*h0 = 1 mod p
    Int m(p);
    while (m < target) {
        // e = (f - G*H)/m  mod p
        IP prod = [&]() {
            IP c(f.size(), 0);
            if (!G.empty() && !H.empty()) {
                c.assign(G.size() + H.size() - 1, 0);
                for (size_t i = 0; i < G.size(); ++i)
                    for (size_t j = 0; j < H.size(); ++j) c[i + j] += G[i] * H[j];
            }
            ip_trim(c);
            return c;
        }();
        IP diff = f;
        if (diff.size() < prod.size()) diff.resize(prod.size(), 0);
        for (size_t i = 0; i < prod.size(); ++i) diff[i] -= prod[i];
        ip_trim(diff);
        PP e;
        for (auto& c : diff) {
            Int q = c / m;  // exact: f == G*H mod m
            e.push_back(static_cast<i64>(((q % p) + p) % p));
        }
        pp_trim(e);
        // dG = (t0*e) mod g0 ; dH = (e - h0*dG)/g0
        PP dG = pp_rem(pp_mul(t0, e, p), g0, p);
        PP num = pp_sub(e, pp_mul(h0, dG, p), p);
        PP dH;
        {
            PP a2 = num;
            i64 invg = invmod(g0.back(), p);
            PP quo;
            if (pp_deg(a2) >= pp_deg(g0)) quo.assign(a2.size() - g0.size() + 1, 0);
            while (pp_deg(a2) >= pp_deg(g0)) {
                i64 c = mulmod(a2.back(), invg, p);
                size_t shift = a2.size() - g0.size();
                quo[shift] = c;
                for (size_t i = 0; i < g0.size(); ++i)
                    a2[shift + i] = ((a2[shift + i] - __int128(c) * g0[i]) % p + p) % p;
                pp_trim(a2);
                if (a2.empty()) break;
            }
            pp_trim(quo);
            dH = quo;
        }
        if (G.size() < dG.size() + 1) G.resize(dG.size(), 0);
        for (size_t i = 0; i < dG.size(); ++i) G[i] += m * dG[i];
        if (H.size() < dH.size() + 1) H.resize(dH.size(), 0);
        for (size_t i = 0; i < dH.size(); ++i) H[i] += m * dH[i];
        m *= p;
    }
    Int red = m;
    for (auto& c : G) c %= red;
    for (auto& c : H) c %= red;
}

// Lift monic modular factors of monic f to mod target (recursive tree).
void hensel_tree(const IP& f, const std::vector<PP>& facs, size_t lo, size_t hi, i64 p,
                 const Int& target, std::vector<IP>& out) {
    if (hi - lo == 1) {
        out.push_back(f);
        return;
    }
    size_t mid = lo + (hi - lo) / 2;
    PP g0{1}, h0{1};
    for (size_t i = lo; i < mid; ++i) g0 = pp_mul(g0, facs[i], p);
    for (size_t i = mid; i < hi; ++i) h0 = pp_mul(h0, facs[i], p);
    IP G = pp_to_ip(g0), H = pp_to_ip(h0);
    hensel2(f, G, H, p, target);
    hensel_tree(G, facs, lo, mid, p, target, out);
    hensel_tree(H, facs, mid, hi, p, target, out);
}

// ---------- univariate factorization over Z (monic, squarefree) ----------

Int isqrt_ceil(const Int& n) {
    Int r = boost::multiprecision::sqrt(n);
    while (r * r < n) ++r;
    return r;
}

// f monic squarefree integer polynomial, deg >= 1; returns monic irreducible
// integer factors.
std::vector<IP> zassenhaus_monic(const IP& f) {
    int n = static_cast<int>(f.size()) - 1;
    if (n == 1) return {f};
    // choose a prime keeping f squarefree
    i64 p = 1009;
    std::mt19937_64 rng(0x5eed);
    while (true) {
        while (!is_prime(p)) ++p;
        PP fp = ip_to_pp(f, p);
        if (pp_deg(fp) == n) {
            PP g = pp_gcd(fp, pp_deriv(fp, p), p);
            if (pp_deg(g) == 0) break;
        }
        ++p;
    }
    PP fp = pp_monic(ip_to_pp(f, p), p);
    std::vector<PP> facs = pp_factor_squarefree(fp, p, rng);
    std::sort(facs.begin(), facs.end());
    if (facs.size() == 1) return {f};
    // Mignotte-style bound on factor coefficients
    Int s2 = 0;
    for (const auto& c : f) s2 += c * c;
    Int bound = (isqrt_ceil(s2) + 1) << (unsigned)n;
    Int target = 1;
    while (target <= 2 * bound) target *= p;
    std::vector<IP> lifted;
    hensel_tree(f, facs, 0, facs.size(), p, target, lifted);
    for (auto& L : lifted) L = ip_symmetric(L, target);
    // subset recombination
    auto try_div_monic = [](const IP& a, const IP& d) -> std::pair<bool, IP> {
        IP r = a;
        if (r.size() < d.size()) return {false, {}};
        IP q(r.size() - d.size() + 1, 0);
        while (!r.empty() && r.size() >= d.size()) {
            Int coef = r.back();
            size_t shift = r.size() - d.size();
            q[shift] = coef;
            for (size_t i = 0; i < d.size(); ++i) r[shift + i] -= coef * d[i];
            ip_trim(r);
        }
        return {r.empty(), q};
    };
    std::vector<IP> result;
    IP rest = f;
    std::vector<IP> alive = lifted;
    size_t size = 1;
    while (2 * size <= alive.size()) {
        bool found = false;
        std::vector<bool> mask(alive.size(), false);
        std::fill(mask.end() - size, mask.end(), true);
        do {
            IP cand{1};
            for (size_t i = 0; i < alive.size(); ++i)
                if (mask[i]) cand = ip_mul(cand, alive[i], target);
            cand = ip_symmetric(cand, target);
            auto [ok, quo] = try_div_monic(rest, cand);
            if (ok) {
                result.push_back(cand);
                rest = quo;
                std::vector<IP> na;
                for (size_t i = 0; i < alive.size(); ++i)
                    if (!mask[i]) na.push_back(alive[i]);
                alive = na;
                found = true;
                break;
            }
        } while (std::next_permutation(mask.begin(), mask.end()));
        if (!found) ++size;
    }
    if (rest.size() > 1) result.push_back(rest);
    return result;
}

// ---------- univariate over Q via the Poly representation ----------

// p univariate in v, squarefree, primitive integer, positive lc, deg >= 1.
std::vector<Poly> factor_univariate_squarefree(const Poly& p, char v) {
    int n = p.degree_in(v);
    if (n == 1) return {p};
    // monic transform: fm(T) = lc^(n-1) * p(T/lc)
    Rat lcr = p.lc_in(v).constant_value();
    Int lc = boost::multiprecision::numerator(lcr);  // integer poly, so den == 1
    // fm(T) = lc^(n-1) * p(T/lc): monic with integer coefficients
    IP fm(n + 1, 0);
    fm[n] = 1;
    for (int k = 0; k < n; ++k) {
        Rat ck = p.coeff_of(v, k).constant_value();
        fm[k] = boost::multiprecision::numerator(ck) *
                boost::multiprecision::pow(lc, unsigned(n - 1 - k));
    }
    std::vector<IP> monic_factors = zassenhaus_monic(fm);
    std::vector<Poly> out;
    Poly xv = Poly::variable(v);
    for (const auto& h : monic_factors) {
        // map back: g(T) = primitive part of h(lc*T)
        Poly g = Poly::zero(std::string(1, v));
        Poly acc = Poly::constant(1);
        Int scale = 1;
        for (size_t k = 0; k < h.size(); ++k) {
            g = g + pow(xv, static_cast<int>(k)) * Poly::constant(Rat(h[k] * scale));
            scale *= lc;
        }
        Rat unit;
        out.push_back(normalize_primitive(g, unit));
    }
    return out;
}

// ---------- multivariate (Kronecker) ----------

struct KMap {
    std::string vars;
    std::vector<Int> stride;  // exponent multiplier per variable
};

IP kronecker_image(const Poly& p, const KMap& km) {
    std::map<Int, Rat> coeffs;
    for (const auto& [e, c] : p.terms()) {
        Int ex = 0;
        for (size_t i = 0; i < km.vars.size(); ++i) {
            auto pos = p.vars().find(km.vars[i]);
            int k = pos == std::string::npos ? 0 : e[pos];
            ex += km.stride[i] * k;
        }
        coeffs[ex] += c;
    }
    Int deg = coeffs.empty() ? Int(0) : coeffs.rbegin()->first;
    IP out(static_cast<size_t>(deg) + 1, 0);
    for (const auto& [ex, c] : coeffs) out[static_cast<size_t>(ex)] = boost::multiprecision::numerator(c);
    ip_trim(out);
    return out;
}

Poly kronecker_preimage(const IP& q, const KMap& km, const Int& base) {
    Poly out = Poly::zero(km.vars);
    for (size_t k = 0; k < q.size(); ++k) {
        if (q[k] == 0) continue;
        Int ex(static_cast<unsigned long>(k));
        Poly mono = Poly::constant(Rat(q[k]), km.vars);
        for (size_t i = 0; i < km.vars.size(); ++i) {
            Int digit = ex % base;
            ex /= base;
            mono = mono * pow(Poly::variable(km.vars[i]), static_cast<int>(digit));
        }
        out = out + mono;
    }
    return out;
}

// full factorization of a univariate integer IP into (factor, mult) over Z,
// content dropped; factors monic-normalized as primitive Poly in var v
std::vector<std::pair<Poly, int>> factor_ip_full(const IP& f, char v);

// p squarefree, primitive in its last used var, >= 2 used vars; returns the
// irreducible factors (distinct).
std::vector<Poly> factor_multivariate_squarefree(const Poly& p) {
    std::string vars = p.used_vars();
    int maxdeg = 0;
    for (char v : vars) maxdeg = std::max(maxdeg, p.degree_in(v));
    Int base(maxdeg + 1);
    KMap km;
    km.vars = vars;
    Int s = 1;
    for (size_t i = 0; i < vars.size(); ++i) {
        km.stride.push_back(s);
        s *= base;
    }
    IP image = kronecker_image(p, km);
    auto ifacs = factor_ip_full(image, 't');
    // enumerate divisors of the image as exponent vectors over ifacs
    size_t m = ifacs.size();
    std::vector<int> expo(m, 0);
    std::vector<std::pair<Int, std::vector<int>>> divisors;  // (degree, exponents)
    while (true) {
        // advance odometer
        size_t i = 0;
        while (i < m) {
            if (expo[i] < ifacs[i].second) {
                ++expo[i];
                break;
            }
            expo[i] = 0;
            ++i;
        }
        if (i == m) break;
        bool trivial = true, full = true;
        for (size_t j = 0; j < m; ++j) {
            if (expo[j] != 0) trivial = false;
            if (expo[j] != ifacs[j].second) full = false;
        }
        if (trivial || full) continue;
        Int d = 0;
        for (size_t j = 0; j < m; ++j) d += Int(expo[j] * ifacs[j].first.degree_in('t'));
        divisors.emplace_back(d, expo);
    }
    std::sort(divisors.begin(), divisors.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    for (const auto& [d, ex] : divisors) {
        IP cand{1};
        for (size_t j = 0; j < m; ++j) {
            if (ex[j] == 0) continue;
            IP fj;
            const Poly& fp = ifacs[j].first;
            int dj = fp.degree_in('t');
            fj.assign(dj + 1, 0);
            for (int k = 0; k <= dj; ++k)
                fj[k] = boost::multiprecision::numerator(fp.coeff_of('t', k).constant_value());
            for (int rep = 0; rep < ex[j]; ++rep) {
                IP c2(cand.size() + fj.size() - 1, 0);
                for (size_t a = 0; a < cand.size(); ++a)
                    for (size_t b = 0; b < fj.size(); ++b) c2[a + b] += cand[a] * fj[b];
                cand = c2;
            }
        }
        ip_trim(cand);
        Poly g = kronecker_preimage(cand, km, base);
        if (g.is_constant()) continue;
        Rat u;
        g = normalize_primitive(g, u);
        if (divides(g, p)) {
            Poly restp = exact_div(p, g);
            Rat u2;
            if (!restp.is_constant()) restp = normalize_primitive(restp, u2);
            std::vector<Poly> out{g};
            if (!restp.is_constant()) {
                std::string rv = restp.used_vars();
                std::vector<Poly> tail;
                if (rv.size() >= 2) {
                    tail = factor_multivariate_squarefree(restp.shrunk());
                } else {
                    tail = factor_univariate_squarefree(restp.shrunk(), rv[0]);
                }
                for (auto& t : tail) out.push_back(t);
            }
            return out;
        }
    }
    return {p};  // irreducible
}

std::vector<std::pair<Poly, int>> factor_ip_full(const IP& f, char v) {
    // strip T^k
    size_t low = 0;
    while (low < f.size() && f[low] == 0) ++low;
    IP g(f.begin() + low, f.end());
    Poly pg = Poly::zero(std::string(1, v));
    for (size_t k = 0; k < g.size(); ++k)
        pg = pg + pow(Poly::variable(v), static_cast<int>(k)) * Poly::constant(Rat(g[k]));
    std::vector<std::pair<Poly, int>> out;
    if (low > 0) out.emplace_back(Poly::variable(v), static_cast<int>(low));
    Rat u;
    if (pg.is_constant()) return out;
    pg = normalize_primitive(pg, u);
    // squarefree decomposition (Yun) in one variable
    Poly d = pg.derivative(v);
    Poly a = gcd(pg, d);
    Poly b = exact_div(pg, a);
    Poly c = exact_div(d, a);
    int mult = 1;
    while (b.degree_in(v) > 0) {
        Poly t = c - b.derivative(v);
        Poly s = gcd(b, t);
        if (s.degree_in(v) > 0) {
            for (const Poly& irr : factor_univariate_squarefree(s, v)) out.emplace_back(irr, mult);
        }
        b = exact_div(b, s);
        c = exact_div(t, s);
        ++mult;
    }
    return out;
}

void factor_recursive(const Poly& p, Rat& unit, std::map<std::string, std::pair<Poly, int>>& acc);

void record_factor(const Poly& f, int mult, Rat& unit,
                   std::map<std::string, std::pair<Poly, int>>& acc) {
    Rat u;
    Poly g = normalize_primitive(f, u);
    for (int i = 0; i < mult; ++i) unit *= u;
    auto key = g.str();
    auto it = acc.find(key);
    if (it == acc.end())
        acc.emplace(key, std::make_pair(g, mult));
    else
        it->second.second += mult;
}

void factor_recursive(const Poly& p, Rat& unit, std::map<std::string, std::pair<Poly, int>>& acc) {
    Poly q = p.shrunk();
    if (q.is_constant()) {
        unit *= q.constant_value();
        return;
    }
    std::string vars = q.used_vars();
    // monomial content
    for (char v : vars) {
        int mn = q.degree_in(v);
        for (const auto& [e, c] : q.terms()) mn = std::min(mn, e[q.vars().find(v)]);
        if (mn > 0) {
            record_factor(Poly::variable(v), mn, unit, acc);
            q = exact_div(q, pow(Poly::variable(v), mn));
        }
    }
    q = q.shrunk();
    if (q.is_constant()) {
        unit *= q.constant_value();
        return;
    }
    vars = q.used_vars();
    char v = vars.back();
    if (vars.size() == 1) {
        Rat u;
        q = normalize_primitive(q, u);
        unit *= u;
        IP f(q.degree_in(v) + 1, 0);
        for (int k = 0; k <= q.degree_in(v); ++k)
            f[k] = boost::multiprecision::numerator(q.coeff_of(v, k).constant_value());
        for (auto& [g, m] : factor_ip_full(f, v)) record_factor(g, m, unit, acc);
        return;
    }
    Poly cont = content_in(q, v);
    Poly pp = exact_div(q, cont);
    factor_recursive(cont, unit, acc);
    Rat u;
    pp = normalize_primitive(pp, u);
    unit *= u;
    // Yun squarefree decomposition with respect to v
    Poly d = pp.derivative(v);
    Poly a = gcd(pp, d);
    Poly b = exact_div(pp, a);
    Poly c = exact_div(d, a);
    int mult = 1;
    while (!b.is_constant()) {
        Poly t = c - b.derivative(v);
        Poly s = gcd(b, t);
        if (!s.is_constant()) {
            Poly sq = s.shrunk();
            std::string sv = sq.used_vars();
            std::vector<Poly> irr;
            if (sv.size() == 1) {
                irr = factor_univariate_squarefree(sq, sv[0]);
            } else {
                irr = factor_multivariate_squarefree(sq);
            }
            for (const Poly& f : irr) record_factor(f, mult, unit, acc);
        }
        b = exact_div(b, s);
        c = exact_div(t, s);
        ++mult;
        if (b.is_constant()) break;
    }
}

}  // namespace

Poly Factorization::product() const {
    Poly out = Poly::constant(unit);
    for (const auto& part : parts) out = out * pow(part.factor, part.multiplicity);
    return out;
}

Factorization factor(const Poly& p) {
    if (p.is_zero()) throw std::domain_error("factor(0)");
    Factorization out;
    out.unit = 1;
    std::map<std::string, std::pair<Poly, int>> acc;
    factor_recursive(p, out.unit, acc);
    for (auto& [key, fm] : acc) {
        out.parts.push_back({fm.first.with_vars(p.vars()), fm.second, Tri::Unknown});
    }
    std::sort(out.parts.begin(), out.parts.end(), [](const auto& a, const auto& b) {
        int da = a.factor.total_degree(), db = b.factor.total_degree();
        if (da != db) return da < db;
        return a.factor.str() < b.factor.str();
    });
    // reconcile the unit exactly
    Poly prod = Poly::constant(1);
    for (const auto& part : out.parts) prod = prod * pow(part.factor, part.multiplicity);
    Poly ratio_num = p, ratio_den = prod;
    Poly q = exact_div(ratio_num, ratio_den);
    if (!q.is_constant()) throw std::logic_error("factorization product mismatch");
    out.unit = q.constant_value();
    for (auto& part : out.parts) part.abs_irreducible = absolutely_irreducible(part.factor);
    return out;
}

int absolute_factor_count(const Poly& p) {
    Poly q = p.shrunk();
    std::string vars = q.used_vars();
    if (vars.size() != 2) return -1;
    char xv = vars[0], yv = vars[1];
    if (!gcd(gcd(q, q.derivative(xv)), q.derivative(yv)).is_constant()) return -1;  // not squarefree
    int m = q.degree_in(xv), n = q.degree_in(yv);
    // unknowns: g with deg_x <= m-1, deg_y <= n; h with deg_x <= m, deg_y <= n-1
    // equation: f*g_y - g*f_y - f*h_x + h*f_x = 0
    int gcount = m * (n + 1), hcount = (m + 1) * n;
    int cols = gcount + hcount;
    // rows indexed by monomials x^a y^b with a <= 2m, b <= 2n
    auto row_index = [&](int a, int b) { return a * (2 * n + 1) + b; };
    int rows = (2 * m + 1) * (2 * n + 1);
    std::vector<std::vector<Rat>> M(rows, std::vector<Rat>(cols, Rat(0)));
    Poly fx = q.derivative(xv), fy = q.derivative(yv);
    auto add_poly = [&](const Poly& t, int col, int sign) {
        for (const auto& [e, c] : t.terms()) {
            int a = e[t.vars().find(xv)], b = e[t.vars().find(yv)];
            M[row_index(a, b)][col] += sign > 0 ? c : Rat(-c);
        }
    };
    int col = 0;
    Poly X = Poly::variable(xv), Y = Poly::variable(yv);
    for (int a = 0; a <= m - 1; ++a) {
        for (int b = 0; b <= n; ++b) {
            Poly mono = pow(X, a) * pow(Y, b);
            add_poly(q * mono.derivative(yv) - mono * fy, col, +1);
            ++col;
        }
    }
    for (int a = 0; a <= m; ++a) {
        for (int b = 0; b <= n - 1; ++b) {
            Poly mono = pow(X, a) * pow(Y, b);
            add_poly(q * mono.derivative(xv) - mono * fx, col, -1);
            ++col;
        }
    }
    // rank via Gaussian elimination
    int rank = 0;
    std::vector<int> pivot_cols;
    for (int cc = 0; cc < cols && rank < rows; ++cc) {
        int pr = -1;
        for (int r = rank; r < rows; ++r)
            if (M[r][cc] != 0) {
                pr = r;
                break;
            }
        if (pr < 0) continue;
        std::swap(M[rank], M[pr]);
        Rat inv = Rat(1) / M[rank][cc];
        for (int c2 = cc; c2 < cols; ++c2) M[rank][c2] *= inv;
        for (int r = 0; r < rows; ++r) {
            if (r == rank || M[r][cc] == 0) continue;
            Rat fct = M[r][cc];
            for (int c2 = cc; c2 < cols; ++c2) M[r][c2] -= fct * M[rank][c2];
        }
        ++rank;
    }
    return cols - rank == 0 ? -1 : cols - rank;
}

Tri absolutely_irreducible(const Poly& p) {
    Poly q = p.shrunk();
    std::string vars = q.used_vars();
    if (q.total_degree() <= 0) return Tri::Unknown;  // constants are units
    if (q.total_degree() == 1) return Tri::Yes;
    if (vars.size() == 1) return Tri::No;  // splits into linear factors over C
    // linear in some variable with coprime cofactors: irreducible over any
    // extension (gcd is stable under field extension)
    for (char v : vars) {
        if (q.degree_in(v) == 1) {
            Poly A = q.coeff_of(v, 1), B = q.coeff_of(v, 0);
            if (gcd(A, B).is_constant()) return Tri::Yes;
        }
    }
    if (vars.size() == 2) {
        int r = absolute_factor_count(q);
        if (r == 1) return Tri::Yes;
        if (r > 1) return Tri::No;
    }
    return Tri::Unknown;
}

std::vector<std::pair<Rat, int>> rational_roots(const Poly& p) {
    Poly q = p.shrunk();
    std::string vars = q.used_vars();
    if (vars.size() > 1) throw std::domain_error("rational_roots: not univariate");
    std::vector<std::pair<Rat, int>> out;
    if (vars.empty()) return out;
    char v = vars[0];
    for (const auto& part : factor(q).parts) {
        Poly f = part.factor.shrunk();
        if (f.degree_in(v) == 1) {
            Rat a = f.coeff_of(v, 1).constant_value();
            Rat b = f.coeff_of(v, 0).constant_value();
            out.emplace_back(Rat(-b / a), part.multiplicity);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool irreducible_over_q(const Poly& p) {
    if (p.is_zero() || p.shrunk().is_constant()) return false;
    Factorization f = factor(p);
    return f.parts.size() == 1 && f.parts[0].multiplicity == 1;
}

}  // namespace afx
