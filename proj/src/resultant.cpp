#include "afx/resultant.hpp"

namespace afx {

Poly det(std::vector<std::vector<Poly>> m) {
    size_t n = m.size();
    if (n == 0) return Poly::constant(1);
    for (auto& row : m)
        if (row.size() != n) throw std::invalid_argument("det: matrix not square");
    int sign = 1;
    Poly prev = Poly::constant(1);
    for (size_t r = 0; r + 1 < n; ++r) {
        if (m[r][r].is_zero()) {
            size_t s = r + 1;
            while (s < n && m[s][r].is_zero()) ++s;
            if (s == n) return Poly::zero();
            std::swap(m[r], m[s]);
            sign = -sign;
        }
        for (size_t i = r + 1; i < n; ++i) {
            for (size_t j = r + 1; j < n; ++j) {
                m[i][j] = exact_div(m[r][r] * m[i][j] - m[i][r] * m[r][j], prev);
            }
            m[i][r] = Poly::zero();
        }
        prev = m[r][r];
    }
    Poly d = m[n - 1][n - 1];
    return sign < 0 ? -d : d;
}

Poly resultant(const Poly& p, const Poly& q, char var) {
    if (p.is_zero() || q.is_zero()) return Poly::zero();
    int m = p.degree_in(var);
    int n = q.degree_in(var);
    if (m == 0 && n == 0) throw std::domain_error("resultant: both inputs constant in variable");
    if (m == 0) return pow(p, n);
    if (n == 0) return pow(q, m);
    size_t size = static_cast<size_t>(m + n);
    std::vector<std::vector<Poly>> s(size, std::vector<Poly>(size, Poly::zero()));
    for (int i = 0; i < n; ++i) {
        for (int k = 0; k <= m; ++k) s[i][i + m - k] = p.coeff_of(var, k);
    }
    for (int i = 0; i < m; ++i) {
        for (int k = 0; k <= n; ++k) s[n + i][i + n - k] = q.coeff_of(var, k);
    }
    return det(std::move(s));
}

}  // namespace afx
