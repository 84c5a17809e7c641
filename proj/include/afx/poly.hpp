#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace afx {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// Canonical variable universe and order (also the print order).
inline const std::string kVarUniverse = "xyzuvt";

// Rank of v in the universe, -1 if v is not a recognized variable.
int var_rank(char v);

// Canonically ordered, duplicate-free variable set; throws on bad names.
std::string normalize_varset(const std::string& vars);

// Graded lexicographic order on exponent vectors (x most significant on ties).
struct GrlexLess {
    bool operator()(const std::vector<int>& a, const std::vector<int>& b) const;
};

// Sparse multivariate polynomial over Q.
// Exponent vectors are indexed by position in vars(); no zero coefficients
// are stored; the zero polynomial has an empty term map.
class Poly {
  public:
    using TermMap = std::map<std::vector<int>, Rat, GrlexLess>;

    Poly() = default;
    static Poly zero(const std::string& vars = "");
    static Poly constant(const Rat& c, const std::string& vars = "");
    static Poly variable(char v);
    static Poly from_terms(const std::string& vars, TermMap terms);

    const std::string& vars() const { return vars_; }
    const TermMap& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    Rat constant_value() const;  // requires is_constant()
    bool is_one() const;

    int total_degree() const;   // -1 for the zero polynomial
    int degree_in(char v) const;

    bool uses(char v) const { return degree_in(v) > 0; }
    // Variables with positive degree, canonical order.
    std::string used_vars() const;

    // Same polynomial over a varset extended to include `vars`.
    Poly with_vars(const std::string& vars) const;
    // Drop unused variables from the varset.
    Poly shrunk() const;

    Poly operator-() const;
    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly operator*(const Rat& c) const;
    bool operator==(const Poly& o) const;
    bool operator!=(const Poly& o) const { return !(*this == o); }

    // Coefficient of v^k as a polynomial (same varset, v-exponent zero).
    Poly coeff_of(char v, int k) const;
    Poly lc_in(char v) const { return coeff_of(v, std::max(degree_in(v), 0)); }
    Poly derivative(char v) const;
    Poly subst(char v, const Poly& value) const;
    Poly subst(const std::map<char, Poly>& values) const;  // simultaneous
    Rat eval(const std::map<char, Rat>& point) const;      // needs all used vars

    // Leading term in graded lex order.
    const std::pair<const std::vector<int>, Rat>& leading() const;
    Rat leading_coeff() const;

    // Canonical text form: graded lex, highest term first.
    std::string str() const;

  private:
    std::string vars_;  // subset of kVarUniverse in canonical order
    TermMap terms_;
    void add_term(const std::vector<int>& e, const Rat& c);
    friend void align(Poly& a, Poly& b);
};

// Extend both polynomials to their common varset.
void align(Poly& a, Poly& b);

Poly pow(const Poly& p, int n);

// Exact division; returns nothing if b does not divide a.
std::optional<Poly> try_exact_div(const Poly& a, const Poly& b);
Poly exact_div(const Poly& a, const Poly& b);  // throws std::domain_error
bool divides(const Poly& b, const Poly& a);

// Pseudo-division in v: lc_v(b)^k * a = q*b + r with deg_v r < deg_v b.
struct PseudoDiv {
    Poly quot, rem;
    int power;  // k
};
PseudoDiv pseudo_divmod(const Poly& a, const Poly& b, char v);

// GCD over Q[vars], normalized: primitive over Z with positive leading
// coefficient in graded lex order; gcd(0,0) = 0.
Poly gcd(const Poly& a, const Poly& b);

// gcd of the v-coefficients (a polynomial not using v), and a / content.
Poly content_in(const Poly& p, char v);
Poly primitive_in(const Poly& p, char v);

// Squarefree part: product of the distinct irreducible factors, normalized
// like gcd output.
Poly squarefree_part(const Poly& p);

// Scale to a primitive integer polynomial with positive graded-lex leading
// coefficient; returns the unit u with p = u * result. p must be nonzero.
Poly normalize_primitive(const Poly& p, Rat& unit);

}  // namespace afx
