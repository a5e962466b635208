#pragma once

// Laurent polynomials in the torus variables t1, t2 with rational
// coefficients, stored sparsely. Exponents may be negative; stored
// coefficients are never zero.

#include "hilbk/rational.hpp"
#include "hilbk/unipoly.hpp"

#include <compare>
#include <map>
#include <string>

namespace hilbk {

struct TMonomial {
    int e1 = 0;
    int e2 = 0;
    auto operator<=>(const TMonomial&) const = default;  // lex: e1 then e2
};

class TLaurent {
public:
    TLaurent() = default;
    explicit TLaurent(Rational c) {
        if (c != 0) terms_[TMonomial{}] = std::move(c);
    }
    static TLaurent monomial(int e1, int e2, Rational c = Rational(1));
    static TLaurent one() { return TLaurent(Rational(1)); }

    bool is_zero() const { return terms_.empty(); }
    bool is_one() const;
    bool is_constant() const;
    // A single term with coefficient +1.
    bool is_unit_monomial() const;
    bool is_monomial() const { return terms_.size() == 1; }
    size_t term_count() const { return terms_.size(); }
    const std::map<TMonomial, Rational>& terms() const { return terms_; }
    Rational coeff(int e1, int e2) const;

    void add_term(const TMonomial& m, const Rational& c);

    TLaurent operator+(const TLaurent& o) const;
    TLaurent operator-(const TLaurent& o) const;
    TLaurent operator*(const TLaurent& o) const;
    TLaurent operator-() const;
    TLaurent scaled(const Rational& c) const;
    TLaurent pow(int n) const;  // n >= 0
    bool operator==(const TLaurent& o) const { return terms_ == o.terms_; }

    // Componentwise minimum / maximum of exponents over all terms.
    TMonomial min_exp() const;
    TMonomial max_exp() const;
    TLaurent shifted(int d1, int d2) const;  // * t1^d1 t2^d2

    // t1 -> t1^n, t2 -> t2^n.
    TLaurent adams(int n) const;
    // t1 -> m1, t2 -> m2 for unit monomials m1, m2.
    TLaurent subst_monomials(const TMonomial& m1, const TMonomial& m2) const;
    TLaurent swap_vars() const;  // t1 <-> t2

    // Value at t1 = t2 = 1.
    Rational eval_one() const;
    // Substitute t1 = x, keeping t2; requires min t2-exponent >= 0 after shifting
    // (caller shifts). Only valid for true polynomials.
    UniPoly eval_t1(const Rational& x) const;

    // t1 -> tau^e1, t2 -> tau^e2: returns coefficients of tau with an offset,
    // as a UniPoly p and shift s meaning tau^s * p(tau).
    void subst_direction(int e1, int e2, UniPoly& p, int& shift) const;

    // True polynomial part helpers (all exponents >= 0 assumed).
    bool is_polynomial() const { auto m = min_exp(); return m.e1 >= 0 && m.e2 >= 0; }

    // Exact division; throws std::logic_error if not divisible.
    TLaurent divexact(const TLaurent& d) const;
    // Divisibility test (cheap failure path).
    bool divisible_by(const TLaurent& d) const;

    // Gcd of the polynomial parts: both inputs are treated up to unit
    // monomial factors. Result is a true polynomial with min exponents (0,0),
    // normalized so its lex-least term has coefficient 1.
    static TLaurent gcd(const TLaurent& a, const TLaurent& b);

    std::string to_string() const;               // canonical, lex-sorted terms
    static TLaurent parse(const std::string&);   // inverse of to_string (and more)

private:
    std::map<TMonomial, Rational> terms_;
};

inline TLaurent t1_pow(int e) { return TLaurent::monomial(e, 0); }
inline TLaurent t2_pow(int e) { return TLaurent::monomial(0, e); }

}  // namespace hilbk
