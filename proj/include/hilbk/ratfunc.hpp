#pragma once

// Reduced rational functions in t1, t2 over Q. Canonical form: num/den with
// den a true polynomial (min exponents (0,0)) whose lex-least term has
// coefficient 1, gcd(num_poly, den) = 1, and any Laurent monomial factor
// absorbed into num. Equality of values is then equality of representations.

#include "hilbk/taurat.hpp"
#include "hilbk/tlaurent.hpp"

namespace hilbk {

class PoleAtOneError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

class DegenerateDirectionError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

class RatFunc {
public:
    RatFunc() : num_(), den_(TLaurent::one()) {}
    explicit RatFunc(Rational c) : num_(TLaurent(std::move(c))), den_(TLaurent::one()) {}
    explicit RatFunc(TLaurent num) : num_(std::move(num)), den_(TLaurent::one()) {}
    RatFunc(TLaurent num, TLaurent den);  // reduces

    static RatFunc one() { return RatFunc(Rational(1)); }

    const TLaurent& num() const { return num_; }
    const TLaurent& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }
    bool is_laurent() const { return den_.is_one(); }
    bool is_constant() const { return den_.is_one() && num_.is_constant(); }
    Rational constant_value() const;  // requires is_constant

    RatFunc operator+(const RatFunc& o) const;
    RatFunc operator-(const RatFunc& o) const;
    RatFunc operator*(const RatFunc& o) const;
    RatFunc operator/(const RatFunc& o) const;
    RatFunc operator-() const;
    bool operator==(const RatFunc& o) const { return num_ == o.num_ && den_ == o.den_; }

    RatFunc inverse() const;
    RatFunc scaled(const Rational& c) const;
    RatFunc pow(int n) const;  // any sign

    // t -> t^n on both parts (preserves reducedness).
    RatFunc adams(int n) const;
    // substitute unit monomials for t1, t2; re-reduces
    RatFunc subst_monomials(const TMonomial& m1, const TMonomial& m2) const;
    RatFunc swap_vars() const;

    // Exact value at t1 = t2 = 1; PoleAtOneError if the reduced denominator
    // vanishes there.
    Rational eval_t_one() const;

    // t1 -> tau^e1, t2 -> tau^e2; DegenerateDirectionError when the reduced
    // denominator collapses to zero along the direction.
    TauRat subst_univariate(int e1, int e2) const;

    std::string to_string() const;  // "num / den" or just "num"

private:
    void reduce();
    TLaurent num_;
    TLaurent den_;
};

inline RatFunc adams(const RatFunc& f, int n) { return f.adams(n); }
inline Rational adams(const Rational& c, int) { return c; }

}  // namespace hilbk
