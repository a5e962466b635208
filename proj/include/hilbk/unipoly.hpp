#pragma once

// Dense univariate polynomials over Q. Used as the coefficient ring for the
// bivariate gcd (polynomials in t1) and for rational functions of the
// direction variable tau after a monomial substitution t1 -> tau^e1,
// t2 -> tau^e2.

#include "hilbk/rational.hpp"

#include <vector>

namespace hilbk {

class UniPoly {
public:
    UniPoly() = default;
    explicit UniPoly(Rational c) {
        if (c != 0) coef_.push_back(std::move(c));
    }
    static UniPoly monomial(int deg, Rational c);
    static UniPoly from_coeffs(std::vector<Rational> c);

    bool is_zero() const { return coef_.empty(); }
    int deg() const { return static_cast<int>(coef_.size()) - 1; }  // -1 for 0
    const Rational& operator[](int i) const;
    const std::vector<Rational>& coeffs() const { return coef_; }
    const Rational& lc() const { return coef_.back(); }

    UniPoly operator+(const UniPoly& o) const;
    UniPoly operator-(const UniPoly& o) const;
    UniPoly operator*(const UniPoly& o) const;
    UniPoly operator-() const;
    UniPoly scaled(const Rational& c) const;
    bool operator==(const UniPoly& o) const { return coef_ == o.coef_; }

    // Field division; throws on division by zero.
    static void divrem(const UniPoly& a, const UniPoly& b, UniPoly& q, UniPoly& r);
    // Division known to be exact; throws if a remainder shows up.
    UniPoly divexact(const UniPoly& b) const;

    Rational eval(const Rational& x) const;
    UniPoly monic() const;
    // exponents multiplied by n >= 1
    UniPoly adams(int n) const;

    // Monic gcd computed with a primitive integer remainder sequence, so
    // coefficient growth stays polynomial rather than exponential.
    static UniPoly gcd(const UniPoly& a, const UniPoly& b);

    // Trailing degree: smallest i with coef_[i] != 0 (0 for the zero poly).
    int low_deg() const;
    // Divide by x^k (exact).
    UniPoly shift_down(int k) const;

    std::string to_string(const std::string& var) const;

private:
    void trim();
    std::vector<Rational> coef_;  // coef_[i] * x^i, invariant: no trailing zeros
};

}  // namespace hilbk
