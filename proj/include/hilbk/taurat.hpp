#pragma once

// Rational functions of a single direction variable tau, kept reduced with a
// monomial shift: value = tau^shift * num/den, num(0) != 0 (unless num = 0),
// den(0) != 0, den monic. These appear when a RatFunc in t1, t2 is restricted
// to a one-parameter subgroup t1 = tau^e1, t2 = tau^e2.

#include "hilbk/unipoly.hpp"

namespace hilbk {

class TauRat {
public:
    TauRat() : den_(Rational(1)) {}
    explicit TauRat(Rational c) : num_(std::move(c)), den_(Rational(1)) {}
    TauRat(UniPoly num, UniPoly den, int shift);

    bool is_zero() const { return num_.is_zero(); }
    const UniPoly& num() const { return num_; }
    const UniPoly& den() const { return den_; }
    int shift() const { return shift_; }

    TauRat operator+(const TauRat& o) const;
    TauRat operator-(const TauRat& o) const;
    TauRat operator*(const TauRat& o) const;
    TauRat operator/(const TauRat& o) const;
    TauRat operator-() const;
    bool operator==(const TauRat& o) const {
        return shift_ == o.shift_ && num_ == o.num_ && den_ == o.den_;
    }

    // A Laurent polynomial in tau (reduced denominator trivial)?
    bool is_laurent() const { return den_.deg() == 0; }
    // Value at tau = 1; throws std::domain_error on a pole.
    Rational eval_one() const;

private:
    void reduce();
    UniPoly num_;
    UniPoly den_;
    int shift_ = 0;
};

}  // namespace hilbk
