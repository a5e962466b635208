#include "hilbk/taurat.hpp"

#include <stdexcept>

namespace hilbk {

TauRat::TauRat(UniPoly num, UniPoly den, int shift)
    : num_(std::move(num)), den_(std::move(den)), shift_(shift) {
    if (den_.is_zero()) throw std::domain_error("zero denominator");
    reduce();
}

void TauRat::reduce() {
    if (num_.is_zero()) {
        den_ = UniPoly(Rational(1));
        shift_ = 0;
        return;
    }
    int ln = num_.low_deg(), ld = den_.low_deg();
    if (ln) num_ = num_.shift_down(ln);
    if (ld) den_ = den_.shift_down(ld);
    shift_ += ln - ld;
    UniPoly g = UniPoly::gcd(num_, den_);
    if (g.deg() > 0) {
        num_ = num_.divexact(g);
        den_ = den_.divexact(g);
    }
    Rational lead = den_.lc();
    if (lead != 1) {
        num_ = num_.scaled(Rational(1) / lead);
        den_ = den_.scaled(Rational(1) / lead);
    }
}

TauRat TauRat::operator+(const TauRat& o) const {
    if (is_zero()) return o;
    if (o.is_zero()) return *this;
    // align shifts
    int s = std::min(shift_, o.shift_);
    UniPoly a = num_;
    UniPoly b = o.num_;
    if (shift_ > s) a = a * UniPoly::monomial(shift_ - s, Rational(1));
    if (o.shift_ > s) b = b * UniPoly::monomial(o.shift_ - s, Rational(1));
    return TauRat(a * o.den_ + b * den_, den_ * o.den_, s);
}

TauRat TauRat::operator-() const {
    TauRat r = *this;
    r.num_ = -r.num_;
    return r;
}

TauRat TauRat::operator-(const TauRat& o) const { return *this + (-o); }

TauRat TauRat::operator*(const TauRat& o) const {
    if (is_zero() || o.is_zero()) return TauRat();
    return TauRat(num_ * o.num_, den_ * o.den_, shift_ + o.shift_);
}

TauRat TauRat::operator/(const TauRat& o) const {
    if (o.is_zero()) throw std::domain_error("division by zero");
    if (is_zero()) return TauRat();
    return TauRat(num_ * o.den_, den_ * o.num_, shift_ - o.shift_);
}

Rational TauRat::eval_one() const {
    Rational d = den_.eval(Rational(1));
    if (d == 0) throw std::domain_error("pole at tau = 1");
    return num_.eval(Rational(1)) / d;
}

}  // namespace hilbk
