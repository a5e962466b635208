#include "hilbk/ratfunc.hpp"

#include <stdexcept>

namespace hilbk {

RatFunc::RatFunc(TLaurent num, TLaurent den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw std::domain_error("zero denominator in rational function");
    reduce();
}

void RatFunc::reduce() {
    if (num_.is_zero()) {
        den_ = TLaurent::one();
        return;
    }
    // Move monomial content of both parts into a single Laurent factor on num.
    TMonomial sn = num_.min_exp(), sd = den_.min_exp();
    num_ = num_.shifted(-sn.e1, -sn.e2);
    den_ = den_.shifted(-sd.e1, -sd.e2);
    int d1 = sn.e1 - sd.e1, d2 = sn.e2 - sd.e2;

    if (!den_.is_one() && !num_.is_one()) {
        TLaurent g = TLaurent::gcd(num_, den_);
        if (!g.is_one()) {
            num_ = num_.divexact(g);
            den_ = den_.divexact(g);
            // divexact may reintroduce monomial offsets from gcd normalization
            TMonomial rn = num_.min_exp(), rd = den_.min_exp();
            num_ = num_.shifted(-rn.e1, -rn.e2);
            den_ = den_.shifted(-rd.e1, -rd.e2);
            d1 += rn.e1 - rd.e1;
            d2 += rn.e2 - rd.e2;
        }
    }
    Rational lead = den_.terms().begin()->second;  // lex-least coefficient
    if (lead != 1) {
        Rational inv = Rational(1) / lead;
        num_ = num_.scaled(inv);
        den_ = den_.scaled(inv);
    }
    num_ = num_.shifted(d1, d2);
}

Rational RatFunc::constant_value() const {
    if (!is_constant()) throw std::logic_error("not a constant: " + to_string());
    return num_.is_zero() ? Rational(0) : num_.terms().begin()->second;
}

RatFunc RatFunc::operator+(const RatFunc& o) const {
    if (is_zero()) return o;
    if (o.is_zero()) return *this;
    if (den_ == o.den_) {
        RatFunc r;
        r.num_ = num_ + o.num_;
        r.den_ = den_;
        r.reduce();
        return r;
    }
    TLaurent g = TLaurent::gcd(den_, o.den_);
    TLaurent db = g.is_one() ? den_ : den_.divexact(g);
    TLaurent dd = g.is_one() ? o.den_ : o.den_.divexact(g);
    RatFunc r;
    r.num_ = num_ * dd + o.num_ * db;
    r.den_ = den_ * dd;
    r.reduce();
    return r;
}

RatFunc RatFunc::operator-() const {
    RatFunc r = *this;
    r.num_ = -r.num_;
    return r;
}

RatFunc RatFunc::operator-(const RatFunc& o) const { return *this + (-o); }

RatFunc RatFunc::operator*(const RatFunc& o) const {
    if (is_zero() || o.is_zero()) return RatFunc();
    // cross-cancel so the final reduce has little to do
    TLaurent a = num_, b = den_, c = o.num_, d = o.den_;
    if (!b.is_one() && !c.is_one()) {
        TLaurent g = TLaurent::gcd(c, b);
        if (!g.is_one()) { c = c.divexact(g); b = b.divexact(g); }
    }
    if (!d.is_one() && !a.is_one()) {
        TLaurent g = TLaurent::gcd(a, d);
        if (!g.is_one()) { a = a.divexact(g); d = d.divexact(g); }
    }
    RatFunc r;
    r.num_ = a * c;
    r.den_ = b * d;
    r.reduce();
    return r;
}

RatFunc RatFunc::inverse() const {
    if (is_zero()) throw std::domain_error("inverse of zero");
    RatFunc r;
    r.num_ = den_;
    r.den_ = num_;
    r.reduce();
    return r;
}

RatFunc RatFunc::operator/(const RatFunc& o) const { return *this * o.inverse(); }

RatFunc RatFunc::scaled(const Rational& c) const {
    if (c == 0) return RatFunc();
    RatFunc r = *this;
    r.num_ = r.num_.scaled(c);
    return r;
}

RatFunc RatFunc::pow(int n) const {
    if (n < 0) return inverse().pow(-n);
    RatFunc acc = one();
    RatFunc base = *this;
    while (n) {
        if (n & 1) acc = acc * base;
        if (n >>= 1) base = base * base;
    }
    return acc;
}

RatFunc RatFunc::adams(int n) const {
    if (n == 1) return *this;
    RatFunc r;
    r.num_ = num_.adams(n);
    r.den_ = den_.adams(n);
    return r;  // canonical form is preserved by t -> t^n
}

RatFunc RatFunc::subst_monomials(const TMonomial& m1, const TMonomial& m2) const {
    TLaurent nn = num_.subst_monomials(m1, m2);
    TLaurent dd = den_.subst_monomials(m1, m2);
    if (dd.is_zero()) throw DegenerateDirectionError("denominator vanishes under substitution");
    return RatFunc(std::move(nn), std::move(dd));
}

RatFunc RatFunc::swap_vars() const { return RatFunc(num_.swap_vars(), den_.swap_vars()); }

Rational RatFunc::eval_t_one() const {
    Rational d = den_.eval_one();
    if (d == 0) throw PoleAtOneError("pole at t1 = t2 = 1: " + to_string());
    return num_.eval_one() / d;
}

TauRat RatFunc::subst_univariate(int e1, int e2) const {
    if (e1 == 0 && e2 == 0) throw std::invalid_argument("direction (0,0)");
    UniPoly np, dp;
    int ns = 0, ds = 0;
    num_.subst_direction(e1, e2, np, ns);
    den_.subst_direction(e1, e2, dp, ds);
    if (dp.is_zero()) throw DegenerateDirectionError("degenerate direction for " + to_string());
    if (np.is_zero()) return TauRat();
    return TauRat(std::move(np), std::move(dp), ns - ds);
}

std::string RatFunc::to_string() const {
    if (den_.is_one()) return num_.to_string();
    return "(" + num_.to_string() + ") / (" + den_.to_string() + ")";
}

}  // namespace hilbk
