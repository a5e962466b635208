#include "hilbk/unipoly.hpp"

#include <sstream>
#include <stdexcept>

namespace hilbk {

void UniPoly::trim() {
    while (!coef_.empty() && coef_.back() == 0) coef_.pop_back();
}

UniPoly UniPoly::monomial(int deg, Rational c) {
    UniPoly p;
    if (c == 0) return p;
    if (deg < 0) throw std::invalid_argument("negative degree");
    p.coef_.assign(static_cast<size_t>(deg) + 1, Rational(0));
    p.coef_[static_cast<size_t>(deg)] = std::move(c);
    return p;
}

UniPoly UniPoly::from_coeffs(std::vector<Rational> c) {
    UniPoly p;
    p.coef_ = std::move(c);
    p.trim();
    return p;
}

const Rational& UniPoly::operator[](int i) const {
    static const Rational kZero(0);
    if (i < 0 || i >= static_cast<int>(coef_.size())) return kZero;
    return coef_[static_cast<size_t>(i)];
}

UniPoly UniPoly::operator+(const UniPoly& o) const {
    UniPoly r;
    r.coef_.resize(std::max(coef_.size(), o.coef_.size()), Rational(0));
    for (size_t i = 0; i < r.coef_.size(); ++i) {
        if (i < coef_.size()) r.coef_[i] += coef_[i];
        if (i < o.coef_.size()) r.coef_[i] += o.coef_[i];
    }
    r.trim();
    return r;
}

UniPoly UniPoly::operator-(const UniPoly& o) const { return *this + (-o); }

UniPoly UniPoly::operator-() const {
    UniPoly r = *this;
    for (auto& c : r.coef_) c = -c;
    return r;
}

UniPoly UniPoly::scaled(const Rational& c) const {
    if (c == 0) return {};
    UniPoly r = *this;
    for (auto& x : r.coef_) x *= c;
    return r;
}

UniPoly UniPoly::operator*(const UniPoly& o) const {
    if (is_zero() || o.is_zero()) return {};
    UniPoly r;
    r.coef_.assign(coef_.size() + o.coef_.size() - 1, Rational(0));
    for (size_t i = 0; i < coef_.size(); ++i) {
        if (coef_[i] == 0) continue;
        for (size_t j = 0; j < o.coef_.size(); ++j) {
            if (o.coef_[j] == 0) continue;
            r.coef_[i + j] += coef_[i] * o.coef_[j];
        }
    }
    r.trim();
    return r;
}

void UniPoly::divrem(const UniPoly& a, const UniPoly& b, UniPoly& q, UniPoly& r) {
    if (b.is_zero()) throw std::domain_error("polynomial division by zero");
    r = a;
    q = UniPoly();
    if (a.deg() < b.deg()) return;
    q.coef_.assign(static_cast<size_t>(a.deg() - b.deg()) + 1, Rational(0));
    while (!r.is_zero() && r.deg() >= b.deg()) {
        Rational c = r.lc() / b.lc();
        int d = r.deg() - b.deg();
        q.coef_[static_cast<size_t>(d)] = c;
        // r -= c * x^d * b
        for (int i = 0; i <= b.deg(); ++i) {
            if (b.coef_[static_cast<size_t>(i)] == 0) continue;
            r.coef_[static_cast<size_t>(i + d)] -= c * b.coef_[static_cast<size_t>(i)];
        }
        r.trim();
    }
    q.trim();
}

UniPoly UniPoly::divexact(const UniPoly& b) const {
    UniPoly q, r;
    divrem(*this, b, q, r);
    if (!r.is_zero()) throw std::logic_error("inexact polynomial division");
    return q;
}

Rational UniPoly::eval(const Rational& x) const {
    Rational acc(0);
    for (size_t i = coef_.size(); i-- > 0;) acc = acc * x + coef_[i];
    return acc;
}

UniPoly UniPoly::monic() const {
    if (is_zero()) return {};
    return scaled(Rational(1) / lc());
}

UniPoly UniPoly::adams(int n) const {
    if (n == 1 || is_zero()) return *this;
    UniPoly r;
    r.coef_.assign(static_cast<size_t>(deg()) * n + 1, Rational(0));
    for (size_t i = 0; i < coef_.size(); ++i) r.coef_[i * n] = coef_[i];
    return r;
}

int UniPoly::low_deg() const {
    for (size_t i = 0; i < coef_.size(); ++i)
        if (coef_[i] != 0) return static_cast<int>(i);
    return 0;
}

UniPoly UniPoly::shift_down(int k) const {
    if (k == 0 || is_zero()) return *this;
    UniPoly r;
    r.coef_.assign(coef_.begin() + k, coef_.end());
    return r;
}

namespace {

using ZPoly = std::vector<mpz_class>;  // dense, no trailing-zero invariant enforced

void ztrim(ZPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

mpz_class zcontent(const ZPoly& p) {
    mpz_class g(0);
    for (const auto& c : p) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

void zdiv_scalar(ZPoly& p, const mpz_class& d) {
    for (auto& c : p) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), d.get_mpz_t());
}

// Pseudo-remainder of a by b (deg a >= deg b, b nonzero).
ZPoly zprem(ZPoly a, const ZPoly& b) {
    const mpz_class& lb = b.back();
    int db = static_cast<int>(b.size()) - 1;
    while (static_cast<int>(a.size()) - 1 >= db && !a.empty()) {
        mpz_class la = a.back();
        int shift = static_cast<int>(a.size()) - 1 - db;
        for (auto& c : a) c *= lb;
        for (int i = 0; i <= db; ++i) a[static_cast<size_t>(i + shift)] -= la * b[static_cast<size_t>(i)];
        ztrim(a);
    }
    return a;
}

}  // namespace

UniPoly UniPoly::gcd(const UniPoly& a, const UniPoly& b) {
    if (a.is_zero()) return b.monic();
    if (b.is_zero()) return a.monic();
    // Clear denominators into primitive integer polynomials.
    auto to_z = [](const UniPoly& p) {
        mpz_class l(1);
        for (const auto& c : p.coeffs())
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den().get_mpz_t());
        ZPoly z(p.coeffs().size());
        for (size_t i = 0; i < z.size(); ++i) {
            Rational c = p.coeffs()[i] * Rational(l);
            z[i] = c.get_num();
        }
        mpz_class ct = zcontent(z);
        if (ct != 0 && ct != 1) zdiv_scalar(z, ct);
        return z;
    };
    ZPoly A = to_z(a), B = to_z(b);
    if (A.size() < B.size()) std::swap(A, B);
    while (!B.empty()) {
        ZPoly R = zprem(A, B);
        A = std::move(B);
        B = std::move(R);
        if (!B.empty()) {
            mpz_class ct = zcontent(B);
            if (ct != 1) zdiv_scalar(B, ct);
        }
    }
    std::vector<Rational> rc(A.size());
    for (size_t i = 0; i < A.size(); ++i) rc[i] = Rational(A[i]);
    return from_coeffs(std::move(rc)).monic();
}

std::string UniPoly::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (size_t i = 0; i < coef_.size(); ++i) {
        if (coef_[i] == 0) continue;
        Rational c = coef_[i];
        if (!first) {
            os << (c < 0 ? " - " : " + ");
            if (c < 0) c = -c;
        } else if (c < 0) {
            os << "-";
            c = -c;
        }
        first = false;
        if (i == 0 || c != 1) os << rat_str(c);
        if (i > 0) {
            if (c != 1) os << "*";
            os << var;
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

}  // namespace hilbk
