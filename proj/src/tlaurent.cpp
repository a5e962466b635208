#include "hilbk/tlaurent.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace hilbk {

TLaurent TLaurent::monomial(int e1, int e2, Rational c) {
    TLaurent p;
    if (c != 0) p.terms_[TMonomial{e1, e2}] = std::move(c);
    return p;
}

bool TLaurent::is_one() const {
    return terms_.size() == 1 && terms_.begin()->first == TMonomial{} &&
           terms_.begin()->second == 1;
}

bool TLaurent::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == TMonomial{});
}

bool TLaurent::is_unit_monomial() const {
    return terms_.size() == 1 && terms_.begin()->second == 1;
}

Rational TLaurent::coeff(int e1, int e2) const {
    auto it = terms_.find(TMonomial{e1, e2});
    return it == terms_.end() ? Rational(0) : it->second;
}

void TLaurent::add_term(const TMonomial& m, const Rational& c) {
    if (c == 0) return;
    auto [it, fresh] = terms_.emplace(m, c);
    if (!fresh) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

TLaurent TLaurent::operator+(const TLaurent& o) const {
    TLaurent r = *this;
    for (const auto& [m, c] : o.terms_) r.add_term(m, c);
    return r;
}

TLaurent TLaurent::operator-(const TLaurent& o) const {
    TLaurent r = *this;
    for (const auto& [m, c] : o.terms_) r.add_term(m, -c);
    return r;
}

TLaurent TLaurent::operator-() const {
    TLaurent r = *this;
    for (auto& [m, c] : r.terms_) c = -c;
    return r;
}

TLaurent TLaurent::scaled(const Rational& s) const {
    if (s == 0) return {};
    TLaurent r = *this;
    for (auto& [m, c] : r.terms_) c *= s;
    return r;
}

TLaurent TLaurent::operator*(const TLaurent& o) const {
    TLaurent r;
    if (is_zero() || o.is_zero()) return r;
    for (const auto& [ma, ca] : terms_)
        for (const auto& [mb, cb] : o.terms_)
            r.add_term(TMonomial{ma.e1 + mb.e1, ma.e2 + mb.e2}, ca * cb);
    return r;
}

TLaurent TLaurent::pow(int n) const {
    if (n < 0) throw std::invalid_argument("negative Laurent power");
    TLaurent acc = one();
    TLaurent base = *this;
    while (n) {
        if (n & 1) acc = acc * base;
        if (n >>= 1) base = base * base;
    }
    return acc;
}

TMonomial TLaurent::min_exp() const {
    if (is_zero()) return {};
    TMonomial m = terms_.begin()->first;
    for (const auto& [k, c] : terms_) {
        m.e1 = std::min(m.e1, k.e1);
        m.e2 = std::min(m.e2, k.e2);
    }
    return m;
}

TMonomial TLaurent::max_exp() const {
    if (is_zero()) return {};
    TMonomial m = terms_.begin()->first;
    for (const auto& [k, c] : terms_) {
        m.e1 = std::max(m.e1, k.e1);
        m.e2 = std::max(m.e2, k.e2);
    }
    return m;
}

TLaurent TLaurent::shifted(int d1, int d2) const {
    if (d1 == 0 && d2 == 0) return *this;
    TLaurent r;
    for (const auto& [m, c] : terms_) r.terms_[TMonomial{m.e1 + d1, m.e2 + d2}] = c;
    return r;
}

TLaurent TLaurent::adams(int n) const {
    if (n == 1) return *this;
    TLaurent r;
    for (const auto& [m, c] : terms_) r.terms_[TMonomial{m.e1 * n, m.e2 * n}] = c;
    return r;
}

TLaurent TLaurent::subst_monomials(const TMonomial& m1, const TMonomial& m2) const {
    TLaurent r;
    for (const auto& [m, c] : terms_)
        r.add_term(TMonomial{m.e1 * m1.e1 + m.e2 * m2.e1, m.e1 * m1.e2 + m.e2 * m2.e2}, c);
    return r;
}

TLaurent TLaurent::swap_vars() const {
    TLaurent r;
    for (const auto& [m, c] : terms_) r.terms_[TMonomial{m.e2, m.e1}] = c;
    return r;
}

Rational TLaurent::eval_one() const {
    Rational s(0);
    for (const auto& [m, c] : terms_) s += c;
    return s;
}

UniPoly TLaurent::eval_t1(const Rational& x) const {
    TMonomial lo = min_exp();
    if (lo.e1 < 0 || lo.e2 < 0) throw std::logic_error("eval_t1 on non-polynomial");
    std::vector<Rational> out;
    for (const auto& [m, c] : terms_) {
        if (m.e2 >= static_cast<int>(out.size())) out.resize(static_cast<size_t>(m.e2) + 1, Rational(0));
        out[static_cast<size_t>(m.e2)] += c * rat_pow(x, m.e1);
    }
    return UniPoly::from_coeffs(std::move(out));
}

void TLaurent::subst_direction(int e1, int e2, UniPoly& p, int& shift) const {
    if (is_zero()) {
        p = UniPoly();
        shift = 0;
        return;
    }
    long lo = 0, hi = 0;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        long d = static_cast<long>(m.e1) * e1 + static_cast<long>(m.e2) * e2;
        if (first) { lo = hi = d; first = false; }
        lo = std::min(lo, d);
        hi = std::max(hi, d);
    }
    std::vector<Rational> coef(static_cast<size_t>(hi - lo) + 1, Rational(0));
    for (const auto& [m, c] : terms_) {
        long d = static_cast<long>(m.e1) * e1 + static_cast<long>(m.e2) * e2;
        coef[static_cast<size_t>(d - lo)] += c;
    }
    p = UniPoly::from_coeffs(std::move(coef));
    if (p.is_zero()) { shift = 0; return; }
    int low = p.low_deg();
    p = p.shift_down(low);
    shift = static_cast<int>(lo) + low;
}

// ---------------------------------------------------------------------------
// Exact division and gcd. Internally polynomials are handled recursively as
// dense vectors over t2 with UniPoly (in t1) coefficients.
// ---------------------------------------------------------------------------

namespace {

using BiPoly = std::vector<UniPoly>;  // index = t2-degree

BiPoly to_bipoly(const TLaurent& p) {
    // requires min exponents (0,0)-shifted input
    BiPoly b;
    for (const auto& [m, c] : p.terms()) {
        if (m.e2 >= static_cast<int>(b.size())) b.resize(static_cast<size_t>(m.e2) + 1);
        b[static_cast<size_t>(m.e2)] =
            b[static_cast<size_t>(m.e2)] + UniPoly::monomial(m.e1, c);
    }
    while (!b.empty() && b.back().is_zero()) b.pop_back();
    return b;
}

TLaurent from_bipoly(const BiPoly& b) {
    TLaurent p;
    for (size_t j = 0; j < b.size(); ++j)
        for (size_t i = 0; i < b[j].coeffs().size(); ++i)
            if (b[j].coeffs()[i] != 0)
                p.add_term(TMonomial{static_cast<int>(i), static_cast<int>(j)}, b[j].coeffs()[i]);
    return p;
}

int bideg(const BiPoly& b) { return static_cast<int>(b.size()) - 1; }

// Content of b as a polynomial in t2 over Q[t1].
UniPoly bicontent(const BiPoly& b) {
    UniPoly g;
    for (const auto& c : b) {
        if (c.is_zero()) continue;
        g = UniPoly::gcd(g, c);
        if (g.deg() == 0) break;
    }
    return g;
}

void bidivide_content(BiPoly& b, const UniPoly& ct) {
    if (ct.deg() == 0 && ct.lc() == 1) return;
    for (auto& c : b)
        if (!c.is_zero()) c = c.divexact(ct);
}

// Pseudo-remainder in t2 over Q[t1].
BiPoly biprem(BiPoly a, const BiPoly& b) {
    const UniPoly& lb = b.back();
    int db = bideg(b);
    while (bideg(a) >= db && !a.empty()) {
        UniPoly la = a.back();
        int shift = bideg(a) - db;
        for (auto& c : a) c = c * lb;
        for (int i = 0; i <= db; ++i)
            a[static_cast<size_t>(i + shift)] =
                a[static_cast<size_t>(i + shift)] - la * b[static_cast<size_t>(i)];
        while (!a.empty() && a.back().is_zero()) a.pop_back();
    }
    return a;
}

// gcd of primitive (in the t2-over-t1 sense) bivariate polynomials.
BiPoly biprim_gcd(BiPoly a, BiPoly b) {
    if (a.empty()) return b;
    if (b.empty()) return a;
    if (bideg(a) < bideg(b)) std::swap(a, b);

    // Evaluation shortcut: a univariate gcd at a generic t1 = x bounds the
    // t2-degree of the true gcd; degree 0 certifies coprimality.
    static const long kProbes[] = {2, 3, 5, 7, 11, 13};
    for (long x : kProbes) {
        Rational xr(x);
        if (a.back().eval(xr) == 0 || b.back().eval(xr) == 0) continue;
        std::vector<Rational> av(a.size()), bv(b.size());
        for (size_t i = 0; i < a.size(); ++i) av[i] = a[i].eval(xr);
        for (size_t i = 0; i < b.size(); ++i) bv[i] = b[i].eval(xr);
        UniPoly ga = UniPoly::gcd(UniPoly::from_coeffs(std::move(av)),
                                  UniPoly::from_coeffs(std::move(bv)));
        if (ga.deg() == 0) return BiPoly{UniPoly(Rational(1))};
        break;
    }

    while (!b.empty()) {
        BiPoly r = biprem(a, b);
        a = std::move(b);
        b = std::move(r);
        if (!b.empty()) {
            UniPoly ct = bicontent(b);
            bidivide_content(b, ct);
        }
    }
    return a;
}

}  // namespace

bool TLaurent::divisible_by(const TLaurent& d) const {
    if (d.is_zero()) return false;
    if (is_zero()) return true;
    try {
        (void)divexact(d);
        return true;
    } catch (const std::logic_error&) {
        return false;
    }
}

TLaurent TLaurent::divexact(const TLaurent& d) const {
    if (d.is_zero()) throw std::domain_error("division by zero Laurent polynomial");
    if (is_zero()) return {};
    if (d.is_monomial()) {
        const auto& [m, c] = *d.terms().begin();
        return shifted(-m.e1, -m.e2).scaled(Rational(1) / c);
    }
    TMonomial sa = min_exp(), sd = d.min_exp();
    BiPoly A = to_bipoly(shifted(-sa.e1, -sa.e2));
    BiPoly B = to_bipoly(d.shifted(-sd.e1, -sd.e2));
    // long division in t2 over Q(t1); exactness makes every step polynomial
    BiPoly Q(static_cast<size_t>(std::max(0, bideg(A) - bideg(B))) + 1);
    while (!A.empty() && bideg(A) >= bideg(B)) {
        UniPoly qc = A.back().divexact(B.back());  // throws if not exact
        int shift = bideg(A) - bideg(B);
        Q[static_cast<size_t>(shift)] = qc;
        for (int i = 0; i <= bideg(B); ++i)
            A[static_cast<size_t>(i + shift)] =
                A[static_cast<size_t>(i + shift)] - qc * B[static_cast<size_t>(i)];
        while (!A.empty() && A.back().is_zero()) A.pop_back();
    }
    if (!A.empty()) throw std::logic_error("inexact Laurent division");
    return from_bipoly(Q).shifted(sa.e1 - sd.e1, sa.e2 - sd.e2);
}

TLaurent TLaurent::gcd(const TLaurent& a, const TLaurent& b) {
    if (a.is_zero() && b.is_zero()) return {};
    auto normalize = [](TLaurent g) {
        TMonomial lo = g.min_exp();
        g = g.shifted(-lo.e1, -lo.e2);
        Rational lead = g.terms().begin()->second;  // lex-least coefficient
        return g.scaled(Rational(1) / lead);
    };
    if (a.is_zero()) return normalize(b);
    if (b.is_zero()) return normalize(a);
    if (a.is_monomial() || b.is_monomial()) return one();

    TMonomial sa = a.min_exp(), sb = b.min_exp();
    BiPoly A = to_bipoly(a.shifted(-sa.e1, -sa.e2));
    BiPoly B = to_bipoly(b.shifted(-sb.e1, -sb.e2));

    UniPoly ca = bicontent(A), cb = bicontent(B);
    bidivide_content(A, ca);
    bidivide_content(B, cb);
    UniPoly cg = UniPoly::gcd(ca, cb);

    BiPoly G = biprim_gcd(std::move(A), std::move(B));
    UniPoly gct = bicontent(G);
    bidivide_content(G, gct);

    for (auto& c : G) c = c * cg;
    return normalize(from_bipoly(G));
}

// ---------------------------------------------------------------------------
// Canonical strings and parsing
// ---------------------------------------------------------------------------

std::string TLaurent::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        Rational cc = c;
        if (!first) {
            os << (cc < 0 ? " - " : " + ");
            if (cc < 0) cc = -cc;
        } else {
            if (cc < 0) { os << "-"; cc = -cc; }
            first = false;
        }
        bool has_var = (m.e1 != 0 || m.e2 != 0);
        bool wrote_coeff = false;
        if (!has_var || cc != 1) {
            os << rat_str(cc);
            wrote_coeff = true;
        }
        if (m.e1 != 0) {
            if (wrote_coeff) os << "*";
            os << "t1";
            if (m.e1 != 1) os << "^" << m.e1;
            wrote_coeff = true;
        }
        if (m.e2 != 0) {
            if (wrote_coeff) os << "*";
            os << "t2";
            if (m.e2 != 1) os << "^" << m.e2;
        }
    }
    return os.str();
}

namespace {

struct Lexer {
    std::string s;
    size_t i = 0;
    void skip() { while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i; }
    bool eof() { skip(); return i >= s.size(); }
    char peek() { skip(); return i < s.size() ? s[i] : '\0'; }
    char get() { skip(); return s[i++]; }
};

int parse_int(Lexer& lx) {
    bool neg = false;
    if (lx.peek() == '-') { lx.get(); neg = true; }
    else if (lx.peek() == '+') lx.get();
    if (!std::isdigit(static_cast<unsigned char>(lx.peek())))
        throw std::invalid_argument("expected integer in Laurent expression");
    long v = 0;
    while (lx.i < lx.s.size() && std::isdigit(static_cast<unsigned char>(lx.s[lx.i]))) {
        v = v * 10 + (lx.s[lx.i] - '0');
        if (v > 1000000) throw std::invalid_argument("exponent too large");
        ++lx.i;
    }
    return static_cast<int>(neg ? -v : v);
}

TLaurent parse_sum(Lexer& lx);

TLaurent parse_atom(Lexer& lx) {
    char c = lx.peek();
    if (c == '(') {
        lx.get();
        TLaurent r = parse_sum(lx);
        if (lx.peek() != ')') throw std::invalid_argument("missing ')'");
        lx.get();
        return r;
    }
    if (c == 't') {
        lx.get();
        char which = lx.get();
        if (which != '1' && which != '2') throw std::invalid_argument("unknown variable");
        int e = 1;
        if (lx.peek() == '^') { lx.get(); e = parse_int(lx); }
        return which == '1' ? t1_pow(e) : t2_pow(e);
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
        std::string num;
        while (lx.i < lx.s.size() &&
               (std::isdigit(static_cast<unsigned char>(lx.s[lx.i])) || lx.s[lx.i] == '/')) {
            num += lx.s[lx.i++];
        }
        return TLaurent(rat_parse(num));
    }
    throw std::invalid_argument(std::string("unexpected character '") + c + "' in Laurent expression");
}

TLaurent parse_product(Lexer& lx) {
    TLaurent r = parse_atom(lx);
    while (!lx.eof() && lx.peek() == '*') {
        lx.get();
        r = r * parse_atom(lx);
    }
    return r;
}

TLaurent parse_sum(Lexer& lx) {
    bool neg = false;
    if (lx.peek() == '-') { lx.get(); neg = true; }
    else if (lx.peek() == '+') lx.get();
    TLaurent r = parse_product(lx);
    if (neg) r = -r;
    while (!lx.eof()) {
        char c = lx.peek();
        if (c != '+' && c != '-') break;
        lx.get();
        TLaurent term = parse_product(lx);
        r = (c == '+') ? r + term : r - term;
    }
    return r;
}

}  // namespace

TLaurent TLaurent::parse(const std::string& s) {
    Lexer lx{s};
    if (lx.eof()) throw std::invalid_argument("empty Laurent expression");
    TLaurent r = parse_sum(lx);
    if (!lx.eof()) throw std::invalid_argument("trailing input in Laurent expression: " + s);
    return r;
}

}  // namespace hilbk
