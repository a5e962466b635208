#pragma once

// Exact rational arithmetic over GMP. mpq_class keeps values canonical
// (positive denominator, coprime) as long as every entry point
// canonicalizes, so all construction goes through the helpers here.

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace hilbk {

using Rational = mpq_class;

inline Rational rat(long num, long den = 1) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

// Accepts "7", "-7", "7/3"; throws on anything else.
inline Rational rat_parse(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty rational literal");
    Rational r;
    if (r.set_str(s, 10) != 0)
        throw std::invalid_argument("bad rational literal: " + s);
    if (r.get_den() == 0) throw std::invalid_argument("zero denominator: " + s);
    r.canonicalize();
    return r;
}

// Canonical form: "n" when the denominator is 1, else "n/d".
inline std::string rat_str(const Rational& r) { return r.get_str(); }

inline Rational rat_pow(const Rational& base, long e) {
    if (e == 0) return Rational(1);
    if (base == 0) {
        if (e < 0) throw std::domain_error("0^negative");
        return Rational(0);
    }
    Rational b = e > 0 ? base : Rational(1) / base;
    unsigned long n = static_cast<unsigned long>(e > 0 ? e : -e);
    Rational acc(1);
    while (n) {
        if (n & 1) acc *= b;
        b *= b;
        n >>= 1;
    }
    return acc;
}

inline long rat_to_long(const Rational& r) {
    if (r.get_den() != 1) throw std::domain_error("not an integer: " + rat_str(r));
    if (!r.get_num().fits_slong_p()) throw std::overflow_error("integer too large");
    return r.get_num().get_si();
}

}  // namespace hilbk
