#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace repst {

using BigInt = mpz_class;
using Rational = mpq_class;

inline BigInt factorial(unsigned n) {
    BigInt f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return f;
}

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

// gmpxx has no long long overloads; long is 64-bit on every supported target
static_assert(sizeof(long) == sizeof(long long));
inline BigInt to_big(long long v) { return BigInt(static_cast<long>(v)); }
inline Rational to_rat(long long v) { return Rational(static_cast<long>(v)); }

// Exact conversion; throws if q is not an integer or does not fit.
inline long long to_long_checked(const Rational& q) {
    if (!is_integer(q)) throw std::invalid_argument("not an integer: " + q.get_str());
    const BigInt& n = q.get_num();
    if (!n.fits_slong_p()) throw std::overflow_error("integer too large: " + n.get_str());
    return n.get_si();
}

inline long long to_long_checked(const BigInt& n) {
    if (!n.fits_slong_p()) throw std::overflow_error("integer too large: " + n.get_str());
    return n.get_si();
}

// Parses "a" or "a/b" in base 10. Result is canonicalized.
inline Rational rational_from_string(const std::string& s) {
    Rational q;
    if (q.set_str(s, 10) != 0) throw std::invalid_argument("bad rational literal: " + s);
    if (q.get_den() == 0) throw std::invalid_argument("zero denominator: " + s);
    q.canonicalize();
    return q;
}

inline std::string rational_to_string(const Rational& q) { return q.get_str(); }

inline bool is_perfect_square(const BigInt& n) {
    if (n < 0) return false;
    return mpz_perfect_square_p(n.get_mpz_t()) != 0;
}

}  // namespace repst
