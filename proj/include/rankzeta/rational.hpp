#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace rankzeta {

/// Arbitrary-precision integers and rationals. GMP keeps mpq_class values
/// canonical (lowest terms, positive denominator) through arithmetic; the
/// factory below canonicalizes raw numerator/denominator pairs.
using Int = mpz_class;
using Rat = mpq_class;

inline Rat make_rat(const Int& num, const Int& den) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    Rat r(num, den);
    r.canonicalize();
    return r;
}

inline Int int_from_ull(unsigned long long v) {
    Int r;
    mpz_import(r.get_mpz_t(), 1, 1, sizeof(v), 0, 0, &v);
    return r;
}

/// base^e for e >= 0.
inline Int pow_int(const Int& base, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

/// base^e as a rational; negative exponents allowed (base must be nonzero).
inline Rat pow_rat(const Int& base, long e) {
    if (e >= 0) return Rat(pow_int(base, static_cast<unsigned long>(e)));
    if (base == 0) throw std::invalid_argument("negative power of zero");
    return make_rat(1, pow_int(base, static_cast<unsigned long>(-e)));
}

/// x(x-1)/2 for x >= 0.
inline Int choose2(long x) {
    if (x < 0) throw std::invalid_argument("choose2 of negative argument");
    return Int(x) * Int(x - 1) / 2;
}

/// Ordinary binomial coefficient, zero outside 0 <= k <= n.
inline Int binom(long n, long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

/// Floor division for possibly negative numerators (C++ '/' truncates).
inline long floor_div(long a, long b) {
    long q = a / b, r = a % b;
    return (r != 0 && ((r < 0) != (b < 0))) ? q - 1 : q;
}

inline long ceil_div(long a, long b) { return -floor_div(-a, b); }

inline bool is_integer(const Rat& r) { return r.get_den() == 1; }

/// "p/q", or bare "p" when the denominator is 1.
inline std::string rat_to_string(const Rat& r) {
    if (is_integer(r)) return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

inline Rat rat_from_string(const std::string& s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rat(Int(s));
        return make_rat(Int(s.substr(0, slash)), Int(s.substr(slash + 1)));
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument("malformed rational: \"" + s + "\"");
    }
}

}  // namespace rankzeta
