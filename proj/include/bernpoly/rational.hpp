#ifndef BERNPOLY_RATIONAL_HPP
#define BERNPOLY_RATIONAL_HPP

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

/* Exact arithmetic carrier types. All coefficient and endpoint arithmetic
 * in this project is done over GMP rationals; nothing in the core library
 * ever rounds. Rationals are kept canonical (reduced, positive denominator),
 * which mpq_class guarantees for arithmetic results; raw construction goes
 * through make_rational() so the invariant holds everywhere.
 */

namespace bernpoly {

using Integer = mpz_class;
using Rational = mpq_class;

// Reduced rational with positive denominator. Throws on zero denominator.
inline Rational make_rational(Integer num, Integer den) {
    if (den == 0) throw std::invalid_argument("make_rational: zero denominator");
    Rational q(std::move(num), std::move(den));
    q.canonicalize();
    return q;
}

inline int sign(const Rational& q) { return sgn(q); }
inline int sign(const Integer& z) { return sgn(z); }

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

// Largest integer <= q.
inline Integer floor_to_integer(const Rational& q) {
    Integer r;
    mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return r;
}

// Smallest integer >= q.
inline Integer ceil_to_integer(const Rational& q) {
    Integer r;
    mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return r;
}

inline Integer pow_integer(const Integer& base, unsigned long e) {
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

inline Rational pow_rational(const Rational& base, unsigned long e) {
    Rational r;
    mpz_pow_ui(mpq_numref(r.get_mpq_t()), base.get_num_mpz_t(), e);
    mpz_pow_ui(mpq_denref(r.get_mpq_t()), base.get_den_mpz_t(), e);
    return r;
}

// Always "num/den", even for integers ("-1/2", "0/1", "5/1").
inline std::string to_fraction_string(const Rational& q) {
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

// Parses "a", "a/b", plain decimals ("0.25") and scientific decimals
// ("1e-6", "2.5e-3") into an exact rational.
Rational parse_rational(std::string_view text);

}  // namespace bernpoly

#endif
