#ifndef BERNPOLY_RATPOLY_HPP
#define BERNPOLY_RATPOLY_HPP

#include <initializer_list>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "bernpoly/rational.hpp"

namespace bernpoly {

/* Dense univariate polynomial over exact rationals.
 *
 * Coefficients are stored in ascending degree with trailing zeros trimmed.
 * The zero polynomial is the empty sequence and reports degree() == -1.
 * All operations are pure; a RatPoly is immutable once built, so values can
 * be shared freely across threads.
 *
 * Bernoulli polynomials are dense in the monomial basis, which is why a
 * dense representation is used throughout. GCD and squarefree computations
 * go through a subresultant-style pseudo-remainder sequence over primitive
 * integer parts (see sturm.cpp); doing naive Euclid over rationals blows up
 * the coefficient bit-length at the degrees this library targets.
 */
class RatPoly {
public:
    RatPoly() = default;
    RatPoly(std::initializer_list<Rational> ascending) : c_(ascending) { trim(); }
    explicit RatPoly(std::vector<Rational> ascending) : c_(std::move(ascending)) { trim(); }

    static RatPoly zero() { return RatPoly(); }
    static RatPoly constant(Rational a);
    // a * x^k
    static RatPoly monomial(int k, Rational a = Rational(1));

    // -1 for the zero polynomial.
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }

    // Coefficient of x^i; zero outside the stored range.
    const Rational& coeff(int i) const;
    const std::vector<Rational>& coeffs() const { return c_; }
    // Leading coefficient; throws for the zero polynomial.
    const Rational& leading() const;

    bool operator==(const RatPoly& o) const { return c_ == o.c_; }
    bool operator!=(const RatPoly& o) const { return c_ != o.c_; }

    RatPoly operator-() const;
    RatPoly operator+(const RatPoly& o) const;
    RatPoly operator-(const RatPoly& o) const;
    RatPoly operator*(const RatPoly& o) const;
    RatPoly operator*(const Rational& s) const;
    RatPoly operator/(const Rational& s) const;

    // Exact Horner evaluation.
    Rational eval(const Rational& x) const;

    RatPoly derivative() const;
    // Antiderivative with zero constant term.
    RatPoly antiderivative() const;
    // Exact definite integral over [lo, hi].
    Rational integral(const Rational& lo, const Rational& hi) const;

    // q with q(x) = p(a*x + b), exact. Requires a != 0 (a Taylor shift when
    // a == 1, scaling composed with a shift otherwise).
    RatPoly compose_affine(const Rational& a, const Rational& b) const;

    // Euclidean division: returns (quotient, remainder) with
    // *this == q*d + r and deg r < deg d. Requires d != 0.
    std::pair<RatPoly, RatPoly> divmod(const RatPoly& d) const;
    // Exact quotient; throws if the remainder is nonzero.
    RatPoly divexact(const RatPoly& d) const;

    // Monic greatest common divisor. gcd(p, 0) = monic p. Requires not both
    // zero. Backed by the primitive-part pseudo-remainder sequence.
    static RatPoly gcd(const RatPoly& p, const RatPoly& q);

    // p / gcd(p, p'), made monic: same distinct roots, all simple.
    // Requires p != 0.
    RatPoly squarefree_part() const;

    // 1 + max|a_i| / |a_deg| over the non-leading coefficients: every real
    // root lies strictly inside (-M, M). Requires degree >= 1.
    Rational cauchy_root_bound() const;

    RatPoly monic() const;

    // Clears denominators: returns integer coefficients c and a positive
    // common denominator D with *this == (sum c_i x^i) / D.
    std::pair<std::vector<Integer>, Integer> integer_cleared() const;

    std::string to_string(const char* var = "x") const;

private:
    std::vector<Rational> c_;

    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
};

RatPoly operator*(const Rational& s, const RatPoly& p);
std::ostream& operator<<(std::ostream& os, const RatPoly& p);

}  // namespace bernpoly

#endif
