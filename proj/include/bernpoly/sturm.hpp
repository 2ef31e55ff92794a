#ifndef BERNPOLY_STURM_HPP
#define BERNPOLY_STURM_HPP

#include <cstddef>
#include <vector>

#include "bernpoly/interval.hpp"
#include "bernpoly/ratpoly.hpp"

namespace bernpoly {

/* Sturm chain of a polynomial p: the sequence p, p', and then each
 * negated remainder of the previous two, down to a nonzero constant when p
 * is squarefree (down to gcd(p, p') otherwise).
 *
 * Members are stored as primitive integer polynomials, each a positive
 * rational multiple of the exact chain member; positive scaling preserves
 * every sign, so variation counts are unaffected. The remainders are
 * computed with integer pseudo-division and primitive-part normalization
 * (Knuth vol. 2, 4.6.1) instead of rational Euclid, which keeps the
 * coefficient growth at subresultant size.
 *
 * For a < b with p(a) != 0 and p(b) != 0, variations_at(a) -
 * variations_at(b) is the number of distinct real roots of p in (a, b].
 * This holds for non-squarefree p as well: the chain then ends at a
 * multiple of gcd(p, p'), and dividing every member by it scales the whole
 * sign column at any non-root of p by a common nonzero factor.
 */
class SturmChain {
public:
    // Requires p != 0. Constant p yields the one-member chain.
    static SturmChain build(const RatPoly& p);

    std::size_t size() const { return members_.size(); }
    // Chain member as a rational polynomial (a positive multiple of the
    // textbook member; intended for inspection and tests).
    RatPoly member(std::size_t i) const;
    int last_degree() const;

    // True iff the chain terminates at a nonzero constant.
    bool base_squarefree() const { return last_degree() == 0 || members_.size() == 1; }
    // Monic gcd(p, p'); the constant 1 when p is squarefree.
    RatPoly gcd_with_derivative() const;

    // Sign variations of the member values at x, zeros skipped.
    int variations_at(const Rational& x) const;
    // Sign variations in the limits x -> -inf / +inf (leading-term signs).
    int variations_at_neg_inf() const;
    int variations_at_pos_inf() const;

    // Distinct real roots of p in (a, b], a <= b. Requires that neither a
    // nor b is a root of p (callers handle root endpoints; see
    // sturm_count).
    long count_half_open(const Rational& a, const Rational& b) const;
    // Distinct real roots of p in (a, +inf).
    long count_above(const Rational& a) const;
    // All distinct real roots of p.
    long count_all() const;

private:
    std::vector<std::vector<Integer>> members_;  // primitive integer polys, ascending coeffs
};

/* Exact number of distinct real roots of p in iv, honoring the endpoint
 * kind flags. The canonical convention is half-open (lo, hi]: a root at hi
 * counts, a root at lo does not. Endpoints that are roots are detected by
 * exact evaluation and factored out before the chain is consulted, so any
 * combination of flags and endpoint roots is exact. Degenerate intervals:
 * (a, a] is empty, [a, a] holds a root iff p(a) == 0.
 *
 * Signals (throws std::invalid_argument) on the zero polynomial. The
 * contract of interest is squarefree p; multiple roots are nevertheless
 * counted correctly, once per distinct root.
 */
long sturm_count(const RatPoly& p, const Interval& iv);

}  // namespace bernpoly

#endif
