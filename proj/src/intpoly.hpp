#ifndef BERNPOLY_SRC_INTPOLY_HPP
#define BERNPOLY_SRC_INTPOLY_HPP

#include <vector>

#include "bernpoly/rational.hpp"

/* Integer-polynomial working layer behind RatPoly::gcd and SturmChain.
 * Polynomials are vectors of mpz coefficients, ascending degree, trailing
 * zeros trimmed; the zero polynomial is the empty vector.
 */

namespace bernpoly::detail {

using IntPoly = std::vector<Integer>;

inline int deg(const IntPoly& p) { return static_cast<int>(p.size()) - 1; }

inline void trim(IntPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

IntPoly derivative(const IntPoly& p);

// Positive gcd of all coefficients (0 for the zero polynomial).
Integer content(const IntPoly& p);

// Divides out the content; sign of the leading coefficient is preserved.
void make_primitive(IntPoly& p);

// Pseudo-remainder: lc(v)^(deg u - deg v + 1) * u  mod  v.
// Requires deg u >= deg v >= 0.
IntPoly pseudo_remainder(IntPoly u, const IntPoly& v);

// Sign of p evaluated at num/den (den > 0), exactly:
// sign( sum p_i num^i den^(deg-i) ).
int sign_at(const IntPoly& p, const Integer& num, const Integer& den);

/* Primitive pseudo-remainder sequence seeded with (p, p'), with the signs
 * arranged so that every member is a positive rational multiple of the
 * exact Sturm chain member (p, p', -rem(p, p'), ...). Terminates at the
 * last nonzero member: a constant iff p is squarefree, a multiple of
 * gcd(p, p') otherwise.
 */
std::vector<IntPoly> sturm_prs(const IntPoly& p);

// Last member of the PRS of (p, q) (not sign-tracked): a constant iff
// gcd(p, q) = 1; otherwise a multiple of the gcd. Both nonzero.
IntPoly gcd_prs(IntPoly p, IntPoly q);

}  // namespace bernpoly::detail

#endif
