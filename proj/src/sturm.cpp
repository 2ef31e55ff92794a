#include "bernpoly/sturm.hpp"

#include <stdexcept>
#include <utility>

#include "intpoly.hpp"

namespace bernpoly {

namespace {

// Count sign flips across a sequence of signs, zeros skipped.
struct VariationCounter {
    int prev = 0;
    int count = 0;
    void feed(int s) {
        if (s == 0) return;
        if (prev != 0 && s != prev) ++count;
        prev = s;
    }
};

detail::IntPoly to_int_poly(const RatPoly& p) {
    auto [coeffs, den] = p.integer_cleared();
    (void)den;  // positive scaling is irrelevant to signs
    return coeffs;
}

RatPoly from_int_poly(const detail::IntPoly& p) {
    std::vector<Rational> coeffs(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) coeffs[i] = Rational(p[i]);
    return RatPoly(std::move(coeffs));
}

// Divides out every (x - r) factor; returns the multiplicity removed.
int deflate_root(RatPoly& p, const Rational& r) {
    int mult = 0;
    RatPoly factor{-r, Rational(1)};
    while (!p.is_constant() && p.eval(r) == 0) {
        p = p.divexact(factor);
        ++mult;
    }
    return mult;
}

}  // namespace

SturmChain SturmChain::build(const RatPoly& p) {
    if (p.is_zero()) throw std::invalid_argument("SturmChain: zero polynomial");
    SturmChain chain;
    chain.members_ = detail::sturm_prs(to_int_poly(p));
    return chain;
}

RatPoly SturmChain::member(std::size_t i) const { return from_int_poly(members_.at(i)); }

int SturmChain::last_degree() const { return detail::deg(members_.back()); }

RatPoly SturmChain::gcd_with_derivative() const {
    if (base_squarefree()) return RatPoly::constant(Rational(1));
    return from_int_poly(members_.back()).monic();
}

int SturmChain::variations_at(const Rational& x) const {
    VariationCounter v;
    const Integer& num = x.get_num();
    const Integer& den = x.get_den();
    for (const auto& m : members_) v.feed(detail::sign_at(m, num, den));
    return v.count;
}

int SturmChain::variations_at_pos_inf() const {
    VariationCounter v;
    for (const auto& m : members_) v.feed(m.empty() ? 0 : sgn(m.back()));
    return v.count;
}

int SturmChain::variations_at_neg_inf() const {
    VariationCounter v;
    for (const auto& m : members_) {
        if (m.empty()) {
            v.feed(0);
            continue;
        }
        int s = sgn(m.back());
        if (detail::deg(m) % 2 == 1) s = -s;
        v.feed(s);
    }
    return v.count;
}

long SturmChain::count_half_open(const Rational& a, const Rational& b) const {
    if (a > b) throw std::invalid_argument("count_half_open: a > b");
    if (a == b) return 0;
    return variations_at(a) - variations_at(b);
}

long SturmChain::count_above(const Rational& a) const {
    return variations_at(a) - variations_at_pos_inf();
}

long SturmChain::count_all() const {
    return variations_at_neg_inf() - variations_at_pos_inf();
}

long sturm_count(const RatPoly& p, const Interval& iv) {
    if (p.is_zero()) throw std::invalid_argument("sturm_count: zero polynomial");
    if (p.is_constant()) return 0;

    // Normalize to a count over the open interval plus exact endpoint
    // decisions, so endpoint roots never reach the chain evaluation.
    bool count_lo = !iv.lo_open && p.eval(iv.lo) == 0;
    bool count_hi = !iv.hi_open && !iv.is_point() && p.eval(iv.hi) == 0;
    if (iv.is_point()) return count_lo ? 1 : 0;

    RatPoly core = p;
    long endpoint_roots = (count_lo ? 1 : 0) + (count_hi ? 1 : 0);
    deflate_root(core, iv.lo);
    deflate_root(core, iv.hi);
    if (core.is_constant()) return endpoint_roots;

    SturmChain chain = SturmChain::build(core);
    return endpoint_roots + chain.count_half_open(iv.lo, iv.hi);
}

}  // namespace bernpoly
