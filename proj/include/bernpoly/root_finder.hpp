#ifndef BERNPOLY_ROOT_FINDER_HPP
#define BERNPOLY_ROOT_FINDER_HPP

#include <map>
#include <memory>
#include <mutex>
#include <utility>
#include <vector>

#include "bernpoly/bernoulli.hpp"
#include "bernpoly/interval.hpp"
#include "bernpoly/ratpoly.hpp"
#include "bernpoly/sturm.hpp"

namespace bernpoly {

/* Disjoint rational intervals in increasing order, each containing exactly
 * one distinct real root of the analyzed polynomial, with the matching
 * multiplicities. Exactly-known rational roots appear as closed point
 * intervals; every other interval is half-open (lo, hi].
 */
struct RootIsolation {
    std::vector<Interval> intervals;
    std::vector<int> multiplicities;

    long distinct() const { return static_cast<long>(intervals.size()); }
    long with_multiplicity() const;
};

/* Per-index summary of the three root statistics of B_n: the number of
 * real roots (distinct and with multiplicity), an enclosure of the maximal
 * real root y_n of width <= the requested precision, and the exact integer
 * d_n = ceil(y_n), certified by sign tests and Sturm counts alone - never
 * by rounding a floating approximation, which goes wrong whenever y_n sits
 * at or near an integer (y_3 = 1 exactly).
 */
struct RootReport {
    long n = 0;
    long c_distinct = 0;
    long c_with_multiplicity = 0;
    Interval y_enclosure;
    long d = 0;
    bool y_is_exact_integer = false;
};

/* Root analysis of one polynomial, shared by every query about it.
 *
 * Exact rational roots at the candidate points (for Bernoulli polynomials:
 * 0, 1/2, 1) are detected by exact evaluation and deflated out with their
 * multiplicities; one Sturm chain of the remaining core then answers every
 * interval-count query without ever evaluating the chain at a root.
 * Multiplicities of core roots come from the gcd tower p, gcd(p, p'),
 * gcd(gcd, gcd'), ... (trivial when the core is squarefree, the observed
 * case for every Bernoulli polynomial tested).
 */
class PolyRootAnalysis {
public:
    // candidates: rational points probed for exact roots before the chain
    // is built. Requires p != 0.
    explicit PolyRootAnalysis(RatPoly p, std::vector<Rational> candidates = {});

    const RatPoly& poly() const { return p_; }
    bool squarefree() const;

    // Distinct / with-multiplicity root counts over all of R.
    long count_distinct() const;
    long count_with_multiplicity() const;
    // Kind-aware interval counts.
    long count_distinct_in(const Interval& iv) const;
    long count_with_multiplicity_in(const Interval& iv) const;
    // Distinct roots in (x, +inf).
    long count_greater_than(const Rational& x) const;

    RootIsolation isolate() const;

    // Enclosure of the maximal real root with width <= eps (a point
    // interval when the root is hit exactly), plus the is-exact-integer
    // flag. Throws std::domain_error when p has no real roots.
    std::pair<Interval, bool> max_root(const Rational& eps) const;
    // ceil(max real root), exact.
    Integer ceil_max_root() const;

private:
    struct Level;  // one gcd-tower level: deflated core + chain

    long count_level_interval(const Level& lv, const Interval& iv) const;
    // Unit window (m, m+1] holding the topmost core root.
    long top_core_window(const Level& lv) const;

    RatPoly p_;
    std::vector<Rational> candidates_;
    std::vector<std::shared_ptr<Level>> tower_;  // level 0 = p, level j = gcd of level j-1 with its derivative
};

/* The paper-facing statistics for Bernoulli polynomials, memoized per
 * index so that every verification suite in one process shares the chains.
 * Pure results; safe for concurrent use.
 */
class RootFinder {
public:
    explicit RootFinder(BernoulliEngine& engine) : engine_(engine) {}

    // (c_distinct, c_with_multiplicity) over all of R. Requires n >= 1.
    std::pair<long, long> real_root_count(long n);
    RootIsolation isolate_roots(long n);
    std::pair<Interval, bool> max_root(long n, const Rational& eps);
    // d_n as a plain integer (fits easily at any tractable degree).
    long ceil_max_root(long n);
    // 4 * d_n - 3; requires n % 4 == 1. Fast path that must agree with
    // real_root_count.
    long structural_count(long n);

    // Distinct / multiplicity-aware counts of B_n on iv (shared analysis).
    long count_in(long n, const Interval& iv);
    long count_mult_in(long n, const Interval& iv);

    RootReport report(long n, const Rational& eps = default_eps());

    std::shared_ptr<const PolyRootAnalysis> analysis(long n);

    static Rational default_eps();  // 2^-40

    BernoulliEngine& engine() { return engine_; }

private:
    BernoulliEngine& engine_;
    std::mutex mutex_;
    std::map<long, std::shared_ptr<const PolyRootAnalysis>> cache_;
};

/* Shrinks an isolating interval of a simple root of p to width <= eps by
 * exact sign bisection. The input must bracket exactly one simple root
 * (opposite endpoint signs or an exact zero at an endpoint); equal nonzero
 * endpoint signs throw std::invalid_argument. Returns a point interval
 * whenever an evaluation hits the root exactly.
 */
Interval refine(const RatPoly& p, const Interval& iv, const Rational& eps);

}  // namespace bernpoly

#endif
