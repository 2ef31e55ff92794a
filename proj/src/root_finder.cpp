#include "bernpoly/root_finder.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>

namespace bernpoly {

namespace {

// Point strictly inside (a, b) that is not a root of p; bisection toward a
// terminates because p has finitely many roots.
Rational non_root_split(const RatPoly& p, const Rational& a, const Rational& b) {
    Rational x = (a + b) / 2;
    while (p.eval(x) == 0) x = (a + x) / 2;
    return x;
}

}  // namespace

long RootIsolation::with_multiplicity() const {
    long total = 0;
    for (int m : multiplicities) total += m;
    return total;
}

/* One gcd-tower level. The level-j polynomial is
 *     core * prod (x - r)^m  over point_roots (r, m),
 * where core has no root at any tracked point. Level j+1 is
 * gcd(level_j, level_j'): its core is gcd(core_j, core_j') (read off the
 * end of the Sturm chain) and its point roots are those of level j with
 * multiplicity reduced by one. A root of multiplicity m in p shows up in
 * levels 0..m-1, so summing distinct counts over the tower counts roots
 * with multiplicity.
 */
struct PolyRootAnalysis::Level {
    RatPoly core;
    std::vector<std::pair<Rational, int>> point_roots;  // ascending by root
    std::optional<SturmChain> chain;                    // built when deg core >= 1
    bool core_squarefree = true;

    bool trivial() const { return core.is_constant() && point_roots.empty(); }

    // Core roots in (a, b]. The variation difference is exact at root
    // endpoints too when the core is squarefree (the zero-skipping count
    // equals its right limit); otherwise fall back to the generic path.
    long chain_count(const Rational& a, const Rational& b) const {
        if (!chain) return 0;
        if (core_squarefree || (core.eval(a) != 0 && core.eval(b) != 0))
            return chain->count_half_open(a, b);
        return sturm_count(core, Interval::half_open(a, b));
    }
    long chain_count_above(const Rational& a) const {
        if (!chain) return 0;
        if (core_squarefree || core.eval(a) != 0) return chain->count_above(a);
        return sturm_count(core, Interval::half_open(a, core.cauchy_root_bound()));
    }
    long chain_count_all() const { return chain ? chain->count_all() : 0; }

    bool point_root_inside(const Rational& a, const Rational& b) const {  // in (a, b]
        for (const auto& [r, m] : point_roots)
            if (a < r && r <= b) return true;
        return false;
    }
};

PolyRootAnalysis::PolyRootAnalysis(RatPoly p, std::vector<Rational> candidates)
    : p_(std::move(p)), candidates_(std::move(candidates)) {
    if (p_.is_zero()) throw std::invalid_argument("PolyRootAnalysis: zero polynomial");

    auto level0 = std::make_shared<Level>();
    level0->core = p_;
    for (const Rational& r : candidates_) {
        int mult = 0;
        RatPoly factor{-r, Rational(1)};
        while (!level0->core.is_constant() && level0->core.eval(r) == 0) {
            level0->core = level0->core.divexact(factor);
            ++mult;
        }
        if (mult > 0) level0->point_roots.emplace_back(r, mult);
    }
    std::sort(level0->point_roots.begin(), level0->point_roots.end(),
              [](const auto& x, const auto& y) { return x.first < y.first; });

    auto finish_level = [](Level& lv) {
        if (lv.core.degree() >= 1) {
            lv.chain = SturmChain::build(lv.core);
            lv.core_squarefree = lv.chain->base_squarefree();
        }
    };
    finish_level(*level0);
    tower_.push_back(std::move(level0));

    while (!tower_.back()->trivial()) {
        const Level& prev = *tower_.back();
        auto next = std::make_shared<Level>();
        next->core = prev.chain ? prev.chain->gcd_with_derivative() : RatPoly::constant(Rational(1));
        for (const auto& [r, m] : prev.point_roots)
            if (m >= 2) next->point_roots.emplace_back(r, m - 1);
        if (next->trivial()) break;
        finish_level(*next);
        tower_.push_back(std::move(next));
    }
}

bool PolyRootAnalysis::squarefree() const {
    const Level& lv = *tower_.front();
    if (!lv.core_squarefree) return false;
    for (const auto& [r, m] : lv.point_roots)
        if (m > 1) return false;
    return true;
}

long PolyRootAnalysis::count_distinct() const {
    const Level& lv = *tower_.front();
    return static_cast<long>(lv.point_roots.size()) + lv.chain_count_all();
}

long PolyRootAnalysis::count_with_multiplicity() const {
    long total = 0;
    for (const auto& lv : tower_)
        total += static_cast<long>(lv->point_roots.size()) + lv->chain_count_all();
    return total;
}

long PolyRootAnalysis::count_level_interval(const Level& lv, const Interval& iv) const {
    auto level_root_at = [&lv](const Rational& x) {
        for (const auto& [r, m] : lv.point_roots)
            if (r == x) return true;
        return lv.core.degree() >= 1 && lv.core.eval(x) == 0;
    };
    if (iv.is_point()) return level_root_at(iv.lo) ? 1 : 0;

    long n = 0;
    for (const auto& [r, m] : lv.point_roots)
        if (iv.contains(r)) ++n;

    if (lv.core.degree() < 1) return n;
    long c = lv.chain_count(iv.lo, iv.hi);  // (lo, hi]: root at hi in, root at lo out
    if (iv.hi_open && lv.core.eval(iv.hi) == 0) --c;
    if (!iv.lo_open && lv.core.eval(iv.lo) == 0) ++c;
    return n + c;
}

long PolyRootAnalysis::count_distinct_in(const Interval& iv) const {
    return count_level_interval(*tower_.front(), iv);
}

long PolyRootAnalysis::count_greater_than(const Rational& x) const {
    const Level& lv = *tower_.front();
    long n = 0;
    for (const auto& [r, m] : lv.point_roots)
        if (r > x) ++n;
    return n + lv.chain_count_above(x);
}

long PolyRootAnalysis::count_with_multiplicity_in(const Interval& iv) const {
    long total = 0;
    for (const auto& lv : tower_) total += count_level_interval(*lv, iv);
    return total;
}

RootIsolation PolyRootAnalysis::isolate() const {
    const Level& lv = *tower_.front();
    struct Entry {
        Interval iv;
        int mult;
    };
    std::vector<Entry> entries;
    for (const auto& [r, m] : lv.point_roots) entries.push_back({Interval::point(r), m});

    if (lv.chain && lv.chain_count_all() > 0) {
        // Shrink the universe to an integer window before bisecting: the
        // Cauchy bound explodes with the coefficients, and chain
        // evaluations at astronomically wide midpoints dominate the cost
        // at high degree. Integer-endpoint counts are cheap.
        const long total = lv.chain_count_all();
        long hi_int = top_core_window(lv) + 1;
        long lo_int = hi_int - 1;
        for (long step = 1; lv.chain_count(Rational(lo_int), Rational(hi_int)) < total; step *= 2)
            lo_int -= step;
        struct Item {
            Rational a, b;
            long count;
        };
        // Bisection on exact counts; the half-open convention makes every
        // split exactly additive. An interval is accepted once it holds a
        // single core root and no point root, so the final list isolates
        // the roots of the full polynomial.
        std::vector<Item> stack{{Rational(lo_int), Rational(hi_int), total}};
        while (!stack.empty()) {
            Item it = std::move(stack.back());
            stack.pop_back();
            if (it.count == 0) continue;
            if (it.count == 1 && !lv.point_root_inside(it.a, it.b)) {
                int mult = 1;
                for (std::size_t j = 1; j < tower_.size(); ++j)
                    mult += static_cast<int>(
                        count_level_interval(*tower_[j], Interval::half_open(it.a, it.b)));
                entries.push_back({Interval::half_open(it.a, it.b), mult});
                continue;
            }
            Rational mid = non_root_split(lv.core, it.a, it.b);
            long left = lv.chain_count(it.a, mid);
            stack.push_back({it.a, mid, left});
            stack.push_back({mid, it.b, it.count - left});
        }
    }

    std::sort(entries.begin(), entries.end(), [](const Entry& x, const Entry& y) {
        if (x.iv.lo != y.iv.lo) return x.iv.lo < y.iv.lo;
        return !x.iv.lo_open && y.iv.lo_open;  // point [r,r] before (r, b]
    });

    RootIsolation iso;
    iso.intervals.reserve(entries.size());
    iso.multiplicities.reserve(entries.size());
    for (auto& e : entries) {
        iso.intervals.push_back(std::move(e.iv));
        iso.multiplicities.push_back(e.mult);
    }
    return iso;
}

long PolyRootAnalysis::top_core_window(const Level& lv) const {
    long m = 0;
    if (lv.chain_count_above(Rational(0)) == 0) {
        while (lv.chain_count_above(Rational(m - 1)) == 0) --m;
        --m;
    } else {
        while (lv.chain_count_above(Rational(m + 1)) > 0) ++m;
    }
    return m;  // topmost core root lies in (m, m+1]
}

std::pair<Interval, bool> PolyRootAnalysis::max_root(const Rational& eps) const {
    if (eps <= 0) throw std::invalid_argument("max_root: eps must be positive");
    const Level& lv = *tower_.front();
    std::optional<Rational> top_point;
    if (!lv.point_roots.empty()) top_point = lv.point_roots.back().first;

    bool core_wins = false;
    if (lv.chain && lv.chain_count_all() > 0)
        core_wins = !top_point || lv.chain_count_above(*top_point) > 0;
    if (!core_wins) {
        if (!top_point) throw std::domain_error("max_root: polynomial has no real roots");
        return {Interval::point(*top_point), is_integer(*top_point)};
    }

    long m = top_core_window(lv);
    Rational lo(m), hi(m + 1);

    // Shrink to the single topmost root with no point root inside.
    long count = lv.chain_count(lo, hi);
    while (count != 1 || lv.point_root_inside(lo, hi)) {
        Rational mid = non_root_split(lv.core, lo, hi);
        long right = lv.chain_count(mid, hi);
        if (right > 0) {
            lo = mid;
            count = right;
        } else {
            hi = mid;
            count = lv.chain_count(lo, hi);
        }
    }

    int slo = sign(lv.core.eval(lo)), shi = sign(lv.core.eval(hi));
    if (shi == 0 && hi - lo <= eps) return {Interval::point(hi), is_integer(hi)};
    if (slo != 0 && shi != 0 && slo != shi) {
        // Simple-root fast path: exact sign bisection on the core alone.
        while (hi - lo > eps) {
            Rational mid = (lo + hi) / 2;
            int sm = sign(lv.core.eval(mid));
            if (sm == 0) return {Interval::point(mid), is_integer(mid)};
            if (sm == slo)
                lo = mid;
            else
                hi = mid;
        }
    } else {
        // Root at an endpoint or an even-multiplicity top root: narrow on
        // counts instead of signs.
        while (hi - lo > eps) {
            Rational mid = (lo + hi) / 2;
            if (lv.core.eval(mid) == 0) {
                if (lv.chain_count_above(mid) == 0) return {Interval::point(mid), is_integer(mid)};
                mid = non_root_split(lv.core, mid, hi);
            }
            if (lv.chain_count(mid, hi) > 0)
                lo = mid;
            else
                hi = mid;
        }
    }
    return {Interval::half_open(lo, hi), false};
}

Integer PolyRootAnalysis::ceil_max_root() const {
    const Level& lv = *tower_.front();
    std::optional<Rational> top_point;
    if (!lv.point_roots.empty()) top_point = lv.point_roots.back().first;

    bool core_wins = false;
    if (lv.chain && lv.chain_count_all() > 0)
        core_wins = !top_point || lv.chain_count_above(*top_point) > 0;
    if (!core_wins) {
        if (!top_point) throw std::domain_error("ceil_max_root: polynomial has no real roots");
        return ceil_to_integer(*top_point);
    }
    // Top core root sits in (m, m+1], so its ceiling is m+1; core_wins
    // rules out a point root above it.
    return Integer(top_core_window(lv) + 1);
}

Interval refine(const RatPoly& p, const Interval& iv, const Rational& eps) {
    if (eps <= 0) throw std::invalid_argument("refine: eps must be positive");
    Rational lo = iv.lo, hi = iv.hi;
    int slo = sign(p.eval(lo)), shi = sign(p.eval(hi));
    if (slo == 0) return Interval::point(lo);
    if (shi == 0) return Interval::point(hi);
    if (slo == shi)
        throw std::invalid_argument("refine: equal nonzero signs at both endpoints");
    while (hi - lo > eps) {
        Rational mid = (lo + hi) / 2;
        int sm = sign(p.eval(mid));
        if (sm == 0) return Interval::point(mid);
        if (sm == slo)
            lo = mid;
        else
            hi = mid;
    }
    return Interval(lo, hi, iv.lo_open, iv.hi_open);
}

// ---------------------------------------------------------------------
// RootFinder: Bernoulli-indexed wrappers sharing one analysis per index.

namespace {
const std::vector<Rational>& bernoulli_candidates() {
    static const std::vector<Rational> points{Rational(0), make_rational(1, 2), Rational(1)};
    return points;
}
}  // namespace

Rational RootFinder::default_eps() { return make_rational(1, pow_integer(2, 40)); }

std::shared_ptr<const PolyRootAnalysis> RootFinder::analysis(long n) {
    if (n < 1) throw std::invalid_argument("RootFinder: requires n >= 1");
    {
        std::lock_guard<std::mutex> lock(mutex_);
        if (auto it = cache_.find(n); it != cache_.end()) return it->second;
    }
    auto fresh = std::make_shared<const PolyRootAnalysis>(engine_.polynomial(n), bernoulli_candidates());
    std::lock_guard<std::mutex> lock(mutex_);
    auto [it, inserted] = cache_.emplace(n, std::move(fresh));
    return it->second;
}

std::pair<long, long> RootFinder::real_root_count(long n) {
    auto a = analysis(n);
    return {a->count_distinct(), a->count_with_multiplicity()};
}

RootIsolation RootFinder::isolate_roots(long n) { return analysis(n)->isolate(); }

std::pair<Interval, bool> RootFinder::max_root(long n, const Rational& eps) {
    return analysis(n)->max_root(eps);
}

long RootFinder::ceil_max_root(long n) {
    Integer d = analysis(n)->ceil_max_root();
    if (!d.fits_slong_p()) throw std::overflow_error("ceil_max_root: out of range");
    return d.get_si();
}

long RootFinder::structural_count(long n) {
    if (n < 1 || n % 4 != 1)
        throw std::invalid_argument("structural_count: requires n = 1 (mod 4)");
    return 4 * ceil_max_root(n) - 3;
}

long RootFinder::count_in(long n, const Interval& iv) {
    return analysis(n)->count_distinct_in(iv);
}

long RootFinder::count_mult_in(long n, const Interval& iv) {
    return analysis(n)->count_with_multiplicity_in(iv);
}

RootReport RootFinder::report(long n, const Rational& eps) {
    auto a = analysis(n);
    RootReport rep;
    rep.n = n;
    rep.c_distinct = a->count_distinct();
    rep.c_with_multiplicity = a->count_with_multiplicity();
    auto [iv, exact_int] = a->max_root(eps);
    rep.y_enclosure = iv;
    rep.y_is_exact_integer = exact_int;
    Integer d = a->ceil_max_root();
    if (!d.fits_slong_p()) throw std::overflow_error("report: d out of range");
    rep.d = d.get_si();
    // Certify d-1 < y <= d by exact counts alone.
    Rational dm1(rep.d - 1), dr(rep.d);
    if (a->count_distinct_in(Interval::half_open(dm1, dr)) < 1)
        throw std::logic_error("root report: ceiling certificate failed (lower)");
    if (a->count_greater_than(dr) != 0)
        throw std::logic_error("root report: ceiling certificate failed (upper)");
    return rep;
}

}  // namespace bernpoly
