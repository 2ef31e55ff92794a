#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "bernpoly/root_finder.hpp"

using namespace bernpoly;

namespace {

Rational eps6() { return make_rational(1, 1000000); }

// Exact sign check that iv encloses the root of `witness` (a polynomial
// vanishing only there within the interval): opposite or zero signs.
void check_encloses_root_of(const RatPoly& witness, const Interval& iv) {
    int slo = sign(witness.eval(iv.lo)), shi = sign(witness.eval(iv.hi));
    bool brackets = (slo == 0 || shi == 0) || slo != shi;
    CHECK(brackets);
}

const RatPoly quad_b5{make_rational(-1, 3), Rational(-1), Rational(1)};  // x^2 - x - 1/3

}  // namespace

TEST_CASE("small-n ground truth: counts, ceilings, exact maxima") {
    BernoulliEngine eng;
    RootFinder rf(eng);

    long expected_c[] = {1, 2, 3, 4, 5};
    long expected_d[] = {1, 1, 1, 2, 2};
    for (long n = 1; n <= 5; ++n) {
        auto [cd, cm] = rf.real_root_count(n);
        CHECK(cd == expected_c[n - 1]);
        CHECK(cm == expected_c[n - 1]);
        CHECK(rf.ceil_max_root(n) == expected_d[n - 1]);
    }

    auto [y1, int1] = rf.max_root(1, eps6());
    CHECK(y1.is_point());
    CHECK(y1.lo == make_rational(1, 2));
    CHECK_FALSE(int1);

    auto [y3, int3] = rf.max_root(3, eps6());
    CHECK(y3.is_point());
    CHECK(y3.lo == 1);
    CHECK(int3);
}

TEST_CASE("max root enclosures match the closed forms for n = 4, 5") {
    BernoulliEngine eng;
    RootFinder rf(eng);

    // y_5 = (1 + sqrt(7/3))/2 = 1.2637626..., the top root of x^2 - x - 1/3.
    auto [y5, int5] = rf.max_root(5, eps6());
    CHECK_FALSE(int5);
    CHECK(y5.width() <= eps6());
    check_encloses_root_of(quad_b5, y5);
    double mid5 = y5.midpoint().get_d();
    CHECK(mid5 == doctest::Approx(1.2637626158).epsilon(1e-6));

    // y_4 = (1 + sqrt(1 + 4/sqrt(30)))/2 = 1.1577037...; B_4 itself is the witness.
    auto [y4, int4] = rf.max_root(4, eps6());
    CHECK_FALSE(int4);
    CHECK(y4.width() <= eps6());
    check_encloses_root_of(eng.polynomial(4), y4);
    CHECK(y4.midpoint().get_d() == doctest::Approx(1.1577037219).epsilon(1e-6));
}

TEST_CASE("isolation of the first few Bernoulli polynomials") {
    BernoulliEngine eng;
    RootFinder rf(eng);

    RootIsolation iso1 = rf.isolate_roots(1);
    REQUIRE(iso1.intervals.size() == 1);
    CHECK(iso1.intervals[0].contains(make_rational(1, 2)));

    // B_3: point roots 0, 1/2, 1
    RootIsolation iso3 = rf.isolate_roots(3);
    REQUIRE(iso3.intervals.size() == 3);
    for (const Interval& iv : iso3.intervals) CHECK(iv.is_point());
    CHECK(iso3.intervals[0].lo == 0);
    CHECK(iso3.intervals[1].lo == make_rational(1, 2));
    CHECK(iso3.intervals[2].lo == 1);
    CHECK(iso3.with_multiplicity() == 3);

    // B_2: two intervals in (0,1), reflections of each other about 1/2
    RootIsolation iso2 = rf.isolate_roots(2);
    REQUIRE(iso2.intervals.size() == 2);
    RatPoly b2 = eng.polynomial(2);
    for (const Interval& iv : iso2.intervals) {
        CHECK(iv.lo >= 0);
        CHECK(iv.hi <= 1);
        CHECK(sturm_count(b2, iv) == 1);
    }
}

TEST_CASE("isolation invariants at moderate degrees") {
    BernoulliEngine eng;
    RootFinder rf(eng);

    for (long n : {6L, 9L, 12L, 17L, 20L}) {
        RatPoly bn = eng.polynomial(n);
        RatPoly sf = bn.squarefree_part();
        RootIsolation iso = rf.isolate_roots(n);

        auto [cd, cm] = rf.real_root_count(n);
        CHECK(static_cast<long>(iso.intervals.size()) == cd);
        CHECK(iso.with_multiplicity() == cm);

        // each interval holds exactly one distinct root; intervals are
        // disjoint and ascending; gaps hold none
        for (std::size_t i = 0; i < iso.intervals.size(); ++i) {
            CHECK(sturm_count(sf, iso.intervals[i]) == 1);
            if (i + 1 < iso.intervals.size()) {
                const Interval& a = iso.intervals[i];
                const Interval& b = iso.intervals[i + 1];
                CHECK(a.hi <= b.lo);
                if (a.hi == b.lo) CHECK((a.hi_open || b.lo_open));
                if (a.hi < b.lo) {
                    CHECK(sturm_count(sf, Interval::open(a.hi, b.lo)) == 0);
                    if (b.lo_open) CHECK(sf.eval(b.lo) != 0);  // boundary not a root either
                }
            }
        }

        // reflection x -> 1-x maps the isolation onto the reflected poly's
        RatPoly reflected = bn.compose_affine(Rational(-1), Rational(1));
        PolyRootAnalysis mirror(reflected, {Rational(0), make_rational(1, 2), Rational(1)});
        RootIsolation miso = mirror.isolate();
        REQUIRE(miso.intervals.size() == iso.intervals.size());
        for (std::size_t i = 0; i < iso.intervals.size(); ++i) {
            const Interval& orig = iso.intervals[iso.intervals.size() - 1 - i];
            // reflect [lo, hi] -> [1-hi, 1-lo] and verify the mirrored
            // interval holds exactly one root of the reflected polynomial
            Interval flipped(1 - orig.hi, 1 - orig.lo, orig.hi_open, orig.lo_open);
            CHECK(sturm_count(reflected.squarefree_part(), flipped) == 1);
            (void)miso;
        }
    }
}

TEST_CASE("refine: examples and error paths") {
    BernoulliEngine eng;
    RootFinder rf(eng);
    RatPoly b1 = eng.polynomial(1);

    Interval out = refine(b1, Interval::closed(Rational(0), Rational(1)), make_rational(1, 8));
    CHECK(out.width() <= make_rational(1, 8));
    CHECK(out.contains(make_rational(1, 2)));

    // refining B_5's top enclosure keeps the closed-form root inside
    auto [top, is_int] = rf.max_root(5, make_rational(1, 4));
    (void)is_int;
    Interval fine = refine(eng.polynomial(5), top, eps6());
    CHECK(fine.width() <= eps6());
    check_encloses_root_of(quad_b5, fine);

    // equal nonzero signs at both endpoints must signal
    CHECK_THROWS_AS(refine(b1, Interval::closed(Rational(2), Rational(3)), eps6()),
                    std::invalid_argument);
    CHECK_THROWS_AS(refine(b1, Interval::closed(Rational(0), Rational(1)), Rational(0)),
                    std::invalid_argument);

    // an exact hit yields a point interval
    Interval hit = refine(b1, Interval::closed(Rational(0), Rational(1)), make_rational(1, 1024));
    CHECK(hit.is_point());
    CHECK(hit.lo == make_rational(1, 2));
}

TEST_CASE("multiplicities through the gcd tower (synthetic)") {
    // (x - 1/2)^3 (x^2 - 2): distinct 3, with multiplicity 5.
    RatPoly lin{make_rational(-1, 2), Rational(1)};
    RatPoly p = lin * lin * lin * RatPoly{Rational(-2), Rational(0), Rational(1)};
    PolyRootAnalysis an(p, {Rational(0), make_rational(1, 2), Rational(1)});

    CHECK_FALSE(an.squarefree());
    CHECK(an.count_distinct() == 3);
    CHECK(an.count_with_multiplicity() == 5);

    RootIsolation iso = an.isolate();
    REQUIRE(iso.intervals.size() == 3);
    CHECK(iso.multiplicities == std::vector<int>{1, 3, 1});
    CHECK(iso.intervals[1].is_point());
    CHECK(iso.intervals[1].lo == make_rational(1, 2));

    auto [top, is_int] = an.max_root(eps6());
    CHECK_FALSE(is_int);
    check_encloses_root_of(RatPoly{Rational(-2), Rational(0), Rational(1)}, top);
    CHECK(an.ceil_max_root() == 2);  // sqrt(2) -> 2

    // even-multiplicity top root: (x - 3/2)^2, no sign change anywhere
    RatPoly even_top{make_rational(9, 4), Rational(-3), Rational(1)};
    PolyRootAnalysis an2(even_top * RatPoly{Rational(1), Rational(1)}, {});
    CHECK(an2.count_distinct() == 2);
    CHECK(an2.count_with_multiplicity() == 3);
    auto [t2, i2] = an2.max_root(eps6());
    (void)i2;
    CHECK(t2.width() <= eps6());
    CHECK(t2.contains(make_rational(3, 2)));
    CHECK(an2.ceil_max_root() == 2);
}

TEST_CASE("analysis handles polynomials without real roots") {
    PolyRootAnalysis an(RatPoly{Rational(1), Rational(0), Rational(1)}, {});  // x^2 + 1
    CHECK(an.count_distinct() == 0);
    CHECK(an.isolate().intervals.empty());
    CHECK_THROWS_AS(an.max_root(eps6()), std::domain_error);
    CHECK_THROWS_AS(an.ceil_max_root(), std::domain_error);
}

TEST_CASE("negative top roots are certified too") {
    // roots -7/2 (simple) and -5 (simple): top is -7/2, ceiling -3
    RatPoly p = RatPoly{make_rational(7, 2), Rational(1)} * RatPoly{Rational(5), Rational(1)};
    PolyRootAnalysis an(p, {});
    CHECK(an.ceil_max_root() == -3);
    auto [top, is_int] = an.max_root(eps6());
    (void)is_int;
    CHECK(top.contains(make_rational(-7, 2)));
    CHECK(top.width() <= eps6());
}

TEST_CASE("structural count for n = 1 mod 4") {
    BernoulliEngine eng;
    RootFinder rf(eng);
    CHECK(rf.structural_count(1) == 1);
    CHECK(rf.structural_count(5) == 5);
    CHECK(rf.structural_count(9) == rf.real_root_count(9).second);
    CHECK(rf.structural_count(13) == rf.real_root_count(13).second);
    CHECK_THROWS_AS(rf.structural_count(4), std::invalid_argument);
    CHECK_THROWS_AS(rf.structural_count(7), std::invalid_argument);
}

TEST_CASE("step inequalities for counts and ceilings up to n = 24") {
    BernoulliEngine eng;
    RootFinder rf(eng);
    long prev_c = 0, prev_d = 0;
    for (long n = 1; n <= 24; ++n) {
        long c = rf.real_root_count(n).second;
        long d = rf.ceil_max_root(n);
        if (n > 1) {
            CHECK(c <= prev_c + 1);
            CHECK(d <= prev_d + 1);
        }
        prev_c = c;
        prev_d = d;
    }
}

TEST_CASE("reports certify the ceiling window") {
    BernoulliEngine eng;
    RootFinder rf(eng);
    for (long n : {1L, 3L, 4L, 5L, 11L, 16L, 27L}) {
        RootReport rep = rf.report(n);
        CHECK(rep.c_distinct == rep.c_with_multiplicity);
        CHECK(rep.c_distinct <= n);
        CHECK(rep.y_enclosure.width() <= RootFinder::default_eps());
        CHECK(Rational(rep.d) >= rep.y_enclosure.lo);
        CHECK(rep.d - 1 < rep.y_enclosure.hi);
    }
    // y_27 sits barely below 2: the exact machinery must still say d = 2.
    CHECK(rf.report(27).d == 2);
}
