#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "bernpoly/interval.hpp"
#include "bernpoly/ratpoly.hpp"

using namespace bernpoly;

namespace {

// Deterministic random rationals/polynomials for the property tests.
struct Gen {
    std::mt19937_64 rng{0x5eedu};

    Rational rational(long max_num = 20, long max_den = 10) {
        std::uniform_int_distribution<long> num(-max_num, max_num);
        std::uniform_int_distribution<long> den(1, max_den);
        return make_rational(num(rng), den(rng));
    }
    Rational nonzero_rational() {
        for (;;) {
            Rational q = rational();
            if (q != 0) return q;
        }
    }
    RatPoly poly(int max_deg = 8) {
        std::uniform_int_distribution<int> deg(0, max_deg);
        int d = deg(rng);
        std::vector<Rational> c(static_cast<std::size_t>(d) + 1);
        for (auto& x : c) x = rational();
        return RatPoly(std::move(c));
    }
    RatPoly nonzero_poly(int max_deg = 8) {
        for (;;) {
            RatPoly p = poly(max_deg);
            if (!p.is_zero()) return p;
        }
    }
};

// Evaluation by explicit powers, independent of the Horner path.
Rational eval_powers(const RatPoly& p, const Rational& x) {
    Rational acc(0), pw(1);
    for (int i = 0; i <= p.degree(); ++i) {
        acc += p.coeff(i) * pw;
        pw *= x;
    }
    return acc;
}

const RatPoly b1{make_rational(-1, 2), Rational(1)};                      // x - 1/2
const RatPoly b2{make_rational(1, 6), Rational(-1), Rational(1)};         // x^2 - x + 1/6

}  // namespace

TEST_CASE("zero polynomial representation") {
    RatPoly z;
    CHECK(z.is_zero());
    CHECK(z.degree() == -1);
    CHECK(z.coeffs().empty());
    CHECK(z.coeff(0) == 0);
    CHECK(z.coeff(5) == 0);
    CHECK(RatPoly{Rational(0), Rational(0)} == z);  // trailing zeros trim to empty
    CHECK_THROWS_AS(z.leading(), std::domain_error);
}

TEST_CASE("eval examples") {
    CHECK(b1.eval(make_rational(1, 2)) == 0);
    RatPoly b0{Rational(1)};
    CHECK(b0.eval(make_rational(7, 3)) == 1);
    CHECK(b2.eval(make_rational(1, 2)) == make_rational(-1, 12));
}

TEST_CASE("eval agrees with the power-sum oracle") {
    Gen g;
    for (int i = 0; i < 200; ++i) {
        RatPoly p = g.poly();
        Rational x = g.rational();
        CHECK(p.eval(x) == eval_powers(p, x));
    }
}

TEST_CASE("derivative examples") {
    CHECK(b2.derivative() == RatPoly{Rational(-1), Rational(2)});  // 2x - 1 = 2 B_1
    CHECK(RatPoly::constant(make_rational(5, 3)).derivative().is_zero());
}

TEST_CASE("derivative is linear") {
    Gen g;
    for (int i = 0; i < 100; ++i) {
        RatPoly p = g.poly(), q = g.poly();
        CHECK((p + q).derivative() == p.derivative() + q.derivative());
    }
}

TEST_CASE("antiderivative inverts derivative up to the constant term") {
    Gen g;
    for (int i = 0; i < 50; ++i) {
        RatPoly p = g.poly();
        RatPoly back = p.antiderivative().derivative();
        CHECK(back == p);
    }
}

TEST_CASE("compose_affine examples") {
    CHECK(b2.compose_affine(Rational(-1), Rational(1)) == b2);  // even-n reflection
    Gen g;
    RatPoly p = g.nonzero_poly();
    CHECK(p.compose_affine(Rational(1), Rational(0)) == p);  // identity map
    // B_2(x+1) - B_2(x) = 2x
    CHECK(b2.compose_affine(Rational(1), Rational(1)) - b2 == RatPoly{Rational(0), Rational(2)});
    CHECK_THROWS_AS(p.compose_affine(Rational(0), Rational(1)), std::invalid_argument);
}

TEST_CASE("compose_affine commutes with evaluation") {
    Gen g;
    for (int i = 0; i < 100; ++i) {
        RatPoly p = g.poly();
        Rational a = g.nonzero_rational(), b = g.rational(), x = g.rational();
        CHECK(p.compose_affine(a, b).eval(x) == p.eval(a * x + b));
    }
}

TEST_CASE("divmod is exact division with remainder") {
    Gen g;
    for (int i = 0; i < 100; ++i) {
        RatPoly p = g.poly(), d = g.nonzero_poly(5);
        auto [q, r] = p.divmod(d);
        CHECK(p == q * d + r);
        CHECK(r.degree() < d.degree());
    }
    CHECK_THROWS_AS(b2.divmod(RatPoly()), std::invalid_argument);
}

TEST_CASE("gcd examples") {
    CHECK(RatPoly::gcd(b2 * Rational(3), RatPoly()) == b2);  // gcd(p, 0) = monic p
    RatPoly lin{make_rational(-1, 2), Rational(1)};          // x - 1/2
    CHECK(RatPoly::gcd(lin * lin, lin) == lin);
    // B_3 = x^3 - (3/2)x^2 + (1/2)x has simple roots 0, 1/2, 1.
    RatPoly b3{Rational(0), make_rational(1, 2), make_rational(-3, 2), Rational(1)};
    CHECK(RatPoly::gcd(b3, b3.derivative()) == RatPoly::constant(Rational(1)));
    CHECK_THROWS_AS(RatPoly::gcd(RatPoly(), RatPoly()), std::invalid_argument);
}

TEST_CASE("gcd divides both arguments exactly") {
    Gen g;
    for (int i = 0; i < 60; ++i) {
        RatPoly a = g.nonzero_poly(5), b = g.nonzero_poly(5), m = g.nonzero_poly(3);
        RatPoly p = a * m, q = b * m;
        RatPoly d = RatPoly::gcd(p, q);
        CHECK(d.leading() == 1);
        CHECK(p.divmod(d).second.is_zero());
        CHECK(q.divmod(d).second.is_zero());
        // the planted common factor divides the gcd
        CHECK(d.divmod(RatPoly::gcd(m, d)).second.is_zero());
    }
}

TEST_CASE("squarefree_part examples") {
    RatPoly lin{make_rational(-1, 2), Rational(1)};
    CHECK((lin * lin * lin).squarefree_part() == lin);
    RatPoly b5{Rational(0), make_rational(-1, 6), Rational(0), make_rational(5, 3),
               make_rational(-5, 2), Rational(1)};
    CHECK(b5.squarefree_part() == b5);  // already squarefree and monic
    Gen g;
    RatPoly p = g.nonzero_poly(4);
    RatPoly sf = p.squarefree_part();
    CHECK((p * make_rational(7, 2)).squarefree_part() == sf);  // constant factors drop out
    CHECK(RatPoly::gcd(sf, sf.derivative()) == RatPoly::constant(Rational(1)));
    CHECK_THROWS_AS(RatPoly().squarefree_part(), std::invalid_argument);
}

TEST_CASE("squarefree_part strips planted multiplicities") {
    Gen g;
    for (int i = 0; i < 40; ++i) {
        RatPoly f = g.nonzero_poly(3);
        RatPoly sq = f * f * g.nonzero_poly(2);
        RatPoly sf = sq.squarefree_part();
        CHECK(sq.divmod(sf).second.is_zero());
        CHECK(RatPoly::gcd(sf, sf.derivative()) == RatPoly::constant(Rational(1)));
    }
}

TEST_CASE("cauchy_root_bound examples") {
    CHECK(b1.cauchy_root_bound() == make_rational(3, 2));
    CHECK(b2.cauchy_root_bound() == 2);
    CHECK(RatPoly::monomial(2).cauchy_root_bound() == 1);  // x^2
    CHECK_THROWS_AS(RatPoly::constant(Rational(3)).cauchy_root_bound(), std::invalid_argument);
}

TEST_CASE("cauchy_root_bound dominates planted rational roots") {
    Gen g;
    for (int i = 0; i < 60; ++i) {
        // Build a polynomial from known linear factors and check them all.
        std::vector<Rational> roots;
        RatPoly p = RatPoly::constant(g.nonzero_rational());
        for (int j = 0; j < 4; ++j) {
            Rational r = g.rational();
            roots.push_back(r);
            p = p * RatPoly{-r, Rational(1)};
        }
        Rational m = p.cauchy_root_bound();
        for (const Rational& r : roots) CHECK(abs(r) < m);
    }
}

TEST_CASE("rational results stay canonical") {
    Gen g;
    for (int i = 0; i < 100; ++i) {
        RatPoly p = g.poly(), q = g.poly();
        RatPoly s = p * q + p;
        for (const Rational& c : s.coeffs()) {
            CHECK(c.get_den() > 0);
            CHECK(gcd(Integer(c.get_num()), Integer(c.get_den())) == 1);
        }
    }
}

TEST_CASE("to_string formatting") {
    CHECK(b2.to_string() == "x^2 - x + 1/6");
    CHECK(RatPoly().to_string() == "0");
    CHECK(RatPoly{Rational(0), Rational(-2)}.to_string() == "-2*x");
}

TEST_CASE("parse_rational round trips") {
    CHECK(parse_rational("-691/2730") == make_rational(-691, 2730));
    CHECK(parse_rational("1e-6") == make_rational(1, 1000000));
    CHECK(parse_rational("0.25") == make_rational(1, 4));
    CHECK(parse_rational("2.5e-3") == make_rational(1, 400));
    CHECK(parse_rational("42") == 42);
    CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("abc"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
}

TEST_CASE("interval basics") {
    Interval iv = Interval::half_open(Rational(0), Rational(1));
    CHECK(!iv.contains(Rational(0)));
    CHECK(iv.contains(Rational(1)));
    CHECK(iv.contains(make_rational(1, 2)));
    CHECK(Interval::point(Rational(2)).is_point());
    CHECK_THROWS_AS(Interval(Rational(1), Rational(0)), std::invalid_argument);
    CHECK_THROWS_AS(Interval::open(Rational(1), Rational(1)), std::invalid_argument);
}
