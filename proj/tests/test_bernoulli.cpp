#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>

#include "bernpoly/bernoulli.hpp"

using namespace bernpoly;
namespace fs = std::filesystem;

namespace {

struct TempDir {
    fs::path path;
    TempDir() {
        path = fs::temp_directory_path() / ("bernpoly_test_" + std::to_string(::getpid()));
        fs::create_directories(path);
    }
    ~TempDir() { std::error_code ec; fs::remove_all(path, ec); }
};

}  // namespace

TEST_CASE("bernoulli numbers: known values") {
    BernoulliEngine eng;
    CHECK(eng.number(0) == 1);
    CHECK(eng.number(1) == make_rational(-1, 2));
    CHECK(eng.number(2) == make_rational(1, 6));
    CHECK(eng.number(7) == 0);
    CHECK(eng.number(12) == make_rational(-691, 2730));
    CHECK(eng.number(4) == make_rational(-1, 30));
    CHECK(eng.number(8) == make_rational(-1, 30));
    CHECK_THROWS_AS(eng.number(-1), std::invalid_argument);
}

TEST_CASE("bernoulli number structure over the first 120 indices") {
    BernoulliEngine eng;
    eng.warm(120);
    for (long n = 3; n <= 119; n += 2) CHECK(eng.number(n) == 0);
    for (long k = 1; 4 * k <= 120; ++k) {
        CHECK(sign(eng.number(4 * k)) == -1);
        if (4 * k + 2 <= 120) CHECK(sign(eng.number(4 * k + 2)) == 1);
    }
}

TEST_CASE("bernoulli polynomials: printed small cases") {
    BernoulliEngine eng;
    CHECK(eng.polynomial(0) == RatPoly{Rational(1)});
    CHECK(eng.polynomial(1) == RatPoly{make_rational(-1, 2), Rational(1)});
    CHECK(eng.polynomial(2) == RatPoly{make_rational(1, 6), Rational(-1), Rational(1)});
    // B_5 = x^5 - (5/2)x^4 + (5/3)x^3 - (1/6)x
    CHECK(eng.polynomial(5) == RatPoly{Rational(0), make_rational(-1, 6), Rational(0),
                                       make_rational(5, 3), make_rational(-5, 2), Rational(1)});
    // matches the factored form x(x - 1/2)(x - 1)(x^2 - x - 1/3)
    RatPoly factored = RatPoly{Rational(0), Rational(1)} *
                       RatPoly{make_rational(-1, 2), Rational(1)} *
                       RatPoly{Rational(-1), Rational(1)} *
                       RatPoly{make_rational(-1, 3), Rational(-1), Rational(1)};
    CHECK(eng.polynomial(5) == factored);
}

TEST_CASE("series construction: small cases") {
    BernoulliEngine eng;
    CHECK(eng.series_construction(0) == RatPoly{Rational(1)});
    CHECK(eng.series_construction(1) == RatPoly{make_rational(-1, 2), Rational(1)});
    // B_4 = x^4 - 2x^3 + x^2 - 1/30
    CHECK(eng.series_construction(4) ==
          RatPoly{make_rational(-1, 30), Rational(0), Rational(1), Rational(-2), Rational(1)});
}

TEST_CASE("integral construction: small cases") {
    BernoulliEngine eng;
    CHECK(eng.integral_construction(1) == RatPoly{make_rational(-1, 2), Rational(1)});
    CHECK(eng.integral_construction(2) == RatPoly{make_rational(1, 6), Rational(-1), Rational(1)});
    // B_3 = x^3 - (3/2)x^2 + (1/2)x
    CHECK(eng.integral_construction(3) ==
          RatPoly{Rational(0), make_rational(1, 2), make_rational(-3, 2), Rational(1)});
}

TEST_CASE("three constructions agree exactly up to n = 40") {
    BernoulliEngine eng;
    for (long n = 0; n <= 40; ++n) {
        RatPoly a = eng.polynomial(n);
        CHECK(a == eng.series_construction(n));
        CHECK(a == eng.integral_construction(n));
    }
}

TEST_CASE("polynomial shape: degree n, monic, zero mean") {
    BernoulliEngine eng;
    for (long n = 1; n <= 48; ++n) {
        RatPoly b = eng.polynomial(n);
        CHECK(b.degree() == n);
        CHECK(b.leading() == 1);
        CHECK(b.integral(Rational(0), Rational(1)) == 0);
    }
}

TEST_CASE("value symmetries from the identities") {
    BernoulliEngine eng;
    const Rational half = make_rational(1, 2);
    for (long n = 2; n <= 40; ++n) {
        RatPoly b = eng.polynomial(n);
        CHECK(b.eval(Rational(0)) == b.eval(Rational(1)));
        Rational expected = (make_rational(1, pow_integer(2, n - 1)) - 1) * eng.number(n);
        CHECK(b.eval(half) == expected);
    }
    CHECK(eng.polynomial(4).eval(half) == make_rational(7, 240));
}

TEST_CASE("identity suite at selected indices") {
    BernoulliEngine eng;
    for (long n : {1L, 2L, 3L, 7L, 12L, 40L}) {
        IdentityReport rep = eng.verify_identities(n);
        CHECK(rep.all_hold());
        CHECK(rep.witness.empty());
    }
    CHECK_THROWS_AS(eng.verify_identities(0), std::invalid_argument);
}

TEST_CASE("von Staudt-Clausen checksum") {
    BernoulliEngine eng;
    CHECK(von_staudt_clausen_primes(2) == std::vector<long>{2, 3});
    CHECK(von_staudt_clausen_primes(4) == std::vector<long>{2, 3, 5});
    CHECK(von_staudt_clausen_primes(12) == std::vector<long>{2, 3, 5, 7, 13});
    // n=2: 1/6 + 1/2 + 1/3 = 1; n=4: -1/30 + 1/2 + 1/3 + 1/5 = 1;
    // n=12: -691/2730 + (1/2 + 1/3 + 1/5 + 1/7 + 1/13) = 1.
    for (long n = 2; n <= 60; n += 2) CHECK(eng.von_staudt_clausen(n));
    CHECK_THROWS_AS(eng.von_staudt_clausen(3), std::invalid_argument);
}

TEST_CASE("cache round trip is lossless") {
    TempDir tmp;
    fs::path file = tmp.path / "bernoulli.cache";
    {
        BernoulliEngine eng(file);
        eng.warm(16);
        eng.save();
    }
    std::map<long, Rational> entries = BernoulliEngine::load_cache_file(file);
    CHECK(entries.size() == 17);
    CHECK(entries.at(0) == 1);
    CHECK(entries.at(1) == make_rational(-1, 2));
    CHECK(entries.at(12) == make_rational(-691, 2730));

    BernoulliEngine reloaded(file);
    CHECK(reloaded.max_cached() == 16);
    CHECK(reloaded.number(12) == make_rational(-691, 2730));
    CHECK(reloaded.revalidate().empty());
}

TEST_CASE("cache file format is bit-exact") {
    TempDir tmp;
    fs::path file = tmp.path / "bernoulli.cache";
    std::map<long, Rational> entries{
        {0, Rational(1)}, {1, make_rational(-1, 2)}, {2, make_rational(1, 6)}};
    BernoulliEngine::store_cache_file(file, entries);
    std::ifstream in(file);
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    CHECK(text == "0\t1/1\n1\t-1/2\n2\t1/6\n");
    CHECK(BernoulliEngine::load_cache_file(file) == entries);
}

TEST_CASE("missing cache file loads as empty") {
    CHECK(BernoulliEngine::load_cache_file("/nonexistent/path/bernoulli.cache").empty());
}

TEST_CASE("malformed cache lines fail with the line number") {
    TempDir tmp;
    fs::path file = tmp.path / "bad.cache";
    auto expect_failure = [&](const std::string& content, const char* needle) {
        std::ofstream(file) << content;
        try {
            BernoulliEngine::load_cache_file(file);
            FAIL_CHECK("expected a parse failure for: " << content);
        } catch (const std::runtime_error& e) {
            CHECK(std::string(e.what()).find(needle) != std::string::npos);
        }
    };
    expect_failure("0\t1/1\nnot a line\n", "line 2");
    expect_failure("0 1/1\n", "missing tab");
    expect_failure("0\t1\n", "missing '/'");
    expect_failure("0\t2/4\n", "not reduced");
    expect_failure("0\t1/0\n", "denominator");
    expect_failure("1\t1/1\n0\t1/1\n", "ascending");
    expect_failure("x\t1/1\n", "bad index");
}

TEST_CASE("tampered cache entry is caught by re-derivation") {
    TempDir tmp;
    fs::path file = tmp.path / "bernoulli.cache";
    {
        BernoulliEngine eng(file);
        eng.warm(8);
        eng.save();
    }
    // corrupt B_2 = 1/6 -> 1/5
    std::map<long, Rational> entries = BernoulliEngine::load_cache_file(file);
    entries[2] = make_rational(1, 5);
    BernoulliEngine::store_cache_file(file, entries);

    BernoulliEngine eng(file);
    CHECK(eng.number(2) == make_rational(1, 5));  // cache is trusted on the read path
    auto bad = eng.revalidate();
    REQUIRE(!bad.empty());
    CHECK(bad.front().n == 2);
    CHECK(bad.front().cached == make_rational(1, 5));
    CHECK(bad.front().recomputed == make_rational(1, 6));
    CHECK_FALSE(eng.von_staudt_clausen(2));  // integrality checksum also trips
}

TEST_CASE("identity checks expose a witness for wrong polynomials") {
    // Feed the verifier a tampered engine by corrupting the cache seed.
    TempDir tmp;
    fs::path file = tmp.path / "bernoulli.cache";
    std::map<long, Rational> entries{{0, Rational(1)}, {1, make_rational(-1, 2)},
                                     {2, make_rational(1, 5)}};
    BernoulliEngine::store_cache_file(file, entries);
    BernoulliEngine eng(file);
    IdentityReport rep = eng.verify_identities(2);
    CHECK_FALSE(rep.all_hold());
    CHECK(!rep.witness.empty());
}
