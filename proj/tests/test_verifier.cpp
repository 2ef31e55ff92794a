#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "bernpoly/verifier.hpp"

using namespace bernpoly;

namespace {

struct Fixture {
    BernoulliEngine engine;
    RootFinder roots{engine};
    Verifier verifier{roots};
};

}  // namespace

TEST_CASE("lemma holds case by case at small n") {
    Fixture f;
    for (long n : {2L, 3L, 4L, 5L, 6L, 7L, 8L, 9L}) {
        VerdictReport rep = f.verifier.check_lemma(n);
        CHECK(rep.pass);
        CHECK(rep.witness.empty());
    }
    CHECK_THROWS_AS(f.verifier.check_lemma(1), std::invalid_argument);
}

TEST_CASE("lemma over a range, in parallel") {
    Fixture f;
    VerdictReport rep = f.verifier.check_lemma_range(2, 30);
    CHECK(rep.pass);
}

TEST_CASE("corollary: monic of full degree, strictly increasing translates") {
    Fixture f;
    CHECK(f.verifier.check_corollary(2, 3).pass);
    CHECK(f.verifier.check_corollary(1, 5).pass);   // increments are the constant 1
    CHECK(f.verifier.check_corollary(6, 5).pass);
    CHECK(f.verifier.check_corollary(11, 4).pass);
}

TEST_CASE("statement 1 holds through n = 24 with the documented d prefix") {
    Fixture f;
    VerdictReport rep = f.verifier.check_statement1(24);
    CHECK(rep.pass);
    // spot values: (d_1..d_5) = (1,1,1,2,2)
    long expected[] = {1, 1, 1, 2, 2};
    for (long n = 1; n <= 5; ++n) CHECK(f.roots.ceil_max_root(n) == expected[n - 1]);
}

TEST_CASE("step/sandwich helpers reject injected failures") {
    CHECK_FALSE(first_step_violation({1, 1, 2, 2, 3}).has_value());
    auto bad = first_step_violation({1, 1, 3, 3});
    REQUIRE(bad.has_value());
    CHECK(*bad == 2);  // jump happens from index 2 to 3

    // boundary: a jump of exactly one is allowed
    CHECK_FALSE(first_step_violation({1, 2, 3, 4}).has_value());

    // sandwich violation: d_(4k)+i >= d_(4k+i) fails for k=1, i=1
    std::vector<long> d{1, 1, 1, 2, 4, 2, 2, 3, 3, 3, 3, 3};
    //                  d1 d2 d3 d4 d5...            d12 -> d4=2, d5=4 > d4+1
    auto sandwich = first_sandwich_violation(d);
    REQUIRE(sandwich.has_value());
    CHECK(sandwich->find("k=1") != std::string::npos);
}

TEST_CASE("statement 2 exact radical bounds") {
    Fixture f;
    // k=1: d_4 = 2, B_4 = -1/30: 2^4 = 16 > 1 + 1/30 and 0^4 = 0 < 1/30.
    CHECK(f.verifier.check_statement2(1).pass);
    // k=2: B_8 = -1/30 again, d_8 from the Sturm pipeline.
    CHECK(f.verifier.check_statement2(2).pass);
    CHECK(f.verifier.check_statement2_range(1, 5).pass);
    CHECK_THROWS_AS(f.verifier.check_statement2(0), std::invalid_argument);
}

TEST_CASE("theorem 2: count identity and pair structure") {
    Fixture f;
    VerdictReport k0 = f.verifier.check_theorem2(0);
    CHECK(k0.pass);
    CHECK(!k0.note.empty());  // degenerate case flagged

    VerdictReport k1 = f.verifier.check_theorem2(1);
    CHECK(k1.pass);
    CHECK(f.roots.real_root_count(5).second == 5);
    CHECK(f.roots.ceil_max_root(5) == 2);

    CHECK(f.verifier.check_theorem2(2).pass);
    CHECK(f.verifier.check_theorem2_range(0, 4).pass);
    CHECK_THROWS_AS(f.verifier.check_theorem2(-1), std::invalid_argument);
}

TEST_CASE("count step inequality through n = 24") {
    Fixture f;
    CHECK(f.verifier.check_count_step(24).pass);
}

TEST_CASE("zeta window certificate") {
    Fixture f;
    VerdictReport rep = f.verifier.check_zeta_window(8);
    CHECK(rep.pass);
}

TEST_CASE("identity suite over a range") {
    Fixture f;
    CHECK(f.verifier.check_identities(1).pass);  // degenerate range
    CHECK(f.verifier.check_identities(32).pass);
}

TEST_CASE("von Staudt-Clausen suite") {
    Fixture f;
    CHECK(f.verifier.check_von_staudt_clausen(40).pass);
}

TEST_CASE("verdicts carry claim names and timings") {
    Fixture f;
    VerdictReport rep = f.verifier.check_lemma(2);
    CHECK(rep.claim == "lemma");
    CHECK(rep.range == "n=2");
    CHECK(rep.elapsed_ms >= 0.0);
}
