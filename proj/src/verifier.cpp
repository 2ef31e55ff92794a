#include "bernpoly/verifier.hpp"

#include <chrono>
#include <mutex>
#include <sstream>

#include "bernpoly/asymptotics.hpp"
#include "bernpoly/parallel.hpp"

namespace bernpoly {

namespace {

class Stopwatch {
public:
    Stopwatch() : start_(std::chrono::steady_clock::now()) {}
    double ms() const {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_)
            .count();
    }

private:
    std::chrono::steady_clock::time_point start_;
};

std::string frac(const Rational& q) { return to_fraction_string(q); }

}  // namespace

std::optional<long> first_step_violation(const std::vector<long>& values) {
    for (std::size_t i = 0; i + 1 < values.size(); ++i)
        if (values[i + 1] > values[i] + 1) return static_cast<long>(i + 1);  // 1-based index n
    return std::nullopt;
}

std::optional<std::string> first_sandwich_violation(const std::vector<long>& d) {
    // d[i] holds d_(i+1). Window d_(4k)+i >= d_(4k+i) >= d_(4k+4)-4+i.
    auto at = [&d](long n) { return d[static_cast<std::size_t>(n - 1)]; };
    long n_max = static_cast<long>(d.size());
    for (long k = 1; 4 * k + 4 <= n_max; ++k) {
        for (long i = 1; i <= 3; ++i) {
            long mid = at(4 * k + i);
            if (at(4 * k) + i < mid || mid < at(4 * k + 4) - 4 + i) {
                std::ostringstream os;
                os << "k=" << k << " i=" << i << ": d_" << 4 * k << "+" << i << "=" << at(4 * k) + i
                   << ", d_" << 4 * k + i << "=" << mid << ", d_" << 4 * k + 4 << "-4+" << i << "="
                   << at(4 * k + 4) - 4 + i;
                return os.str();
            }
        }
    }
    return std::nullopt;
}

VerdictReport Verifier::check_lemma(long n) {
    if (n < 2) throw std::invalid_argument("check_lemma: requires n >= 2");
    Stopwatch sw;
    VerdictReport rep;
    rep.claim = "lemma";
    rep.range = "n=" + std::to_string(n);

    const Rational half = make_rational(1, 2);
    const Rational quarter = make_rational(1, 4);
    const Rational three_quarters = make_rational(3, 4);
    RatPoly bn = engine_.polynomial(n);
    Rational v0 = bn.eval(Rational(0)), vh = bn.eval(half), v1 = bn.eval(Rational(1));

    auto fail = [&](const std::string& what) {
        if (rep.witness.empty()) rep.witness = "n=" + std::to_string(n) + ": " + what;
    };

    bool ok = true;
    const Interval left_open = Interval::open(Rational(0), half);
    const Interval right_open = Interval::open(half, Rational(1));

    if (n % 2 == 0) {
        // Even n: extrema pattern, certified through the derivative
        // B_n' = n B_(n-1): no interior derivative roots on each half plus
        // one exact interior derivative sign.
        bool positive_ends = n % 4 == 2;
        if (v0 != v1) ok = false, fail("B_n(0) != B_n(1)");
        if (positive_ends) {
            if (!(sign(v0) > 0 && sign(vh) < 0)) ok = false, fail("sign pattern: expected B_n(0)>0>B_n(1/2)");
        } else {
            if (!(sign(v0) < 0 && sign(vh) > 0)) ok = false, fail("sign pattern: expected B_n(0)<0<B_n(1/2)");
        }
        RatPoly prev = engine_.polynomial(n - 1);
        long left_roots = roots_.count_in(n - 1, left_open);
        long right_roots = roots_.count_in(n - 1, right_open);
        if (left_roots != 0) ok = false, fail("derivative has roots in (0,1/2)");
        if (right_roots != 0) ok = false, fail("derivative has roots in (1/2,1)");
        int dsign_left = sign(prev.eval(quarter));
        int dsign_right = sign(prev.eval(three_quarters));
        int expect_left = positive_ends ? -1 : +1;  // decreasing first in case n=2 (mod 4)
        if (dsign_left != expect_left) ok = false, fail("derivative sign on (0,1/2)");
        if (dsign_right != -expect_left) ok = false, fail("derivative sign on (1/2,1)");
    } else {
        // Odd n: zeros at 0, 1/2, 1 and a strict sign on each open half,
        // certified by a zero root count plus one exact sample sign.
        bool negative_first = n % 4 == 1;
        if (!(v0 == 0 && vh == 0 && v1 == 0)) ok = false, fail("B_n must vanish at 0, 1/2, 1");
        long left_roots = roots_.count_in(n, left_open);
        long right_roots = roots_.count_in(n, right_open);
        if (left_roots != 0) ok = false, fail("roots inside (0,1/2)");
        if (right_roots != 0) ok = false, fail("roots inside (1/2,1)");
        int sl = sign(bn.eval(quarter)), sr = sign(bn.eval(three_quarters));
        int expect_left = negative_first ? -1 : +1;
        if (sl != expect_left) ok = false, fail("sign on (0,1/2)");
        if (sr != -expect_left) ok = false, fail("sign on (1/2,1)");
    }

    rep.pass = ok;
    rep.elapsed_ms = sw.ms();
    return rep;
}

VerdictReport Verifier::check_lemma_range(long n_lo, long n_hi, unsigned jobs) {
    Stopwatch sw;
    VerdictReport rep;
    rep.claim = "lemma";
    rep.range = "n=" + std::to_string(n_lo) + ".." + std::to_string(n_hi);
    engine_.warm(n_hi);

    std::mutex m;
    std::string witness;
    bool all = true;
    parallel_for(n_lo, n_hi + 1, jobs, [&](long n) {
        VerdictReport one = check_lemma(n);
        if (!one.pass) {
            std::lock_guard<std::mutex> lock(m);
            all = false;
            if (witness.empty()) witness = one.witness;
        }
    });
    rep.pass = all;
    rep.witness = witness;
    rep.elapsed_ms = sw.ms();
    return rep;
}

VerdictReport Verifier::check_corollary(long n, long k_max) {
    if (n < 1) throw std::invalid_argument("check_corollary: requires n >= 1");
    Stopwatch sw;
    VerdictReport rep;
    rep.claim = "corollary";
    rep.range = "n=" + std::to_string(n) + ", k=0.." + std::to_string(k_max);

    RatPoly bn = engine_.polynomial(n);
    bool ok = true;
    auto fail = [&](const std::string& what) {
        if (rep.witness.empty()) rep.witness = "n=" + std::to_string(n) + ": " + what;
        ok = false;
    };

    if (bn.degree() != n) fail("degree != n");
    else if (bn.leading() != 1) fail("leading coefficient != 1");

    // General certificate: the step B_n(x+1) - B_n(x) = n x^(n-1) is an
    // exact polynomial identity, and n x^(n-1) > 0 for every x > 0.
    RatPoly step = bn.compose_affine(Rational(1), Rational(1)) - bn;
    if (step != RatPoly::monomial(static_cast<int>(n - 1), Rational(n)))
        fail("difference identity does not hold");

    for (const Rational& x : {make_rational(1, 10), make_rational(1, 3), make_rational(1, 2), Rational(2)}) {
        Rational prev = bn.eval(x);
        for (long k = 1; k <= k_max; ++k) {
            Rational cur = bn.eval(x + Rational(k));
            if (!(cur > prev)) {
                fail("sequence not strictly increasing at x=" + frac(x) + ", k=" + std::to_string(k));
                break;
            }
            prev = cur;
        }
        if (!ok) break;
    }

    rep.pass = ok;
    rep.elapsed_ms = sw.ms();
    return rep;
}

VerdictReport Verifier::check_statement1(long n_max, unsigned jobs) {
    if (n_max < 2) throw std::invalid_argument("check_statement1: requires n_max >= 2");
    Stopwatch sw;
    VerdictReport rep;
    rep.claim = "statement1";
    rep.range = "n=1.." + std::to_string(n_max);
    engine_.warm(n_max);

    std::vector<long> d(static_cast<std::size_t>(n_max));
    parallel_for(1, n_max + 1, jobs,
                 [&](long n) { d[static_cast<std::size_t>(n - 1)] = roots_.ceil_max_root(n); });

    bool ok = true;
    if (auto bad = first_step_violation(d)) {
        ok = false;
        rep.witness = "d_" + std::to_string(*bad + 1) + "=" + std::to_string(d[static_cast<std::size_t>(*bad)]) +
                      " > d_" + std::to_string(*bad) + "+1=" +
                      std::to_string(d[static_cast<std::size_t>(*bad - 1)] + 1);
    }
    if (auto bad = first_sandwich_violation(d); ok && bad) {
        ok = false;
        rep.witness = "sandwich: " + *bad;
    }
    rep.pass = ok;
    rep.elapsed_ms = sw.ms();
    return rep;
}

VerdictReport Verifier::check_statement2(long k) {
    if (k < 1) throw std::invalid_argument("check_statement2: requires k >= 1");
    Stopwatch sw;
    VerdictReport rep;
    rep.claim = "statement2";
    rep.range = "k=" + std::to_string(k);

    const long n = 4 * k;
    Rational b = engine_.number(n);
    long d = roots_.ceil_max_root(n);
    bool ok = true;
    auto fail = [&](const std::string& what) {
        if (rep.witness.empty())
            rep.witness = "k=" + std::to_string(k) + " (d=" + std::to_string(d) +
                          ", B=" + frac(b) + "): " + what;
        ok = false;
    };
    if (sign(b) >= 0) fail("B_(4k)(0) is not negative");

    // d^(4k) > 1 - B: both sides positive, so powering preserves the
    // strict radical inequality.
    Rational lower_lhs(pow_integer(Integer(d), static_cast<unsigned long>(n)));
    if (!(lower_lhs > 1 - b)) fail("lower bound fails: d^(4k) <= 1 - B");

    // (d-2)^(4k) < -B; when d < 2 the radical inequality holds trivially
    // (negative left side against a positive root).
    if (d - 2 >= 0) {
        Rational upper_lhs(pow_integer(Integer(d - 2), static_cast<unsigned long>(n)));
        if (!(upper_lhs < -b)) fail("upper bound fails: (d-2)^(4k) >= -B");
    }

    rep.pass = ok;
    rep.elapsed_ms = sw.ms();
    return rep;
}

VerdictReport Verifier::check_statement2_range(long k_lo, long k_hi) {
    Stopwatch sw;
    VerdictReport rep;
    rep.claim = "statement2";
    rep.range = "k=" + std::to_string(k_lo) + ".." + std::to_string(k_hi);
    bool all = true;
    for (long k = k_lo; k <= k_hi; ++k) {
        VerdictReport one = check_statement2(k);
        if (!one.pass) {
            all = false;
            if (rep.witness.empty()) rep.witness = one.witness;
        }
    }
    rep.pass = all;
    rep.elapsed_ms = sw.ms();
    return rep;
}

VerdictReport Verifier::check_theorem2(long k) {
    if (k < 0) throw std::invalid_argument("check_theorem2: requires k >= 0");
    Stopwatch sw;
    VerdictReport rep;
    rep.claim = "theorem2";
    rep.range = "k=" + std::to_string(k);

    const long n = 4 * k + 1;
    auto [c_distinct, c_mult] = roots_.real_root_count(n);
    long d = roots_.ceil_max_root(n);
    bool ok = true;
    auto fail = [&](const std::string& what) {
        if (rep.witness.empty())
            rep.witness = "k=" + std::to_string(k) + " (n=" + std::to_string(n) + ", c=" +
                          std::to_string(c_mult) + ", d=" + std::to_string(d) + "): " + what;
        ok = false;
    };

    if (c_mult != 4 * d - 3) fail("c != 4d - 3");
    if (roots_.structural_count(n) != 4 * d - 3) fail("structural count disagrees");

    // Pair structure from the argument: exactly two roots (with
    // multiplicity) on [m, m+1/2] and none on [m+1/2, m+1].
    const Rational half = make_rational(1, 2);
    for (long m = 1; m <= d - 1 && ok; ++m) {
        Rational lo(m);
        long pair = roots_.count_mult_in(n, Interval::closed(lo, lo + half));
        long rest = roots_.count_mult_in(n, Interval::closed(lo + half, lo + 1));
        if (pair != 2)
            fail("segment [" + std::to_string(m) + ", " + std::to_string(m) + "+1/2] has " +
                 std::to_string(pair) + " roots, expected 2");
        else if (rest != 0)
            fail("segment [" + std::to_string(m) + "+1/2, " + std::to_string(m + 1) + "] has " +
                 std::to_string(rest) + " roots, expected 0");
    }

    if (k == 0) rep.note = "degenerate: d=1 lies outside the d>=2 assumption of the general argument";
    rep.pass = ok;
    rep.elapsed_ms = sw.ms();
    return rep;
}

VerdictReport Verifier::check_theorem2_range(long k_lo, long k_hi, unsigned jobs) {
    Stopwatch sw;
    VerdictReport rep;
    rep.claim = "theorem2";
    rep.range = "k=" + std::to_string(k_lo) + ".." + std::to_string(k_hi);
    engine_.warm(4 * k_hi + 1);

    std::mutex m;
    std::string witness;
    bool all = true;
    parallel_for(k_lo, k_hi + 1, jobs, [&](long k) {
        VerdictReport one = check_theorem2(k);
        if (!one.pass) {
            std::lock_guard<std::mutex> lock(m);
            all = false;
            if (witness.empty()) witness = one.witness;
        }
    });
    rep.pass = all;
    rep.witness = witness;
    rep.elapsed_ms = sw.ms();
    return rep;
}

VerdictReport Verifier::check_count_step(long n_max, unsigned jobs) {
    if (n_max < 2) throw std::invalid_argument("check_count_step: requires n_max >= 2");
    Stopwatch sw;
    VerdictReport rep;
    rep.claim = "count_step";
    rep.range = "n=1.." + std::to_string(n_max);
    engine_.warm(n_max);

    std::vector<long> c(static_cast<std::size_t>(n_max));
    parallel_for(1, n_max + 1, jobs,
                 [&](long n) { c[static_cast<std::size_t>(n - 1)] = roots_.real_root_count(n).second; });
    bool ok = true;
    if (auto bad = first_step_violation(c)) {
        ok = false;
        rep.witness = "c_" + std::to_string(*bad + 1) + "=" + std::to_string(c[static_cast<std::size_t>(*bad)]) +
                      " > c_" + std::to_string(*bad) + "+1=" +
                      std::to_string(c[static_cast<std::size_t>(*bad - 1)] + 1);
    }
    rep.pass = ok;
    rep.elapsed_ms = sw.ms();
    return rep;
}

VerdictReport Verifier::check_zeta_window(long k_max) {
    if (k_max < 1) throw std::invalid_argument("check_zeta_window: requires k_max >= 1");
    Stopwatch sw;
    VerdictReport rep;
    rep.claim = "zeta_window";
    rep.range = "k=1.." + std::to_string(k_max);
    ZetaWindowCertificate cert = zeta_window_certificate(engine_, k_max);
    rep.pass = cert.in_window && cert.strictly_decreasing;
    if (!rep.pass)
        rep.witness = std::string(cert.in_window ? "monotonicity" : "window") + " fails at k=" +
                      std::to_string(cert.first_failure_k);
    rep.elapsed_ms = sw.ms();
    return rep;
}

VerdictReport Verifier::check_identities(long n_max, unsigned jobs) {
    if (n_max < 1) throw std::invalid_argument("check_identities: requires n_max >= 1");
    Stopwatch sw;
    VerdictReport rep;
    rep.claim = "identities";
    rep.range = "n=1.." + std::to_string(n_max);
    engine_.warm(n_max);

    std::mutex m;
    std::string witness;
    bool all = true;
    parallel_for(1, n_max + 1, jobs, [&](long n) {
        IdentityReport one = engine_.verify_identities(n);
        if (!one.all_hold()) {
            std::lock_guard<std::mutex> lock(m);
            all = false;
            if (witness.empty()) witness = "n=" + std::to_string(n) + ": " + one.witness;
        }
    });
    rep.pass = all;
    rep.witness = witness;
    rep.elapsed_ms = sw.ms();
    return rep;
}

VerdictReport Verifier::check_von_staudt_clausen(long n_max) {
    if (n_max < 2) throw std::invalid_argument("check_von_staudt_clausen: requires n_max >= 2");
    Stopwatch sw;
    VerdictReport rep;
    rep.claim = "von_staudt_clausen";
    rep.range = "even n=2.." + std::to_string(n_max);
    engine_.warm(n_max);

    bool ok = true;
    for (long n = 2; n <= n_max; n += 2) {
        if (!engine_.von_staudt_clausen(n)) {
            ok = false;
            Rational sum = engine_.number(n);
            for (long p : von_staudt_clausen_primes(n)) sum += make_rational(1, p);
            rep.witness = "n=" + std::to_string(n) + ": B + sum(1/p) = " + frac(sum) +
                          " is not an integer (B=" + frac(engine_.number(n)) + ")";
            break;
        }
    }
    if (ok) {
        for (const CacheMismatch& bad : engine_.revalidate()) {
            if (bad.n > n_max) continue;
            ok = false;
            rep.witness = "cached B_" + std::to_string(bad.n) + "=" + frac(bad.cached) +
                          " disagrees with the recurrence value " + frac(bad.recomputed);
            break;
        }
    }
    rep.pass = ok;
    rep.elapsed_ms = sw.ms();
    return rep;
}

}  // namespace bernpoly
