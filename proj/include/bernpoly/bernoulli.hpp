#ifndef BERNPOLY_BERNOULLI_HPP
#define BERNPOLY_BERNOULLI_HPP

#include <filesystem>
#include <map>
#include <optional>
#include <shared_mutex>
#include <string>
#include <vector>

#include "bernpoly/ratpoly.hpp"

namespace bernpoly {

/* Outcome of the four classical Bernoulli-polynomial identity checks at
 * index n, each verified as an exact coefficient-wise polynomial equality:
 *
 *   reflection    B_n(1-x) = (-1)^n B_n(x)
 *   duplication   2^(1-n) B_n(2x) = B_n(x) + B_n(x + 1/2)
 *   difference    B_n(x+1) - B_n(x) = n x^(n-1)
 *   derivative    B_n'(x) = n B_(n-1)(x)
 *
 * On failure, `witness` holds the first differing coefficient index and
 * the two values.
 */
struct IdentityReport {
    long n = 0;
    bool reflection = false;
    bool duplication = false;
    bool difference = false;
    bool derivative = false;
    std::string witness;

    bool all_hold() const { return reflection && duplication && difference && derivative; }
};

struct CacheMismatch {
    long n;
    Rational cached;
    Rational recomputed;
};

/* Exact Bernoulli numbers and polynomials.
 *
 * The primary construction is the recurrence
 *     sum_{j=0}^{n} C(n+1, j) B_j = 0,  B_0 = 1,
 * memoized in an in-process table that can be persisted to disk. Two
 * independent constructions, series_construction (truncated power-series
 * division of t e^{tx} by e^t - 1) and integral_construction (inductive
 * antiderivatives with zero mean over [0, 1]), exist as cross-check
 * oracles and must agree coefficient-exactly with the recurrence.
 *
 * Cache file format, bit-exact: UTF-8 text, one record per line,
 * "<n>\t<numerator>/<denominator>", decimal integers, denominator positive,
 * fraction reduced, lines sorted by ascending n, newline-terminated.
 *
 * Concurrency: number()/polynomial() take a shared lock on the memo table
 * and are safe to call from many threads; growing the table or storing it
 * is single-writer behind the same mutex. warm(n) fills the table up front
 * so that a parallel phase runs entirely on the read path.
 */
class BernoulliEngine {
public:
    BernoulliEngine() = default;
    // Loads `cache_file` if it exists (a missing file is an empty cache).
    explicit BernoulliEngine(std::filesystem::path cache_file);

    // Exact B_n(0). All lower indices get cached as a side effect.
    Rational number(long n);
    // Exact B_n(x): degree n, leading coefficient 1.
    RatPoly polynomial(long n);

    // Oracle: B_n(x) by truncated power-series division in Q[x][[t]].
    RatPoly series_construction(long n);
    // Oracle: B_n(x) built inductively as the antiderivative of
    // n B_(n-1)(x) with the constant fixed by zero mean over [0, 1].
    RatPoly integral_construction(long n);

    // Exact check of the four identities at n >= 1.
    IdentityReport verify_identities(long n);

    // True iff B_n(0) + sum 1/p over primes p with (p-1) | n is an exact
    // integer. Requires even n >= 2. Used as an integrity checksum.
    bool von_staudt_clausen(long n);

    // Ensures indices 0..n are cached (single writer).
    void warm(long n);
    long max_cached() const;

    // Re-derives every cached entry from scratch and reports mismatches
    // (corrupted or tampered cache contents).
    std::vector<CacheMismatch> revalidate();

    // Persists the table to the backing file (write-to-temp-then-rename).
    // No-op without a backing file or when nothing changed.
    void save();
    const std::filesystem::path& cache_path() const { return path_; }

    // Raw cache-file IO. load throws std::runtime_error naming the first
    // malformed line; absent files load as an empty map.
    static std::map<long, Rational> load_cache_file(const std::filesystem::path& file);
    static void store_cache_file(const std::filesystem::path& file,
                                 const std::map<long, Rational>& entries);

private:
    void ensure_locked(long n);  // requires unique lock held

    mutable std::shared_mutex mutex_;
    std::vector<Rational> table_;   // B_0 .. B_(size-1)
    std::map<long, Rational> loaded_;  // entries taken from disk, pending verification against the recurrence
    std::filesystem::path path_;
    bool dirty_ = false;
};

// Primes p with (p-1) | n, ascending. Trial division; n is small here.
std::vector<long> von_staudt_clausen_primes(long n);

}  // namespace bernpoly

#endif
