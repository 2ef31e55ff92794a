#ifndef BERNPOLY_ASYMPTOTICS_HPP
#define BERNPOLY_ASYMPTOTICS_HPP

#include <utility>
#include <vector>

#include "bernpoly/root_finder.hpp"

namespace bernpoly {

/* Numeric layer on top of the exact core.
 *
 * Every transcendental evaluation starts from exact integers or rationals
 * and moves to the log domain via bit-length decomposition
 * (ln(m 2^e) = e ln 2 + ln m with the mantissa in [0.5, 1)), so nothing
 * overflows even though -B_(4k)(0) exceeds 10^300 almost immediately.
 * After the logs every compared quantity is O(k)-sized and hardware
 * doubles are plenty for the stated tolerances.
 *
 * The one place doubles cannot decide anything is the strict window
 * 1 < zeta(4k) < 2: zeta(4k) - 1 shrinks like 2^(-4k) and falls below
 * double resolution near k = 14. Those strict bounds are therefore
 * certified exactly, with rational arithmetic over a 110-digit rational
 * enclosure of pi, in zeta_window_certificate().
 */

struct AsymptoticsRow {
    long n = 0;
    double y_mid = 0.0;    // midpoint of the y_n enclosure
    double y_pred = 0.0;   // n/(2 pi e) + ln(n)/(4 pi e)
    double y_resid = 0.0;
    long c_actual = 0;     // with multiplicity
    double c_pred = 0.0;   // 2n/(pi e) + ln(n)/(pi e)
    double c_resid = 0.0;
};

struct ZetaRow {
    long k = 0;
    double zeta_euler = 0.0;
    double radical = 0.0;        // (-B_(4k)(0))^(1/4k)
    double radical_pred = 0.0;   // 2k/(pi e) + ln(4k)/(4 pi e)
    double stirling_ratio = 0.0; // (4k)! / ((4k/e)^(4k) sqrt(8 pi k))
};

// ln of an exact positive integer / rational, exact up to double rounding.
double log_integer(const Integer& z);
double log_rational_abs(const Rational& q);

double predict_y(long n);
double predict_c(long n);

// (-B)^(1/(4k)) for the exact B = B_(4k)(0) < 0; relative error <= 1e-9
// regardless of the bit-length of B.
double radical_from_exact(const Rational& bernoulli_4k, long k);

// zeta(4k) = -B_(4k)(0) 2^(4k-1) pi^(4k) / (4k)! via log-domain
// evaluation with the exact factorial.
double zeta_euler_from_exact(const Rational& bernoulli_4k, long k);

// Independent small-k oracle: truncated Dirichlet sum over j^(-4k) with an
// integral tail correction.
double zeta_dirichlet(long k, long terms = 1000000);

// (4k)! / ((4k/e)^(4k) sqrt(8 pi k)), log domain, exact factorial.
double stirling_ratio(long k);

// Exact strict bounds via a rational enclosure of pi: returns
// (lower, upper) rationals with lower < zeta(4k) < upper certain.
std::pair<Rational, Rational> zeta_rational_bounds(const Rational& bernoulli_4k, long k);

struct ZetaWindowCertificate {
    bool in_window = true;        // 1 < zeta(4k) < 2 for every k checked
    bool strictly_decreasing = true;
    long first_failure_k = 0;
};

ZetaWindowCertificate zeta_window_certificate(BernoulliEngine& engine, long k_max);

class Asymptotics {
public:
    explicit Asymptotics(RootFinder& rf) : roots_(rf) {}

    double radical(long k);
    double zeta_euler(long k);
    AsymptoticsRow row(long n, const Rational& eps);
    ZetaRow zeta_row(long k);

    // Rows for n = n_from .. n_max, y enclosures of width <= eps, computed
    // in parallel and returned in index order.
    std::vector<AsymptoticsRow> residual_table(long n_from, long n_max, const Rational& eps,
                                               unsigned jobs = 0);
    std::vector<ZetaRow> zeta_table(long k_max);

private:
    RootFinder& roots_;
};

}  // namespace bernpoly

#endif
