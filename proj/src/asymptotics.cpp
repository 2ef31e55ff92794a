#include "bernpoly/asymptotics.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "bernpoly/parallel.hpp"

namespace bernpoly {

namespace {

constexpr double kPiE = std::numbers::pi * std::numbers::e;

// pi truncated after 115 decimals: PI_DIGITS/10^115 < pi < (PI_DIGITS+1)/10^115.
const char* const kPiDigits =
    "3141592653589793238462643383279502884197169399375105820974944592307816406286"
    "2089986280348253421170679821480865132823";
constexpr int kPiScaleDigits = 115;

std::pair<Rational, Rational> pi_enclosure() {
    Integer digits(kPiDigits, 10);
    Integer scale = pow_integer(10, kPiScaleDigits);
    return {make_rational(digits, scale), make_rational(digits + 1, scale)};
}

Integer factorial(long n) {
    Integer f;
    mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
    return f;
}

}  // namespace

double log_integer(const Integer& z) {
    if (z <= 0) throw std::domain_error("log_integer: requires a positive integer");
    long exp2 = 0;
    double mant = mpz_get_d_2exp(&exp2, z.get_mpz_t());  // mant in [0.5, 1)
    return std::log(mant) + static_cast<double>(exp2) * std::numbers::ln2;
}

double log_rational_abs(const Rational& q) {
    if (q == 0) throw std::domain_error("log_rational_abs: zero");
    Integer num = abs(Integer(q.get_num()));
    return log_integer(num) - log_integer(q.get_den());
}

double predict_y(long n) {
    if (n < 1) throw std::invalid_argument("predict_y: requires n >= 1");
    double nn = static_cast<double>(n);
    return nn / (2 * kPiE) + std::log(nn) / (4 * kPiE);
}

double predict_c(long n) {
    if (n < 1) throw std::invalid_argument("predict_c: requires n >= 1");
    double nn = static_cast<double>(n);
    return 2 * nn / kPiE + std::log(nn) / kPiE;
}

double radical_from_exact(const Rational& bernoulli_4k, long k) {
    if (k < 1) throw std::invalid_argument("radical: requires k >= 1");
    if (sign(bernoulli_4k) >= 0)
        throw std::domain_error("radical: B_(4k)(0) must be negative");
    return std::exp(log_rational_abs(bernoulli_4k) / static_cast<double>(4 * k));
}

double zeta_euler_from_exact(const Rational& bernoulli_4k, long k) {
    if (k < 1) throw std::invalid_argument("zeta_euler: requires k >= 1");
    if (sign(bernoulli_4k) >= 0)
        throw std::domain_error("zeta_euler: B_(4k)(0) must be negative");
    const double n = static_cast<double>(4 * k);
    double log_zeta = log_rational_abs(bernoulli_4k) + (n - 1) * std::numbers::ln2 +
                      n * std::log(std::numbers::pi) - log_integer(factorial(4 * k));
    return std::exp(log_zeta);
}

double zeta_dirichlet(long k, long terms) {
    if (k < 1 || terms < 2) throw std::invalid_argument("zeta_dirichlet: bad arguments");
    const double s = static_cast<double>(4 * k);
    double sum = 0.0;
    for (long j = terms; j >= 1; --j) sum += std::pow(static_cast<double>(j), -s);
    // The tail sits between the integrals from terms and from terms+1; use
    // the midpoint of the two bounds.
    double t0 = std::pow(static_cast<double>(terms), 1.0 - s) / (s - 1.0);
    double t1 = std::pow(static_cast<double>(terms) + 1.0, 1.0 - s) / (s - 1.0);
    return sum + (t0 + t1) / 2.0;
}

double stirling_ratio(long k) {
    if (k < 1) throw std::invalid_argument("stirling_ratio: requires k >= 1");
    const double n = static_cast<double>(4 * k);
    double log_ratio = log_integer(factorial(4 * k)) - n * (std::log(n) - 1.0) -
                       0.5 * std::log(8.0 * std::numbers::pi * static_cast<double>(k));
    return std::exp(log_ratio);
}

std::pair<Rational, Rational> zeta_rational_bounds(const Rational& bernoulli_4k, long k) {
    if (k < 1) throw std::invalid_argument("zeta_rational_bounds: requires k >= 1");
    if (sign(bernoulli_4k) >= 0)
        throw std::domain_error("zeta_rational_bounds: B_(4k)(0) must be negative");
    auto [pi_lo, pi_hi] = pi_enclosure();
    const unsigned long n = static_cast<unsigned long>(4 * k);
    Rational common = -bernoulli_4k * Rational(pow_integer(2, n - 1)) / Rational(factorial(4 * k));
    return {common * pow_rational(pi_lo, n), common * pow_rational(pi_hi, n)};
}

ZetaWindowCertificate zeta_window_certificate(BernoulliEngine& engine, long k_max) {
    ZetaWindowCertificate cert;
    engine.warm(4 * k_max);
    Rational prev_lo;
    for (long k = 1; k <= k_max; ++k) {
        auto [lo, hi] = zeta_rational_bounds(engine.number(4 * k), k);
        if (!(lo > 1 && hi < 2)) {
            cert.in_window = false;
            cert.first_failure_k = k;
            break;
        }
        if (k > 1 && !(hi < prev_lo)) {
            // previous zeta > this zeta requires hi(k) < lo(k-1)
            cert.strictly_decreasing = false;
            cert.first_failure_k = k;
            break;
        }
        prev_lo = lo;
    }
    return cert;
}

double Asymptotics::radical(long k) {
    return radical_from_exact(roots_.engine().number(4 * k), k);
}

double Asymptotics::zeta_euler(long k) {
    return zeta_euler_from_exact(roots_.engine().number(4 * k), k);
}

AsymptoticsRow Asymptotics::row(long n, const Rational& eps) {
    RootReport rep = roots_.report(n, eps);
    AsymptoticsRow r;
    r.n = n;
    r.y_mid = rep.y_enclosure.midpoint().get_d();
    r.y_pred = predict_y(n);
    r.y_resid = r.y_mid - r.y_pred;
    r.c_actual = rep.c_with_multiplicity;
    r.c_pred = predict_c(n);
    r.c_resid = static_cast<double>(r.c_actual) - r.c_pred;
    return r;
}

ZetaRow Asymptotics::zeta_row(long k) {
    ZetaRow r;
    r.k = k;
    r.zeta_euler = zeta_euler(k);
    r.radical = radical(k);
    r.radical_pred = 2.0 * static_cast<double>(k) / kPiE +
                     std::log(4.0 * static_cast<double>(k)) / (4 * kPiE);
    r.stirling_ratio = stirling_ratio(k);
    return r;
}

std::vector<AsymptoticsRow> Asymptotics::residual_table(long n_from, long n_max,
                                                        const Rational& eps, unsigned jobs) {
    if (n_from < 1 || n_max < n_from)
        throw std::invalid_argument("residual_table: bad range");
    roots_.engine().warm(n_max);
    std::vector<AsymptoticsRow> rows(static_cast<std::size_t>(n_max - n_from + 1));
    parallel_for(n_from, n_max + 1, jobs,
                 [&](long n) { rows[static_cast<std::size_t>(n - n_from)] = row(n, eps); });
    return rows;
}

std::vector<ZetaRow> Asymptotics::zeta_table(long k_max) {
    if (k_max < 1) throw std::invalid_argument("zeta_table: requires k_max >= 1");
    roots_.engine().warm(4 * k_max);
    std::vector<ZetaRow> rows;
    rows.reserve(static_cast<std::size_t>(k_max));
    for (long k = 1; k <= k_max; ++k) rows.push_back(zeta_row(k));
    return rows;
}

}  // namespace bernpoly
