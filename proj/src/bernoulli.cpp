#include "bernpoly/bernoulli.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <system_error>

namespace bernpoly {

namespace {

// C(n, 0..n) by the multiplicative rule; every division is exact.
std::vector<Integer> binomial_row(long n) {
    std::vector<Integer> row(static_cast<std::size_t>(n) + 1);
    row[0] = 1;
    for (long j = 1; j <= n; ++j) {
        row[j] = row[j - 1] * (n - j + 1);
        mpz_divexact_ui(row[j].get_mpz_t(), row[j].get_mpz_t(), static_cast<unsigned long>(j));
    }
    return row;
}

// Recurrence table of B_0..B_n computed from scratch, trusting nothing.
std::vector<Rational> recurrence_from_scratch(long n) {
    std::vector<Rational> table;
    table.reserve(static_cast<std::size_t>(n) + 1);
    table.emplace_back(1);
    std::vector<Integer> row{1, 1};  // C(1, .); advanced by Pascal additions
    for (long m = 1; m <= n; ++m) {
        // row holds C(m+1, j): sum_{j<=m} C(m+1, j) B_j = 0.
        row.emplace_back(1);
        for (std::size_t j = row.size() - 2; j >= 1; --j) row[j] += row[j - 1];
        Rational s(0);
        for (long j = 0; j < m; ++j) s += Rational(row[static_cast<std::size_t>(j)]) * table[static_cast<std::size_t>(j)];
        s /= Rational(m + 1);
        table.push_back(-s);
    }
    return table;
}

std::optional<std::string> coefficient_witness(const RatPoly& lhs, const RatPoly& rhs) {
    if (lhs == rhs) return std::nullopt;
    int top = std::max(lhs.degree(), rhs.degree());
    for (int i = 0; i <= top; ++i) {
        if (lhs.coeff(i) != rhs.coeff(i)) {
            std::ostringstream os;
            os << "coefficient " << i << ": " << to_fraction_string(lhs.coeff(i)) << " vs "
               << to_fraction_string(rhs.coeff(i));
            return os.str();
        }
    }
    return "degree mismatch";
}

bool is_prime(long p) {
    if (p < 2) return false;
    for (long d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

}  // namespace

std::vector<long> von_staudt_clausen_primes(long n) {
    std::vector<long> primes;
    for (long d = 1; d <= n; ++d) {
        if (n % d != 0) continue;
        if (is_prime(d + 1)) primes.push_back(d + 1);
    }
    std::sort(primes.begin(), primes.end());
    return primes;
}

BernoulliEngine::BernoulliEngine(std::filesystem::path cache_file) : path_(std::move(cache_file)) {
    loaded_ = load_cache_file(path_);
    // Adopt the contiguous prefix verbatim; the verification suites (von
    // Staudt-Clausen, revalidate) are the paths that catch corruption.
    for (auto it = loaded_.begin(); it != loaded_.end() && it->first == static_cast<long>(table_.size()); ++it)
        table_.push_back(it->second);
}

void BernoulliEngine::ensure_locked(long n) {
    if (table_.empty()) table_.emplace_back(1);
    long m = static_cast<long>(table_.size());
    if (m > n) return;
    dirty_ = true;

    // Pascal row C(m+1, .), built once and advanced in place per index.
    std::vector<Integer> row = binomial_row(m + 1);
    for (; m <= n; ++m) {
        if (auto it = loaded_.find(m); it != loaded_.end()) {
            table_.push_back(it->second);
        } else {
            Rational s(0);
            for (long j = 0; j < m; ++j)
                s += Rational(row[static_cast<std::size_t>(j)]) * table_[static_cast<std::size_t>(j)];
            s /= Rational(m + 1);
            table_.push_back(-s);
        }
        row.emplace_back(1);
        for (std::size_t j = row.size() - 2; j >= 1; --j) row[j] += row[j - 1];
    }
}

void BernoulliEngine::warm(long n) {
    if (n < 0) throw std::invalid_argument("BernoulliEngine::warm: negative index");
    std::unique_lock lock(mutex_);
    ensure_locked(n);
}

long BernoulliEngine::max_cached() const {
    std::shared_lock lock(mutex_);
    return static_cast<long>(table_.size()) - 1;
}

Rational BernoulliEngine::number(long n) {
    if (n < 0) throw std::invalid_argument("bernoulli number: negative index");
    {
        std::shared_lock lock(mutex_);
        if (n < static_cast<long>(table_.size())) return table_[static_cast<std::size_t>(n)];
        if (auto it = loaded_.find(n); it != loaded_.end()) return it->second;
    }
    std::unique_lock lock(mutex_);
    ensure_locked(n);
    return table_[static_cast<std::size_t>(n)];
}

RatPoly BernoulliEngine::polynomial(long n) {
    if (n < 0) throw std::invalid_argument("bernoulli polynomial: negative index");
    warm(n);
    std::shared_lock lock(mutex_);
    std::vector<Integer> binom = binomial_row(n);
    std::vector<Rational> coeffs(static_cast<std::size_t>(n) + 1);
    for (long k = 0; k <= n; ++k)
        coeffs[static_cast<std::size_t>(n - k)] =
            Rational(binom[static_cast<std::size_t>(k)]) * table_[static_cast<std::size_t>(k)];
    return RatPoly(std::move(coeffs));
}

RatPoly BernoulliEngine::series_construction(long n) {
    if (n < 0) throw std::invalid_argument("series construction: negative index");
    // t e^{tx} / (e^t - 1) = e^{tx} / ((e^t - 1)/t). With
    //   e^{tx}        = sum_m (x^m / m!) t^m
    //   (e^t - 1)/t   = sum_m t^m / (m+1)!
    // the quotient coefficients C_m in Q[x] satisfy
    //   C_m = x^m/m! - sum_{i<m} C_i / (m-i+1)!    and    B_n = n! C_n.
    std::vector<RatPoly> c;
    c.reserve(static_cast<std::size_t>(n) + 1);
    Integer factorial = 1;
    std::vector<Rational> inv_factorial{Rational(1)};  // 1/(m!)
    for (long m = 1; m <= n + 1; ++m) {
        factorial *= m;
        inv_factorial.push_back(make_rational(1, factorial));
    }
    for (long m = 0; m <= n; ++m) {
        RatPoly cm = RatPoly::monomial(static_cast<int>(m), inv_factorial[static_cast<std::size_t>(m)]);
        for (long i = 0; i < m; ++i)
            cm = cm - c[static_cast<std::size_t>(i)] * inv_factorial[static_cast<std::size_t>(m - i + 1)];
        c.push_back(std::move(cm));
    }
    Integer n_factorial = 1;
    for (long m = 2; m <= n; ++m) n_factorial *= m;
    return c[static_cast<std::size_t>(n)] * Rational(n_factorial);
}

RatPoly BernoulliEngine::integral_construction(long n) {
    if (n < 0) throw std::invalid_argument("integral construction: negative index");
    RatPoly b = RatPoly::constant(Rational(1));
    for (long m = 1; m <= n; ++m) {
        RatPoly primitive = (b * Rational(m)).antiderivative();
        Rational constant = -primitive.integral(Rational(0), Rational(1));
        b = primitive + RatPoly::constant(constant);
    }
    return b;
}

IdentityReport BernoulliEngine::verify_identities(long n) {
    if (n < 1) throw std::invalid_argument("verify_identities: requires n >= 1");
    IdentityReport rep;
    rep.n = n;
    RatPoly bn = polynomial(n);
    RatPoly bn_prev = polynomial(n - 1);

    auto note = [&rep](const char* which, const std::optional<std::string>& w) {
        if (w && rep.witness.empty()) rep.witness = std::string(which) + ": " + *w;
    };

    {  // B_n(1-x) = (-1)^n B_n(x)
        RatPoly lhs = bn.compose_affine(Rational(-1), Rational(1));
        RatPoly rhs = (n % 2 == 0) ? bn : -bn;
        rep.reflection = lhs == rhs;
        note("reflection", coefficient_witness(lhs, rhs));
    }
    {  // 2^(1-n) B_n(2x) = B_n(x) + B_n(x + 1/2)
        Rational scale = make_rational(1, pow_integer(2, static_cast<unsigned long>(n - 1)));
        RatPoly lhs = bn.compose_affine(Rational(2), Rational(0)) * scale;
        RatPoly rhs = bn + bn.compose_affine(Rational(1), make_rational(1, 2));
        rep.duplication = lhs == rhs;
        note("duplication", coefficient_witness(lhs, rhs));
    }
    {  // B_n(x+1) - B_n(x) = n x^(n-1)
        RatPoly lhs = bn.compose_affine(Rational(1), Rational(1)) - bn;
        RatPoly rhs = RatPoly::monomial(static_cast<int>(n - 1), Rational(n));
        rep.difference = lhs == rhs;
        note("difference", coefficient_witness(lhs, rhs));
    }
    {  // B_n'(x) = n B_(n-1)(x)
        RatPoly lhs = bn.derivative();
        RatPoly rhs = bn_prev * Rational(n);
        rep.derivative = lhs == rhs;
        note("derivative", coefficient_witness(lhs, rhs));
    }
    return rep;
}

bool BernoulliEngine::von_staudt_clausen(long n) {
    if (n < 2 || n % 2 != 0)
        throw std::invalid_argument("von_staudt_clausen: requires even n >= 2");
    Rational sum = number(n);
    for (long p : von_staudt_clausen_primes(n)) sum += make_rational(1, p);
    return is_integer(sum);
}

std::vector<CacheMismatch> BernoulliEngine::revalidate() {
    std::shared_lock lock(mutex_);
    long top = static_cast<long>(table_.size()) - 1;
    if (!loaded_.empty()) top = std::max(top, loaded_.rbegin()->first);
    if (top < 0) return {};
    std::vector<Rational> fresh = recurrence_from_scratch(top);
    std::vector<CacheMismatch> bad;
    for (long i = 0; i < static_cast<long>(table_.size()); ++i)
        if (table_[static_cast<std::size_t>(i)] != fresh[static_cast<std::size_t>(i)])
            bad.push_back({i, table_[static_cast<std::size_t>(i)], fresh[static_cast<std::size_t>(i)]});
    for (const auto& [i, value] : loaded_) {
        if (i < static_cast<long>(table_.size())) continue;  // already compared via the table
        if (value != fresh[static_cast<std::size_t>(i)]) bad.push_back({i, value, fresh[static_cast<std::size_t>(i)]});
    }
    return bad;
}

void BernoulliEngine::save() {
    std::unique_lock lock(mutex_);
    if (path_.empty() || !dirty_) return;
    std::map<long, Rational> merged = loaded_;
    for (long i = 0; i < static_cast<long>(table_.size()); ++i)
        merged[i] = table_[static_cast<std::size_t>(i)];
    store_cache_file(path_, merged);
    dirty_ = false;
}

std::map<long, Rational> BernoulliEngine::load_cache_file(const std::filesystem::path& file) {
    std::map<long, Rational> entries;
    std::ifstream in(file);
    if (!in.is_open()) return entries;  // absent file: empty cache

    std::string line;
    long lineno = 0;
    long prev_n = -1;
    auto fail = [&](const std::string& what) {
        throw std::runtime_error(file.string() + ": line " + std::to_string(lineno) + ": " + what);
    };
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) fail("empty line");
        auto tab = line.find('\t');
        if (tab == std::string::npos) fail("missing tab separator");
        std::string idx = line.substr(0, tab), frac = line.substr(tab + 1);
        for (char c : idx)
            if (!std::isdigit(static_cast<unsigned char>(c))) fail("bad index '" + idx + "'");
        if (idx.empty()) fail("bad index");
        auto slash = frac.find('/');
        if (slash == std::string::npos) fail("missing '/' in value");
        std::string num = frac.substr(0, slash), den = frac.substr(slash + 1);
        std::string num_digits = (!num.empty() && num[0] == '-') ? num.substr(1) : num;
        auto digits_ok = [](const std::string& s) {
            if (s.empty()) return false;
            for (char c : s)
                if (!std::isdigit(static_cast<unsigned char>(c))) return false;
            return true;
        };
        if (!digits_ok(num_digits) || !digits_ok(den)) fail("bad fraction '" + frac + "'");
        long n = 0;
        try {
            n = std::stol(idx);
        } catch (const std::exception&) {
            fail("index out of range '" + idx + "'");
        }
        if (n <= prev_n) fail("indices not strictly ascending");
        prev_n = n;
        Integer nz(num, 10), dz(den, 10);
        if (dz <= 0) fail("denominator must be positive");
        if (gcd(nz, dz) != 1) fail("fraction not reduced");
        Rational q(nz, dz);
        q.canonicalize();
        entries.emplace(n, std::move(q));
    }
    return entries;
}

void BernoulliEngine::store_cache_file(const std::filesystem::path& file,
                                       const std::map<long, Rational>& entries) {
    std::filesystem::path tmp = file;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::trunc);
        if (!out.is_open())
            throw std::runtime_error("cannot write cache file: " + tmp.string());
        for (const auto& [n, q] : entries)
            out << n << '\t' << to_fraction_string(q) << '\n';
        out.flush();
        if (!out) throw std::runtime_error("short write to cache file: " + tmp.string());
    }
    std::filesystem::rename(tmp, file);
}

}  // namespace bernpoly
