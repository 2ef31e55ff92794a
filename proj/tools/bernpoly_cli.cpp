#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <numbers>

#include "bernpoly/asymptotics.hpp"
#include "bernpoly/bernoulli.hpp"
#include "bernpoly/json_writer.hpp"
#include "bernpoly/parallel.hpp"
#include "bernpoly/root_finder.hpp"
#include "bernpoly/verifier.hpp"

/* bernpoly: exact computations on Bernoulli polynomials and their real
 * roots, plus executable verification of their classical structure.
 *
 * Exit codes (stable contract):
 *   0  success / every check passed
 *   1  a verification check failed (witness in the JSON output)
 *   2  usage error
 *   3  resource or budget error (degree cap, unwritable output)
 */

namespace {

using namespace bernpoly;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitResource = 3;

std::string default_cache_path() {
    if (const char* env = std::getenv("BERNPOLY_CACHE"); env && *env) return env;
    return "./bernoulli.cache";
}

void warn_if_deep(long n, long cap) {
    if (n > 120)
        std::cerr << "bernpoly: note: degrees beyond 120 can take minutes (requested " << n
                  << ", cap " << cap << ")\n";
}

std::string fmt(double v) { return JsonWriter::format_double(v); }

double elapsed_ms_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

struct CheckList {
    std::vector<VerdictReport> checks;
    bool all_pass() const {
        return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.pass; });
    }
    void add(VerdictReport rep) { checks.push_back(std::move(rep)); }
};

void emit_verify_json(std::ostream& os, const std::string& suite, long nmax, long kmax,
                      const CheckList& list) {
    JsonWriter jw(os, true);
    jw.begin_object();
    jw.key("suite").value(suite);
    jw.key("nmax").value(nmax);
    jw.key("kmax").value(kmax);
    jw.key("checks").begin_array();
    for (const VerdictReport& c : list.checks) {
        jw.begin_object();
        jw.key("claim").value(c.claim);
        jw.key("range").value(c.range);
        jw.key("pass").value(c.pass);
        jw.key("witness").value(c.witness);
        jw.key("note").value(c.note);
        jw.key("elapsed_ms").value(c.elapsed_ms);
        jw.end_object();
    }
    jw.end_array();
    jw.key("all_pass").value(list.all_pass());
    jw.end_object();
}

// Construction cross-checks and a root-machinery shakedown. These carry
// numeric spot values, so they live here rather than in the exact-only
// verifier module.
VerdictReport check_constructions(BernoulliEngine& engine, long n_max) {
    auto t0 = std::chrono::steady_clock::now();
    VerdictReport rep;
    rep.claim = "constructions";
    rep.range = "n=0.." + std::to_string(n_max);
    rep.pass = true;
    for (long n = 0; n <= n_max; ++n) {
        RatPoly a = engine.polynomial(n);
        if (a != engine.series_construction(n)) {
            rep.pass = false;
            rep.witness = "series construction differs at n=" + std::to_string(n);
            break;
        }
        if (a != engine.integral_construction(n)) {
            rep.pass = false;
            rep.witness = "integral construction differs at n=" + std::to_string(n);
            break;
        }
    }
    rep.elapsed_ms = elapsed_ms_since(t0);
    return rep;
}

VerdictReport check_root_machinery(RootFinder& roots, long n) {
    auto t0 = std::chrono::steady_clock::now();
    VerdictReport rep;
    rep.claim = "root_machinery";
    rep.range = "n=" + std::to_string(n);
    rep.pass = true;
    auto fail = [&rep](const std::string& w) {
        rep.pass = false;
        if (rep.witness.empty()) rep.witness = w;
    };

    RootIsolation iso = roots.isolate_roots(n);
    auto [cd, cm] = roots.real_root_count(n);
    if (static_cast<long>(iso.intervals.size()) != cd) fail("isolation count mismatch");
    if (iso.with_multiplicity() != cm) fail("isolation multiplicity mismatch");
    RatPoly sf = roots.engine().polynomial(n).squarefree_part();
    for (const Interval& iv : iso.intervals)
        if (sturm_count(sf, iv) != 1) fail("an interval fails the one-root certificate");

    auto [top, is_int] = roots.max_root(n, make_rational(1, 1 << 16));
    (void)is_int;
    if (!top.is_point()) {
        Interval finer = refine(roots.engine().polynomial(n), top, make_rational(1, 1 << 24));
        if (finer.width() > make_rational(1, 1 << 24)) fail("refine did not reach eps");
        if (finer.lo < top.lo || finer.hi > top.hi) fail("refine left the bracket");
    }
    if (n % 4 == 1 && roots.structural_count(n) != cm) fail("structural count mismatch");
    rep.elapsed_ms = elapsed_ms_since(t0);
    return rep;
}

VerdictReport check_zeta_values(Asymptotics& asym, long k_max) {
    auto t0 = std::chrono::steady_clock::now();
    VerdictReport rep;
    rep.claim = "zeta_values";
    rep.range = "k=1.." + std::to_string(k_max);
    rep.pass = true;
    double z1 = asym.zeta_euler(1);
    double pi4_90 = std::pow(std::numbers::pi, 4) / 90.0;
    if (std::abs(z1 - pi4_90) > 1e-9) {
        rep.pass = false;
        rep.witness = "zeta(4) = " + fmt(z1) + " differs from pi^4/90 = " + fmt(pi4_90);
    }
    if (rep.pass && std::abs(z1 - zeta_dirichlet(1)) > 1e-9) {
        rep.pass = false;
        rep.witness = "zeta(4) disagrees with the Dirichlet partial sum";
    }
    if (rep.pass) {
        for (const ZetaRow& r : asym.zeta_table(std::min<long>(k_max, 12))) {
            if (!(std::isfinite(r.radical) && std::isfinite(r.stirling_ratio))) {
                rep.pass = false;
                rep.witness = "non-finite asymptotics row at k=" + std::to_string(r.k);
                break;
            }
        }
    }
    rep.elapsed_ms = elapsed_ms_since(t0);
    return rep;
}

int run_number(BernoulliEngine& engine, long n, const std::string& format) {
    Rational value = engine.number(n);
    if (format == "json") {
        JsonWriter jw(std::cout, true);
        jw.begin_object();
        jw.key("n").value(n);
        jw.key("value").value(to_fraction_string(value));
        jw.end_object();
    } else {
        std::cout << value.get_str() << "\n";
    }
    return kExitOk;
}

int run_roots(BernoulliEngine& engine, long n, const Rational& eps) {
    RootFinder roots(engine);
    RootReport rep = roots.report(n, eps);
    RootIsolation iso = roots.isolate_roots(n);
    JsonWriter jw(std::cout, true);
    jw.begin_object();
    jw.key("n").value(rep.n);
    jw.key("c_distinct").value(rep.c_distinct);
    jw.key("c_mult").value(rep.c_with_multiplicity);
    jw.key("d").value(rep.d);
    jw.key("y_lo").value(to_fraction_string(rep.y_enclosure.lo));
    jw.key("y_hi").value(to_fraction_string(rep.y_enclosure.hi));
    jw.key("y_exact_integer").value(rep.y_is_exact_integer);
    jw.key("isolation").begin_array();
    for (std::size_t i = 0; i < iso.intervals.size(); ++i) {
        const Interval& iv = iso.intervals[i];
        jw.begin_object();
        jw.key("lo").value(to_fraction_string(iv.lo));
        jw.key("hi").value(to_fraction_string(iv.hi));
        jw.key("lo_open").value(iv.lo_open);
        jw.key("hi_open").value(iv.hi_open);
        jw.key("multiplicity").value(iso.multiplicities[i]);
        jw.end_object();
    }
    jw.end_array();
    jw.end_object();
    return kExitOk;
}

int run_verify(BernoulliEngine& engine, const std::string& suite, long nmax, long kmax,
               unsigned jobs) {
    RootFinder roots(engine);
    Verifier verifier(roots);
    Asymptotics asym(roots);
    CheckList list;

    const long k_s2 = std::max<long>(1, std::min(kmax, nmax / 4));
    const long k_t2 = std::max<long>(0, std::min(kmax, (nmax - 1) / 4));

    if (suite == "identities" || suite == "all") list.add(verifier.check_identities(nmax, jobs));
    if (suite == "all") {
        list.add(check_constructions(engine, std::min<long>(nmax, 48)));
        list.add(verifier.check_von_staudt_clausen(std::max<long>(2, nmax)));
    }
    if (suite == "lemma" || suite == "all")
        list.add(verifier.check_lemma_range(2, std::max<long>(2, nmax), jobs));
    if (suite == "statement1" || suite == "all")
        list.add(verifier.check_statement1(std::max<long>(2, nmax), jobs));
    if (suite == "statement2" || suite == "all") list.add(verifier.check_statement2_range(1, k_s2));
    if (suite == "theorem2" || suite == "all") list.add(verifier.check_theorem2_range(0, k_t2, jobs));
    if (suite == "all") {
        list.add(verifier.check_corollary(std::min<long>(nmax, 12), 6));
        list.add(verifier.check_count_step(std::max<long>(2, nmax), jobs));
        list.add(check_root_machinery(roots, std::min<long>(nmax, 9)));
    }
    if (suite == "zeta" || suite == "all") {
        list.add(verifier.check_zeta_window(std::max<long>(1, kmax)));
        list.add(check_zeta_values(asym, std::max<long>(1, kmax)));
    }

    emit_verify_json(std::cout, suite, nmax, kmax, list);
    return list.all_pass() ? kExitOk : kExitVerifyFailed;
}

void emit_table_csv(std::ostream& os, const std::vector<AsymptoticsRow>& rows,
                    const std::vector<RootReport>& reports) {
    os << "n,c_mult,d,y_lo,y_hi,y_pred,y_resid,c_pred,c_resid\n";
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const AsymptoticsRow& r = rows[i];
        const RootReport& rep = reports[i];
        os << r.n << ',' << r.c_actual << ',' << rep.d << ','
           << fmt(rep.y_enclosure.lo.get_d()) << ',' << fmt(rep.y_enclosure.hi.get_d()) << ','
           << fmt(r.y_pred) << ',' << fmt(r.y_resid) << ',' << fmt(r.c_pred) << ','
           << fmt(r.c_resid) << '\n';
    }
}

void emit_table_json(std::ostream& os, const std::vector<AsymptoticsRow>& rows,
                     const std::vector<RootReport>& reports) {
    JsonWriter jw(os, true);
    jw.begin_array();
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const AsymptoticsRow& r = rows[i];
        const RootReport& rep = reports[i];
        jw.begin_object();
        jw.key("n").value(r.n);
        jw.key("c_mult").value(r.c_actual);
        jw.key("d").value(rep.d);
        jw.key("y_lo").value(to_fraction_string(rep.y_enclosure.lo));
        jw.key("y_hi").value(to_fraction_string(rep.y_enclosure.hi));
        jw.key("y_pred").value(r.y_pred);
        jw.key("y_resid").value(r.y_resid);
        jw.key("c_pred").value(r.c_pred);
        jw.key("c_resid").value(r.c_resid);
        jw.end_object();
    }
    jw.end_array();
}

int run_table(BernoulliEngine& engine, long from, long to, const Rational& eps,
              const std::string& format, const std::string& out_path, unsigned jobs) {
    RootFinder roots(engine);

    engine.warm(to);  // single-threaded warm-up before the fan-out
    std::vector<RootReport> reports(static_cast<std::size_t>(to - from + 1));
    parallel_for(from, to + 1, jobs,
                 [&](long n) { reports[static_cast<std::size_t>(n - from)] = roots.report(n, eps); });

    std::vector<AsymptoticsRow> rows(reports.size());
    for (std::size_t i = 0; i < reports.size(); ++i) {
        const RootReport& rep = reports[i];
        AsymptoticsRow r;
        r.n = rep.n;
        r.y_mid = rep.y_enclosure.midpoint().get_d();
        r.y_pred = predict_y(rep.n);
        r.y_resid = r.y_mid - r.y_pred;
        r.c_actual = rep.c_with_multiplicity;
        r.c_pred = predict_c(rep.n);
        r.c_resid = static_cast<double>(r.c_actual) - r.c_pred;
        rows[i] = r;
    }

    std::ofstream file;
    std::ostream* os = &std::cout;
    if (!out_path.empty()) {
        file.open(out_path, std::ios::trunc);
        if (!file.is_open()) {
            std::cerr << "bernpoly: cannot write to '" << out_path << "'\n";
            return kExitResource;
        }
        os = &file;
    }
    if (format == "json")
        emit_table_json(*os, rows, reports);
    else
        emit_table_csv(*os, rows, reports);
    os->flush();
    if (!*os) {
        std::cerr << "bernpoly: short write\n";
        return kExitResource;
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact Bernoulli polynomial and real-root toolbox"};
    app.require_subcommand(1);
    app.fallthrough();  // global flags may follow the subcommand

    std::string cache_path = default_cache_path();
    unsigned jobs = 0;
    long max_degree = 200;
    app.add_option("--cache", cache_path, "Bernoulli-number cache file")->capture_default_str();
    app.add_option("--jobs,-j", jobs, "worker threads (0 = hardware)")->capture_default_str();
    app.add_option("--max-degree", max_degree, "degree budget cap")->capture_default_str();

    auto* cmd_number = app.add_subcommand("number", "print the exact Bernoulli number B_n(0)");
    long number_n = 0;
    std::string number_format = "text";
    cmd_number->add_option("n", number_n, "index")->required()->check(CLI::NonNegativeNumber);
    cmd_number->add_option("--format", number_format, "text|json")
        ->check(CLI::IsMember({"text", "json"}));

    auto* cmd_roots = app.add_subcommand("roots", "root statistics and isolation for B_n (JSON)");
    long roots_n = 1;
    std::string roots_eps = "1/1099511627776";  // 2^-40
    cmd_roots->add_option("n", roots_n, "index")->required()->check(CLI::PositiveNumber);
    cmd_roots->add_option("--eps", roots_eps, "enclosure width bound (rational or decimal)");

    auto* cmd_verify = app.add_subcommand("verify", "run executable claim checks (JSON)");
    std::string suite = "all";
    long nmax = 60;
    long kmax = -1;
    cmd_verify
        ->add_option("--suite", suite, "identities|lemma|statement1|statement2|theorem2|zeta|all")
        ->capture_default_str();
    cmd_verify->add_option("--nmax", nmax, "top polynomial index")->capture_default_str();
    cmd_verify->add_option("--kmax", kmax, "top k (default nmax/4)");

    auto* cmd_table = app.add_subcommand("table", "per-n residual table (CSV or JSON)");
    long from = 1, to = 60;
    std::string table_eps = "1/1099511627776";
    std::string table_format = "csv";
    std::string out_path;
    cmd_table->add_option("--from", from, "first index")->capture_default_str();
    cmd_table->add_option("--to", to, "last index")->capture_default_str();
    cmd_table->add_option("--eps", table_eps, "enclosure width bound");
    cmd_table->add_option("--format", table_format, "csv|json")
        ->check(CLI::IsMember({"csv", "json"}));
    cmd_table->add_option("--out", out_path, "output file (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        BernoulliEngine engine{std::filesystem::path(cache_path)};
        int code = kExitUsage;

        if (app.got_subcommand(cmd_number)) {
            code = run_number(engine, number_n, number_format);
        } else if (app.got_subcommand(cmd_roots)) {
            if (roots_n > max_degree) {
                std::cerr << "bernpoly: n=" << roots_n << " exceeds the degree cap " << max_degree
                          << " (raise --max-degree)\n";
                return kExitResource;
            }
            warn_if_deep(roots_n, max_degree);
            Rational eps = parse_rational(roots_eps);
            if (eps <= 0) throw std::invalid_argument("--eps must be positive");
            code = run_roots(engine, roots_n, eps);
        } else if (app.got_subcommand(cmd_verify)) {
            const std::vector<std::string> known{"identities", "lemma",    "statement1",
                                                 "statement2", "theorem2", "zeta",
                                                 "all"};
            if (std::find(known.begin(), known.end(), suite) == known.end()) {
                std::cerr << "bernpoly: unknown suite '" << suite << "'\n";
                return kExitUsage;
            }
            if (nmax < 1) {
                std::cerr << "bernpoly: --nmax must be >= 1\n";
                return kExitUsage;
            }
            if (nmax > max_degree) {
                std::cerr << "bernpoly: --nmax " << nmax << " exceeds the degree cap " << max_degree
                          << " (raise --max-degree)\n";
                return kExitResource;
            }
            warn_if_deep(nmax, max_degree);
            if (kmax < 0) kmax = std::max<long>(1, nmax / 4);
            code = run_verify(engine, suite, nmax, kmax, jobs);
        } else if (app.got_subcommand(cmd_table)) {
            if (from < 1 || to < from) {
                std::cerr << "bernpoly: empty or invalid range\n";
                return kExitUsage;
            }
            if (to > max_degree) {
                std::cerr << "bernpoly: --to " << to << " exceeds the degree cap " << max_degree
                          << " (raise --max-degree)\n";
                return kExitResource;
            }
            warn_if_deep(to, max_degree);
            Rational eps = parse_rational(table_eps);
            if (eps <= 0) throw std::invalid_argument("--eps must be positive");
            code = run_table(engine, from, to, eps, table_format, out_path, jobs);
        }

        try {
            engine.save();
        } catch (const std::exception& e) {
            std::cerr << "bernpoly: warning: could not persist the cache: " << e.what() << "\n";
        }
        return code;
    } catch (const std::invalid_argument& e) {
        std::cerr << "bernpoly: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "bernpoly: " << e.what() << "\n";
        return kExitResource;
    }
}
