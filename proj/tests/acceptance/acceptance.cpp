// Acceptance runner: one PASS/FAIL line per criterion, exit status 0 only when
// every criterion passes. All tolerances are fixed here.

#include "../support/oracles.hpp"
#include "../support/properties.hpp"

#include "greenchain/cli.hpp"
#include "greenchain/spectrum.hpp"

#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

using namespace greenchain;
using Clock = std::chrono::steady_clock;

namespace {

constexpr std::array<double, 6> kTableEnergies = {4.951, 19.774, 44.452, 78.996, 123.410, 177.693};
constexpr std::array<double, 6> kFigureRoots = {4.45, 19.27, 43.95, 78.49, 122.91, 177.19};

int failures = 0;

void report(int id, const std::string& title, bool pass, const std::string& detail)
{
    std::printf("[%s] criterion %d: %s -- %s\n", pass ? "PASS" : "FAIL", id, title.c_str(),
                detail.c_str());
    std::fflush(stdout);
    failures += pass ? 0 : 1;
}

double seconds_since(Clock::time_point start)
{
    return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string fmt(const char* format, double a, double b = 0.0, double c = 0.0)
{
    char buf[256];
    std::snprintf(buf, sizeof buf, format, a, b, c);
    return buf;
}

template <typename F>
void guarded(int id, const std::string& title, F&& body)
{
    try {
        body();
    } catch (const std::exception& e) {
        report(id, title, false, std::string("exception: ") + e.what());
    }
}

std::string run_cli_capture(std::vector<std::string> args, int& code)
{
    args.insert(args.begin(), "greenchain");
    std::ostringstream out;
    std::ostringstream err;
    code = run_cli(args, out, err);
    return out.str();
}

void criterion_table1()
{
    // Six levels within 0.01 hbar omega0, single-threaded, under 30 s.
    const auto start = Clock::now();
    OscillatorOptions options;
    options.threads = 1;
    const auto levels = oscillator_spectrum(OscillatorProblem(1.0), 6, options);
    const double elapsed = seconds_since(start);
    double worst = levels.size() == 6 ? 0.0 : HUGE_VAL;
    for (std::size_t i = 0; i < levels.size() && i < 6; ++i) {
        worst = std::max(worst, std::fabs(levels[i].energy - kTableEnergies[i]));
    }
    report(1, "confined-oscillator levels E0..E5", worst <= 0.01 && elapsed <= 30.0,
           fmt("max |E - ref| = %.2e (tol 1e-2), %.3f s single-threaded (limit 30 s)", worst, elapsed));
}

void criterion_fig1()
{
    const OscillatorProblem p(1.0);
    const RealFunction f = [&p](double v) { return oscillator_char_parity(v, p); };
    const auto brackets = scan_sign_changes(f, 0.0, 200.0, 20001, 1);
    double worst = brackets.size() >= 6 ? 0.0 : HUGE_VAL;
    for (std::size_t i = 0; i < 6 && i < brackets.size(); ++i) {
        const auto root = brent(f, brackets[i], 1e-10);
        worst = std::max(worst, std::fabs(root.value - kFigureRoots[i]));
    }
    report(2, "reduced characteristic sign changes in v", brackets.size() == 6 && worst <= 0.01,
           fmt("%.0f sign changes on [0, 200]; max |v - ref| = %.2e (tol 1e-2)",
               static_cast<double>(brackets.size()), worst));
}

void criterion_fig2()
{
    const auto rows = oscillator_scan_table(OscillatorProblem(1.0), 4.3, 4.8, 1e-3, 1);
    std::size_t best = 0;
    for (std::size_t i = 1; i < rows.size(); ++i) {
        if (rows[i].abs_reduced < rows[best].abs_reduced) best = i;
    }
    const double dev = std::fabs(rows[best].v - 4.45);
    report(3, "zoomed scan minimum of |r(v)|", rows.size() == 501 && dev <= 0.005,
           fmt("argmin v = %.3f, |v - 4.45| = %.1e (tol 5e-3), %.0f rows", rows[best].v, dev,
               static_cast<double>(rows.size())));
}

void criterion_box()
{
    double worst = 0.0;
    const struct {
        double a;
        UnitSystem units;
    } cases[] = {{1.0, {}}, {2.3, {0.8, 1.7, 1.0}}};
    for (const auto& c : cases) {
        const auto levels = box_spectrum_rect(c.a, 5, c.units);
        if (levels.size() != 5) worst = HUGE_VAL;
        for (std::size_t n = 1; n <= levels.size(); ++n) {
            const double exact = c.units.hbar * c.units.hbar * std::numbers::pi * std::numbers::pi *
                                 n * n / (2.0 * c.units.mass * c.a * c.a);
            worst = std::max(worst, std::fabs(levels[n - 1].energy - exact) / exact);
        }
    }
    report(4, "box spectrum by continuation, n = 1..5", worst <= 1e-8,
           fmt("max relative error %.2e (tol 1e-8)", worst));
}

void criterion_radial()
{
    const auto zeros = oracle::j0_zeros(3);
    const auto cyl = cyl_dirichlet_spectrum(1.0, 0, 3);
    double cyl_worst = cyl.size() == 3 ? 0.0 : HUGE_VAL;
    for (std::size_t i = 0; i < cyl.size(); ++i) {
        cyl_worst = std::max(cyl_worst, std::fabs(cyl[i].value - zeros[i]) / zeros[i]);
    }
    const auto sph = sph_dirichlet_spectrum(1.0, 0, 3);
    double sph_worst = sph.size() == 3 ? 0.0 : HUGE_VAL;
    for (std::size_t i = 0; i < sph.size(); ++i) {
        const double exact = (i + 1.0) * std::numbers::pi;
        sph_worst = std::max(sph_worst, std::fabs(sph[i].value - exact) / exact);
    }
    report(5, "cylinder m=0 and sphere l=0 Dirichlet roots", cyl_worst <= 1e-8 && sph_worst <= 1e-10,
           fmt("cylinder max rel %.2e (tol 1e-8); sphere max rel %.2e (tol 1e-10)", cyl_worst,
               sph_worst));
}

void criterion_delta_well()
{
    const auto level = delta_well_bound_state(-1.0);
    const double exact = -1.0 * 1.0 / 2.0; // -m mu^2 / 2 hbar^2
    const double dev = level ? std::fabs(level->energy - exact) / std::fabs(exact) : HUGE_VAL;
    report(6, "single delta-well bound state", dev <= 1e-10,
           fmt("E = %.15g, relative error %.2e (tol 1e-10)", level ? level->energy : NAN, dev));
}

void criterion_suite(int id, const std::string& title, const std::vector<props::CheckResult>& results)
{
    bool pass = true;
    std::string detail;
    for (const auto& r : results) {
        pass = pass && r.pass;
        if (!detail.empty()) detail += "; ";
        char buf[160];
        std::snprintf(buf, sizeof buf, "%s %s (worst %.1e, limit %.0e)", r.name.c_str(),
                      r.pass ? "ok" : "FAILED", r.worst, r.limit);
        detail += buf;
        if (!r.pass) detail += " at " + r.detail;
    }
    report(id, title, pass, detail);
}

void criterion_runtime_and_determinism(Clock::time_point suite_start)
{
    int code = 0;
    const std::vector<std::string> scan = {"scan", "--geometry", "oscillator", "--a", "1", "--lo",
                                           "0", "--hi", "200", "--step", "0.01"};
    auto with_threads = [&](const char* t) {
        auto args = scan;
        args.push_back("--threads");
        args.push_back(t);
        return args;
    };
    const auto first = run_cli_capture(with_threads("1"), code);
    bool same = code == 0;
    same = same && run_cli_capture(with_threads("1"), code) == first;
    same = same && run_cli_capture(with_threads("4"), code) == first;
    const auto spectrum1 = run_cli_capture({"spectrum", "--geometry", "oscillator", "--threads", "1"}, code);
    same = same && run_cli_capture({"spectrum", "--geometry", "oscillator", "--threads", "6"}, code) ==
                       spectrum1;
    const double elapsed = seconds_since(suite_start);
    report(9, "runtime and CSV determinism", same && elapsed <= 60.0,
           std::string("CSV byte-identical across runs and thread counts: ") + (same ? "yes" : "no") +
               fmt("; acceptance workload %.2f s single-threaded (limit 60 s)", elapsed));
}

} // namespace

int main()
{
    const auto start = Clock::now();
    guarded(1, "confined-oscillator levels E0..E5", criterion_table1);
    guarded(2, "reduced characteristic sign changes in v", criterion_fig1);
    guarded(3, "zoomed scan minimum of |r(v)|", criterion_fig2);
    guarded(4, "box spectrum by continuation, n = 1..5", criterion_box);
    guarded(5, "cylinder m=0 and sphere l=0 Dirichlet roots", criterion_radial);
    guarded(6, "single delta-well bound state", criterion_delta_well);
    guarded(7, "chain property suites", [] {
        criterion_suite(7, "chain property suites", props::chain_suite());
    });
    guarded(8, "special-function suite", [] {
        criterion_suite(8, "special-function suite", props::specfun_suite());
    });
    guarded(9, "runtime and CSV determinism", [&] { criterion_runtime_and_determinism(start); });
    std::printf("%s: %d of 9 criteria failed\n", failures == 0 ? "ALL PASS" : "FAILED", failures);
    return failures == 0 ? 0 : 1;
}
