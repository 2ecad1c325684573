#include "greenchain/spectrum.hpp"

#include "greenchain/chain.hpp"
#include "greenchain/errors.hpp"
#include "greenchain/linalg.hpp"
#include "greenchain/specfun.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <limits>
#include <numbers>
#include <string>
#include <thread>

namespace greenchain {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

int sign_of(double x)
{
    return (x > 0.0) - (x < 0.0);
}

/// Runs body(i) for i in [0, n) on up to `threads` workers, each owning a
/// contiguous block of indices.
template <class Body>
void parallel_for(std::size_t n, unsigned threads, Body body)
{
    const std::size_t workers = std::clamp<std::size_t>(threads, 1, std::max<std::size_t>(n, 1));
    if (workers == 1) {
        for (std::size_t i = 0; i < n; ++i) {
            body(i);
        }
        return;
    }
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    const std::size_t block = (n + workers - 1) / workers;
    for (std::size_t w = 0; w < workers; ++w) {
        const std::size_t begin = w * block;
        const std::size_t end = std::min(n, begin + block);
        if (begin >= end) {
            break;
        }
        pool.emplace_back([&body, begin, end] {
            for (std::size_t i = begin; i < end; ++i) {
                body(i);
            }
        });
    }
}

double evaluate_or_nan(const RealFunction& f, double x)
{
    try {
        const double value = f(x);
        return std::isfinite(value) ? value : kNaN;
    } catch (const std::exception&) {
        return kNaN;
    }
}

std::vector<double> evaluate_grid(const RealFunction& f, std::span<const double> grid,
                                  unsigned threads)
{
    std::vector<double> values(grid.size());
    parallel_for(grid.size(), threads, [&](std::size_t i) { values[i] = evaluate_or_nan(f, grid[i]); });
    return values;
}

std::size_t table_size(double lo, double hi, double step)
{
    if (!(step > 0.0)) {
        throw DomainError("scan table: step must be positive");
    }
    if (!(hi > lo)) {
        return 0;
    }
    return static_cast<std::size_t>(std::floor((hi - lo) / step + 0.5)) + 1;
}

/// First n roots of f on (start, limit], scanning with the given step in
/// windows and refining each bracket with Brent.
std::vector<Root> first_roots(const RealFunction& f, double start, double step, int n,
                              double tol, double limit)
{
    std::vector<Root> roots;
    constexpr int kWindow = 256;
    double lo = start;
    while (static_cast<int>(roots.size()) < n && lo < limit) {
        const double hi = lo + kWindow * step;
        for (const auto& b : scan_sign_changes(f, lo, hi, kWindow + 1)) {
            roots.push_back(brent(f, b, tol));
            if (static_cast<int>(roots.size()) == n) {
                break;
            }
        }
        lo = hi;
    }
    return roots;
}

void require_count(int n, const char* what)
{
    if (n < 0) {
        throw DomainError(std::string(what) + ": root count must be non-negative");
    }
}

void require_length(double x, const char* what)
{
    if (!(x > 0.0) || !std::isfinite(x)) {
        throw DomainError(std::string(what) + ": lengths must be positive");
    }
}

} // namespace

std::string_view to_string(RootClass c)
{
    switch (c) {
    case RootClass::generic: return "generic";
    case RootClass::even_bracket: return "even_bracket";
    case RootClass::odd_bracket: return "odd_bracket";
    case RootClass::node_factor: return "node_factor";
    }
    return "unknown";
}

unsigned default_thread_count()
{
    if (const char* env = std::getenv("GREENCHAIN_THREADS")) {
        char* end = nullptr;
        const long value = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && value >= 1) {
            return static_cast<unsigned>(value);
        }
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

// ------------------------------------------------------ scanning / Brent

std::vector<Bracket> scan_sign_changes(const RealFunction& f, double lo, double hi, int n_grid,
                                       unsigned threads, std::vector<double>* skipped)
{
    if (n_grid < 2) {
        throw DomainError("scan_sign_changes: need at least two grid points");
    }
    if (!(hi > lo)) {
        throw DomainError("scan_sign_changes: requires lo < hi");
    }
    std::vector<double> grid(static_cast<std::size_t>(n_grid));
    const double h = (hi - lo) / (n_grid - 1);
    for (int i = 0; i < n_grid; ++i) {
        grid[i] = lo + i * h;
    }
    grid.back() = hi;
    const auto values = evaluate_grid(f, grid, threads);

    std::vector<Bracket> brackets;
    std::optional<std::size_t> prev;
    for (std::size_t i = 0; i < grid.size(); ++i) {
        if (std::isnan(values[i])) {
            if (skipped) {
                skipped->push_back(grid[i]);
            }
            continue;
        }
        if (values[i] == 0.0) {
            continue;
        }
        if (prev && sign_of(values[*prev]) != sign_of(values[i])) {
            brackets.push_back({grid[*prev], grid[i], values[*prev], values[i]});
        }
        prev = i;
    }
    return brackets;
}

Root brent(const RealFunction& f, const Bracket& bracket, double tol, int max_iter)
{
    if (!(bracket.lo < bracket.hi) || sign_of(bracket.f_lo) * sign_of(bracket.f_hi) >= 0) {
        if (bracket.f_lo == 0.0 || bracket.f_hi == 0.0) {
            const double x = bracket.f_lo == 0.0 ? bracket.lo : bracket.hi;
            return {x, 0.0, 0.0, bracket, 0, RootClass::generic};
        }
        throw DomainError("brent: bracket must satisfy lo < hi and f(lo) f(hi) < 0");
    }
    if (!(tol > 0.0)) {
        throw DomainError("brent: tolerance must be positive");
    }
    double a = bracket.lo;
    double b = bracket.hi;
    double fa = bracket.f_lo;
    double fb = bracket.f_hi;
    double c = b;
    double fc = fb;
    double d = b - a;
    double e = d;
    double x_tol = tol;

    for (int iter = 1; iter <= max_iter; ++iter) {
        if (sign_of(fb) == sign_of(fc)) {
            c = a;
            fc = fa;
            d = b - a;
            e = d;
        }
        if (std::fabs(fc) < std::fabs(fb)) {
            a = b;
            b = c;
            c = a;
            fa = fb;
            fb = fc;
            fc = fa;
        }
        const double tol1 = 2.0 * kEps * std::fabs(b) + 0.5 * x_tol;
        const double xm = 0.5 * (c - b);
        if (fb == 0.0) {
            return {b, 0.0, std::fabs(c - b), bracket, iter, RootClass::generic};
        }
        if (std::fabs(xm) <= tol1) {
            const bool floor_reached = x_tol <= 4.0 * kEps * std::max(std::fabs(b), 1e-300);
            if (std::fabs(fb) <= tol || floor_reached) {
                return {b, std::fabs(fb), std::fabs(c - b), bracket, iter, RootClass::generic};
            }
            // Interval is tight enough but the residual is not: keep narrowing.
            x_tol *= 1e-3;
            continue;
        }
        if (std::fabs(e) >= tol1 && std::fabs(fa) > std::fabs(fb)) {
            const double s = fb / fa;
            double p;
            double q;
            if (a == c) {
                p = 2.0 * xm * s;
                q = 1.0 - s;
            } else {
                const double qq = fa / fc;
                const double r = fb / fc;
                p = s * (2.0 * xm * qq * (qq - r) - (b - a) * (r - 1.0));
                q = (qq - 1.0) * (r - 1.0) * (s - 1.0);
            }
            if (p > 0.0) {
                q = -q;
            }
            p = std::fabs(p);
            const double min1 = 3.0 * xm * q - std::fabs(tol1 * q);
            const double min2 = std::fabs(e * q);
            if (2.0 * p < std::min(min1, min2)) {
                e = d;
                d = p / q;
            } else {
                d = xm;
                e = d;
            }
        } else {
            d = xm;
            e = d;
        }
        a = b;
        fa = fb;
        b += std::fabs(d) > tol1 ? d : std::copysign(tol1, xm);
        fb = f(b);
        if (!std::isfinite(fb)) {
            throw NumericError("brent: function is not finite inside the bracket");
        }
    }
    throw RootNotConverged("brent: no convergence within the iteration limit",
                           {b, std::fabs(fb), std::fabs(c - b), bracket, max_iter,
                            RootClass::generic});
}

// ------------------------------------------------ confined oscillator

OscillatorProblem::OscillatorProblem(double box_length, UnitSystem units)
    : box_length_(box_length), units_(units)
{
    require_length(box_length, "oscillator problem");
    units_.validate();
    alpha_ = std::sqrt(2.0 * units_.mass * units_.omega0 / units_.hbar) * box_length_ / 2.0;
    if (alpha_ > 10.0) {
        throw DomainError("oscillator problem: box too wide for the parabolic cylinder range");
    }
}

double oscillator_char_full(double v, const OscillatorProblem& problem)
{
    const auto& u = problem.units();
    const auto parts = specfun::pcf_parts(v, problem.alpha());
    const SignLog d_plus = parts.even + parts.odd;
    SignLog delta{1, std::log(u.mass / (kPi * u.hbar * u.omega0))};
    const SignLog g = specfun::gamma_signlog(-v);
    delta *= g * g;
    delta *= d_plus * d_plus;
    // D_v(-alpha)^2 - D_v(alpha)^2 = -4 even * odd
    delta *= SignLog::from_value(-4.0) * parts.even * parts.odd;
    if (delta.sign != 0 && delta.log_mag > 709.0) {
        throw RangeError("oscillator_char_full: Delta(v) overflows; use the reduced form");
    }
    return delta.value();
}

double oscillator_char_reduced(double v, const OscillatorProblem& problem)
{
    const auto parts = specfun::pcf_parts(v, problem.alpha());
    const auto s = rescale_common(parts.even, parts.odd);
    const double norm = s.first * s.first + s.second * s.second;
    return norm == 0.0 ? 0.0 : -2.0 * s.first * s.second / norm;
}

double oscillator_char_parity(double v, const OscillatorProblem& problem)
{
    const auto w = specfun::weber_even_odd(v, problem.alpha());
    const double scale = std::max(std::fabs(w.regular), std::fabs(w.irregular));
    if (scale == 0.0) {
        return 0.0;
    }
    const double e = w.regular / scale;
    const double o = w.irregular / scale;
    return 2.0 * e * o / (e * e + o * o);
}

std::vector<Level> oscillator_spectrum(const OscillatorProblem& problem, int n_roots,
                                       const OscillatorOptions& options)
{
    require_count(n_roots, "oscillator_spectrum");
    if (!(options.v_hi > options.v_lo) || !(options.step > 0.0)) {
        throw DomainError("oscillator_spectrum: invalid scan range");
    }
    const double alpha = problem.alpha();
    const double hbar_omega = problem.units().hbar * problem.units().omega0;
    const int n_grid =
        static_cast<int>(std::floor((options.v_hi - options.v_lo) / options.step + 0.5)) + 1;

    const RealFunction parity = [&problem](double v) { return oscillator_char_parity(v, problem); };
    std::vector<Level> levels;
    for (const auto& b : scan_sign_changes(parity, options.v_lo, options.v_hi, n_grid,
                                           options.threads)) {
        if (static_cast<int>(levels.size()) == n_roots) {
            break;
        }
        Root root = brent(parity, b, options.tol);
        const auto at_lo = specfun::weber_even_odd(b.lo, alpha);
        const auto at_hi = specfun::weber_even_odd(b.hi, alpha);
        root.classification = sign_of(at_lo.regular) != sign_of(at_hi.regular)
                                  ? RootClass::even_bracket
                                  : RootClass::odd_bracket;
        levels.push_back({root, (root.value + 0.5) * hbar_omega});
    }

    if (options.include_node_factor) {
        // D_v(alpha) normalised by the two-point amplitude; bounded and sign-faithful.
        const RealFunction node = [alpha](double v) {
            const auto parts = specfun::pcf_parts(v, alpha);
            const auto s = rescale_common(parts.even, parts.odd);
            const double norm = std::sqrt(2.0 * (s.first * s.first + s.second * s.second));
            return norm == 0.0 ? 0.0 : (s.first + s.second) / norm;
        };
        int found = 0;
        for (const auto& b : scan_sign_changes(node, options.v_lo, options.v_hi, n_grid,
                                               options.threads)) {
            if (found == n_roots) {
                break;
            }
            Root root = brent(node, b, options.tol);
            root.classification = RootClass::node_factor;
            levels.push_back({root, (root.value + 0.5) * hbar_omega});
            ++found;
        }
    }
    return levels;
}

// ------------------------------------- strong-coupling continuations

double rect_continued_char(double kappa, double box_length)
{
    return std::sin(kappa * box_length) / kappa;
}

std::complex<double> rect_continued_boundary_det(std::span<const double> positions, double kappa)
{
    if (!(kappa > 0.0)) {
        throw DomainError("rect_continued_boundary_det: kappa must be positive");
    }
    const std::size_t n = positions.size();
    const std::complex<double> denom{0.0, -2.0 * kappa};
    ComplexMatrix g(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            const double dist = std::fabs(positions[i] - positions[j]);
            g(i, j) = std::polar(1.0, kappa * dist) / denom;
        }
    }
    return determinant(g);
}

std::vector<Level> box_spectrum_rect(double box_length, int n, const UnitSystem& units, double tol)
{
    require_length(box_length, "box_spectrum_rect");
    require_count(n, "box_spectrum_rect");
    units.validate();
    const double step = kPi / (16.0 * box_length);
    const RealFunction f = [box_length](double kappa) {
        return rect_continued_char(kappa, box_length);
    };
    const auto roots = first_roots(f, 0.5 * step, step, n, tol, (n + 2) * kPi / box_length);
    std::vector<Level> levels;
    for (const auto& r : roots) {
        levels.push_back({r, units.hbar * units.hbar * r.value * r.value / (2.0 * units.mass)});
    }
    return levels;
}

std::vector<Root> cyl_dirichlet_spectrum(double radius, int mode, int n, double tol)
{
    require_length(radius, "cyl_dirichlet_spectrum");
    require_count(n, "cyl_dirichlet_spectrum");
    const double step = kPi / (16.0 * radius);
    const RealFunction f = [radius, mode](double kappa) {
        return specfun::bessel_jy(mode, kappa * radius).regular;
    };
    return first_roots(f, 0.5 * step, step, n, tol, (n + mode + 4) * kPi / radius);
}

std::vector<Root> cyl_annulus_spectrum(double inner, double outer, int mode, int n, double tol)
{
    require_length(inner, "cyl_annulus_spectrum");
    require_count(n, "cyl_annulus_spectrum");
    if (!(outer > inner)) {
        throw DomainError("cyl_annulus_spectrum: requires inner < outer");
    }
    const double width = outer - inner;
    const double step = kPi / (16.0 * width);
    const RealFunction f = [inner, outer, mode](double kappa) {
        const auto a = specfun::bessel_jy(mode, kappa * inner);
        const auto b = specfun::bessel_jy(mode, kappa * outer);
        return a.regular * b.irregular - b.regular * a.irregular;
    };
    return first_roots(f, 0.5 * step, step, n, tol, (n + mode + 4) * kPi / width);
}

std::vector<Root> sph_dirichlet_spectrum(double radius, int mode, int n, double tol)
{
    require_length(radius, "sph_dirichlet_spectrum");
    require_count(n, "sph_dirichlet_spectrum");
    const double step = kPi / (16.0 * radius);
    const RealFunction f = [radius, mode](double kappa) {
        return specfun::sph_ordinary(mode, kappa * radius).regular;
    };
    return first_roots(f, 0.5 * step, step, n, tol, (n + mode + 4) * kPi / radius);
}

std::vector<Root> sph_shell_spectrum(double inner, double outer, int mode, int n, double tol)
{
    require_length(inner, "sph_shell_spectrum");
    require_count(n, "sph_shell_spectrum");
    if (!(outer > inner)) {
        throw DomainError("sph_shell_spectrum: requires inner < outer");
    }
    const double width = outer - inner;
    const double step = kPi / (16.0 * width);
    const RealFunction f = [inner, outer, mode](double kappa) {
        const auto a = specfun::sph_ordinary(mode, kappa * inner);
        const auto b = specfun::sph_ordinary(mode, kappa * outer);
        return a.regular * b.irregular - b.regular * a.irregular;
    };
    return first_roots(f, 0.5 * step, step, n, tol, (n + mode + 4) * kPi / width);
}

std::optional<Level> delta_well_bound_state(double mu, const UnitSystem& units)
{
    units.validate();
    const double lambda = units.rescale_coupling(mu);
    if (!(lambda < 0.0)) {
        return std::nullopt;
    }
    const auto chain = DeltaChain::finite(Geometry::rectangular, {0.0}, {mu}, units);
    const auto g0 = FreeGreens::rectangular();
    // The system matrix is 1x1, so its only entry is the determinant 1 + lambda / (2 k0).
    const RealFunction system_det = [&](double k0) {
        return lambda_matrix(boundary_matrix(chain, g0, k0), chain).entries(0, 0);
    };
    const double scale = std::fabs(lambda);
    const double lo = 1e-6 * scale;
    const Bracket b{lo, scale, system_det(lo), system_det(scale)};
    Root root = brent(system_det, b, 1e-14 * scale);
    const double energy = -units.hbar * units.hbar * root.value * root.value / (2.0 * units.mass);
    return Level{root, energy};
}

// ------------------------------------------------------ scan tables

std::vector<ScanRow> char_scan_table(const RealFunction& f, double lo, double hi, double step,
                                     unsigned threads)
{
    const std::size_t n = table_size(lo, hi, step);
    std::vector<double> grid(n);
    for (std::size_t i = 0; i < n; ++i) {
        grid[i] = lo + static_cast<double>(i) * step;
    }
    const auto values = evaluate_grid(f, grid, threads);
    std::vector<ScanRow> rows;
    rows.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        rows.push_back({grid[i], std::fabs(values[i]), std::isnan(values[i]) ? 0 : sign_of(values[i])});
    }
    return rows;
}

std::vector<OscillatorScanRow> oscillator_scan_table(const OscillatorProblem& problem, double lo,
                                                     double hi, double step, unsigned threads)
{
    const std::size_t n = table_size(lo, hi, step);
    std::vector<OscillatorScanRow> rows(n);
    parallel_for(n, threads, [&](std::size_t i) {
        const double v = lo + static_cast<double>(i) * step;
        rows[i].v = v;
        rows[i].abs_reduced =
            std::fabs(evaluate_or_nan([&](double x) { return oscillator_char_reduced(x, problem); }, v));
        const double full =
            evaluate_or_nan([&](double x) { return oscillator_char_full(x, problem); }, v);
        if (!std::isnan(full)) {
            rows[i].abs_full = std::fabs(full);
        }
    });
    return rows;
}

} // namespace greenchain
