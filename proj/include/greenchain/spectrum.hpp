#pragma once

#include "greenchain/errors.hpp"
#include "greenchain/greens.hpp"

#include <complex>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace greenchain {

using RealFunction = std::function<double(double)>;

/// Interval [lo, hi] on which f changes sign.
struct Bracket {
    double lo;
    double hi;
    double f_lo;
    double f_hi;
};

enum class RootClass { generic, even_bracket, odd_bracket, node_factor };
std::string_view to_string(RootClass c);

struct Root {
    double value = 0.0;
    double residual = 0.0; ///< |f(value)|
    double width = 0.0;    ///< width of the final enclosing interval
    Bracket bracket{};     ///< the bracket refinement started from
    int iterations = 0;
    RootClass classification = RootClass::generic;
};

/// A root with the energy it corresponds to.
struct Level {
    Root root;
    double energy;
};

/// Number of worker threads for grid scans: GREENCHAIN_THREADS if set to a
/// positive integer, otherwise the hardware concurrency.
unsigned default_thread_count();

/// Evaluates f on n_grid equally spaced points of [lo, hi] and returns one
/// bracket per sign change between neighbours, in increasing order. A grid
/// value of exactly zero is bridged over when its neighbours differ in sign.
/// Points where f throws or returns a non-finite value are skipped and, if
/// `skipped` is given, appended to it. f must be safe to call concurrently
/// when threads > 1. The result does not depend on the thread count.
std::vector<Bracket> scan_sign_changes(const RealFunction& f, double lo, double hi,
                                       int n_grid, unsigned threads = 1,
                                       std::vector<double>* skipped = nullptr);

/// Brent's method (inverse quadratic interpolation safeguarded by bisection).
/// Stops when the enclosing interval is narrower than tol and |f| <= tol, or
/// when the interval cannot shrink further in double precision.
/// Throws RootNotConverged after max_iter iterations.
Root brent(const RealFunction& f, const Bracket& bracket, double tol, int max_iter = 200);

// ------------------------------------------------ confined oscillator

/// Harmonic oscillator inside impenetrable walls at 0 and box_length, centred
/// in the box.
class OscillatorProblem {
public:
    explicit OscillatorProblem(double box_length, UnitSystem units = {});

    double box_length() const { return box_length_; }
    const UnitSystem& units() const { return units_; }
    /// Half width of the box in the dimensionless coordinate,
    /// sqrt(2 m omega0 / hbar) * box_length / 2.
    double alpha() const { return alpha_; }

private:
    double box_length_;
    UnitSystem units_;
    double alpha_;
};

/// Delta(v) = (m / pi hbar omega0) Gamma(-v)^2 D_v(alpha)^2 [D_v(-alpha)^2 - D_v(alpha)^2].
/// Throws DomainError at non-negative integer v and RangeError on overflow.
double oscillator_char_full(double v, const OscillatorProblem& problem);

/// r(v) = [D_v(-alpha)^2 - D_v(alpha)^2] / [D_v(-alpha)^2 + D_v(alpha)^2], in
/// [-1, 1] and of the same sign as Delta(v). Because D_v(y) and D_v(-y) become
/// dependent at integer v, r also vanishes (and flips sign) at every
/// non-negative integer; use oscillator_char_parity to locate levels.
double oscillator_char_reduced(double v, const OscillatorProblem& problem);

/// p(v) = 2 e o / (e^2 + o^2) with e, o the even and odd Weber solutions at
/// alpha. It equals sign(Gamma(-v)) r(v) away from integers, has no spurious
/// zeros, and vanishes exactly on the confined spectrum.
double oscillator_char_parity(double v, const OscillatorProblem& problem);

struct OscillatorOptions {
    double v_lo = -0.5;
    double v_hi = 200.0;
    double step = 0.01;
    double tol = 1e-10;
    bool include_node_factor = false; ///< also report zeros of D_v(alpha)
    unsigned threads = 1;
};

/// First n_roots levels E = (v + 1/2) hbar omega0 of the confined oscillator,
/// classified even_bracket (even eigenfunction) or odd_bracket. Fewer roots
/// are returned if the validated range v <= 200 is exhausted. With
/// include_node_factor, zeros of D_v(alpha) follow, flagged node_factor.
std::vector<Level> oscillator_spectrum(const OscillatorProblem& problem, int n_roots,
                                       const OscillatorOptions& options = {});

// ------------------------------------- strong-coupling continuations

/// Phase-stripped determinant of the two-wall rectangular boundary matrix
/// continued to k0 = -i kappa: sin(kappa a) / kappa.
double rect_continued_char(double kappa, double box_length);

/// Complex determinant of the rectangular boundary matrix evaluated at
/// k0 = -i kappa, using g0 = exp(i kappa |z - z'|) / (-2 i kappa).
std::complex<double> rect_continued_boundary_det(std::span<const double> positions,
                                                 double kappa);

/// Particle in a box [0, a]: E_j = hbar^2 kappa_j^2 / 2m with sin(kappa a) = 0.
std::vector<Level> box_spectrum_rect(double box_length, int n, const UnitSystem& units = {},
                                     double tol = 1e-12);

/// Zeros kappa of J_m(kappa b) (Dirichlet disk) or of the annulus cross
/// product J_m(kappa b1) Y_m(kappa b2) - J_m(kappa b2) Y_m(kappa b1).
std::vector<Root> cyl_dirichlet_spectrum(double radius, int mode, int n, double tol = 1e-13);
std::vector<Root> cyl_annulus_spectrum(double inner, double outer, int mode, int n,
                                       double tol = 1e-13);

/// Zeros kappa of j_l(kappa c) (Dirichlet ball) or the spherical shell analogue.
std::vector<Root> sph_dirichlet_spectrum(double radius, int mode, int n, double tol = 1e-13);
std::vector<Root> sph_shell_spectrum(double inner, double outer, int mode, int n,
                                     double tol = 1e-13);

/// Bound state of a single attractive delta wall, located as the pole of the
/// finite-coupling Green's function (1 + lambda / 2 k0 = 0). Returns nullopt
/// for a repulsive or vanishing coupling.
std::optional<Level> delta_well_bound_state(double mu, const UnitSystem& units = {});

// ------------------------------------------------------ scan tables

struct ScanRow {
    double param;
    double abs_value; ///< NaN where f could not be evaluated
    int sign;
};

/// Rows for lo, lo + step, ... up to hi (inclusive within half a step).
/// Empty when hi <= lo.
std::vector<ScanRow> char_scan_table(const RealFunction& f, double lo, double hi, double step,
                                     unsigned threads = 1);

struct OscillatorScanRow {
    double v;
    double abs_reduced;
    std::optional<double> abs_full; ///< empty at poles and on overflow
};

std::vector<OscillatorScanRow> oscillator_scan_table(const OscillatorProblem& problem, double lo,
                                                     double hi, double step,
                                                     unsigned threads = 1);

/// Raised by brent() when it runs out of iterations; carries the best iterate.
class RootNotConverged : public NumericError {
public:
    RootNotConverged(const std::string& what, Root best) : NumericError(what), best_(best) {}
    const Root& best() const { return best_; }

private:
    Root best_;
};

} // namespace greenchain
