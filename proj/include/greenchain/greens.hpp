#pragma once

#include <functional>
#include <optional>
#include <string>
#include <string_view>

namespace greenchain {

enum class Geometry { rectangular, cylindrical, spherical, oscillator, custom };

std::string_view to_string(Geometry g);
/// Parses "rectangular", "cylindrical", "spherical", "oscillator" or "custom".
Geometry parse_geometry(std::string_view name);

/// Physical constants of the problem. Natural units by default.
struct UnitSystem {
    double hbar = 1.0;
    double mass = 1.0;
    double omega0 = 1.0;

    /// Throws DomainError unless every field is strictly positive and finite.
    void validate() const;

    /// Rescaled coupling 2 m mu / hbar^2 of a raw delta strength mu.
    double rescale_coupling(double raw) const { return 2.0 * mass * raw / (hbar * hbar); }

    bool operator==(const UnitSystem&) const = default;
};

/// Decay constant k0 of the evanescent regime (k0 > 0).
class Wavenumber {
public:
    /// Throws DomainError unless k0 is finite and strictly positive.
    explicit Wavenumber(double k0);

    /// k0^2 = kx^2 + ky^2 - 2 m omega / hbar.
    static Wavenumber rectangular(double kx, double ky, double omega, const UnitSystem& units);
    /// k0^2 = kz^2 - 2 m omega / hbar.
    static Wavenumber cylindrical(double kz, double omega, const UnitSystem& units);
    /// k0^2 = -2 m omega / hbar.
    static Wavenumber spherical(double omega, const UnitSystem& units);

    double value() const { return k0_; }

private:
    static Wavenumber from_square(double k0_squared);
    double k0_;
};

/// Half-open or closed interval of admissible positions.
struct Interval {
    double lo;
    double hi;
    bool lo_open = false;

    bool contains(double x) const { return (lo_open ? x > lo : x >= lo) && x <= hi; }
};

// Free-space reduced Green's functions. Each solves its geometry's 1D
// operator with source -delta and decays away from the source.

/// exp(-k0 |z - z'|) / (2 k0).
double g0_rect(double z, double zp, Wavenumber k0);

/// I_m(k0 rho_<) K_m(k0 rho_>).
double g0_cyl(double rho, double rhop, Wavenumber k0, int mode);

/// (2 k0 / pi) i_l(k0 r_<) k_l(k0 r_>) with the modified spherical Bessel
/// convention of specfun::sph_modified. The prefactor makes the jump of
/// d/dr across r' equal to -1/r'^2.
double g0_sph(double r, double rp, Wavenumber k0, int mode);

/// Unconstrained harmonic oscillator centred at `center`:
///   sqrt(hbar / (4 pi m omega0)) Gamma(-v) D_v(-y_<) D_v(y_>),
///   y = sqrt(2 m omega0 / hbar) (z - center),  v = E / (hbar omega0) - 1/2.
/// The hbar/2m factor relative to the textbook kernel gives the unit jump
/// d/dz g(z', z') |_-^+ = -1. Throws DomainError at non-negative integer v.
double g0_osc(double z, double zp, double v, const UnitSystem& units, double center);

/// Measure weight multiplying the coupling in the system matrix: 1 for
/// rectangular/oscillator, rho for cylindrical, r^2 for spherical.
double weight(Geometry geometry, double position);

/// A free-space Green's function g0(x, x'; param) together with the measure
/// weight the coupling matrix needs. `param` is k0 for the Laplacian
/// geometries and v for the oscillator.
class FreeGreens {
public:
    using Kernel = std::function<double(double x, double xp, double param)>;
    using Weight = std::function<double(double position)>;

    static FreeGreens rectangular();
    static FreeGreens cylindrical(int mode);
    static FreeGreens spherical(int mode);
    static FreeGreens oscillator(const UnitSystem& units, double center);
    /// Any symmetric kernel with g0(a, a) finite. The weight defaults to 1.
    static FreeGreens custom(Kernel kernel, Interval domain, Weight weight = {});

    double operator()(double x, double xp, double param) const;
    double evaluate(double x, double xp, double param) const { return (*this)(x, xp, param); }
    double weight(double position) const;

    Geometry geometry() const { return geometry_; }
    const Interval& domain() const { return domain_; }
    std::optional<int> mode() const { return mode_; }

    /// The same kernel multiplied by a constant.
    FreeGreens scaled(double factor) const;

private:
    FreeGreens(Geometry geometry, Kernel kernel, Weight weight, Interval domain,
               std::optional<int> mode);

    Geometry geometry_;
    Kernel kernel_;
    Weight weight_;
    Interval domain_;
    std::optional<int> mode_;
};

} // namespace greenchain
