#include "greenchain/greens.hpp"

#include "greenchain/errors.hpp"
#include "greenchain/signlog.hpp"
#include "greenchain/specfun.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <utility>

namespace greenchain {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void require_radius(double r, const char* what)
{
    if (!(r > 0.0) || !std::isfinite(r)) {
        throw DomainError(std::string(what) + ": radii must be positive");
    }
}

} // namespace

std::string_view to_string(Geometry g)
{
    switch (g) {
    case Geometry::rectangular: return "rectangular";
    case Geometry::cylindrical: return "cylindrical";
    case Geometry::spherical: return "spherical";
    case Geometry::oscillator: return "oscillator";
    case Geometry::custom: return "custom";
    }
    return "unknown";
}

Geometry parse_geometry(std::string_view name)
{
    for (auto g : {Geometry::rectangular, Geometry::cylindrical, Geometry::spherical,
                   Geometry::oscillator, Geometry::custom}) {
        if (name == to_string(g)) {
            return g;
        }
    }
    throw ConfigError("unknown geometry '" + std::string(name) + "'");
}

void UnitSystem::validate() const
{
    for (double q : {hbar, mass, omega0}) {
        if (!(q > 0.0) || !std::isfinite(q)) {
            throw DomainError("unit system: hbar, mass and omega0 must be positive");
        }
    }
}

Wavenumber::Wavenumber(double k0) : k0_(k0)
{
    if (!(k0 > 0.0) || !std::isfinite(k0)) {
        throw DomainError("wavenumber: k0 must be positive (evanescent regime)");
    }
}

Wavenumber Wavenumber::from_square(double k0_squared)
{
    if (!(k0_squared > 0.0)) {
        throw DomainError("wavenumber: k0^2 must be positive (evanescent regime)");
    }
    return Wavenumber(std::sqrt(k0_squared));
}

Wavenumber Wavenumber::rectangular(double kx, double ky, double omega, const UnitSystem& units)
{
    units.validate();
    return from_square(kx * kx + ky * ky - 2.0 * units.mass * omega / units.hbar);
}

Wavenumber Wavenumber::cylindrical(double kz, double omega, const UnitSystem& units)
{
    units.validate();
    return from_square(kz * kz - 2.0 * units.mass * omega / units.hbar);
}

Wavenumber Wavenumber::spherical(double omega, const UnitSystem& units)
{
    units.validate();
    return from_square(-2.0 * units.mass * omega / units.hbar);
}

double g0_rect(double z, double zp, Wavenumber k0)
{
    const double k = k0.value();
    return std::exp(-k * std::fabs(z - zp)) / (2.0 * k);
}

double g0_cyl(double rho, double rhop, Wavenumber k0, int mode)
{
    require_radius(rho, "g0_cyl");
    require_radius(rhop, "g0_cyl");
    const double k = k0.value();
    const double lesser = std::min(rho, rhop);
    const double greater = std::max(rho, rhop);
    return specfun::bessel_i_scaled(mode, k * lesser) * specfun::bessel_k_scaled(mode, k * greater) *
           std::exp(k * (lesser - greater));
}

double g0_sph(double r, double rp, Wavenumber k0, int mode)
{
    require_radius(r, "g0_sph");
    require_radius(rp, "g0_sph");
    const double k = k0.value();
    const double lesser = std::min(r, rp);
    const double greater = std::max(r, rp);
    const double inner = specfun::sph_modified_scaled(mode, k * lesser).regular;
    const double outer = specfun::sph_modified_scaled(mode, k * greater).irregular;
    return 2.0 * k / std::numbers::pi * inner * outer * std::exp(k * (lesser - greater));
}

double g0_osc(double z, double zp, double v, const UnitSystem& units, double center)
{
    units.validate();
    if (v >= 0.0 && std::floor(v) == v) {
        throw DomainError("g0_osc: Gamma(-v) has a pole at non-negative integer v");
    }
    const double scale = std::sqrt(2.0 * units.mass * units.omega0 / units.hbar);
    const double y = scale * (z - center);
    const double yp = scale * (zp - center);
    const double lesser = std::min(y, yp);
    const double greater = std::max(y, yp);
    const double log_norm =
        0.5 * std::log(units.hbar / (4.0 * std::numbers::pi * units.mass * units.omega0));
    SignLog g{1, log_norm};
    g *= specfun::gamma_signlog(-v);
    g *= specfun::pcf_d_signlog(v, -lesser);
    g *= specfun::pcf_d_signlog(v, greater);
    return g.value();
}

double weight(Geometry geometry, double position)
{
    switch (geometry) {
    case Geometry::cylindrical:
        require_radius(position, "weight");
        return position;
    case Geometry::spherical:
        require_radius(position, "weight");
        return position * position;
    case Geometry::rectangular:
    case Geometry::oscillator:
    case Geometry::custom:
        if (!std::isfinite(position)) {
            throw DomainError("weight: position must be finite");
        }
        return 1.0;
    }
    return 1.0;
}

// ------------------------------------------------------------ FreeGreens

FreeGreens::FreeGreens(Geometry geometry, Kernel kernel, Weight weight, Interval domain,
                       std::optional<int> mode)
    : geometry_(geometry), kernel_(std::move(kernel)), weight_(std::move(weight)),
      domain_(domain), mode_(mode)
{
}

FreeGreens FreeGreens::rectangular()
{
    return FreeGreens(
        Geometry::rectangular,
        [](double x, double xp, double k0) { return g0_rect(x, xp, Wavenumber(k0)); },
        [](double a) { return greenchain::weight(Geometry::rectangular, a); },
        Interval{-kInf, kInf}, std::nullopt);
}

FreeGreens FreeGreens::cylindrical(int mode)
{
    if (mode < 0) {
        throw DomainError("cylindrical Green's function: azimuthal mode must be >= 0");
    }
    return FreeGreens(
        Geometry::cylindrical,
        [mode](double x, double xp, double k0) { return g0_cyl(x, xp, Wavenumber(k0), mode); },
        [](double a) { return greenchain::weight(Geometry::cylindrical, a); },
        Interval{0.0, kInf, true}, mode);
}

FreeGreens FreeGreens::spherical(int mode)
{
    if (mode < 0) {
        throw DomainError("spherical Green's function: angular mode must be >= 0");
    }
    return FreeGreens(
        Geometry::spherical,
        [mode](double x, double xp, double k0) { return g0_sph(x, xp, Wavenumber(k0), mode); },
        [](double a) { return greenchain::weight(Geometry::spherical, a); },
        Interval{0.0, kInf, true}, mode);
}

FreeGreens FreeGreens::oscillator(const UnitSystem& units, double center)
{
    units.validate();
    const double reach = 10.0 / std::sqrt(2.0 * units.mass * units.omega0 / units.hbar);
    return FreeGreens(
        Geometry::oscillator,
        [units, center](double x, double xp, double v) { return g0_osc(x, xp, v, units, center); },
        [](double a) { return greenchain::weight(Geometry::oscillator, a); },
        Interval{center - reach, center + reach}, std::nullopt);
}

FreeGreens FreeGreens::custom(Kernel kernel, Interval domain, Weight weight)
{
    if (!kernel) {
        throw ContractError("custom Green's function: kernel must be callable");
    }
    if (!weight) {
        weight = [](double) { return 1.0; };
    }
    return FreeGreens(Geometry::custom, std::move(kernel), std::move(weight), domain,
                      std::nullopt);
}

double FreeGreens::operator()(double x, double xp, double param) const
{
    if (!domain_.contains(x) || !domain_.contains(xp)) {
        throw DomainError("free Green's function: position outside the domain");
    }
    return kernel_(x, xp, param);
}

double FreeGreens::weight(double position) const
{
    if (!domain_.contains(position)) {
        throw DomainError("weight: position outside the domain");
    }
    return weight_(position);
}

FreeGreens FreeGreens::scaled(double factor) const
{
    Kernel inner = kernel_;
    return FreeGreens(
        geometry_,
        [inner, factor](double x, double xp, double param) { return factor * inner(x, xp, param); },
        weight_, domain_, mode_);
}

} // namespace greenchain
