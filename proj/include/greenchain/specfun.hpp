#pragma once

#include "greenchain/signlog.hpp"

/// Double precision special functions used by the free-space Green's
/// functions. Everything here is a pure function of its arguments.
namespace greenchain::specfun {

/// Regular/irregular pair returned by the Bessel-type evaluators.
struct BesselPair {
    double regular;
    double irregular;
};

// ---------------------------------------------------------------- gamma

/// Euler gamma function. Throws DomainError at 0, -1, -2, ...
double gamma(double x);

/// log|Gamma(x)| and the sign of Gamma(x). Throws DomainError at poles.
SignLog gamma_signlog(double x);

/// 1 / Gamma(x), exactly zero at the poles of Gamma.
SignLog reciprocal_gamma_signlog(double x);

/// sin(pi x) with exact argument reduction (exactly zero at integers).
double sin_pi(double x);

// ------------------------------------------------- modified Bessel I, K

/// Modified Bessel function I_m(x) for integer m >= 0, 0 < x <= 700.
double bessel_i(int m, double x);
/// exp(-x) I_m(x); valid for any x > 0.
double bessel_i_scaled(int m, double x);

/// Modified Bessel function K_m(x) for integer m >= 0, x > 0.
double bessel_k(int m, double x);
/// exp(x) K_m(x).
double bessel_k_scaled(int m, double x);

// ------------------------------------------------- ordinary Bessel J, Y

/// (J_m(x), Y_m(x)) for integer m >= 0 and x > 0.
BesselPair bessel_jy(int m, double x);

// -------------------------------------------------- spherical Bessel

/// Modified spherical Bessel functions in the convention
///   i_l(x) = sqrt(pi/2x) I_{l+1/2}(x),  k_l(x) = sqrt(pi/2x) K_{l+1/2}(x),
/// so i_0 = sinh(x)/x and k_0 = (pi/2) exp(-x)/x. Requires 0 < x <= 700.
BesselPair sph_modified(int l, double x);
/// (exp(-x) i_l(x), exp(x) k_l(x)); valid for any x > 0.
BesselPair sph_modified_scaled(int l, double x);

/// Ordinary spherical Bessel functions (j_l(x), y_l(x)); j_0 = sin(x)/x.
BesselPair sph_ordinary(int l, double x);

// ----------------------------------------- confluent / parabolic cylinder

/// Kummer's confluent hypergeometric function M(a, b, x) by direct summation.
/// Requires |x| <= 50, |a| <= 300 and b not a non-positive integer.
double kummer_m(double a, double b, double x);

/// The even and odd solutions of Weber's equation w'' = (y^2/4 - v - 1/2) w:
///   even = exp(-y^2/4) M(-v/2, 1/2, y^2/2)
///   odd  = y exp(-y^2/4) M((1-v)/2, 3/2, y^2/2)
/// Both are entire in v; they carry no gamma-function weights.
BesselPair weber_even_odd(double v, double y);

/// D_v(y) split as D_v(y) = even + odd with even(-y) = even(y) and
/// odd(-y) = -odd(y). Each part carries its gamma weight and is exactly zero
/// when that weight has a pole (odd part at even integer v, even part at odd
/// integer v).
struct PcfParts {
    SignLog even;
    SignLog odd;
};
PcfParts pcf_parts(double v, double y);

/// Parabolic cylinder function D_v(y), v in [-1, 200], |y| <= 10.
double pcf_d(double v, double y);
/// Overflow-safe D_v(y).
SignLog pcf_d_signlog(double v, double y);

/// Physicists' Hermite polynomial H_n(x), n <= 60.
double hermite(int n, double x);

} // namespace greenchain::specfun
