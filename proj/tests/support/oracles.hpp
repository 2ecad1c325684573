// Reference implementations used only by the tests. They deliberately avoid
// the library's own code paths.
#pragma once

#include <cmath>
#include <cstddef>
#include <functional>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace greenchain::oracle {

/// Physicists' Hermite polynomial by recurrence in long double.
inline long double hermite(int n, long double x)
{
    long double prev = 1.0L;
    if (n == 0) return prev;
    long double cur = 2.0L * x;
    for (int k = 1; k < n; ++k) {
        const long double next = 2.0L * x * cur - 2.0L * k * prev;
        prev = cur;
        cur = next;
    }
    return cur;
}

/// Sum of |c_k| |x|^k over the monomial coefficients of H_n: the natural
/// magnitude against which an evaluation of H_n(x) can be judged.
inline long double hermite_magnitude(int n, long double x)
{
    const long double ax = std::fabs(x);
    long double prev = 1.0L;
    if (n == 0) return prev;
    long double cur = 2.0L * ax;
    for (int k = 1; k < n; ++k) {
        const long double next = 2.0L * ax * cur + 2.0L * k * prev;
        prev = cur;
        cur = next;
    }
    return cur;
}

/// D_n(y) = 2^{-n/2} e^{-y^2/4} H_n(y / sqrt 2).
inline long double pcf_integer(int n, long double y)
{
    return std::pow(2.0L, -0.5L * n) * std::exp(-0.25L * y * y) *
           hermite(n, y / std::sqrt(2.0L));
}

/// J_0 by its power series, summed to convergence in long double.
inline long double j0_series(long double x)
{
    const long double q = -0.25L * x * x;
    long double term = 1.0L;
    long double sum = 1.0L;
    for (int k = 1; k < 400; ++k) {
        term *= q / (static_cast<long double>(k) * k);
        sum += term;
        if (std::fabs(term) < 1e-22L * std::fabs(sum) && std::fabs(term) < 1e-22L) break;
    }
    return sum;
}

/// Plain bisection to full precision.
inline long double bisect(const std::function<long double(long double)>& f, long double lo,
                          long double hi)
{
    long double flo = f(lo);
    if ((flo > 0) == (f(hi) > 0)) throw std::invalid_argument("bisect: no sign change");
    for (int i = 0; i < 200 && hi - lo > 1e-18L * std::fabs(hi); ++i) {
        const long double mid = 0.5L * (lo + hi);
        const long double fm = f(mid);
        if ((fm > 0) == (flo > 0)) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
    return 0.5L * (lo + hi);
}

/// First n zeros of J_0, bracketed on a coarse grid then bisected.
inline std::vector<double> j0_zeros(int n)
{
    std::vector<double> zeros;
    const long double step = 0.1L;
    for (long double x = step; static_cast<int>(zeros.size()) < n; x += step) {
        if ((j0_series(x) > 0) != (j0_series(x + step) > 0)) {
            zeros.push_back(static_cast<double>(bisect(j0_series, x, x + step)));
        }
    }
    return zeros;
}

/// I_0 and K_0 from their ascending series; K_1 from the Wronskian
/// I_0 K_1 + I_1 K_0 = 1/x. Intended for x of order one.
struct ModifiedBesselSeries {
    long double i0, i1, k0, k1;
};
inline ModifiedBesselSeries modified_bessel_series(long double x)
{
    constexpr long double kEulerGamma = 0.57721566490153286060651209L;
    const long double q = 0.25L * x * x;
    long double term = 1.0L; // q^k / (k!)^2
    long double harmonic = 0.0L;
    long double i0 = 1.0L;
    long double i1 = 0.5L * x;
    long double tail = 0.0L; // sum q^k/(k!)^2 H_k
    long double term1 = 0.5L * x; // (x/2)^{2k+1} / (k! (k+1)!)
    for (int k = 1; k < 200; ++k) {
        term *= q / (static_cast<long double>(k) * k);
        term1 *= q / (static_cast<long double>(k) * (k + 1));
        harmonic += 1.0L / k;
        i0 += term;
        i1 += term1;
        tail += term * harmonic;
        if (term < 1e-24L) break;
    }
    const long double k0 = -(std::log(0.5L * x) + kEulerGamma) * i0 + tail;
    const long double k1 = (1.0L / x - i1 * k0) / i0;
    return {i0, i1, k0, k1};
}

/// Gaussian elimination with partial pivoting; a is row-major n x n.
inline std::vector<double> gauss_solve(std::vector<double> a, std::vector<double> b)
{
    const std::size_t n = b.size();
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        for (std::size_t r = col + 1; r < n; ++r) {
            if (std::fabs(a[r * n + col]) > std::fabs(a[pivot * n + col])) pivot = r;
        }
        for (std::size_t c = 0; c < n; ++c) std::swap(a[col * n + c], a[pivot * n + c]);
        std::swap(b[col], b[pivot]);
        for (std::size_t r = col + 1; r < n; ++r) {
            const double factor = a[r * n + col] / a[col * n + col];
            for (std::size_t c = col; c < n; ++c) a[r * n + c] -= factor * a[col * n + c];
            b[r] -= factor * b[col];
        }
    }
    std::vector<double> x(n);
    for (std::size_t i = n; i-- > 0;) {
        double s = b[i];
        for (std::size_t c = i + 1; c < n; ++c) s -= a[i * n + c] * x[c];
        x[i] = s / a[i * n + i];
    }
    return x;
}

/// Dirichlet Green's function of -d^2/dz^2 + k^2 on [a1, a2].
inline double sinh_dirichlet(double z, double zp, double a1, double a2, double k)
{
    const double lo = std::min(z, zp);
    const double hi = std::max(z, zp);
    return std::sinh(k * (lo - a1)) * std::sinh(k * (a2 - hi)) / (k * std::sinh(k * (a2 - a1)));
}

/// One-sided second-order derivative estimates at x from the right and left.
inline double right_derivative(const std::function<double(double)>& f, double x, double h)
{
    return (-3.0 * f(x) + 4.0 * f(x + h) - f(x + 2.0 * h)) / (2.0 * h);
}
inline double left_derivative(const std::function<double(double)>& f, double x, double h)
{
    return (3.0 * f(x) - 4.0 * f(x - h) + f(x - 2.0 * h)) / (2.0 * h);
}

} // namespace greenchain::oracle
