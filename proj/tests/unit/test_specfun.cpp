#include <doctest.h>

#include "../support/oracles.hpp"
#include "../support/properties.hpp"

#include "greenchain/errors.hpp"
#include "greenchain/specfun.hpp"

#include <boost/math/special_functions/bessel.hpp>
#include <boost/math/special_functions/hypergeometric_1F1.hpp>

#include <cmath>
#include <numbers>

using namespace greenchain;
using namespace greenchain::specfun;

namespace {
double rel_err(double got, double want)
{
    return std::fabs(got - want) / std::fabs(want);
}
} // namespace

TEST_CASE("gamma: closed forms and poles")
{
    CHECK(specfun::gamma(0.5) == doctest::Approx(1.7724538509055160).epsilon(1e-14));
    CHECK(specfun::gamma(5.0) == doctest::Approx(24.0).epsilon(1e-14));
    CHECK(specfun::gamma(-0.5) == doctest::Approx(-3.5449077018110320).epsilon(1e-14));
    CHECK(rel_err(specfun::gamma(170.5), std::tgamma(170.5)) < 1e-12);
    CHECK(rel_err(specfun::gamma(-169.5), std::tgamma(-169.5)) < 1e-11);
    CHECK_THROWS_AS(specfun::gamma(0.0), DomainError);
    CHECK_THROWS_AS(specfun::gamma(-3.0), DomainError);

    const auto big = gamma_signlog(250.5);
    CHECK(big.sign == 1);
    CHECK(big.log_mag == doctest::Approx(std::lgamma(250.5)).epsilon(1e-13));
    CHECK(gamma_signlog(-2.5).sign == -1);
    CHECK(reciprocal_gamma_signlog(-4.0).is_zero());
    CHECK(reciprocal_gamma_signlog(0.0).is_zero());
    CHECK(sin_pi(7.0) == 0.0);
    CHECK(sin_pi(0.5) == 1.0);
}

TEST_CASE("bessel_i and bessel_k against the ascending-series oracle")
{
    const auto s = oracle::modified_bessel_series(1.0L);
    CHECK(rel_err(bessel_i(0, 1.0), static_cast<double>(s.i0)) < 1e-12);
    CHECK(rel_err(bessel_i(1, 1.0), static_cast<double>(s.i1)) < 1e-12);
    CHECK(rel_err(bessel_k(0, 1.0), static_cast<double>(s.k0)) < 1e-10);
    CHECK(rel_err(bessel_k(1, 1.0), static_cast<double>(s.k1)) < 1e-10);
    CHECK(bessel_i(0, 1.0) == doctest::Approx(1.266065877).epsilon(1e-9));
    CHECK(bessel_k(0, 1.0) == doctest::Approx(0.421024438).epsilon(1e-9));
    CHECK(bessel_k(1, 1.0) == doctest::Approx(0.601907230).epsilon(1e-9));

    for (double x : {0.2, 0.7, 1.9, 2.6}) {
        const auto o = oracle::modified_bessel_series(x);
        CHECK(rel_err(bessel_k(0, x), static_cast<double>(o.k0)) < 1e-10);
        CHECK(rel_err(bessel_k(1, x), static_cast<double>(o.k1)) < 1e-10);
    }
}

TEST_CASE("bessel_i and bessel_k small and large arguments")
{
    CHECK(bessel_i(0, 1e-12) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(std::fabs(bessel_i(1, 1e-12)) < 1e-11);
    // K_0(x) ~ sqrt(pi/2x) e^-x (1 - 1/8x): the ratio approaches 1.
    const auto ratio = [](double x) {
        return bessel_k(0, x) / (std::sqrt(std::numbers::pi / (2.0 * x)) * std::exp(-x));
    };
    CHECK(std::fabs(ratio(50.0) - 1.0) < std::fabs(ratio(10.0) - 1.0));
    CHECK(std::fabs(ratio(50.0) - (1.0 - 1.0 / 400.0)) < 1e-4);
    CHECK_THROWS_AS(bessel_i(0, 0.0), DomainError);
    CHECK_THROWS_AS(bessel_k(0, -1.0), DomainError);
    CHECK_THROWS_AS(bessel_i(-1, 1.0), DomainError);
    CHECK_THROWS_AS(bessel_i(0, 701.0), RangeError);
    CHECK(bessel_k_scaled(3, 900.0) > 0.0);
}

TEST_CASE("modified Bessel functions agree with Boost.Math")
{
    for (int m : {0, 1, 2, 5, 12, 30}) {
        for (double x : {1e-3, 0.03, 0.4, 1.0, 3.3, 9.0, 27.0, 80.0, 240.0, 690.0}) {
            CAPTURE(m);
            CAPTURE(x);
            const double want_i = boost::math::cyl_bessel_i(m, x);
            const double want_k = boost::math::cyl_bessel_k(m, x);
            if (std::isfinite(want_i) && want_i > 1e-300) CHECK(rel_err(bessel_i(m, x), want_i) < 1e-10);
            if (std::isfinite(want_k) && want_k > 1e-300) CHECK(rel_err(bessel_k(m, x), want_k) < 1e-10);
        }
    }
}

TEST_CASE("bessel_jy")
{
    CHECK(bessel_jy(0, 1e-12).regular == doctest::Approx(1.0));
    CHECK(std::fabs(bessel_jy(1, 1e-12).regular) < 1e-11);
    const double zero = static_cast<double>(oracle::j0_zeros(1)[0]);
    CHECK(zero == doctest::Approx(2.404825557695773).epsilon(1e-14));
    CHECK(std::fabs(bessel_jy(0, 2.404825557695773).regular) <= 1e-9);
    CHECK_THROWS_AS(bessel_jy(0, 0.0), DomainError);
    for (int m : {0, 1, 3, 8}) {
        for (double x : {0.3, 1.7, 6.2, 23.0, 99.0}) {
            const auto p = bessel_jy(m, x);
            // absolute error against the function's scale near zeros
            const double scale = std::max(1.0, std::fabs(p.irregular));
            CHECK(std::fabs(p.regular - boost::math::cyl_bessel_j(m, x)) < 1e-9 * scale);
            CHECK(std::fabs(p.irregular - boost::math::cyl_neumann(m, x)) < 1e-9 * scale);
        }
    }
}

TEST_CASE("spherical Bessel functions")
{
    const auto s0 = sph_modified(0, 1.0);
    CHECK(s0.regular == doctest::Approx(std::sinh(1.0)).epsilon(1e-12));
    CHECK(s0.irregular == doctest::Approx(0.5 * std::numbers::pi * std::exp(-1.0)).epsilon(1e-12));
    CHECK(sph_modified(1, 1.0).regular ==
          doctest::Approx(std::cosh(1.0) - std::sinh(1.0)).epsilon(1e-12));
    // i_l(x) = sqrt(pi/2x) I_{l+1/2}(x)
    for (int l : {0, 2, 7}) {
        for (double x : {0.01, 0.8, 4.0, 35.0}) {
            const double f = std::sqrt(std::numbers::pi / (2.0 * x));
            const auto p = sph_modified(l, x);
            CHECK(rel_err(p.regular, f * boost::math::cyl_bessel_i(l + 0.5, x)) < 1e-10);
            CHECK(rel_err(p.irregular, f * boost::math::cyl_bessel_k(l + 0.5, x)) < 1e-10);
        }
    }
    CHECK(std::fabs(sph_ordinary(0, std::numbers::pi).regular) <= 1e-12);
    CHECK(sph_ordinary(0, 1.0).regular == doctest::Approx(std::sin(1.0)).epsilon(1e-12));
    CHECK(std::fabs(sph_ordinary(1, 1e-9).regular) < 1e-9);
    CHECK_THROWS_AS(sph_ordinary(0, -1.0), DomainError);
    CHECK_THROWS_AS(sph_modified(0, 0.0), DomainError);
}

TEST_CASE("kummer_m")
{
    CHECK(kummer_m(0.0, 0.5, 3.0) == 1.0);
    CHECK(kummer_m(2.3, 1.7, 0.0) == 1.0);
    CHECK(kummer_m(1.0, 1.0, 1.0) == doctest::Approx(std::exp(1.0)).epsilon(1e-15));
    // M(1, 2, x) = (e^x - 1)/x
    CHECK(kummer_m(1.0, 2.0, 3.0) == doctest::Approx((std::exp(3.0) - 1.0) / 3.0).epsilon(1e-14));
    for (double a : {-3.5, -0.25, 0.7, 4.0}) {
        for (double x : {-4.0, 0.3, 2.0, 9.0}) {
            CAPTURE(a);
            CAPTURE(x);
            const double want = boost::math::hypergeometric_1F1(a, 1.5, x);
            CHECK(std::fabs(kummer_m(a, 1.5, x) - want) < 1e-12 * std::max(1.0, std::fabs(want)));
        }
    }
    CHECK_THROWS_AS(kummer_m(1.0, -2.0, 1.0), DomainError);
    CHECK_THROWS_AS(kummer_m(1.0, 1.0, 51.0), DomainError);
    CHECK_THROWS_AS(kummer_m(301.0, 1.0, 1.0), DomainError);
}

TEST_CASE("pcf_d closed forms")
{
    CHECK(pcf_d(0.0, 1.0) == doctest::Approx(std::exp(-0.25)).epsilon(1e-13));
    CHECK(pcf_d(1.0, 2.0) == doctest::Approx(2.0 * std::exp(-1.0)).epsilon(1e-13));
    // D_2(y) = (y^2 - 1) e^{-y^2/4}
    CHECK(pcf_d(2.0, std::sqrt(2.0)) == doctest::Approx(std::exp(-0.5)).epsilon(1e-13));
    CHECK(std::fabs(pcf_d(2.0, 1.0)) <= 1e-15);
    CHECK(pcf_d(3.0, 1.0) ==
          doctest::Approx(static_cast<double>(oracle::pcf_integer(3, 1.0L))).epsilon(1e-12));
    // D_{-1}(y) = sqrt(pi/2) e^{y^2/4} erfc(y / sqrt 2)
    for (double y : {-3.0, -0.5, 0.0, 1.2, 6.0}) {
        const double want =
            std::sqrt(std::numbers::pi / 2.0) * std::exp(0.25 * y * y) * std::erfc(y / std::sqrt(2.0));
        CHECK(rel_err(pcf_d(-1.0, y), want) < 1e-11);
    }
    CHECK_THROWS_AS(pcf_d(-1.5, 0.0), DomainError);
    CHECK_THROWS_AS(pcf_d(200.5, 0.0), DomainError);
    CHECK_THROWS_AS(pcf_d(1.0, 10.5), DomainError);
}

TEST_CASE("pcf_d high-precision reference values")
{
    // 40-digit reference values.
    struct Ref {
        double v, y, value;
    };
    const Ref refs[] = {
        {0.5, 8.0, 3.189104587198054e-07},
        {2.3, 8.0, 1.3125674275293053e-05},
        {40.5, -8.0, -2.1772231558350735e+23},
        {80.0, 6.0, -6.810020927208117e+58},
        {150.0, 5.0, 2.1061178832245787e+130},
        {199.0, -3.0, -4.700244701738673e+185},
    };
    for (const auto& r : refs) {
        CAPTURE(r.v);
        CAPTURE(r.y);
        CHECK(rel_err(pcf_d(r.v, r.y), r.value) < 1e-9);
    }
}

TEST_CASE("pcf_d_signlog")
{
    const auto a = pcf_d_signlog(0.0, 1.0);
    CHECK(a.sign == 1);
    CHECK(a.log_mag == doctest::Approx(-0.25).epsilon(1e-13));
    const auto b = pcf_d_signlog(1.0, -2.0);
    CHECK(b.sign == -1);
    CHECK(b.log_mag == doctest::Approx(std::log(2.0 * std::exp(-1.0))).epsilon(1e-13));
    // Agreement with the plain evaluation wherever that is finite.
    for (double v : {-0.7, 3.3, 17.0, 60.25, 130.5}) {
        for (double y : {-6.0, -1.1, 0.0, 2.4, 7.5}) {
            const auto s = pcf_d_signlog(v, y);
            const double plain = pcf_d(v, y);
            if (plain == 0.0) {
                CHECK(s.is_zero());
            } else {
                CHECK(rel_err(s.value(), plain) < 1e-9);
            }
        }
    }
    // Beyond double range.
    const auto huge = pcf_d_signlog(199.5, 0.3);
    CHECK(huge.sign != 0);
    CHECK(std::isfinite(huge.log_mag));
}

TEST_CASE("pcf_parts: parity and exact zeros")
{
    const auto p = pcf_parts(3.7, 1.3);
    const auto q = pcf_parts(3.7, -1.3);
    CHECK(p.even.sign == q.even.sign);
    CHECK(p.even.log_mag == doctest::Approx(q.even.log_mag).epsilon(1e-14));
    CHECK(p.odd.sign == -q.odd.sign);
    CHECK(pcf_parts(4.0, 0.9).odd.is_zero());
    CHECK(pcf_parts(5.0, 0.9).even.is_zero());
    const auto sum = p.even + p.odd;
    CHECK(rel_err(sum.value(), pcf_d(3.7, 1.3)) < 1e-12);

    const auto w = weber_even_odd(2.2, 0.0);
    CHECK(w.regular == 1.0);
    CHECK(w.irregular == 0.0);
    // e^{-y^2/4} M(-v/2, 1/2, y^2/2) and y e^{-y^2/4} M((1-v)/2, 3/2, y^2/2)
    const double y = 0.8;
    const auto e = weber_even_odd(2.2, y);
    CHECK(rel_err(e.regular, std::exp(-0.25 * y * y) * kummer_m(-1.1, 0.5, 0.5 * y * y)) < 1e-13);
    CHECK(rel_err(e.irregular, y * std::exp(-0.25 * y * y) * kummer_m(-0.6, 1.5, 0.5 * y * y)) <
          1e-13);
}

TEST_CASE("hermite")
{
    CHECK(hermite(0, 3.7) == 1.0);
    CHECK(hermite(1, 3.7) == doctest::Approx(7.4));
    CHECK(std::fabs(hermite(2, 1.0 / std::sqrt(2.0))) < 1e-15);
    CHECK(hermite(10, 0.4) == doctest::Approx(static_cast<double>(oracle::hermite(10, 0.4L))));
    CHECK_THROWS_AS(hermite(61, 0.0), DomainError);
}

TEST_CASE("specfun property suite")
{
    for (const auto& r : props::specfun_suite()) {
        INFO(r.name << ": worst " << r.worst << " limit " << r.limit << " " << r.detail);
        CHECK(r.pass);
    }
}
