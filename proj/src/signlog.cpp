#include "greenchain/signlog.hpp"

#include "greenchain/errors.hpp"

#include <algorithm>
#include <limits>
#include <ostream>

namespace greenchain {

namespace {
// Largest log magnitude whose exponential is still a finite double.
constexpr double kMaxLog = 709.782712893384;
} // namespace

SignLog SignLog::from_value(double x)
{
    if (x == 0.0) {
        return zero();
    }
    return {x > 0 ? 1 : -1, std::log(std::fabs(x))};
}

SignLog SignLog::from_parts(int sign, double log_mag)
{
    if (sign == 0) {
        return zero();
    }
    return {sign > 0 ? 1 : -1, log_mag};
}

double SignLog::value() const
{
    if (sign == 0) {
        return 0.0;
    }
    if (log_mag > kMaxLog) {
        throw RangeError("SignLog value overflows double precision");
    }
    return sign * std::exp(log_mag);
}

double SignLog::value_or_inf() const
{
    if (sign == 0) {
        return 0.0;
    }
    if (log_mag > kMaxLog) {
        return sign * std::numeric_limits<double>::infinity();
    }
    return sign * std::exp(log_mag);
}

SignLog& SignLog::operator*=(const SignLog& other)
{
    if (sign == 0 || other.sign == 0) {
        *this = zero();
        return *this;
    }
    sign *= other.sign;
    log_mag += other.log_mag;
    return *this;
}

SignLog& SignLog::operator/=(const SignLog& other)
{
    if (other.sign == 0) {
        throw DomainError("SignLog division by zero");
    }
    if (sign == 0) {
        return *this;
    }
    sign *= other.sign;
    log_mag -= other.log_mag;
    return *this;
}

SignLog operator*(SignLog a, const SignLog& b)
{
    a *= b;
    return a;
}

SignLog operator/(SignLog a, const SignLog& b)
{
    a /= b;
    return a;
}

SignLog operator+(const SignLog& a, const SignLog& b)
{
    if (a.sign == 0) {
        return b;
    }
    if (b.sign == 0) {
        return a;
    }
    const double top = std::max(a.log_mag, b.log_mag);
    const double s = a.sign * std::exp(a.log_mag - top) + b.sign * std::exp(b.log_mag - top);
    if (s == 0.0) {
        return SignLog::zero();
    }
    return {s > 0 ? 1 : -1, top + std::log(std::fabs(s))};
}

SignLog operator-(const SignLog& a, const SignLog& b)
{
    return a + (-b);
}

ScaledPair rescale_common(const SignLog& a, const SignLog& b)
{
    if (a.sign == 0 && b.sign == 0) {
        return {0.0, 0.0, 0.0};
    }
    const double top = a.sign == 0 ? b.log_mag
                     : b.sign == 0 ? a.log_mag
                                   : std::max(a.log_mag, b.log_mag);
    const auto scaled = [top](const SignLog& s) {
        return s.sign == 0 ? 0.0 : s.sign * std::exp(s.log_mag - top);
    };
    return {scaled(a), scaled(b), top};
}

std::ostream& operator<<(std::ostream& os, const SignLog& s)
{
    if (s.sign == 0) {
        return os << "SignLog(0)";
    }
    return os << "SignLog(" << (s.sign > 0 ? '+' : '-') << ", " << s.log_mag << ")";
}

} // namespace greenchain
