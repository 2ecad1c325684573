#pragma once

#include <cmath>
#include <iosfwd>

namespace greenchain {

/// A real number stored as sign * exp(log_mag). sign == 0 encodes an exact
/// zero, in which case log_mag is meaningless (kept at -inf).
struct SignLog {
    int sign = 0;
    double log_mag = -INFINITY;

    static SignLog zero() { return {}; }
    static SignLog one() { return {1, 0.0}; }
    static SignLog from_value(double x);
    /// Builds sign * exp(log_mag), normalising sign to {-1, 0, +1}.
    static SignLog from_parts(int sign, double log_mag);

    bool is_zero() const { return sign == 0; }

    /// Converts back to a double; throws RangeError if the magnitude overflows.
    double value() const;
    /// Like value() but returns +-inf on overflow instead of throwing.
    double value_or_inf() const;

    SignLog operator-() const { return {-sign, log_mag}; }
    SignLog& operator*=(const SignLog& other);
    SignLog& operator/=(const SignLog& other);
    SignLog abs() const { return {sign == 0 ? 0 : 1, log_mag}; }
};

SignLog operator*(SignLog a, const SignLog& b);
SignLog operator/(SignLog a, const SignLog& b);
/// Sum evaluated relative to the larger magnitude, so it never overflows
/// when either operand is representable in log form.
SignLog operator+(const SignLog& a, const SignLog& b);
SignLog operator-(const SignLog& a, const SignLog& b);

/// Returns a and b scaled by the larger magnitude: both results lie in [-1, 1].
struct ScaledPair {
    double first;
    double second;
    double log_scale;
};
ScaledPair rescale_common(const SignLog& a, const SignLog& b);

std::ostream& operator<<(std::ostream& os, const SignLog& s);

} // namespace greenchain
