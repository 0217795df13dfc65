#pragma once

#include <cmath>
#include <limits>
#include <string>

namespace rcolor {

/**
 * Nonnegative real stored as its natural log.
 *
 * Zero is encoded with sign() == 0 and log() == -inf. Products and powers are
 * exact in log space; sums use log-sum-exp and carry a relative error of a
 * few ulps per operation.
 */
class LogValue
{
public:
    constexpr LogValue() noexcept = default;

    static constexpr LogValue zero() noexcept { return LogValue(); }
    static constexpr LogValue one() noexcept { return from_log(0.0); }
    static constexpr LogValue from_log(double log_value) noexcept
    {
        LogValue v;
        v.log_ = log_value;
        return v;
    }
    /// Throws DomainError for negative or NaN input.
    static LogValue from_linear(double x);

    constexpr double log() const noexcept { return log_; }
    constexpr int sign() const noexcept { return log_ == -std::numeric_limits<double>::infinity() ? 0 : 1; }
    constexpr bool is_zero() const noexcept { return sign() == 0; }
    /// exp(log); may overflow to +inf or underflow to 0.
    double linear() const noexcept { return std::exp(log_); }
    /// True when linear() is a finite, nonzero double (or the value is exactly zero).
    bool representable() const noexcept;

    LogValue pow(double exponent) const;

    friend LogValue operator*(LogValue a, LogValue b) noexcept
    {
        if (a.is_zero() || b.is_zero())
            return zero();
        return from_log(a.log_ + b.log_);
    }
    /// Throws DomainError on division by zero.
    friend LogValue operator/(LogValue a, LogValue b);
    friend LogValue operator+(LogValue a, LogValue b) noexcept;
    LogValue& operator*=(LogValue o) noexcept { return *this = *this * o; }
    LogValue& operator+=(LogValue o) noexcept { return *this = *this + o; }

    /// max(a - b, 0).
    friend LogValue minus_clamped(LogValue a, LogValue b) noexcept;

    friend constexpr bool operator==(LogValue a, LogValue b) noexcept { return a.log_ == b.log_; }
    friend constexpr auto operator<=>(LogValue a, LogValue b) noexcept { return a.log_ <=> b.log_; }

    std::string to_string() const;

private:
    double log_ = -std::numeric_limits<double>::infinity();
};

/// ln C(n, k) for real n >= k >= 0 (integer-valued arguments expected).
/// Short products are summed term by term; long ones go through lgamma.
double log_binomial(double n, double k);

/// ln k! .
double log_factorial(double k);

} // namespace rcolor
