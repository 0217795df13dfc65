#include "rcolor/log_value.hpp"

#include "rcolor/error.hpp"

#include <algorithm>
#include <cstdio>

namespace rcolor {

LogValue LogValue::from_linear(double x)
{
    if (std::isnan(x) || x < 0)
        throw DomainError("LogValue requires a nonnegative value, got " + std::to_string(x));
    if (x == 0)
        return zero();
    return from_log(std::log(x));
}

bool LogValue::representable() const noexcept
{
    if (is_zero())
        return true;
    const double x = linear();
    return std::isfinite(x) && x >= std::numeric_limits<double>::min();
}

LogValue LogValue::pow(double exponent) const
{
    if (is_zero()) {
        if (exponent > 0)
            return zero();
        if (exponent == 0)
            return one();
        throw DomainError("zero raised to a negative power");
    }
    return from_log(log_ * exponent);
}

LogValue operator/(LogValue a, LogValue b)
{
    if (b.is_zero())
        throw DomainError("LogValue division by zero");
    if (a.is_zero())
        return LogValue::zero();
    return LogValue::from_log(a.log_ - b.log_);
}

LogValue operator+(LogValue a, LogValue b) noexcept
{
    if (a.is_zero())
        return b;
    if (b.is_zero())
        return a;
    const double hi = std::max(a.log_, b.log_);
    const double lo = std::min(a.log_, b.log_);
    if (hi == std::numeric_limits<double>::infinity())
        return LogValue::from_log(hi);
    return LogValue::from_log(hi + std::log1p(std::exp(lo - hi)));
}

LogValue minus_clamped(LogValue a, LogValue b) noexcept
{
    if (b.is_zero())
        return a;
    if (a.log_ <= b.log_)
        return LogValue::zero();
    // ln(e^a - e^b) = a + ln(1 - e^{b-a})
    return LogValue::from_log(a.log_ + std::log(-std::expm1(b.log_ - a.log_)));
}

std::string LogValue::to_string() const
{
    char buf[64];
    if (is_zero())
        return "0";
    if (representable())
        std::snprintf(buf, sizeof buf, "%.12g", linear());
    else
        std::snprintf(buf, sizeof buf, "exp(%.15g)", log_);
    return buf;
}

double log_factorial(double k)
{
    return std::lgamma(k + 1.0);
}

double log_binomial(double n, double k)
{
    if (k < 0 || k > n)
        return -std::numeric_limits<double>::infinity();
    const double j = std::min(k, n - k);
    if (j <= 100000) {
        double s = 0;
        for (double i = 1; i <= j; i += 1)
            s += std::log((n - j + i) / i);
        return s;
    }
    return std::lgamma(n + 1) - std::lgamma(k + 1) - std::lgamma(n - k + 1);
}

} // namespace rcolor
