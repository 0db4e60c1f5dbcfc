/*
 * Exact rational scalars. Energies and filtration exponents are kept as
 * rationals end to end so that comparisons against 0 and against the energy
 * caps are decidable with no tolerance parameter.
 */

#pragma once

#include <boost/rational.hpp>

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace mlab {

using Rational = boost::rational<long long>;

class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Parse "p" or "p/q" (q > 0 after normalization). Throws Error on anything else.
inline Rational parse_rational(const std::string& s)
{
    auto fail = [&]() -> Rational { throw Error("not a rational: '" + s + "'"); };
    if (s.empty())
        return fail();
    std::size_t slash = s.find('/');
    try {
        std::size_t used = 0;
        long long num = std::stoll(s.substr(0, slash), &used);
        if (used != (slash == std::string::npos ? s.size() : slash))
            return fail();
        if (slash == std::string::npos)
            return Rational(num);
        long long den = std::stoll(s.substr(slash + 1), &used);
        if (used != s.size() - slash - 1 || den == 0)
            return fail();
        return Rational(num, den);
    } catch (const std::logic_error&) { // covers stoll failures and bad_rational
        return fail();
    }
}

/// Canonical form: "p" when the denominator is 1, otherwise "p/q" with q > 0.
inline std::string format_rational(const Rational& r)
{
    if (r.denominator() == 1)
        return std::to_string(r.numerator());
    return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

inline double to_double(const Rational& r)
{
    return static_cast<double>(r.numerator()) / static_cast<double>(r.denominator());
}

/// Round a sampled real to the nearest multiple of 1/denominator.
inline Rational snap_to_rational(double v, long long denominator = 1000000)
{
    if (!std::isfinite(v))
        throw Error("cannot snap non-finite value to a rational");
    if (denominator <= 0)
        throw Error("snap denominator must be positive");
    double scaled = v * static_cast<double>(denominator);
    if (std::fabs(scaled) > 9.0e15)
        throw Error("value too large to snap exactly");
    return Rational(static_cast<long long>(std::llround(scaled)), denominator);
}

} // namespace mlab
