#pragma once

#include <gmpxx.h>

#include <climits>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace orbilat {

using Int = mpz_class;
using Rational = mpq_class;

inline Int toInt(std::int64_t v)
{
    // mpz_class has no int64 constructor on every platform; go through the string
    // path only when the value does not fit a long.
    if (v >= static_cast<std::int64_t>(LONG_MIN) && v <= static_cast<std::int64_t>(LONG_MAX))
        return Int(static_cast<long>(v));
    return Int(std::to_string(v));
}

/// Converts to int64; throws PreconditionError when out of range.
std::int64_t toInt64(const Int& v);

Rational makeRational(const Int& num, const Int& den);

/// Always "p/q" with q > 0, including integers ("3/1").
std::string toFractionString(const Rational& q);
std::string toString(const Int& v);

/// Accepts "p", "p/q", with optional sign. Throws PreconditionError on malformed input.
Rational parseRational(std::string_view text);
Int parseInt(std::string_view text);

Int isqrt(const Int& v);
bool isPerfectSquare(const Int& v);

Int lcm(const Int& a, const Int& b);
Int gcd(const Int& a, const Int& b);

/// floor(a / b) and ceil(a / b) for b != 0.
Int floorDiv(const Int& a, const Int& b);
Int ceilDiv(const Int& a, const Int& b);

using IntVector = std::vector<Int>;
using RationalVector = std::vector<Rational>;

} // namespace orbilat
