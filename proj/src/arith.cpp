#include "orbilat/arith.hpp"

#include "orbilat/errors.hpp"

#include <cctype>

namespace orbilat {

std::int64_t toInt64(const Int& v)
{
    require(v.fits_slong_p(), "integer " + v.get_str() + " does not fit in 64 bits");
    return static_cast<std::int64_t>(v.get_si());
}

Rational makeRational(const Int& num, const Int& den)
{
    require(den != 0, "zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

std::string toFractionString(const Rational& q)
{
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string toString(const Int& v) { return v.get_str(); }

namespace {

bool isSignedDigits(std::string_view s)
{
    std::size_t i = 0;
    if (i < s.size() && (s[i] == '-' || s[i] == '+'))
        ++i;
    if (i == s.size())
        return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i])))
            return false;
    return true;
}

std::string stripPlus(std::string_view s)
{
    if (!s.empty() && s.front() == '+')
        s.remove_prefix(1);
    return std::string(s);
}

} // namespace

Int parseInt(std::string_view text)
{
    require(isSignedDigits(text), "malformed integer '" + std::string(text) + "'");
    return Int(stripPlus(text));
}

Rational parseRational(std::string_view text)
{
    const auto slash = text.find('/');
    if (slash == std::string_view::npos)
        return Rational(parseInt(text));
    const auto num = text.substr(0, slash);
    const auto den = text.substr(slash + 1);
    require(isSignedDigits(num) && isSignedDigits(den), "malformed rational '" + std::string(text) + "'");
    return makeRational(Int(stripPlus(num)), Int(stripPlus(den)));
}

Int isqrt(const Int& v)
{
    require(v >= 0, "square root of a negative integer");
    Int r;
    mpz_sqrt(r.get_mpz_t(), v.get_mpz_t());
    return r;
}

bool isPerfectSquare(const Int& v)
{
    return v >= 0 && mpz_perfect_square_p(v.get_mpz_t()) != 0;
}

Int gcd(const Int& a, const Int& b)
{
    Int r;
    mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

Int lcm(const Int& a, const Int& b)
{
    Int r;
    mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

Int floorDiv(const Int& a, const Int& b)
{
    require(b != 0, "division by zero");
    Int r;
    mpz_fdiv_q(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

Int ceilDiv(const Int& a, const Int& b)
{
    require(b != 0, "division by zero");
    Int r;
    mpz_cdiv_q(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

} // namespace orbilat
