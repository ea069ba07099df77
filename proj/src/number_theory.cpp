#include "orbilat/number_theory.hpp"

#include "orbilat/errors.hpp"

#include <algorithm>

namespace orbilat {

std::vector<PrimePower> factorize(std::uint64_t n)
{
    require(n >= 1, "factorize: n must be positive");
    std::vector<PrimePower> out;
    for (std::uint64_t p = 2; p * p <= n; ++p) {
        if (n % p != 0)
            continue;
        unsigned k = 0;
        while (n % p == 0) {
            n /= p;
            ++k;
        }
        out.push_back({p, k});
    }
    if (n > 1)
        out.push_back({n, 1});
    return out;
}

std::vector<std::uint64_t> primeDivisors(std::uint64_t n)
{
    std::vector<std::uint64_t> out;
    for (const auto& f : factorize(n))
        out.push_back(f.prime);
    return out;
}

bool isPrime(std::uint64_t n)
{
    if (n < 2)
        return false;
    for (std::uint64_t p = 2; p * p <= n; ++p)
        if (n % p == 0)
            return false;
    return true;
}

bool isSquarefree(std::uint64_t n)
{
    const auto f = factorize(n);
    return std::all_of(f.begin(), f.end(), [](const PrimePower& pp) { return pp.exponent == 1; });
}

std::optional<PrimePower> asPrimePower(std::uint64_t n)
{
    if (n < 2)
        return std::nullopt;
    const auto f = factorize(n);
    if (f.size() != 1)
        return std::nullopt;
    return f.front();
}

std::uint64_t gcd(std::uint64_t a, std::uint64_t b)
{
    while (b != 0) {
        const auto t = a % b;
        a = b;
        b = t;
    }
    return a;
}

std::uint64_t lcm(std::uint64_t a, std::uint64_t b)
{
    if (a == 0 || b == 0)
        return 0;
    return a / gcd(a, b) * b;
}

std::uint64_t ipow(std::uint64_t base, unsigned exp)
{
    std::uint64_t r = 1;
    while (exp-- > 0)
        r *= base;
    return r;
}

int moebius(std::uint64_t n)
{
    int sign = 1;
    for (const auto& f : factorize(n)) {
        if (f.exponent > 1)
            return 0;
        sign = -sign;
    }
    return sign;
}

std::uint64_t eulerPhi(std::uint64_t n)
{
    require(n >= 1, "eulerPhi: n must be positive");
    std::uint64_t phi = n;
    for (const auto& f : factorize(n))
        phi = phi / f.prime * (f.prime - 1);
    return phi;
}

Int coprimeWeightedSum(std::uint64_t n, std::span<const std::uint64_t> primes)
{
    require(n >= 1, "coprimeWeightedSum: n must be positive");
    std::vector<std::uint64_t> distinct(primes.begin(), primes.end());
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    for (const auto p : distinct)
        require(isPrime(p) && n % p == 0,
                "coprimeWeightedSum: " + std::to_string(p) + " is not a prime divisor of " + std::to_string(n));

    const Int nn(static_cast<unsigned long>(n));
    Rational density(1);
    Int primeProduct(1);
    for (const auto p : distinct) {
        density *= Rational(Int(static_cast<unsigned long>(p - 1)), Int(static_cast<unsigned long>(p)));
        primeProduct *= static_cast<unsigned long>(p);
    }
    const Int sign = (distinct.size() % 2 == 1) ? Int(1) : Int(-1); // (-1)^{|I|+1}
    Rational value = Rational(nn) * density * Rational(nn * nn + sign * primeProduct) / 6;
    value.canonicalize();
    ensure(value.get_den() == 1, "coprimeWeightedSum: closed form did not reduce to an integer");
    ensure(value >= 0, "coprimeWeightedSum: closed form is negative");
    return value.get_num();
}

Int coprimeSum(std::uint64_t n)
{
    const auto primes = primeDivisors(n);
    const Int phi(static_cast<unsigned long>(eulerPhi(n)));
    Int radical(1);
    for (const auto p : primes)
        radical *= static_cast<unsigned long>(p);
    const Int nn(static_cast<unsigned long>(n));
    const Int sign = (primes.size() % 2 == 1) ? Int(1) : Int(-1);
    const Int numerator = phi * (nn * nn + sign * radical);
    ensure(numerator % 6 == 0, "coprimeSum: closed form did not reduce to an integer");
    return numerator / 6;
}

} // namespace orbilat
