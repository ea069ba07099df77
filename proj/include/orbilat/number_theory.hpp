#pragma once

#include "orbilat/arith.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace orbilat {

struct PrimePower {
    std::uint64_t prime;
    unsigned exponent;
};

/// Prime factorization by trial division, ascending primes.
std::vector<PrimePower> factorize(std::uint64_t n);
std::vector<std::uint64_t> primeDivisors(std::uint64_t n);

bool isPrime(std::uint64_t n);
bool isSquarefree(std::uint64_t n);
/// Returns (p, k) with n = p^k, k >= 1, or nullopt when n is not a prime power (n = 1 included).
std::optional<PrimePower> asPrimePower(std::uint64_t n);
std::uint64_t gcd(std::uint64_t a, std::uint64_t b);
std::uint64_t lcm(std::uint64_t a, std::uint64_t b);
std::uint64_t ipow(std::uint64_t base, unsigned exp);
int moebius(std::uint64_t n);

/// Euler's totient; eulerPhi(1) == 1.
std::uint64_t eulerPhi(std::uint64_t n);

/// Sum of i(n - i) over 1 <= i <= n - 1 with i coprime to every prime in `primes`,
/// evaluated through the closed form
///   (1/6) n prod(1 - 1/p) [n^2 + (-1)^{|I|+1} prod p].
/// Every prime must divide n. The rational intermediate must reduce to an integer.
Int coprimeWeightedSum(std::uint64_t n, std::span<const std::uint64_t> primes);

/// Sum of i(n - i) over residues coprime to n: (phi(n)/6)[n^2 + (-1)^{k+1} rad(n)].
Int coprimeSum(std::uint64_t n);

} // namespace orbilat
