#include "doctest.h"

#include "orbilat/arith.hpp"
#include "orbilat/matrix.hpp"
#include "orbilat/number_theory.hpp"
#include "orbilat/poly.hpp"

#include <numeric>
#include <random>

using namespace orbilat;

namespace {

std::uint64_t bruteTotient(std::uint64_t n)
{
    std::uint64_t c = 0;
    for (std::uint64_t i = 1; i <= n; ++i)
        if (std::gcd(i, n) == 1)
            ++c;
    return c;
}

Int bruteWeightedSum(std::uint64_t n, const std::vector<std::uint64_t>& primes)
{
    Int s(0);
    for (std::uint64_t i = 1; i < n; ++i) {
        bool ok = true;
        for (auto p : primes)
            ok = ok && (i % p != 0);
        if (ok)
            s += Int(static_cast<unsigned long>(i * (n - i)));
    }
    return s;
}

IntMatrix randomMatrix(std::mt19937_64& rng, std::size_t r, std::size_t c, long range)
{
    std::uniform_int_distribution<long> dist(-range, range);
    IntMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j)
            m(i, j) = dist(rng);
    return m;
}

IntMatrix diagonalOf(const std::vector<Int>& d, std::size_t r, std::size_t c)
{
    IntMatrix m(r, c);
    for (std::size_t k = 0; k < d.size(); ++k)
        m(k, k) = d[k];
    return m;
}

} // namespace

TEST_CASE("eulerPhi examples and brute force")
{
    CHECK(eulerPhi(1) == 1);
    CHECK(eulerPhi(12) == 4);
    CHECK(eulerPhi(39) == 24);
    for (std::uint64_t n = 1; n <= 300; ++n)
        CHECK(eulerPhi(n) == bruteTotient(n));
}

TEST_CASE("cyclotomic polynomials")
{
    CHECK(cyclotomic(1) == IntPoly{-1, 1});
    CHECK(cyclotomic(9) == IntPoly{1, 0, 0, 1, 0, 0, 1});
    CHECK(cyclotomic(6) == IntPoly{1, -1, 1});
    CHECK(cyclotomic(9).toString() == "x^6 + x^3 + 1");
    CHECK(cyclotomic(105).coefficient(7) == -2);

    SUBCASE("product over divisors is x^n - 1")
    {
        for (std::uint64_t n = 1; n <= 200; ++n) {
            IntPoly prod{1};
            for (std::uint64_t d = 1; d <= n; ++d)
                if (n % d == 0)
                    prod = prod * cyclotomic(d);
            CHECK(prod == IntPoly::monomial(Int(1), n) - IntPoly{1});
            CHECK(static_cast<std::uint64_t>(cyclotomic(n).degree()) == eulerPhi(n));
        }
    }
    SUBCASE("prime power substitution identity")
    {
        for (std::uint64_t p : {2, 3, 5, 7})
            for (unsigned k = 1; ipow(p, k) <= 400; ++k) {
                std::vector<Int> c;
                for (std::uint64_t i = 0; i < p; ++i)
                    c.emplace_back(1);
                CHECK(cyclotomic(ipow(p, k)) == IntPoly(c).substitutePower(ipow(p, k - 1)));
            }
    }
}

TEST_CASE("cyclotomicAtOne")
{
    CHECK(cyclotomicAtOne(6) == 1);
    CHECK(cyclotomicAtOne(8) == 2);
    CHECK(cyclotomicAtOne(49) == 7);
    CHECK_THROWS_AS(cyclotomicAtOne(1), PreconditionError);
    for (std::uint64_t n = 2; n <= 500; ++n)
        CHECK(cyclotomicAtOne(n) == cyclotomic(n).evaluate(Int(1)));
}

TEST_CASE("coprime weighted sums")
{
    const std::vector<std::uint64_t> i23{2, 3};
    const std::vector<std::uint64_t> i5{5};
    const std::vector<std::uint64_t> i2{2};
    CHECK(coprimeWeightedSum(6, i23) == 10);
    CHECK(coprimeWeightedSum(5, i5) == 20);
    CHECK(coprimeWeightedSum(4, i2) == 6);
    CHECK(coprimeSum(6) == 10);
    CHECK(coprimeSum(12) == 92);
    CHECK(coprimeSum(5) == 20);
    const std::vector<std::uint64_t> bad{3};
    CHECK_THROWS_AS(coprimeWeightedSum(10, bad), PreconditionError);

    SUBCASE("closed form equals brute force on a sample of n")
    {
        for (std::uint64_t n = 2; n <= 120; ++n) {
            const auto primes = primeDivisors(n);
            for (std::uint64_t mask = 0; mask < (1ULL << primes.size()); ++mask) {
                std::vector<std::uint64_t> subset;
                for (std::size_t b = 0; b < primes.size(); ++b)
                    if (mask >> b & 1ULL)
                        subset.push_back(primes[b]);
                CHECK(coprimeWeightedSum(n, subset) == bruteWeightedSum(n, subset));
            }
            CHECK(coprimeSum(n) == coprimeWeightedSum(n, primes));
        }
    }
}

TEST_CASE("rational formatting and parsing")
{
    CHECK(toFractionString(Rational(3)) == "3/1");
    CHECK(toFractionString(makeRational(Int(-10), Int(4))) == "-5/2");
    CHECK(parseRational("14/13") == makeRational(Int(14), Int(13)));
    CHECK(parseRational("-7") == Rational(-7));
    CHECK_THROWS_AS(parseRational("1/0"), PreconditionError);
    CHECK_THROWS_AS(parseRational("abc"), PreconditionError);
}

TEST_CASE("Smith normal form examples")
{
    auto s = smithNormalForm(IntMatrix::identity(3));
    CHECK(s.diagonal == std::vector<Int>{1, 1, 1});

    const IntMatrix a2{{2, -1}, {-1, 2}};
    s = smithNormalForm(a2);
    CHECK(s.diagonal == std::vector<Int>{1, 3});
    CHECK(s.U * a2 * s.V == diagonalOf(s.diagonal, 2, 2));

    const IntMatrix e8{{2, -1, 0, 0, 0, 0, 0, 0},  {-1, 2, -1, 0, 0, 0, 0, 0}, {0, -1, 2, -1, 0, 0, 0, 0},
                       {0, 0, -1, 2, -1, 0, 0, 0}, {0, 0, 0, -1, 2, -1, 0, -1}, {0, 0, 0, 0, -1, 2, -1, 0},
                       {0, 0, 0, 0, 0, -1, 2, 0},  {0, 0, 0, 0, -1, 0, 0, 2}};
    CHECK(determinant(e8) == 1);
    s = smithNormalForm(Int(2) * e8);
    CHECK(s.diagonal == std::vector<Int>(8, Int(2)));
}

TEST_CASE("Smith normal form properties on random matrices")
{
    std::mt19937_64 rng(20240611);
    for (int trial = 0; trial < 60; ++trial) {
        const std::size_t r = 1 + rng() % 5;
        const std::size_t c = 1 + rng() % 5;
        IntMatrix a = randomMatrix(rng, r, c, 9);
        if (trial % 7 == 0 && r > 1)
            for (std::size_t j = 0; j < c; ++j)
                a(r - 1, j) = 2 * a(0, j); // force rank deficiency
        const auto s = smithNormalForm(a);
        CHECK(s.U * a * s.V == diagonalOf(s.diagonal, r, c));
        CHECK(abs(determinant(s.U)) == 1);
        CHECK(abs(determinant(s.V)) == 1);
        for (std::size_t k = 0; k + 1 < s.diagonal.size(); ++k) {
            CHECK(s.diagonal[k] >= 0);
            if (s.diagonal[k] == 0)
                CHECK(s.diagonal[k + 1] == 0);
            else
                CHECK(s.diagonal[k + 1] % s.diagonal[k] == 0);
        }
        if (r == c) {
            Int prod(1);
            for (const auto& d : s.diagonal)
                prod *= d;
            CHECK(prod == abs(determinant(a)));
        }
    }
}

TEST_CASE("characteristic polynomial")
{
    CHECK(charPoly(IntMatrix(2, 2)) == IntPoly::monomial(Int(1), 2));
    // Coxeter element of A2 in simple-root coordinates: s1 s2.
    const IntMatrix s1{{-1, 1}, {0, 1}};
    const IntMatrix s2{{1, 0}, {1, -1}};
    CHECK(charPoly(s1 * s2) == IntPoly{1, 1, 1});
    IntPoly expected{1};
    for (int i = 0; i < 8; ++i)
        expected = expected * IntPoly{1, 1};
    CHECK(charPoly(-IntMatrix::identity(8)) == expected);
    CHECK_THROWS_AS(charPoly(IntMatrix(2, 3)), PreconditionError);

    SUBCASE("agrees with det(xI - A) at sample points")
    {
        std::mt19937_64 rng(77);
        for (int trial = 0; trial < 50; ++trial) {
            const std::size_t n = 1 + rng() % 6;
            const IntMatrix a = randomMatrix(rng, n, n, 6);
            const IntPoly p = charPoly(a);
            for (long x = -3; x <= 3; ++x) {
                const IntMatrix shifted = Int(x) * IntMatrix::identity(n) - a;
                CHECK(p.evaluate(Int(x)) == determinant(shifted));
            }
        }
    }
}

TEST_CASE("kernel and Hermite basis")
{
    const IntMatrix f{{1, 1, 1}};
    const IntMatrix k = integerKernel(f);
    CHECK(k.rows() == 3);
    CHECK(k.cols() == 2);
    CHECK((f * k).isZero());
    // saturated: the kernel basis extends to a unimodular matrix, so its 2x2 minors have gcd 1
    const IntMatrix h = hermiteRowBasis(IntMatrix{{2, 4}, {6, 8}, {4, 4}});
    CHECK(h == IntMatrix{{2, 0}, {0, 4}});
    CHECK(rank(IntMatrix{{1, 2}, {2, 4}}) == 1);
    const RatMatrix inv = inverse(IntMatrix{{2, -1}, {-1, 2}});
    CHECK(inv(0, 0) == makeRational(Int(2), Int(3)));
    CHECK_THROWS_AS(inverse(IntMatrix{{1, 2}, {2, 4}}), PreconditionError);
}
