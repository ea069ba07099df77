#pragma once

#include "orbilat/arith.hpp"

#include <cstdint>
#include <initializer_list>
#include <ostream>
#include <string>
#include <vector>

namespace orbilat {

/// Univariate polynomial with integer coefficients, stored in ascending degree.
/// Canonical: no trailing zero coefficient; the zero polynomial has no coefficients.
class IntPoly {
public:
    IntPoly() = default;
    explicit IntPoly(std::vector<Int> ascending);
    IntPoly(std::initializer_list<long> ascending);

    static IntPoly monomial(const Int& coefficient, std::size_t degree);

    bool isZero() const { return coeffs_.empty(); }
    /// Degree; -1 for the zero polynomial.
    long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
    const std::vector<Int>& coefficients() const { return coeffs_; }
    Int coefficient(std::size_t k) const;
    const Int& leading() const;

    Int evaluate(const Int& x) const;
    /// p(x^k)
    IntPoly substitutePower(std::size_t k) const;

    friend IntPoly operator+(const IntPoly& a, const IntPoly& b);
    friend IntPoly operator-(const IntPoly& a, const IntPoly& b);
    friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
    friend bool operator==(const IntPoly& a, const IntPoly& b) { return a.coeffs_ == b.coeffs_; }

    std::string toString() const;

private:
    void trim();
    std::vector<Int> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const IntPoly& p);

struct PolyDivision {
    IntPoly quotient;
    IntPoly remainder;
};

/// Division by a monic divisor (integral quotient and remainder).
PolyDivision divideByMonic(const IntPoly& dividend, const IntPoly& monicDivisor);

/// Exact division by a monic divisor; InconsistencyError if the remainder is nonzero.
IntPoly divideExact(const IntPoly& dividend, const IntPoly& monicDivisor);

/// n-th cyclotomic polynomial, obtained by dividing x^n - 1 by Phi_d for every proper divisor d.
/// Results are memoized per process behind a mutex.
const IntPoly& cyclotomic(std::uint64_t n);

/// Phi_n(1) for n >= 2: p when n = p^k, 1 otherwise.
Int cyclotomicAtOne(std::uint64_t n);

} // namespace orbilat
