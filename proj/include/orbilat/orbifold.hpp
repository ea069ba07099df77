#pragma once

#include "orbilat/isometry.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace orbilat {

/// Lowest weight of a g^s-twisted sector, m = order of g^s.
struct ConformalWeight {
    Rational value;
    std::uint64_t m = 1;

    bool inOneOverMZ() const; ///< value * m is an integer
    bool atMostOne() const;
    std::string toString() const { return toFractionString(value); }
};

/// eps = (1 / 4m^2) sum_{i=1}^{m-1} i (m - i) dims[i]. dims[i] is the dimension of the
/// e^{2 pi i i/m} eigenspace; PreconditionError if dims has the wrong size or dims[i] != dims[m-i].
ConformalWeight epsilonGeneral(const std::vector<std::uint64_t>& dims, std::uint64_t m);

/// Closed form for a completely fixed-point free g of order n on rank ell:
/// m = n / gcd(n, s), eps = (ell / 24) (1 + (-1)^{t+1} q_1...q_t / m^2), t = number of primes of m.
/// PreconditionError if phi(m) does not divide ell.
ConformalWeight epsilonCFPF(std::uint64_t ell, std::uint64_t n, std::uint64_t s);

/// epsilonGeneral on the eigenspace dimensions of g^s.
ConformalWeight epsilonOf(const Isometry& g, std::uint64_t s);

/// dim of the e^{2 pi i j / n} eigenspace of the lift of g on the weight-one space of V_L:
/// dim h_(j) plus the number of g-orbits on L(2) of size k with n | jk. Orbit signs are taken to
/// be trivial (standard lift with trivial cocycle on the orbit).
std::uint64_t weightOneDim(const Isometry& g, std::uint64_t j);

struct CosetRootCount {
    std::uint64_t count = 0;
    Rational expected;     ///< n * ell / phi(n)
    bool admissible = false; ///< count == expected
};

/// |(lambda + L)(2)|. PreconditionError unless lambda is in L* and (1 - g) lambda is in L.
CosetRootCount cosetRootCount(const Isometry& g, const RationalVector& lambda);

struct TwistedTopDim {
    std::optional<Int> dim;              ///< empty: undefined
    Int index{0};                        ///< [L : (1 - g^s) L*] when defined
    std::optional<RationalVector> witness; ///< dual vector v with (1 - g^s) v not in L
    std::string reason;
    bool defined() const { return dim.has_value(); }
};

/// [L : (1 - g^s) L*]^{1/2} when (1 - g^s) L* is a full-rank sublattice of L. InconsistencyError if
/// the index is not a perfect square.
TwistedTopDim twistedTopDim(const Isometry& g, std::int64_t s);

struct SelfDualReport {
    std::uint64_t ell = 24;
    std::uint64_t n = 1;
    bool pass = false;
    std::vector<std::optional<ConformalWeight>> eps; ///< eps[s - 1], s = 1..n-1; empty if undefined
    std::uint64_t coprimeDimSum = 0; ///< sum of dim h_(s) over s coprime to n
    std::vector<std::string> failures;
};

/// For a hypothetical completely fixed-point free g of order n on rank ell: eps(s) = 1 - 1/n for
/// gcd(s, n) = 1, eps(s) > 1 otherwise, and the coprime eigenspaces fill all ell dimensions.
SelfDualReport orbifoldSelfDualCheck(std::uint64_t ell, std::uint64_t n);

/// Trace of the lift of g on the weight-two space of V_L^+ (fixed points of the lift of -1).
struct GradedTraceReport {
    unsigned weight = 2;
    Int dimension{0};
    Int trace{0};
    Int symmetricSquareDim{0};
    Int symmetricSquareTrace{0}; ///< on h(-1)h(-1)1
    Int heisenbergDegreeTwoDim{0}; ///< h(-2)1 is odd under the lift of -1, so 0 in V_L^+
    Int heisenbergDegreeTwoTrace{0};
    Int exponentialDim{0};        ///< pairs {a, -a} of norm 4
    Int exponentialTrace{0};      ///< pairs with g a = +-a
};

/// PreconditionError unless L is doubly even.
GradedTraceReport traceOnVPlusTwo(const Isometry& g);

/// Label of an irreducible module of the orbifold: untwisted coset V_{lambda+L}(j) or twisted
/// sector V_{lambda+L}^T[g^s](j).
struct SectorLabel {
    enum class Kind { UntwistedCoset, Twisted };
    Kind kind = Kind::UntwistedCoset;
    std::string coset;    ///< label of lambda + L in D(L)
    std::uint64_t twist = 0; ///< s mod n
    std::uint64_t eigen = 0; ///< j mod n
    std::uint64_t n = 1;

    /// The kind follows from the twist: untwisted iff twist = 0 mod n.
    static SectorLabel make(std::string coset, std::uint64_t twist, std::uint64_t eigen, std::uint64_t n);
    std::string toString() const;
};

} // namespace orbilat
