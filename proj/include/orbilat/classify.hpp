#pragma once

#include "orbilat/isometry.hpp"
#include "orbilat/orbifold.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace orbilat {

/// Label (j, s): coset j * lambda + L and eigenvalue exponent s. Fusion adds componentwise.
struct FusionLabel {
    std::uint64_t j = 0; ///< mod p
    std::uint64_t s = 0; ///< mod n
    friend auto operator<=>(const FusionLabel&, const FusionLabel&) = default;
};

/// Least s >= 1 with p | s and n | s r. PreconditionError unless p | n.
std::uint64_t fusionOrder(std::uint64_t n, std::uint64_t p, std::uint64_t r);

struct FusionClosure {
    std::uint64_t p = 1, n = 1;
    std::vector<FusionLabel> elements; ///< sorted
    std::map<FusionLabel, std::uint64_t> elementOrders;
    std::uint64_t order() const { return elements.size(); }
    bool cyclic() const;
};

/// Subgroup of Z_p x Z_n generated by the labels.
FusionClosure fusionLabelClosure(const std::vector<FusionLabel>& labels, std::uint64_t p, std::uint64_t n);

struct CaseIReport {
    std::uint64_t n = 1, p = 1, t = 0, m = 1; ///< n = p^t, m = n / p
    bool feasible = false;
    std::optional<std::uint64_t> witness; ///< some r with gcd(m, r) = 1 and r = 0 mod p
    bool forcedPrime = false;            ///< feasible <=> t = 1
};

/// Brute force over r in Z_n. PreconditionError unless n is a prime power.
CaseIReport caseIFeasible(std::uint64_t n);

/// m <= bound: not a prime power, squarefree, even number of primes, phi(m) | 24 and
/// 1 + (-1)^{t+1} q_1...q_t / m^2 = 1 - 1/m exactly. Ascending.
std::vector<std::uint64_t> case1NonPrimePowerSearch(std::uint64_t bound);

struct PrimePowerCandidate {
    std::uint64_t m = 0, p = 0, r = 0;
    bool survives = false;               ///< (p^{2r-1} + 1) | 24 (p^r - 1)
    std::optional<std::uint64_t> ell;    ///< 24 (p^r - 1) p^{r-1} / (p^{2r-1} + 1) when integral
    bool excludedByCitation = false;     ///< m = 4
    std::string note;
};

/// Every prime power 2 <= m <= bound, ascending, with its verdict.
std::vector<PrimePowerCandidate> case1PrimePowerSearch(std::uint64_t bound);

struct Case2Entry {
    std::uint64_t m = 0;
    std::uint64_t ell = 0;
    bool totientDivides = false; ///< phi(m) | ell, needed for a fixed-point free g of order m on rank ell
    friend bool operator==(const Case2Entry& a, const Case2Entry& b) { return a.m == b.m && a.ell == b.ell; }
};

/// m <= bound with A = m^2 / (q_1...q_t), (A + (-1)^{t+1}) | 24, ell = 24 A / (A + (-1)^{t+1}) integral
/// and ell < 24. Ascending in m. phi(m) | ell is reported per entry, not filtered on.
std::vector<Case2Entry> case2Search(std::uint64_t bound);

enum class VerdictSummary { NoExtraPossible, LeechFamily, CoinvariantFamily, PrimeOrderFamily };
std::string toString(VerdictSummary s);

struct Reason {
    std::string constraint;
    std::map<std::string, std::string> values;
    std::string text;
};

struct CaseIIEntry {
    std::uint64_t s = 0, m = 1;
    ConformalWeight eps;
    int subcase = 0; ///< 1: eps = 1 - 1/m, 2: eps = 1, 0: neither
    bool admissible = false;
    std::string family; ///< "leech-family", "coinvariant-family" or empty
};

/// Necessary conditions only; a family label never asserts that an extra automorphism exists.
struct Verdict {
    bool rootless = false;
    bool cfpf = false;
    std::uint64_t order = 1;
    std::size_t rank = 0;
    Int determinant{1};
    std::optional<CaseIReport> caseI;
    std::vector<CaseIIEntry> caseII;
    VerdictSummary summary = VerdictSummary::NoExtraPossible;
    std::vector<Reason> reasons;
    std::vector<std::string> notes;
};

Verdict admissibilityVerdict(const Isometry& g);

} // namespace orbilat
