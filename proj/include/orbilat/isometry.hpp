#pragma once

#include "orbilat/lattice.hpp"
#include "orbilat/poly.hpp"

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace orbilat {

/// charpoly = prod Phi_d^mult, d ascending.
struct CyclotomicProfile {
    std::vector<std::pair<std::uint64_t, unsigned>> factors;

    std::uint64_t order() const; ///< lcm of the indices d
    std::size_t degree() const;  ///< sum mult * phi(d)
    unsigned multiplicity(std::uint64_t d) const;
    IntPoly product() const;
    std::string toString() const; ///< e.g. "Phi6^4", "Phi1^2 Phi3"
    friend bool operator==(const CyclotomicProfile&, const CyclotomicProfile&) = default;
};

/// Factors a monic integer polynomial into cyclotomic polynomials. InconsistencyError if some
/// factor is not cyclotomic.
CyclotomicProfile cyclotomicProfile(const IntPoly& charpoly);

/// Parses "Phi6^4", "Phi1^2 Phi3", "Phi30" (whitespace or '*' separated).
CyclotomicProfile parseProfile(const std::string& text);

/// Isometry v -> M v of a Gram lattice (coordinates in the lattice basis).
class Isometry {
public:
    /// Throws PreconditionError unless M^T G M = G.
    Isometry(GramLattice lattice, IntMatrix matrix, std::string claimedClass = {});

    static Isometry identity(const GramLattice& l);
    static Isometry negation(const GramLattice& l);

    const GramLattice& lattice() const { return lattice_; }
    const IntMatrix& matrix() const { return matrix_; }
    std::size_t rank() const { return lattice_.rank(); }
    const CyclotomicProfile& profile() const { return profile_; }
    std::uint64_t order() const { return profile_.order(); }
    const std::string& claimedClass() const { return claimed_; }

    /// g^k for any integer k (negative powers through the order).
    Isometry power(std::int64_t k) const;
    /// this after other: v -> M_this (M_other v).
    Isometry after(const Isometry& other) const;
    IntVector apply(const IntVector& v) const;
    Coords apply(const Coords& v) const;
    Int trace() const { return matrix_.trace(); }

private:
    GramLattice lattice_;
    IntMatrix matrix_;
    CyclotomicProfile profile_;
    std::string claimed_;
};

std::uint64_t isometryOrder(const Isometry& g);

/// Kernel of g - 1, a primitive sublattice (possibly of rank 0).
Sublattice fixedSublattice(const Isometry& g);
/// Orthogonal complement of the fixed sublattice.
Sublattice coinvariantSublattice(const Isometry& g);

bool isFixedPointFree(const Isometry& g);
/// Profile is {(n, l / phi(n))} with n the order: every power g^i, 1 <= i < n, is fixed-point
/// free. The identity (n = 1) satisfies this vacuously.
bool isCompletelyFixedPointFree(const Isometry& g);

/// dim of the e^{2 pi i j / n} eigenspace, j = 0..n-1, from the cyclotomic profile.
std::vector<std::uint64_t> eigenspaceDims(const Isometry& g);
std::vector<std::uint64_t> eigenspaceDims(const CyclotomicProfile& profile, std::uint64_t n);

/// |det(1 - g^s)|.
Int detOneMinusPower(const Isometry& g, std::int64_t s);

/// Restriction of g to a g-stable sublattice given by an embedding. PreconditionError if the
/// sublattice is not stable.
Isometry restrictTo(const Isometry& g, const Sublattice& sub);

/// Conjugation-invariant data used in place of conjugacy class names.
struct ClassInvariant {
    std::uint64_t order = 1;
    CyclotomicProfile profile;
    std::vector<Int> traces;             ///< tr g^s, s = 1..n
    std::vector<std::size_t> fixedRanks; ///< rank of the fixed sublattice of g^s, s = 1..n
    friend bool operator==(const ClassInvariant&, const ClassInvariant&) = default;
};

ClassInvariant classInvariant(const Isometry& g);

/// Reflection in a vector a with 2(v|a)/(a|a) integral for all lattice v: v -> v - 2(v|a)/(a|a) a.
IntMatrix reflectionMatrix(const GramLattice& l, const IntVector& a);
/// Reflections in the basis vectors, for lattices whose basis vectors define integral reflections
/// (root lattices, sqrt2 E8).
std::vector<IntMatrix> simpleReflections(const GramLattice& l);

} // namespace orbilat
