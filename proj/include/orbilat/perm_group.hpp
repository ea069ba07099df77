#pragma once

#include "orbilat/arith.hpp"
#include "orbilat/isometry.hpp"

#include <cstdint>
#include <vector>

namespace orbilat {

/// Permutation of {0, ..., n-1}; p[i] is the image of i.
using Perm = std::vector<std::uint32_t>;

Perm identityPerm(std::size_t n);
/// (a * b)(i) = a(b(i)): apply b first.
Perm compose(const Perm& a, const Perm& b);
Perm inversePerm(const Perm& p);
bool isIdentity(const Perm& p);
Perm powerPerm(const Perm& p, std::int64_t k);
std::uint64_t permOrder(const Perm& p);

/// Permutation group with a base and strong generating set (deterministic Schreier-Sims).
class PermGroup {
public:
    /// `basePrefix` fixes the first base points; further points are appended as needed.
    PermGroup(std::size_t degree, std::vector<Perm> generators, std::vector<std::uint32_t> basePrefix = {});

    std::size_t degree() const { return degree_; }
    Int order() const;
    bool contains(const Perm& p) const;
    const std::vector<std::uint32_t>& base() const { return base_; }
    const std::vector<Perm>& generators() const { return generators_; }

    /// Number of x in the group with x c = d x (x conjugates c to d). Backtrack over the
    /// stabilizer chain; best when the base starts with whole cycles of c.
    Int countConjugators(const Perm& c, const Perm& d) const;

private:
    struct Level {
        std::uint32_t point;
        std::vector<Perm> gens;              // strong generators fixing the earlier base points
        std::vector<std::int32_t> transIndex; // point -> index into trans, -1 outside the orbit
        std::vector<Perm> trans;             // trans[k](point) = orbit[k]
        std::vector<Perm> transInv;
        std::vector<std::uint32_t> orbit;
        std::vector<std::uint32_t> fixedByRest; // points fixed by every strong generator of the next level
    };

    void buildOrbit(Level& level) const;
    /// Returns the residue and the level index where sifting stopped (levels_.size() if it went through).
    std::pair<Perm, std::size_t> sift(const Perm& g, std::size_t fromLevel) const;
    std::uint32_t movedPoint(const Perm& p) const;
    /// Adds h to the generators of levels firstLevel..stopLevel (appending a level if needed).
    bool addStrongGenerator(const Perm& h, std::size_t firstLevel, std::size_t stopLevel);
    void schreierSims();
    void computeFixedSets();

    std::size_t degree_;
    std::vector<Perm> generators_;
    std::vector<std::uint32_t> base_;
    std::vector<Level> levels_;
};

/// |C_G(c)|.
Int centralizerOrder(const PermGroup& g, const Perm& c);
/// |N_G(<c>)| = sum over k coprime to the order of c of #{x : x c x^-1 = c^k}.
Int normalizerOfCyclicOrder(const PermGroup& g, const Perm& c);

/// Base prefix listing the points cycle by cycle (longest cycles first, ties by smallest point).
std::vector<std::uint32_t> cycleBase(const Perm& c);

/// Permutation induced by an isometry on a finite set of vectors (given in lattice coordinates).
/// PreconditionError if the set is not mapped onto itself.
Perm inducedPermutation(const Isometry& g, const std::vector<Coords>& points);

/// Action on antipodal pairs {v, -v}: points must be closed under negation. Returns the pair
/// index of every point; pairs are numbered in order of their first occurrence.
std::vector<std::uint32_t> antipodalPairs(const std::vector<Coords>& points);
Perm pairPermutation(const Perm& p, const std::vector<std::uint32_t>& pairOf, std::size_t pairCount);

/// Faithfulness check for an action on `points`: they span the lattice rank.
bool spansFullRank(const std::vector<Coords>& points, std::size_t rank);

} // namespace orbilat
