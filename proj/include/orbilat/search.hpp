#pragma once

#include "orbilat/isometry.hpp"

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace orbilat {

/// Constraints on a group element. Unset fields are not checked.
struct IsometryConstraints {
    std::optional<std::uint64_t> order;
    std::optional<CyclotomicProfile> profile;
    std::optional<std::uint64_t> negativePower;     ///< k with g^k = -I
    std::vector<std::pair<std::uint64_t, Int>> traces; ///< (s, tr g^s)
};

struct SearchOptions {
    std::uint64_t seed = 271828;
    std::uint64_t budget = 1000000; ///< number of random words
    std::size_t maxWordLength = 20;
};

struct SearchResult {
    std::optional<Isometry> isometry; ///< empty: NotFound
    std::uint64_t wordsTried = 0;
    std::uint64_t seed = 0;
    bool found() const { return isometry.has_value(); }
};

/// tr g^s for an isometry with the given profile (sum of Ramanujan sums c_d(s)).
Int profileTrace(const CyclotomicProfile& profile, std::uint64_t s);

bool satisfies(const Isometry& g, const IsometryConstraints& c);

/// Seeded random walk in the group generated by `generators` (each must be an isometry of l).
/// Powers of sampled elements are also tried. Exhausting the budget yields NotFound.
SearchResult findIsometryWithProfile(const GramLattice& l, const std::vector<IntMatrix>& generators,
                                     const IsometryConstraints& constraints, const SearchOptions& options = {});

} // namespace orbilat
