#pragma once

#include "orbilat/orbifold.hpp"
#include "orbilat/perm_group.hpp"
#include "orbilat/search.hpp"

#include <optional>
#include <string>
#include <vector>

namespace orbilat {

/// A group of isometries acting faithfully on one shell of a lattice, and on its antipodal pairs.
struct ShellAction {
    GramLattice lattice;
    std::int64_t norm = 0;
    std::vector<Coords> vectors;
    std::vector<IntMatrix> matrices;
    std::vector<Perm> generators;     ///< on vectors
    std::vector<std::uint32_t> pairOf;
    std::size_t pairCount = 0;
    std::vector<Perm> pairGenerators; ///< on pairs {v, -v}
};

/// PreconditionError unless the shell is nonempty, spans the lattice and the generators are isometries.
ShellAction shellAction(const GramLattice& l, std::int64_t norm, const std::vector<IntMatrix>& generators);

/// Order of the group generated on the shell (faithful, so the order of the matrix group).
Int groupOrder(const ShellAction& a);

struct CentralizerOrders {
    Int onVectors; ///< |C_G(g)|
    Int onPairs;   ///< |C_{G/(G cap {+-1})}(g mod +-1)|
};

/// PreconditionError unless g lies in the group.
CentralizerOrders centralizerOrders(const ShellAction& a, const Isometry& g);

/// Class invariant used to name a row: cyclotomic profile and the power that equals -1.
struct TargetClass {
    std::string profile;
    std::uint64_t negativePower = 0;
    std::string label() const; ///< e.g. "Phi6^4, g^3=-1"
};

/// The five elements of W(E8) on sqrt2 E8 with no fixed vectors in the weight-two trace table.
const std::vector<TargetClass>& traceTableTargets();

struct TraceTableRow {
    TargetClass target;
    std::optional<Isometry> representative;
    std::uint64_t wordsTried = 0;
    std::optional<GradedTraceReport> trace;
    std::optional<CentralizerOrders> centralizer;
};

/// Searches a representative for every target on sqrt2 E8 (generators: simple reflections) and
/// computes its trace on the weight-two space of V^+; centralizers in W(E8) when requested.
std::vector<TraceTableRow> traceTable(const SearchOptions& options, bool withCentralizers);

} // namespace orbilat
