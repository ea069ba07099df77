#include "orbilat/tables.hpp"

#include "orbilat/codes.hpp"
#include "orbilat/errors.hpp"

namespace orbilat {

ShellAction shellAction(const GramLattice& l, std::int64_t norm, const std::vector<IntMatrix>& generators)
{
    ShellAction a;
    a.lattice = l;
    a.norm = norm;
    const auto shells = shortVectorsCached(l, norm);
    const auto it = shells->find(norm);
    require(it != shells->end() && it->second.count() > 0, "shellAction: no vectors of norm " + std::to_string(norm));
    a.vectors = it->second.vectors;
    require(spansFullRank(a.vectors, l.rank()), "shellAction: the shell does not span the lattice");
    a.matrices = generators;
    a.pairOf = antipodalPairs(a.vectors);
    a.pairCount = a.vectors.size() / 2;
    for (const auto& m : generators) {
        a.generators.push_back(inducedPermutation(Isometry(l, m), a.vectors));
        a.pairGenerators.push_back(pairPermutation(a.generators.back(), a.pairOf, a.pairCount));
    }
    return a;
}

Int groupOrder(const ShellAction& a) { return PermGroup(a.vectors.size(), a.generators).order(); }

CentralizerOrders centralizerOrders(const ShellAction& a, const Isometry& g)
{
    const Perm p = inducedPermutation(g, a.vectors);
    const Perm q = pairPermutation(p, a.pairOf, a.pairCount);
    const PermGroup onVectors(a.vectors.size(), a.generators, cycleBase(p));
    require(onVectors.contains(p), "centralizerOrders: g is not in the group");
    const PermGroup onPairs(a.pairCount, a.pairGenerators, cycleBase(q));
    return {centralizerOrder(onVectors, p), centralizerOrder(onPairs, q)};
}

std::string TargetClass::label() const { return profile + ", g^" + std::to_string(negativePower) + "=-1"; }

const std::vector<TargetClass>& traceTableTargets()
{
    static const std::vector<TargetClass> targets{
        {"Phi6^4", 3}, {"Phi10^2", 5}, {"Phi30", 15}, {"Phi4^4", 2}, {"Phi8^2", 4}};
    return targets;
}

std::vector<TraceTableRow> traceTable(const SearchOptions& options, bool withCentralizers)
{
    const GramLattice l = namedLattice("sqrt2E8");
    const auto gens = simpleReflections(l);
    std::optional<ShellAction> action;
    if (withCentralizers)
        action = shellAction(l, 4, gens);
    std::vector<TraceTableRow> rows;
    for (const auto& t : traceTableTargets()) {
        TraceTableRow row;
        row.target = t;
        IsometryConstraints c;
        c.profile = parseProfile(t.profile);
        c.negativePower = t.negativePower;
        const auto r = findIsometryWithProfile(l, gens, c, options);
        row.wordsTried = r.wordsTried;
        if (r.found()) {
            row.representative = r.isometry;
            row.trace = traceOnVPlusTwo(*r.isometry);
            if (action)
                row.centralizer = centralizerOrders(*action, *r.isometry);
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

} // namespace orbilat
