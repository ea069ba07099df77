#pragma once

#include "orbilat/classify.hpp"
#include "orbilat/codes.hpp"
#include "orbilat/orbifold.hpp"
#include "orbilat/tables.hpp"

#include "json.hpp"

#include <functional>
#include <string>

namespace orbilat {

using Json = nlohmann::ordered_json;

/// Reads and parses a JSON file. PreconditionError if it cannot be read or parsed.
Json readJsonFile(const std::string& path);

/// Lattice JSON: {"name": str, "gram": [[int]]}. Integers may also be given as strings.
GramLattice latticeFromJson(const Json& j);
Json toJson(const GramLattice& l);

/// Resolves a lattice argument: an existing file, a file in the bundled data directory, or a
/// name known to namedLattice.
GramLattice loadLattice(const std::string& source);

/// Code JSON: {"p": int, "length": int, "generators": [[int]]} with an optional "name".
CodeZp codeFromJson(const Json& j);
Json toJson(const CodeZp& c);
/// Same resolution order as loadLattice, falling back to namedCode.
CodeZp loadCode(const std::string& source);

/// Isometry JSON: {"lattice": <name, {"name", "gram"} or [[int]]>, "matrix": [[int]],
/// "meta": {"claimed_class": str}}. `fallback` is used when "lattice" is absent.
Isometry isometryFromJson(const Json& j, const std::optional<GramLattice>& fallback = std::nullopt);
Json toJson(const Isometry& g);
Isometry loadIsometry(const std::string& source, const std::optional<GramLattice>& fallback = std::nullopt);

/// Coset JSON: lattice JSON plus "shift": ["p/q", ...].
RationalVector shiftFromJson(const Json& j);

Json toJson(const Int& v);     ///< number when it fits in 64 bits, else a decimal string
Json toJson(const Rational& q); ///< always a "p/q" string
Json toJson(const DiscriminantGroup& d);
Json toJson(const CyclotomicProfile& p);
Json toJson(const ConformalWeight& w);
Json toJson(const TwistedTopDim& t);
Json toJson(const CosetRootCount& c);
Json toJson(const SelfDualReport& r);
Json toJson(const GradedTraceReport& r);
Json toJson(const CaseIReport& r);
Json toJson(const PrimePowerCandidate& c);
Json toJson(const Case2Entry& e);
Json toJson(const Verdict& v);
Json toJson(const CentralizerOrders& c);
Json toJson(const TraceTableRow& r);
Json shellsToJson(const ShellMap& shells);

} // namespace orbilat
