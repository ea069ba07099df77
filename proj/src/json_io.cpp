#include "orbilat/json_io.hpp"

#include "orbilat/errors.hpp"

#include <filesystem>
#include <fstream>

namespace orbilat {

namespace {

namespace fs = std::filesystem;

Int intFromJson(const Json& j)
{
    if (j.is_number_integer())
        return toInt(j.get<std::int64_t>());
    require(j.is_string(), "expected an integer, got " + j.dump());
    Int v;
    require(v.set_str(j.get<std::string>(), 10) == 0, "not an integer: " + j.get<std::string>());
    return v;
}

IntMatrix matrixFromJson(const Json& j, const std::string& what)
{
    require(j.is_array(), what + " must be an array of rows");
    const std::size_t rows = j.size();
    IntMatrix m(rows, rows == 0 ? 0 : j[0].size());
    for (std::size_t i = 0; i < rows; ++i) {
        require(j[i].is_array() && j[i].size() == m.cols(), what + ": rows have different lengths");
        for (std::size_t k = 0; k < m.cols(); ++k)
            m(i, k) = intFromJson(j[i][k]);
    }
    return m;
}

Json matrixToJson(const IntMatrix& m)
{
    Json rows = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (std::size_t k = 0; k < m.cols(); ++k)
            row.push_back(toJson(m(i, k)));
        rows.push_back(std::move(row));
    }
    return rows;
}

std::optional<std::string> findDataFile(const std::string& source, const std::string& subdir)
{
    if (fs::is_regular_file(source))
        return source;
#ifdef ORBILAT_DATA_DIR
    for (const auto& name : {source, source + ".json"}) {
        const fs::path p = fs::path(ORBILAT_DATA_DIR) / subdir / name;
        if (fs::is_regular_file(p))
            return p.string();
    }
#else
    (void)subdir;
#endif
    return std::nullopt;
}

Json optionalToJson(const std::optional<std::uint64_t>& v) { return v ? Json(*v) : Json(nullptr); }

} // namespace

Json readJsonFile(const std::string& path)
{
    std::ifstream in(path);
    require(in.good(), "cannot read " + path);
    try {
        return Json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw PreconditionError(path + ": " + e.what());
    }
}

GramLattice latticeFromJson(const Json& j)
{
    require(j.is_object() && j.contains("gram"), "lattice JSON needs a \"gram\" field");
    return GramLattice(matrixFromJson(j["gram"], "gram"), j.value("name", std::string()));
}

Json toJson(const GramLattice& l)
{
    Json j;
    j["name"] = l.name();
    j["gram"] = matrixToJson(l.gram());
    return j;
}

GramLattice loadLattice(const std::string& source)
{
    if (const auto path = findDataFile(source, "lattices"))
        return latticeFromJson(readJsonFile(*path));
    return namedLattice(source);
}

CodeZp codeFromJson(const Json& j)
{
    require(j.is_object() && j.contains("p") && j.contains("length") && j.contains("generators"),
            "code JSON needs \"p\", \"length\" and \"generators\"");
    const auto p = j["p"].get<std::uint64_t>();
    const auto n = j["length"].get<std::size_t>();
    std::vector<Word> rows;
    for (const auto& r : j["generators"]) {
        Word w;
        for (const auto& x : r) {
            const std::int64_t v = x.get<std::int64_t>();
            const std::int64_t q = static_cast<std::int64_t>(p);
            w.push_back(static_cast<std::uint64_t>(((v % q) + q) % q));
        }
        rows.push_back(std::move(w));
    }
    return CodeZp(p, n, rows, j.value("name", std::string()));
}

Json toJson(const CodeZp& c)
{
    Json j;
    j["name"] = c.name();
    j["p"] = c.p();
    j["length"] = c.length();
    j["generators"] = c.generators();
    return j;
}

CodeZp loadCode(const std::string& source)
{
    if (const auto path = findDataFile(source, "codes"))
        return codeFromJson(readJsonFile(*path));
    return namedCode(source);
}

Isometry isometryFromJson(const Json& j, const std::optional<GramLattice>& fallback)
{
    require(j.is_object() && j.contains("matrix"), "isometry JSON needs a \"matrix\" field");
    GramLattice l;
    if (j.contains("lattice")) {
        const Json& lj = j["lattice"];
        if (lj.is_string())
            l = loadLattice(lj.get<std::string>());
        else if (lj.is_array())
            l = GramLattice(matrixFromJson(lj, "lattice"));
        else
            l = latticeFromJson(lj);
    } else {
        require(fallback.has_value(), "isometry JSON has no \"lattice\" and none was given");
        l = *fallback;
    }
    std::string claimed;
    if (j.contains("meta") && j["meta"].is_object())
        claimed = j["meta"].value("claimed_class", std::string());
    return Isometry(l, matrixFromJson(j["matrix"], "matrix"), claimed);
}

Json toJson(const Isometry& g)
{
    Json j;
    j["lattice"] = toJson(g.lattice());
    j["matrix"] = matrixToJson(g.matrix());
    j["meta"] = {{"claimed_class", g.claimedClass()}};
    return j;
}

Isometry loadIsometry(const std::string& source, const std::optional<GramLattice>& fallback)
{
    const auto path = findDataFile(source, "isometries");
    require(path.has_value(), "no isometry file " + source);
    return isometryFromJson(readJsonFile(*path), fallback);
}

RationalVector shiftFromJson(const Json& j)
{
    require(j.is_object() && j.contains("shift") && j["shift"].is_array(), "coset JSON needs a \"shift\" array");
    RationalVector v;
    for (const auto& x : j["shift"])
        v.push_back(x.is_string() ? parseRational(x.get<std::string>()) : Rational(intFromJson(x)));
    return v;
}

Json toJson(const Int& v)
{
    if (v.fits_slong_p())
        return Json(v.get_si());
    return Json(toString(v));
}

Json toJson(const Rational& q) { return Json(toFractionString(q)); }

Json toJson(const DiscriminantGroup& d)
{
    Json divisors = Json::array();
    for (const auto& x : d.divisors)
        divisors.push_back(toJson(x));
    return {{"divisors", divisors}, {"order", toJson(d.order)}, {"structure", d.toString()}};
}

Json toJson(const CyclotomicProfile& p)
{
    Json factors = Json::array();
    for (const auto& [d, m] : p.factors)
        factors.push_back({{"d", d}, {"multiplicity", m}});
    return {{"text", p.toString()}, {"order", p.order()}, {"degree", p.degree()}, {"factors", factors}};
}

Json toJson(const ConformalWeight& w)
{
    return {{"value", toJson(w.value)}, {"m", w.m}, {"in_one_over_m_z", w.inOneOverMZ()}, {"at_most_one", w.atMostOne()}};
}

Json toJson(const TwistedTopDim& t)
{
    Json j;
    j["defined"] = t.defined();
    j["dim"] = t.dim ? toJson(*t.dim) : Json(nullptr);
    j["index"] = toJson(t.index);
    if (t.witness) {
        Json w = Json::array();
        for (const auto& x : *t.witness)
            w.push_back(toJson(x));
        j["witness"] = w;
    } else {
        j["witness"] = nullptr;
    }
    j["reason"] = t.reason;
    return j;
}

Json toJson(const CosetRootCount& c)
{
    return {{"count", c.count}, {"expected", toJson(c.expected)}, {"admissible", c.admissible}};
}

Json toJson(const SelfDualReport& r)
{
    Json eps = Json::array();
    for (std::size_t i = 0; i < r.eps.size(); ++i)
        eps.push_back({{"s", i + 1}, {"eps", r.eps[i] ? toJson(r.eps[i]->value) : Json(nullptr)}});
    return {{"ell", r.ell}, {"n", r.n}, {"pass", r.pass}, {"eps", eps}, {"coprime_dim_sum", r.coprimeDimSum},
            {"failures", r.failures}};
}

Json toJson(const GradedTraceReport& r)
{
    return {{"weight", r.weight},
            {"dimension", toJson(r.dimension)},
            {"trace", toJson(r.trace)},
            {"symmetric_square", {{"dim", toJson(r.symmetricSquareDim)}, {"trace", toJson(r.symmetricSquareTrace)}}},
            {"heisenberg_degree_two",
             {{"dim", toJson(r.heisenbergDegreeTwoDim)}, {"trace", toJson(r.heisenbergDegreeTwoTrace)}}},
            {"exponential", {{"dim", toJson(r.exponentialDim)}, {"trace", toJson(r.exponentialTrace)}}}};
}

Json toJson(const CaseIReport& r)
{
    return {{"n", r.n},       {"p", r.p},
            {"t", r.t},       {"m", r.m},
            {"feasible", r.feasible}, {"witness", optionalToJson(r.witness)},
            {"forced_prime", r.forcedPrime}};
}

Json toJson(const PrimePowerCandidate& c)
{
    return {{"m", c.m},
            {"p", c.p},
            {"r", c.r},
            {"survives", c.survives},
            {"ell", optionalToJson(c.ell)},
            {"excluded_by_citation", c.excludedByCitation},
            {"note", c.note}};
}

Json toJson(const Case2Entry& e) { return {{"m", e.m}, {"ell", e.ell}, {"totient_divides", e.totientDivides}}; }

Json toJson(const Verdict& v)
{
    Json j;
    j["summary"] = toString(v.summary);
    j["rootless"] = v.rootless;
    j["cfpf"] = v.cfpf;
    j["order"] = v.order;
    j["rank"] = v.rank;
    j["determinant"] = toJson(v.determinant);
    j["case_i"] = v.caseI ? toJson(*v.caseI) : Json(nullptr);
    Json c2 = Json::array();
    for (const auto& e : v.caseII)
        c2.push_back({{"s", e.s},
                      {"m", e.m},
                      {"eps", toJson(e.eps.value)},
                      {"subcase", e.subcase},
                      {"admissible", e.admissible},
                      {"family", e.family.empty() ? Json(nullptr) : Json(e.family)}});
    j["case_ii"] = c2;
    Json reasons = Json::array();
    for (const auto& r : v.reasons) {
        Json values = Json::object();
        for (const auto& [k, x] : r.values)
            values[k] = x;
        reasons.push_back({{"constraint", r.constraint}, {"values", values}, {"text", r.text}});
    }
    j["reasons"] = reasons;
    j["notes"] = v.notes;
    return j;
}

Json toJson(const CentralizerOrders& c)
{
    return {{"on_vectors", toJson(c.onVectors)}, {"on_pairs", toJson(c.onPairs)}};
}

Json toJson(const TraceTableRow& r)
{
    Json j;
    j["class"] = r.target.label();
    j["profile"] = r.target.profile;
    j["negative_power"] = r.target.negativePower;
    j["found"] = r.representative.has_value();
    j["words_tried"] = r.wordsTried;
    j["order"] = r.representative ? Json(r.representative->order()) : Json(nullptr);
    j["trace"] = r.trace ? toJson(r.trace->trace) : Json(nullptr);
    j["dimension"] = r.trace ? toJson(r.trace->dimension) : Json(nullptr);
    j["centralizer"] = r.centralizer ? toJson(*r.centralizer) : Json(nullptr);
    j["matrix"] = r.representative ? matrixToJson(r.representative->matrix()) : Json(nullptr);
    return j;
}

Json shellsToJson(const ShellMap& shells)
{
    Json j = Json::array();
    for (const auto& [norm, s] : shells)
        j.push_back({{"norm", norm}, {"count", s.count()}});
    return j;
}

} // namespace orbilat
