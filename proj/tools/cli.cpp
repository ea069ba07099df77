#include "cli.hpp"

#include "orbilat/errors.hpp"
#include "orbilat/json_io.hpp"
#include "orbilat/number_theory.hpp"

#include "CLI11.hpp"

#include <fstream>
#include <sstream>

namespace orbilat::cli {

namespace {

constexpr int kUsage = 64;

struct Report {
    Json data = Json::object();
    std::ostringstream text;
    int exitCode = 0;
};

struct Config {
    std::string format = "text";
    std::uint64_t seed = 271828;
    std::string lattice;
    std::string isometry;
    std::string code;
    std::string e;
    std::string output;
    std::int64_t maxNorm = 4;
    std::int64_t norm = 0;
    std::uint64_t bound = 1000;
    std::uint64_t primePowerBound = 128;
    std::uint64_t budget = 1000000;
    bool centralizers = false;
    bool skipNormFour = false;
};

/// Left-aligned columns separated by two spaces.
std::string table(const std::vector<std::string>& header, const std::vector<std::vector<std::string>>& rows)
{
    std::vector<std::size_t> w(header.size());
    for (std::size_t c = 0; c < header.size(); ++c) {
        w[c] = header[c].size();
        for (const auto& r : rows)
            w[c] = std::max(w[c], r[c].size());
    }
    std::ostringstream os;
    auto line = [&](const std::vector<std::string>& r) {
        for (std::size_t c = 0; c < r.size(); ++c) {
            os << r[c];
            if (c + 1 < r.size())
                os << std::string(w[c] - r[c].size() + 2, ' ');
        }
        os << '\n';
    };
    line(header);
    for (const auto& r : rows)
        line(r);
    return os.str();
}

std::string joined(const std::vector<std::string>& xs, const std::string& sep)
{
    std::string s;
    for (std::size_t i = 0; i < xs.size(); ++i)
        s += (i ? sep : "") + xs[i];
    return s;
}

std::string str(std::uint64_t v) { return std::to_string(v); }
std::string yes(bool b) { return b ? "yes" : "no"; }

GramLattice requireLattice(const Config& c)
{
    require(!c.lattice.empty(), "--lattice is required");
    return loadLattice(c.lattice);
}

Isometry requireIsometry(const Config& c)
{
    require(!c.isometry.empty(), "--isometry is required");
    std::optional<GramLattice> l;
    if (!c.lattice.empty())
        l = loadLattice(c.lattice);
    Isometry g = loadIsometry(c.isometry, l);
    require(!l || g.lattice().gram() == l->gram(), "the isometry file refers to a different Gram matrix than --lattice");
    return g;
}

void writeOutput(const Config& c, const Json& j)
{
    if (c.output.empty())
        return;
    std::ofstream f(c.output);
    require(f.good(), "cannot write " + c.output);
    f << j.dump(2) << '\n';
}

Json latticeSummary(const GramLattice& l, Report& r, std::int64_t rootNorm = 2)
{
    const auto shells = shortVectorsCached(l, std::max<std::int64_t>(rootNorm, 2));
    const auto count = [&](std::int64_t n) -> std::size_t {
        const auto it = shells->find(n);
        return it == shells->end() ? 0 : it->second.count();
    };
    std::int64_t minNorm = 0;
    for (const auto& [n, s] : *shells)
        if (s.count() > 0) {
            minNorm = n;
            break;
        }
    const DiscriminantGroup d = discriminantGroup(l);
    Json j;
    j["name"] = l.name();
    j["rank"] = l.rank();
    j["determinant"] = toJson(l.determinant());
    j["even"] = checkEven(l);
    j["doubly_even"] = isDoublyEven(l);
    j["roots"] = count(2);
    j["min_norm_at_most_2"] = minNorm == 0 ? Json(nullptr) : Json(minNorm);
    j["discriminant"] = toJson(d);
    r.text << "name: " << (l.name().empty() ? "-" : l.name()) << '\n'
           << "rank: " << l.rank() << '\n'
           << "det: " << l.determinant() << '\n'
           << "even: " << yes(checkEven(l)) << '\n'
           << "doubly even: " << yes(isDoublyEven(l)) << '\n'
           << "roots: " << count(2) << '\n'
           << "discriminant group: " << d.toString() << '\n';
    return j;
}

// -- commands ---------------------------------------------------------------

void latticeInfo(const Config& c, Report& r) { r.data = latticeSummary(requireLattice(c), r); }

void latticeShells(const Config& c, Report& r)
{
    const GramLattice l = requireLattice(c);
    require(c.maxNorm > 0, "--max-norm must be positive");
    const ShellMap shells = shortVectors(l, c.maxNorm);
    r.data = {{"name", l.name()}, {"max_norm", c.maxNorm}, {"shells", shellsToJson(shells)}};
    if (shells.empty()) {
        r.text << "no vectors\n";
        return;
    }
    std::vector<std::vector<std::string>> rows;
    for (const auto& [n, s] : shells)
        rows.push_back({std::to_string(n), str(s.count())});
    r.text << table({"norm", "count"}, rows);
}

void isometryAnalyze(const Config& c, Report& r)
{
    const Isometry g = requireIsometry(c);
    const std::uint64_t n = g.order();
    const Sublattice fixed = fixedSublattice(g);
    const Sublattice coinv = coinvariantSublattice(g);
    const bool cfpf = n > 1 && isCompletelyFixedPointFree(g);
    Json j;
    j["lattice"] = g.lattice().name();
    j["claimed_class"] = g.claimedClass();
    j["order"] = n;
    j["profile"] = toJson(g.profile());
    j["trace"] = toJson(g.trace());
    j["fixed_rank"] = fixed.lattice.rank();
    j["coinvariant_rank"] = coinv.lattice.rank();
    j["fixed_point_free"] = isFixedPointFree(g);
    j["cfpf"] = cfpf;
    j["eigenspace_dims"] = eigenspaceDims(g);
    Json powers = Json::array();
    std::vector<std::vector<std::string>> rows;
    for (std::uint64_t s = 1; s < n; ++s) {
        const ConformalWeight eps = epsilonOf(g, s);
        const TwistedTopDim t = twistedTopDim(g, static_cast<std::int64_t>(s));
        powers.push_back({{"s", s}, {"eps", toJson(eps)}, {"twisted_top", toJson(t)}});
        rows.push_back({str(s), str(eps.m), eps.toString(), t.dim ? toString(*t.dim) : "undefined"});
    }
    j["powers"] = powers;
    r.data = j;
    r.text << "order: " << n << '\n'
           << "profile: " << g.profile().toString() << '\n'
           << "trace: " << g.trace() << '\n'
           << "fixed rank: " << fixed.lattice.rank() << '\n'
           << "coinvariant rank: " << coinv.lattice.rank() << '\n'
           << "completely fixed-point free: " << yes(cfpf) << '\n';
    if (!g.claimedClass().empty())
        r.text << "claimed class: " << g.claimedClass() << '\n';
    if (!rows.empty())
        r.text << table({"s", "m", "eps", "twisted top dim"}, rows);
}

void classifyVerdict(const Config& c, Report& r)
{
    const Isometry g = requireIsometry(c);
    const Verdict v = admissibilityVerdict(g);
    r.data = toJson(v);
    r.text << "verdict: " << toString(v.summary) << '\n'
           << "rootless: " << yes(v.rootless) << '\n'
           << "completely fixed-point free: " << yes(v.cfpf) << '\n'
           << "order: " << v.order << ", rank: " << v.rank << ", det: " << v.determinant << '\n';
    if (!v.caseII.empty()) {
        std::vector<std::vector<std::string>> rows;
        for (const auto& e : v.caseII)
            rows.push_back({str(e.s), str(e.m), e.eps.toString(), e.subcase ? std::to_string(e.subcase) : "-",
                            yes(e.admissible), e.family.empty() ? "-" : e.family});
        r.text << table({"s", "m", "eps", "subcase", "admissible", "family"}, rows);
    }
    r.text << "reasons:\n";
    for (const auto& x : v.reasons)
        r.text << "  " << x.constraint << ": " << x.text << '\n';
    for (const auto& x : v.notes)
        r.text << "note: " << x << '\n';
    // the pair violates a standing assumption of the classification
    if (!v.rootless || !v.cfpf)
        r.exitCode = 2;
}

void classifyCase1(const Config& c, Report& r)
{
    const auto list = case1NonPrimePowerSearch(c.bound);
    const auto pp = case1PrimePowerSearch(c.primePowerBound);
    Json ppj = Json::array();
    std::vector<std::vector<std::string>> rows;
    for (const auto& x : pp) {
        ppj.push_back(toJson(x));
        rows.push_back({str(x.m), str(x.p), str(x.r), yes(x.survives), x.ell ? str(*x.ell) : "-",
                        x.note.empty() ? "-" : x.note});
    }
    r.data = {{"bound", c.bound}, {"non_prime_power", list}, {"prime_power_bound", c.primePowerBound},
              {"prime_power", ppj}};
    std::vector<std::string> ms;
    for (const auto m : list)
        ms.push_back(str(m));
    r.text << "m not a prime power, m <= " << c.bound << ": " << joined(ms, ", ") << '\n'
           << "prime powers m <= " << c.primePowerBound << ":\n"
           << table({"m", "p", "r", "survives", "ell", "note"}, rows);
}

void classifyCase2(const Config& c, Report& r)
{
    const auto list = case2Search(c.bound);
    Json j = Json::array();
    std::vector<std::vector<std::string>> rows;
    for (const auto& e : list) {
        j.push_back(toJson(e));
        rows.push_back({str(e.m), str(e.ell), yes(e.totientDivides)});
    }
    r.data = {{"bound", c.bound}, {"entries", j}};
    r.text << table({"m", "ell", "phi(m) | ell"}, rows);
}

void classifyCaseI(const Config& c, Report& r)
{
    Json j = Json::array();
    std::vector<std::vector<std::string>> rows;
    for (std::uint64_t n = 2; n <= c.bound; ++n) {
        if (!asPrimePower(n))
            continue;
        const CaseIReport x = caseIFeasible(n);
        j.push_back(toJson(x));
        rows.push_back({str(n), str(x.p), str(x.t), yes(x.feasible), x.witness ? str(*x.witness) : "-"});
    }
    r.data = {{"bound", c.bound}, {"entries", j}};
    r.text << table({"n", "p", "t", "feasible", "witness r"}, rows);
}

Word parseWord(const std::string& text)
{
    Word w;
    std::string cur;
    for (const char ch : text + ",") {
        if (ch == ',' || ch == ' ') {
            if (!cur.empty())
                w.push_back(std::stoull(cur));
            cur.clear();
        } else {
            require(std::isdigit(static_cast<unsigned char>(ch)) != 0, "--e must be a comma separated list of digits");
            cur += ch;
        }
    }
    return w;
}

void constructA(const Config& c, Report& r)
{
    require(!c.code.empty(), "--code is required");
    const GlueLattice a = constructionA(loadCode(c.code));
    r.text << "code: " << a.code.name() << " [" << a.code.length() << ", " << a.code.dimension() << "] over Z"
           << a.code.p() << '\n'
           << "index over root lattice: " << a.index << '\n';
    Json j = latticeSummary(a.lattice, r);
    j["code"] = toJson(a.code);
    j["index_over_root_lattice"] = toJson(a.index);
    r.data = j;
    writeOutput(c, toJson(a.lattice));
}

void constructB(const Config& c, Report& r)
{
    require(!c.code.empty(), "--code is required");
    const GlueLattice a = constructionA(loadCode(c.code));
    const Word e = c.e.empty() ? Word(a.code.length(), 1) : parseWord(c.e);
    const ConstructionBResult b = constructionB(a, e);
    const GramLattice& l = b.sublattice.lattice;
    const auto shells = shortVectorsCached(l, 4);
    const auto it = shells->find(4);
    const std::size_t four = it == shells->end() ? 0 : it->second.count();
    r.text << "code: " << a.code.name() << '\n' << "index in A(C): " << b.sublattice.index << '\n';
    Json j = latticeSummary(l, r);
    r.text << "norm 4 vectors: " << four << '\n';
    j["code"] = toJson(a.code);
    j["e"] = e;
    j["index_in_construction_a"] = toJson(b.sublattice.index);
    j["norm4"] = four;
    r.data = j;
    writeOutput(c, toJson(l));
}

void leechCheck(const Config& c, Report& r)
{
    const GramLattice l = leechFromGolay();
    Json j = latticeSummary(l, r);
    if (!c.skipNormFour) {
        const auto shells = shortVectorsCached(l, 4);
        const auto it = shells->find(4);
        const std::size_t four = it == shells->end() ? 0 : it->second.count();
        j["norm4"] = four;
        r.text << "norm 4 vectors: " << four << '\n';
    }
    r.data = j;
    writeOutput(c, toJson(l));
}

void tableTraces(const Config& c, Report& r)
{
    SearchOptions o;
    o.seed = c.seed;
    o.budget = c.budget;
    const auto rows = traceTable(o, c.centralizers);
    Json j = Json::array();
    std::vector<std::vector<std::string>> text;
    for (const auto& row : rows) {
        j.push_back(toJson(row));
        std::vector<std::string> t{row.target.label(), row.representative ? str(row.representative->order()) : "-",
                                   row.trace ? toString(row.trace->dimension) : "-",
                                   row.trace ? toString(row.trace->trace) : "not found"};
        if (c.centralizers) {
            t.push_back(row.centralizer ? toString(row.centralizer->onPairs) : "-");
            t.push_back(row.centralizer ? toString(row.centralizer->onVectors) : "-");
        }
        text.push_back(t);
    }
    std::vector<std::string> header{"class", "order", "dim", "trace"};
    if (c.centralizers) {
        header.push_back("|C| mod +-1");
        header.push_back("|C| in W(E8)");
    }
    r.data = {{"lattice", "sqrt2E8"}, {"rows", j}};
    r.text << table(header, text);
    for (const auto& row : rows)
        if (!row.representative)
            r.exitCode = 1;
}

std::int64_t shellNorm(const Config& c, const GramLattice& l)
{
    if (c.norm > 0)
        return c.norm;
    const auto shells = shortVectorsCached(l, 4);
    require(!shells->empty(), "no vectors of norm <= 4; pass --norm");
    return shells->begin()->first;
}

void groupOrder(const Config& c, Report& r)
{
    const GramLattice l = requireLattice(c);
    const std::int64_t norm = shellNorm(c, l);
    const ShellAction a = shellAction(l, norm, simpleReflections(l));
    const Int order = orbilat::groupOrder(a);
    r.data = {{"lattice", l.name()}, {"norm", norm}, {"degree", a.vectors.size()}, {"order", toJson(order)}};
    r.text << "group generated by simple reflections, acting on " << a.vectors.size() << " vectors of norm "
           << norm << '\n'
           << "order: " << order << '\n';
}

void groupCentralizer(const Config& c, Report& r)
{
    const Isometry g = requireIsometry(c);
    const std::int64_t norm = shellNorm(c, g.lattice());
    const ShellAction a = shellAction(g.lattice(), norm, simpleReflections(g.lattice()));
    const CentralizerOrders co = centralizerOrders(a, g);
    r.data = {{"lattice", g.lattice().name()}, {"norm", norm}, {"order", g.order()}, {"centralizer", toJson(co)}};
    r.text << "order of g: " << g.order() << '\n'
           << "centralizer in the reflection group: " << co.onVectors << '\n'
           << "centralizer modulo +-1: " << co.onPairs << '\n';
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    Config c;
    CLI::App app{"Lattice, isometry and orbifold computations for holomorphic VOAs of central charge 24"};
    app.name("orbilat");
    app.require_subcommand(1);
    app.fallthrough();
    app.add_option("--format", c.format, "Output format")->check(CLI::IsMember({"text", "json"}))->capture_default_str();
    app.add_option("--seed", c.seed, "Seed for randomized searches")->capture_default_str();

    std::function<void(const Config&, Report&)> handler;
    std::string command;
    auto leaf = [&](CLI::App* parent, const std::string& name, const std::string& help,
                    std::function<void(const Config&, Report&)> fn) {
        CLI::App* sub = parent->add_subcommand(name, help);
        sub->callback([&, fn, sub, parent] {
            handler = fn;
            command = parent->get_name() + " " + sub->get_name();
        });
        return sub;
    };
    auto latticeOpt = [&](CLI::App* s) {
        s->add_option("--lattice,--name", c.lattice, "Lattice JSON file or bundled name (E8, sqrt2E8, Leech, A2, ...)");
    };
    auto isometryOpt = [&](CLI::App* s) {
        latticeOpt(s);
        s->add_option("--isometry", c.isometry, "Isometry JSON file")->required();
    };

    CLI::App* lattice = app.add_subcommand("lattice", "Lattice invariants")->require_subcommand(1);
    latticeOpt(leaf(lattice, "info", "Rank, determinant, roots, discriminant group", latticeInfo));
    CLI::App* shells = leaf(lattice, "shells", "Vector counts by norm", latticeShells);
    latticeOpt(shells);
    shells->add_option("--max-norm", c.maxNorm, "Largest norm to enumerate")->capture_default_str();

    CLI::App* isometry = app.add_subcommand("isometry", "Isometry invariants")->require_subcommand(1);
    isometryOpt(leaf(isometry, "analyze", "Order, profile, conformal weights, twisted sectors", isometryAnalyze));

    CLI::App* classify = app.add_subcommand("classify", "Necessary conditions for extra automorphisms")
                             ->require_subcommand(1);
    isometryOpt(leaf(classify, "verdict", "Verdict for a pair (L, g)", classifyVerdict));
    CLI::App* c1 = leaf(classify, "case1", "eps = 1 - 1/m: non-prime-power and prime-power searches", classifyCase1);
    c1->add_option("--bound", c.bound, "Bound on m")->capture_default_str();
    c1->add_option("--prime-power-bound", c.primePowerBound, "Bound on prime powers")->capture_default_str();
    leaf(classify, "case2", "eps = 1 search", classifyCase2)
        ->add_option("--bound", c.bound, "Bound on m")
        ->capture_default_str();
    leaf(classify, "casei", "Fusion-order feasibility for prime powers", classifyCaseI)
        ->add_option("--bound", c.bound, "Bound on n")
        ->capture_default_str();

    CLI::App* construct = app.add_subcommand("construct", "Lattices from codes")->require_subcommand(1);
    CLI::App* ca = leaf(construct, "a", "Construction A", constructA);
    ca->add_option("--code", c.code, "Code JSON file or bundled name")->required();
    ca->add_option("--output", c.output, "Write the lattice JSON here");
    CLI::App* cb = leaf(construct, "b", "Construction B", constructB);
    cb->add_option("--code", c.code, "Code JSON file or bundled name")->required();
    cb->add_option("--e", c.e, "Vector e in the dual code, comma separated (default all ones)");
    cb->add_option("--output", c.output, "Write the lattice JSON here");

    CLI::App* leech = app.add_subcommand("leech", "Leech lattice from the Golay code")->require_subcommand(1);
    CLI::App* lc = leaf(leech, "check", "Determinant, roots and norm 4 count", leechCheck);
    lc->add_flag("--skip-norm4", c.skipNormFour, "Skip the 196560 vector enumeration");
    lc->add_option("--output", c.output, "Write the lattice JSON here");

    CLI::App* tbl = app.add_subcommand("table", "Tables for sqrt2 E8")->require_subcommand(1);
    CLI::App* tt = leaf(tbl, "traces", "Traces on the weight-two space of V^+", tableTraces);
    tt->add_flag("--centralizers", c.centralizers, "Also compute centralizer orders in W(E8)");
    tt->add_option("--budget", c.budget, "Search budget per class")->capture_default_str();

    CLI::App* group = app.add_subcommand("group", "Reflection groups on a shell")->require_subcommand(1);
    CLI::App* go = leaf(group, "order", "Order of the group generated by simple reflections", groupOrder);
    latticeOpt(go);
    go->add_option("--norm", c.norm, "Shell to act on (default: minimal norm)");
    CLI::App* gc = leaf(group, "centralizer", "Centralizer order of an isometry", groupCentralizer);
    isometryOpt(gc);
    gc->add_option("--norm", c.norm, "Shell to act on (default: minimal norm)");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp& e) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n' << "run with --help for usage\n";
        return kUsage;
    }
    if (!handler) {
        err << "error: no command given\nrun with --help for usage\n";
        return kUsage;
    }

    Report r;
    try {
        handler(c, r);
    } catch (const PreconditionError& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const InconsistencyError& e) {
        err << "inconsistency: " << e.what() << '\n';
        return 1;
    }
    if (c.format == "json") {
        Json j;
        j["command"] = command;
        j["seed"] = c.seed;
        j["exit_code"] = r.exitCode;
        j["result"] = r.data;
        out << j.dump(2) << '\n';
    } else {
        out << r.text.str() << "seed: " << c.seed << '\n';
    }
    return r.exitCode;
}

} // namespace orbilat::cli
