#include "orbilat/classify.hpp"

#include "orbilat/errors.hpp"
#include "orbilat/number_theory.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace orbilat {

namespace {

Int u(std::uint64_t v) { return Int(static_cast<unsigned long>(v)); }

std::uint64_t radical(std::uint64_t m)
{
    std::uint64_t r = 1;
    for (const auto q : primeDivisors(m))
        r *= q;
    return r;
}

std::string str(std::uint64_t v) { return std::to_string(v); }

Int power(std::uint64_t b, unsigned e)
{
    Int r;
    mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(b), e);
    return r;
}

} // namespace

std::uint64_t fusionOrder(std::uint64_t n, std::uint64_t p, std::uint64_t r)
{
    require(p >= 1 && n >= 1 && n % p == 0, "fusionOrder: p must divide n");
    for (std::uint64_t s = 1; s <= p * n; ++s)
        if (s % p == 0 && (s * (r % n)) % n == 0)
            return s;
    ensure(false, "fusionOrder: no s <= p n found");
    return 0;
}

bool FusionClosure::cyclic() const
{
    for (const auto& [e, ord] : elementOrders)
        if (ord == order())
            return true;
    return false;
}

FusionClosure fusionLabelClosure(const std::vector<FusionLabel>& labels, std::uint64_t p, std::uint64_t n)
{
    require(p >= 1 && n >= 1, "fusionLabelClosure: p and n must be positive");
    FusionClosure c;
    c.p = p;
    c.n = n;
    std::set<FusionLabel> seen{FusionLabel{0, 0}};
    std::deque<FusionLabel> queue{FusionLabel{0, 0}};
    while (!queue.empty()) {
        const FusionLabel a = queue.front();
        queue.pop_front();
        for (const auto& g : labels) {
            const FusionLabel b{(a.j + g.j) % p, (a.s + g.s) % n};
            if (seen.insert(b).second)
                queue.push_back(b);
        }
    }
    c.elements.assign(seen.begin(), seen.end());
    for (const auto& e : c.elements) {
        const std::uint64_t oj = p / gcd(p, e.j == 0 ? p : e.j);
        const std::uint64_t os = n / gcd(n, e.s == 0 ? n : e.s);
        c.elementOrders[e] = lcm(oj, os);
    }
    return c;
}

CaseIReport caseIFeasible(std::uint64_t n)
{
    const auto pp = asPrimePower(n);
    require(n >= 2 && pp.has_value(), "caseIFeasible: " + str(n) + " is not a prime power");
    CaseIReport r;
    r.n = n;
    r.p = pp->prime;
    r.t = pp->exponent;
    r.m = n / r.p;
    for (std::uint64_t x = 0; x < n; ++x)
        if (gcd(r.m, x) == 1 && x % r.p == 0) {
            r.feasible = true;
            r.witness = x;
            break;
        }
    r.forcedPrime = r.feasible == (r.t == 1);
    return r;
}

std::vector<std::uint64_t> case1NonPrimePowerSearch(std::uint64_t bound)
{
    std::vector<std::uint64_t> out;
    for (std::uint64_t m = 2; m <= bound; ++m) {
        if (asPrimePower(m) || !isSquarefree(m))
            continue;
        const auto primes = primeDivisors(m);
        if (primes.size() % 2 != 0 || 24 % eulerPhi(m) != 0)
            continue;
        Rational lhs = makeRational(u(radical(m)), u(m) * u(m));
        lhs = primes.size() % 2 == 0 ? Rational(1 - lhs) : Rational(1 + lhs);
        if (lhs == Rational(1 - makeRational(Int(1), u(m))))
            out.push_back(m);
    }
    return out;
}

std::vector<PrimePowerCandidate> case1PrimePowerSearch(std::uint64_t bound)
{
    std::vector<PrimePowerCandidate> out;
    for (std::uint64_t m = 2; m <= bound; ++m) {
        const auto pp = asPrimePower(m);
        if (!pp)
            continue;
        PrimePowerCandidate c;
        c.m = m;
        c.p = pp->prime;
        c.r = pp->exponent;
        const Int denom = power(c.p, static_cast<unsigned>(2 * c.r - 1)) + 1;
        const Int pr = power(c.p, static_cast<unsigned>(c.r));
        const Int num = 24 * (pr - 1) * power(c.p, static_cast<unsigned>(c.r - 1));
        c.survives = (24 * (pr - 1)) % denom == 0;
        if (num % denom == 0)
            c.ell = toInt64(Int(num / denom));
        if (m == 4) {
            c.excludedByCitation = true;
            c.note = "excluded by CL21";
        }
        out.push_back(c);
    }
    return out;
}

std::vector<Case2Entry> case2Search(std::uint64_t bound)
{
    std::vector<Case2Entry> out;
    for (std::uint64_t m = 2; m <= bound; ++m) {
        const auto primes = primeDivisors(m);
        const Int a = u(m) * u(m) / u(radical(m));
        const Int d = primes.size() % 2 == 1 ? Int(a + 1) : Int(a - 1);
        if (d == 0 || 24 % d != 0 || (24 * a) % d != 0)
            continue;
        const Int ell = 24 * a / d;
        if (ell >= 24)
            continue;
        out.push_back({m, static_cast<std::uint64_t>(toInt64(ell)), ell % u(eulerPhi(m)) == 0});
    }
    return out;
}

std::string toString(VerdictSummary s)
{
    switch (s) {
    case VerdictSummary::NoExtraPossible:
        return "no-extra-possible";
    case VerdictSummary::LeechFamily:
        return "leech-family";
    case VerdictSummary::CoinvariantFamily:
        return "coinvariant-family";
    case VerdictSummary::PrimeOrderFamily:
        return "prime-order-family";
    }
    return "unknown";
}

Verdict admissibilityVerdict(const Isometry& g)
{
    Verdict v;
    const GramLattice& l = g.lattice();
    v.order = g.order();
    v.rank = g.rank();
    v.determinant = l.determinant();
    const std::uint64_t n = v.order;

    if (v.rank > 0) {
        const auto sh = shortVectorsCached(l, 2);
        const auto it = sh->find(2);
        v.rootless = it == sh->end() || it->second.count() == 0;
    } else {
        v.rootless = true;
    }
    v.cfpf = n > 1 && isCompletelyFixedPointFree(g);
    if (!v.rootless)
        v.reasons.push_back({"rootless", {}, "L(2) nonempty"});
    if (!v.cfpf)
        v.reasons.push_back({"completely-fixed-point-free",
                             {{"order", str(n)}, {"profile", g.profile().toString()}},
                             n == 1 ? "g is the identity" : "g is not completely fixed-point free"});
    if (!v.rootless || !v.cfpf)
        return v;

    const std::size_t ell = v.rank;
    bool prime = false, leech = false, coinv = false;

    if (asPrimePower(n)) {
        v.caseI = caseIFeasible(n);
        prime = v.caseI->feasible && v.caseI->t == 1;
        v.reasons.push_back({"case-I", {{"n", str(n)}, {"feasible", v.caseI->feasible ? "true" : "false"}},
                             v.caseI->feasible ? "fusion constraints admit r = 0 mod p with gcd(n/p, r) = 1"
                                               : "no r with r = 0 mod p and gcd(n/p, r) = 1"});
    } else {
        v.reasons.push_back({"case-I", {{"n", str(n)}}, "n is not a prime power"});
    }

    const auto nonPP = case1NonPrimePowerSearch(std::max<std::uint64_t>(n, 2));
    const auto pp = case1PrimePowerSearch(std::max<std::uint64_t>(n, 2));
    const auto c2 = case2Search(std::max<std::uint64_t>(n, 2));
    for (std::uint64_t s = 1; s < n; ++s) {
        CaseIIEntry e;
        e.s = s;
        e.m = n / gcd(n, s);
        e.eps = epsilonOf(g, s);
        ensure(e.eps.value == epsilonCFPF(ell, n, s).value, "conformal weight closed form disagrees with eigenspace sum");
        const Rational oneMinus = 1 - makeRational(Int(1), u(e.m));
        std::map<std::string, std::string> vals{{"s", str(s)}, {"m", str(e.m)}, {"eps", e.eps.toString()}};
        if (e.eps.value == oneMinus) {
            e.subcase = 1;
            if (!asPrimePower(e.m)) {
                const bool listed = std::find(nonPP.begin(), nonPP.end(), e.m) != nonPP.end();
                const bool unimodular = v.determinant == 1;
                e.admissible = listed && unimodular;
                vals["unimodular"] = unimodular ? "true" : "false";
                if (e.admissible)
                    e.family = "leech-family";
                v.reasons.push_back({"case-II-1", vals,
                                     e.admissible ? "eps = 1 - 1/m with m not a prime power and L unimodular"
                                                  : "eps = 1 - 1/m but m is not admissible or L is not unimodular"});
            } else {
                const auto it = std::find_if(pp.begin(), pp.end(), [&](const auto& c) { return c.m == e.m; });
                const bool ok = it != pp.end() && it->survives && it->ell && *it->ell == ell;
                e.admissible = ok && !it->excludedByCitation;
                if (e.admissible)
                    e.family = "coinvariant-family";
                vals["divisibility"] = ok ? "true" : "false";
                v.reasons.push_back({"case-II-1", vals,
                                     ok && it->excludedByCitation ? "m = 4 excluded by CL21"
                                     : e.admissible ? "eps = 1 - 1/m with prime-power m passing the divisibility test"
                                                    : "prime-power m fails the divisibility test"});
            }
        } else if (e.eps.value == 1) {
            e.subcase = 2;
            const auto it = std::find(c2.begin(), c2.end(), Case2Entry{e.m, ell});
            e.admissible = it != c2.end() && it->totientDivides;
            if (e.admissible)
                e.family = "coinvariant-family";
            vals["ell"] = str(ell);
            v.reasons.push_back({"case-II-2", vals,
                                 e.admissible ? "eps = 1 with (m, ell) in the admissible list"
                                              : "eps = 1 but (m, ell) is not admissible"});
        }
        leech = leech || e.family == "leech-family";
        coinv = coinv || e.family == "coinvariant-family";
        v.caseII.push_back(std::move(e));
    }

    if (leech) {
        v.summary = VerdictSummary::LeechFamily;
        v.notes.push_back("a candidate sigma would have V(1) o sigma^2 in the orbit of simple currents (index 2)");
    } else if (coinv) {
        v.summary = VerdictSummary::CoinvariantFamily;
        v.notes.push_back("automorphism group structure (normalizer quotient) is not computed");
    } else if (prime) {
        v.summary = VerdictSummary::PrimeOrderFamily;
    }
    return v;
}

} // namespace orbilat
