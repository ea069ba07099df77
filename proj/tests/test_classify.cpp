#include "doctest.h"

#include "orbilat/classify.hpp"
#include "orbilat/codes.hpp"
#include "orbilat/number_theory.hpp"
#include "orbilat/search.hpp"
#include "test_support.hpp"

#include <random>
#include <set>

using namespace orbilat;
using namespace orbilat::testing;

namespace {

Isometry searched(const GramLattice& l, const std::string& profile, std::uint64_t seed = 271828)
{
    IsometryConstraints c;
    c.profile = parseProfile(profile);
    SearchOptions o;
    o.seed = seed;
    const auto r = findIsometryWithProfile(l, simpleReflections(l), c, o);
    REQUIRE(r.found());
    return *r.isometry;
}

Isometry changeBasisOf(const Isometry& g, const IntMatrix& u)
{
    const IntMatrix uInv = toIntegral(inverse(u), "inverse of a unimodular matrix");
    return Isometry(changeBasis(g.lattice(), u), uInv * g.matrix() * u);
}

bool sameVerdict(const Verdict& a, const Verdict& b)
{
    if (a.summary != b.summary || a.rootless != b.rootless || a.cfpf != b.cfpf || a.order != b.order
        || a.caseII.size() != b.caseII.size())
        return false;
    for (std::size_t i = 0; i < a.caseII.size(); ++i)
        if (a.caseII[i].eps.value != b.caseII[i].eps.value || a.caseII[i].admissible != b.caseII[i].admissible
            || a.caseII[i].family != b.caseII[i].family)
            return false;
    return true;
}

} // namespace

TEST_CASE("fusion orders")
{
    CHECK(fusionOrder(9, 3, 3) == 3);
    CHECK(fusionOrder(8, 2, 1) == 8);
    CHECK(fusionOrder(6, 2, 0) == 2);
    CHECK(fusionOrder(6, 3, 2) == 3);
    CHECK_THROWS_AS(fusionOrder(6, 4, 1), PreconditionError);
}

TEST_CASE("property: fusion order is lcm(p, n / gcd(n, r))")
{
    std::mt19937_64 rng(31);
    for (int iter = 0; iter < 80; ++iter) {
        const std::uint64_t n = 1 + rng() % 60;
        std::vector<std::uint64_t> divisors;
        for (std::uint64_t d = 1; d <= n; ++d)
            if (n % d == 0)
                divisors.push_back(d);
        const std::uint64_t p = divisors[rng() % divisors.size()];
        const std::uint64_t r = rng() % (2 * n);
        const std::uint64_t rr = r % n;
        CHECK(fusionOrder(n, p, r) == lcm(p, n / gcd(n, rr == 0 ? n : rr)));
    }
}

TEST_CASE("fusion label closure")
{
    const auto c = fusionLabelClosure({{1, 3}}, 3, 9);
    CHECK(c.order() == 3);
    CHECK(c.cyclic());
    const auto full = fusionLabelClosure({{1, 0}, {0, 1}}, 2, 2);
    CHECK(full.order() == 4);
    CHECK_FALSE(full.cyclic());
    const auto z8 = fusionLabelClosure({{1, 1}}, 2, 8);
    CHECK(z8.order() == 8);
    CHECK(z8.cyclic());
    CHECK(fusionLabelClosure({}, 5, 5).order() == 1);
}

TEST_CASE("property: closure is a subgroup containing the generators")
{
    std::mt19937_64 rng(57);
    for (int iter = 0; iter < 60; ++iter) {
        const std::uint64_t p = 1 + rng() % 6;
        const std::uint64_t n = p * (1 + rng() % 5);
        std::vector<FusionLabel> gens;
        const std::size_t k = rng() % 3;
        for (std::size_t i = 0; i < k; ++i)
            gens.push_back({rng() % p, rng() % n});
        const auto c = fusionLabelClosure(gens, p, n);
        const std::set<FusionLabel> elems(c.elements.begin(), c.elements.end());
        CHECK((p * n) % c.order() == 0);
        for (const auto& g : gens)
            CHECK(elems.count(g) == 1);
        for (const auto& a : c.elements) {
            for (const auto& b : c.elements)
                CHECK(elems.count({(a.j + b.j) % p, (a.s + b.s) % n}) == 1);
            CHECK(c.order() % c.elementOrders.at(a) == 0);
        }
    }
}

TEST_CASE("case I feasibility")
{
    const auto five = caseIFeasible(5);
    CHECK(five.feasible);
    CHECK(five.t == 1);
    REQUIRE(five.witness.has_value());
    CHECK(*five.witness % 5 == 0);
    const auto nine = caseIFeasible(9);
    CHECK_FALSE(nine.feasible);
    CHECK(nine.m == 3);
    CHECK(nine.forcedPrime);
    CHECK_THROWS_AS(caseIFeasible(6), PreconditionError);
    CHECK_THROWS_AS(caseIFeasible(1), PreconditionError);

    for (std::uint64_t n = 2; n <= 128; ++n) {
        const auto pp = asPrimePower(n);
        if (!pp)
            continue;
        const auto r = caseIFeasible(n);
        CHECK(r.feasible == (pp->exponent == 1));
        CHECK(r.forcedPrime);
    }
}

TEST_CASE("case II-1 search lists")
{
    // independent enumeration: squarefree, two or four primes, phi | 24
    std::vector<std::uint64_t> oracle;
    for (std::uint64_t m = 2; m <= 200; ++m) {
        std::uint64_t x = m, primes = 0;
        bool sqfree = true;
        for (std::uint64_t q = 2; q * q <= x; ++q)
            if (x % q == 0) {
                x /= q;
                ++primes;
                if (x % q == 0)
                    sqfree = false;
                while (x % q == 0)
                    x /= q;
            }
        if (x > 1)
            ++primes;
        if (sqfree && primes >= 2 && primes % 2 == 0 && 24 % eulerPhi(m) == 0)
            oracle.push_back(m);
    }
    CHECK(case1NonPrimePowerSearch(200) == oracle);
    CHECK(case1NonPrimePowerSearch(60) == std::vector<std::uint64_t>{6, 10, 14, 15, 21, 26, 35, 39});

    std::vector<std::uint64_t> survivors;
    for (const auto& c : case1PrimePowerSearch(128)) {
        const Int lhs = Int(24) * (Int(static_cast<unsigned long>(c.m)) - 1);
        Int d(1);
        for (std::uint64_t i = 0; i + 1 < 2 * c.r; ++i)
            d *= Int(static_cast<unsigned long>(c.p));
        CHECK(c.survives == (lhs % (d + 1) == 0));
        if (c.survives)
            survivors.push_back(c.m);
    }
    CHECK(survivors == std::vector<std::uint64_t>{2, 3, 4, 5, 7, 11, 23, 47});

    const auto list = case1PrimePowerSearch(9);
    const auto at = [&](std::uint64_t m) {
        for (const auto& c : list)
            if (c.m == m)
                return c;
        FAIL("missing m");
        return PrimePowerCandidate{};
    };
    CHECK_FALSE(at(9).survives);
    CHECK(at(2).ell == std::optional<std::uint64_t>(8));
    CHECK(at(3).ell == std::optional<std::uint64_t>(12));
    CHECK(at(4).excludedByCitation);
    CHECK_FALSE(at(8).survives);
}

TEST_CASE("case II-2 list")
{
    const auto c2 = case2Search(200);
    const std::vector<Case2Entry> expected{{2, 16}, {3, 18}, {5, 20}, {7, 21}, {11, 22}, {23, 23}};
    CHECK(c2 == expected);
    for (const auto& e : c2) {
        CHECK(e.totientDivides == (e.ell % eulerPhi(e.m) == 0));
        if (e.totientDivides)
            CHECK(epsilonCFPF(e.ell, e.m, 1).value == 1);
        // direct: eps = (ell / 24)(1 + 1/m) for prime m
        CHECK(makeRational(Int(static_cast<unsigned long>(e.ell * (e.m + 1))), Int(static_cast<unsigned long>(24 * e.m))) == 1);
    }
    CHECK(c2[3].totientDivides == false);
    CHECK(case2Search(1000) == expected);
}

TEST_CASE("verdicts")
{
    const GramLattice s8 = namedLattice("sqrt2E8");
    const Verdict minus = admissibilityVerdict(Isometry::negation(s8));
    CHECK(minus.rootless);
    CHECK(minus.cfpf);
    CHECK((minus.summary == VerdictSummary::CoinvariantFamily));
    REQUIRE(minus.caseII.size() == 1);
    CHECK(minus.caseII[0].subcase == 1);

    const GramLattice a2 = namedLattice("A2");
    const Verdict cox = admissibilityVerdict(Isometry(a2, coxeterA2()));
    CHECK_FALSE(cox.rootless);
    CHECK((cox.summary == VerdictSummary::NoExtraPossible));
    REQUIRE_FALSE(cox.reasons.empty());
    CHECK(cox.reasons[0].constraint == "rootless");

    const Verdict id = admissibilityVerdict(Isometry::identity(s8));
    CHECK_FALSE(id.cfpf);
    CHECK((id.summary == VerdictSummary::NoExtraPossible));

    const Verdict three = admissibilityVerdict(searched(s8, "Phi3^4"));
    CHECK((three.summary == VerdictSummary::PrimeOrderFamily));
    const Verdict six = admissibilityVerdict(searched(s8, "Phi6^4"));
    CHECK((six.summary == VerdictSummary::CoinvariantFamily));
    CHECK(toString(six.summary) == "coinvariant-family");
}

TEST_CASE("Leech lattice with a fixed-point free element of order six")
{
    const auto lw = leechWithOrderThree();
    const Isometry g = Isometry::negation(lw.lattice).after(lw.isometry);
    CHECK(g.order() == 6);
    const Verdict v = admissibilityVerdict(g);
    CHECK(v.rootless);
    CHECK(v.cfpf);
    CHECK(v.determinant == 1);
    CHECK((v.summary == VerdictSummary::LeechFamily));
    // per-s: exactly the generators of <g> are admissible through case II-1
    for (const auto& e : v.caseII) {
        CAPTURE(e.s);
        const bool coprime = gcd(6, e.s) == 1;
        CHECK(e.eps.value == epsilonCFPF(24, 6, e.s).value);
        CHECK(e.admissible == coprime);
        if (coprime)
            CHECK(e.family == "leech-family");
    }
}

TEST_CASE("property: verdict does not depend on the basis")
{
    std::mt19937_64 rng(99);
    const GramLattice s8 = namedLattice("sqrt2E8");
    const GramLattice a2 = namedLattice("A2");
    const std::vector<Isometry> base{Isometry::negation(s8), searched(s8, "Phi6^4"), searched(s8, "Phi3^4"),
                                     Isometry(a2, coxeterA2()), searched(s8, "Phi4^4")};
    std::vector<Verdict> ref;
    for (const auto& g : base)
        ref.push_back(admissibilityVerdict(g));
    for (int iter = 0; iter < 50; ++iter) {
        const std::size_t k = rng() % base.size();
        const IntMatrix u = randomUnimodular(rng, base[k].rank(), 6);
        CHECK(sameVerdict(ref[k], admissibilityVerdict(changeBasisOf(base[k], u))));
    }
}
