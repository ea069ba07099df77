#include "doctest.h"

#include "orbilat/codes.hpp"
#include "orbilat/isometry.hpp"
#include "orbilat/number_theory.hpp"
#include "orbilat/perm_group.hpp"
#include "test_support.hpp"

#include <random>
#include <set>

using namespace orbilat;
using namespace orbilat::testing;

namespace {

IntMatrix blockSum(const IntMatrix& a, const IntMatrix& b)
{
    IntMatrix m(a.rows() + b.rows(), a.cols() + b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            m(i, j) = a(i, j);
    for (std::size_t i = 0; i < b.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j)
            m(a.rows() + i, a.cols() + j) = b(i, j);
    return m;
}

IntMatrix coxeterElement(const GramLattice& l)
{
    IntMatrix c = IntMatrix::identity(l.rank());
    for (const auto& r : simpleReflections(l))
        c = c * r;
    return c;
}

/// Random isometry: a random Weyl group element of a random root lattice sum, seen in a random basis.
Isometry randomIsometry(std::mt19937_64& rng)
{
    static const char* names[] = {"A1", "A2", "A3", "A4", "D4", "D5", "E6"};
    IntMatrix gram(0, 0), g(0, 0);
    const int parts = 1 + static_cast<int>(rng() % 2);
    for (int p = 0; p < parts; ++p) {
        const GramLattice l = namedLattice(names[rng() % 7]);
        const auto refl = simpleReflections(l);
        IntMatrix w = IntMatrix::identity(l.rank());
        const int len = static_cast<int>(rng() % 12);
        for (int k = 0; k < len; ++k)
            w = w * refl[rng() % refl.size()];
        if (rng() % 4 == 0)
            w = -w;
        gram = blockSum(gram, l.gram());
        g = blockSum(g, w);
    }
    const IntMatrix u = randomUnimodular(rng, gram.rows(), 6);
    const IntMatrix ui = toIntegral(inverse(u));
    return Isometry(GramLattice(u.transpose() * gram * u), ui * g * u);
}

} // namespace

TEST_CASE("isometry validation")
{
    const GramLattice a2(gramA2());
    CHECK_NOTHROW(Isometry(a2, coxeterA2()));
    CHECK_THROWS_AS(Isometry(a2, IntMatrix{{1, 1}, {0, 1}}), PreconditionError);
    CHECK_THROWS_AS(Isometry(a2, IntMatrix::identity(3)), PreconditionError);
}

TEST_CASE("isometry order")
{
    const GramLattice a2(gramA2());
    CHECK(Isometry::identity(a2).order() == 1);
    CHECK(Isometry::negation(a2).order() == 2);
    const Isometry c(a2, coxeterA2());
    CHECK(c.order() == 3);
    CHECK(matrixPower(c.matrix(), 3) == IntMatrix::identity(2));
    CHECK(Isometry(GramLattice(gramE8()), coxeterElement(GramLattice(gramE8()))).order() == 30);
}

TEST_CASE("cyclotomic profiles")
{
    const GramLattice a2(gramA2());
    CHECK(Isometry(a2, coxeterA2()).profile().toString() == "Phi3");
    CHECK(Isometry::identity(a2).profile().toString() == "Phi1^2");
    CHECK(Isometry::negation(namedLattice("sqrt2E8")).profile().toString() == "Phi2^8");
    const GramLattice a3 = namedLattice("A3");
    CHECK(Isometry(a3, coxeterElement(a3)).profile().toString() == "Phi2 Phi4");
    CHECK(parseProfile("Phi6^4").toString() == "Phi6^4");
    CHECK(parseProfile("Phi3 Phi1^2") == parseProfile("Phi1^2*Phi3"));
    CHECK_THROWS_AS(parseProfile("Psi3"), PreconditionError);
    CHECK_THROWS_AS(cyclotomicProfile(IntPoly{-2, 0, 1}), InconsistencyError);
}

TEST_CASE("fixed and coinvariant sublattices")
{
    const GramLattice a2(gramA2());
    const Isometry id = Isometry::identity(a2);
    CHECK(fixedSublattice(id).lattice.rank() == 2);
    CHECK(fixedSublattice(id).index == 1);
    CHECK(coinvariantSublattice(id).lattice.rank() == 0);
    CHECK(fixedSublattice(Isometry::negation(a2)).lattice.rank() == 0);
    CHECK(coinvariantSublattice(Isometry::negation(a2)).lattice.rank() == 2);
    CHECK(fixedSublattice(Isometry(a2, coxeterA2())).lattice.rank() == 0);

    const GramLattice a2a2(blockSum(gramA2(), gramA2()));
    const Isometry mixed(a2a2, blockSum(IntMatrix::identity(2), coxeterA2()));
    const Sublattice co = coinvariantSublattice(mixed);
    REQUIRE(co.lattice.rank() == 2);
    CHECK(co.lattice.determinant() == 3);
    for (std::size_t j = 0; j < 2; ++j) {
        CHECK(co.embedding(0, j) == 0);
        CHECK(co.embedding(1, j) == 0);
    }
    CHECK(isFixedPointFree(restrictTo(mixed, co)));
}

TEST_CASE("completely fixed-point free")
{
    CHECK(isCompletelyFixedPointFree(Isometry::negation(namedLattice("sqrt2E8"))));
    CHECK(isCompletelyFixedPointFree(Isometry(GramLattice(gramA2()), coxeterA2())));
    const GramLattice a3 = namedLattice("A3");
    const Isometry c3(a3, coxeterElement(a3));
    CHECK(isFixedPointFree(c3));
    CHECK_FALSE(isCompletelyFixedPointFree(c3));
    CHECK(detOneMinusPower(c3, 2) == 0);
}

TEST_CASE("eigenspace dimensions")
{
    const CyclotomicProfile p6 = parseProfile("Phi6^4");
    CHECK(eigenspaceDims(p6, 6) == std::vector<std::uint64_t>{0, 4, 0, 0, 0, 4});
    CHECK(eigenspaceDims(Isometry::identity(GramLattice(gramE8()))) == std::vector<std::uint64_t>{8});
    CHECK(eigenspaceDims(Isometry(GramLattice(gramA2()), coxeterA2())) == std::vector<std::uint64_t>{0, 1, 1});
}

TEST_CASE("det(1 - g^s)")
{
    const Isometry c(GramLattice(gramA2()), coxeterA2());
    CHECK(detOneMinusPower(c, 1) == 3);
    CHECK(detOneMinusPower(c, 1) == cyclotomicAtOne(3));
    CHECK(detOneMinusPower(Isometry::negation(GramLattice(gramE8())), 1) == 256);
    // order 30, m = 30 is not a prime power
    const GramLattice e8(gramE8());
    const Isometry cox(e8, coxeterElement(e8));
    CHECK(detOneMinusPower(cox, 1) == 1);
    CHECK(detOneMinusPower(cox, 7) == 1);
    CHECK(detOneMinusPower(cox, 6) == 5 * 5); // g^6 has order 5, profile Phi5^2
}

TEST_CASE("reflections")
{
    const GramLattice e8(gramE8());
    for (const auto& r : simpleReflections(e8)) {
        CHECK(r.transpose() * e8.gram() * r == e8.gram());
        CHECK(r * r == IntMatrix::identity(8));
    }
    CHECK_THROWS_AS(reflectionMatrix(GramLattice(IntMatrix{{4, 1}, {1, 2}}), IntVector{Int(1), Int(0)}),
                    PreconditionError);
}

TEST_CASE("property: random isometries")
{
    std::mt19937_64 rng(0x15e7);
    for (int iter = 0; iter < 60; ++iter) {
        CAPTURE(iter);
        const Isometry g = randomIsometry(rng);
        const std::size_t l = g.rank();
        const IntMatrix& gram = g.lattice().gram();

        // Gram preservation after products and powers
        const Isometry g2 = g.after(g);
        CHECK(g2.matrix().transpose() * gram * g2.matrix() == gram);
        const Isometry gi = g.power(-1);
        CHECK(gi.after(g).matrix() == IntMatrix::identity(l));

        // profile reconstruction
        CHECK(g.profile().degree() == l);
        CHECK(g.profile().product() == charPoly(g.matrix()));
        CHECK(matrixPower(g.matrix(), g.order()) == IntMatrix::identity(l));
        for (const auto q : primeDivisors(g.order()))
            CHECK_FALSE(matrixPower(g.matrix(), g.order() / q) == IntMatrix::identity(l));

        // rank additivity and fixed-point freeness of the coinvariant restriction
        const Sublattice fixed = fixedSublattice(g);
        const Sublattice co = coinvariantSublattice(g);
        CHECK(fixed.lattice.rank() + co.lattice.rank() == l);
        CHECK(fixed.lattice.rank() == g.profile().multiplicity(1));
        CHECK((g.matrix() * fixed.embedding) == fixed.embedding);
        CHECK((fixed.embedding.transpose() * gram * co.embedding).isZero());
        if (co.lattice.rank() > 0)
            CHECK(isFixedPointFree(restrictTo(g, co)));

        // cfpf <=> det(1 - g^i) != 0 for 1 <= i < n
        bool allNonzero = true;
        for (std::uint64_t i = 1; i < g.order(); ++i)
            allNonzero = allNonzero && detOneMinusPower(g, static_cast<std::int64_t>(i)) != 0;
        if (g.order() > 1)
            CHECK(isCompletelyFixedPointFree(g) == allNonzero);

        // eigenspace dimensions
        const auto dims = eigenspaceDims(g);
        std::uint64_t total = 0;
        for (std::size_t j = 0; j < dims.size(); ++j) {
            total += dims[j];
            CHECK(dims[j] == dims[(dims.size() - j) % dims.size()]);
        }
        CHECK(total == l);

        // class invariant is conjugation invariant
        const IntMatrix u = randomUnimodular(rng, l, 5);
        const IntMatrix ui = toIntegral(inverse(u));
        const Isometry h(GramLattice(u.transpose() * gram * u), ui * g.matrix() * u);
        CHECK(classInvariant(h) == classInvariant(g));
    }
}

TEST_CASE("Weyl group orders")
{
    const GramLattice e8(gramE8());
    const auto roots = shortVectors(e8, 2).at(2).vectors;
    REQUIRE(roots.size() == 240);
    CHECK(spansFullRank(roots, 8));
    std::vector<Perm> gens;
    for (const auto& r : simpleReflections(e8))
        gens.push_back(inducedPermutation(Isometry(e8, r), roots));
    const PermGroup w(240, gens);
    // 2^14 3^5 5^2 7
    CHECK(w.order() == Int(16384) * 243 * 25 * 7);
    CHECK(w.order() == 696729600);

    // another base order gives the same group order
    std::vector<std::uint32_t> prefix;
    for (std::uint32_t i = 239; i > 200; i -= 7)
        prefix.push_back(i);
    const PermGroup w2(240, gens, prefix);
    CHECK(w2.order() == w.order());
    CHECK(w2.base() != w.base());

    const GramLattice a2(gramA2());
    const auto r2 = shortVectors(a2, 2).at(2).vectors;
    std::vector<Perm> g2;
    for (const auto& r : simpleReflections(a2))
        g2.push_back(inducedPermutation(Isometry(a2, r), r2));
    CHECK(PermGroup(6, g2).order() == 6);
}

TEST_CASE("Coxeter element centralizer in W(E8)")
{
    const GramLattice e8(gramE8());
    const auto roots = shortVectors(e8, 2).at(2).vectors;
    std::vector<Perm> gens;
    for (const auto& r : simpleReflections(e8))
        gens.push_back(inducedPermutation(Isometry(e8, r), roots));
    const Perm c = inducedPermutation(Isometry(e8, coxeterElement(e8)), roots);
    const PermGroup w(240, gens, cycleBase(c));
    CHECK(centralizerOrder(w, c) == 30);
    CHECK(normalizerOfCyclicOrder(w, c) == 240);
}

TEST_CASE("property: centralizers against brute force in W(D4)")
{
    const GramLattice d4 = namedLattice("D4");
    const auto roots = shortVectors(d4, 2).at(2).vectors;
    std::vector<Perm> gens;
    for (const auto& r : simpleReflections(d4))
        gens.push_back(inducedPermutation(Isometry(d4, r), roots));
    // all 192 elements by closure
    std::set<Perm> elems{identityPerm(roots.size())};
    std::vector<Perm> frontier{identityPerm(roots.size())};
    while (!frontier.empty()) {
        std::vector<Perm> next;
        for (const auto& e : frontier)
            for (const auto& g : gens) {
                Perm p = compose(g, e);
                if (elems.insert(p).second)
                    next.push_back(p);
            }
        frontier.swap(next);
    }
    REQUIRE(elems.size() == 192);
    const std::vector<Perm> all(elems.begin(), elems.end());

    std::mt19937_64 rng(0xd4);
    for (int iter = 0; iter < 50; ++iter) {
        const Perm& c = all[rng() % all.size()];
        if (isIdentity(c))
            continue;
        const PermGroup w(roots.size(), gens, cycleBase(c));
        CHECK(w.order() == 192);
        std::uint64_t cent = 0, norm = 0;
        const std::uint64_t ord = permOrder(c);
        for (const auto& x : all) {
            const Perm conj = compose(compose(x, c), inversePerm(x));
            if (conj == c)
                ++cent;
            for (std::uint64_t k = 1; k <= ord; ++k)
                if (gcd(k, ord) == 1 && conj == powerPerm(c, static_cast<std::int64_t>(k))) {
                    ++norm;
                    break;
                }
        }
        CHECK(centralizerOrder(w, c) == static_cast<unsigned long>(cent));
        CHECK(normalizerOfCyclicOrder(w, c) == static_cast<unsigned long>(norm));
        CHECK(w.contains(c));
    }
}

TEST_CASE("induced permutations")
{
    const GramLattice a2(gramA2());
    const auto roots = shortVectors(a2, 2).at(2).vectors;
    const Perm p = inducedPermutation(Isometry(a2, coxeterA2()), roots);
    CHECK(permOrder(p) == 3);
    const auto pairs = antipodalPairs(roots);
    const Perm q = pairPermutation(p, pairs, 3);
    CHECK(permOrder(q) == 3);
    const Perm neg = inducedPermutation(Isometry::negation(a2), roots);
    CHECK(isIdentity(pairPermutation(neg, pairs, 3)));
    std::vector<Coords> half(roots.begin(), roots.begin() + 3);
    CHECK_THROWS_AS(inducedPermutation(Isometry::negation(a2), half), PreconditionError);
    CHECK_FALSE(spansFullRank({Coords{1, 0}, Coords{-1, 0}}, 2));
}
