#include "doctest.h"

#include "orbilat/codes.hpp"
#include "test_support.hpp"

using namespace orbilat;
using namespace orbilat::testing;

namespace {

std::size_t shellCount(const GramLattice& l, std::int64_t norm)
{
    const auto s = shortVectors(l, norm);
    const auto it = s.find(norm);
    return it == s.end() ? 0 : it->second.count();
}

Int ipowInt(std::uint64_t b, std::size_t e)
{
    Int r(1);
    for (std::size_t i = 0; i < e; ++i)
        r *= static_cast<unsigned long>(b);
    return r;
}

} // namespace

TEST_CASE("codes are stored in canonical form")
{
    const CodeZp a(2, 4, {{1, 1, 0, 0}, {0, 1, 1, 0}});
    const CodeZp b(2, 4, {{1, 0, 1, 0}, {1, 1, 0, 0}, {0, 1, 1, 0}});
    CHECK(a.generators() == b.generators());
    CHECK(a.dimension() == 2);
    CHECK(a.contains({1, 0, 1, 0}));
    CHECK_FALSE(a.contains({1, 0, 0, 0}));
    CHECK_THROWS_AS(CodeZp(4, 2, {{1, 1}}), PreconditionError);
    CHECK_THROWS_AS(CodeZp(2, 3, {{1, 1}}), PreconditionError);
    // entries are reduced mod p
    CHECK(CodeZp(3, 2, {{4, 5}}).generators() == std::vector<Word>{{1, 2}});
}

TEST_CASE("bundled codes")
{
    CHECK(namedCode("hamming8").weightDistribution() == std::vector<std::uint64_t>{1, 0, 0, 0, 14, 0, 0, 0, 1});
    CHECK(namedCode("tetracode").weightDistribution() == std::vector<std::uint64_t>{1, 0, 0, 8, 0});
    const auto golay = namedCode("golay24").weightDistribution();
    CHECK(golay[0] == 1);
    CHECK(golay[8] == 759);
    CHECK(golay[12] == 2576);
    CHECK(golay[16] == 759);
    CHECK(golay[24] == 1);
    const auto tern = namedCode("ternary_golay12").weightDistribution();
    CHECK(tern[6] == 264);
    CHECK(tern[9] == 440);
    CHECK(tern[12] == 24);
    CHECK_THROWS_AS(namedCode("nope"), PreconditionError);

    // self-dual codes
    for (const char* n : {"hamming8", "golay24", "tetracode", "ternary_golay12"}) {
        const CodeZp c = namedCode(n);
        CHECK(c.dual().generators() == c.generators());
    }
    CHECK(namedCode("repetition8").dual().dimension() == 7);
}

TEST_CASE("root lattices A_{p-1}")
{
    CHECK(rootLatticeA(2).lattice.gram() == IntMatrix{{2}});
    CHECK(rootLatticeA(3).lattice.gram() == gramA2());
    CHECK(shellCount(rootLatticeA(3).lattice, 2) == 6);
    CHECK(shellCount(rootLatticeA(5).lattice, 2) == 20);
    CHECK_THROWS_AS(rootLatticeA(4), PreconditionError);
    // p * gamma lies in the root lattice, gamma in the dual
    const auto a = rootLatticeA(5);
    CHECK(inDual(a.lattice, a.glue));
    for (const auto& x : a.glue)
        CHECK(Rational(x * 5).get_den() == 1);
}

TEST_CASE("construction A")
{
    const GlueLattice zero = constructionA(CodeZp(3, 2, {}));
    CHECK(zero.lattice.gram() == zero.root.gram());
    CHECK(zero.index == 1);

    const GlueLattice e8 = constructionA(namedCode("hamming8"));
    CHECK(e8.lattice.determinant() == 1);
    CHECK(checkEven(e8.lattice));
    CHECK(shellCount(e8.lattice, 2) == 240);
    CHECK(discriminantGroup(e8.lattice).toString() == "trivial");

    const GlueLattice t = constructionA(namedCode("tetracode"));
    CHECK(t.index == 9);
    CHECK(t.root.determinant() / t.lattice.determinant() == 81);

    // a code that is not self-orthogonal does not glue to an integral lattice
    CHECK_THROWS_AS(constructionA(CodeZp(2, 2, {{1, 0}})), PreconditionError);
}

TEST_CASE("property: determinant identity for construction A")
{
    // det A(C) = p^k / |C|^2, independent of the glue representative
    for (const char* n : {"hamming8", "repetition8", "tetracode", "golay24", "ternary_golay12"}) {
        const CodeZp c = namedCode(n);
        const GlueLattice a = constructionA(c);
        CHECK(a.lattice.determinant() * c.size() * c.size() == ipowInt(c.p(), c.length()));
        CHECK(discriminantGroup(a.lattice).order == a.lattice.determinant());
    }
    CHECK(constructionA(CodeZp(5, 3, {})).lattice.determinant() == 125);
}

TEST_CASE("construction B")
{
    const GlueLattice zero = constructionA(CodeZp(3, 2, {}));
    const auto bz = constructionB(zero, {1, 2});
    CHECK(bz.sublattice.index == 3);
    CHECK_THROWS_AS(constructionB(zero, {1, 0}), PreconditionError);

    // e must be orthogonal to the code for the functional to be integral on A(C)
    const GlueLattice t = constructionA(namedCode("tetracode"));
    CHECK_THROWS_AS(constructionB(t, {1, 1, 1, 1}), PreconditionError);

    // repetition code: the sqrt2 E8 invariants
    const GlueLattice rep = constructionA(namedCode("repetition8"));
    const auto br = constructionB(rep, Word(8, 1));
    const GramLattice& b = br.sublattice.lattice;
    const GramLattice s8 = namedLattice("sqrt2E8");
    CHECK(br.sublattice.index == 2);
    CHECK(shellCount(b, 2) == 0);
    CHECK(shellCount(b, 4) == 240);
    CHECK(shellCount(b, 4) == shellCount(s8, 4));
    CHECK(b.determinant() == s8.determinant());
    CHECK(discriminantGroup(b).toString() == "(Z2)^8");
    CHECK(discriminantGroup(b).toString() == discriminantGroup(s8).toString());

    // Hamming code with e = all-ones: an index-2 sublattice of E8, so |D| = 4
    const GlueLattice ham = constructionA(namedCode("hamming8"));
    const auto bh = constructionB(ham, Word(8, 1));
    CHECK(bh.sublattice.index == 2);
    CHECK(bh.sublattice.lattice.determinant() == 4);
    CHECK(shellCount(bh.sublattice.lattice, 2) == 112);
    CHECK(discriminantGroup(bh.sublattice.lattice).toString() == "(Z2)^2");
}

TEST_CASE("the isometry g_{Delta,e}")
{
    CHECK(gDeltaE(2, 8, Word(8, 1)).matrix() == -IntMatrix::identity(8));
    const Isometry g3 = gDeltaE(3, 1, {1});
    CHECK(matrixPower(g3.matrix(), 3) == IntMatrix::identity(2));
    CHECK(detOneMinusPower(g3, 1) == 3);
    CHECK(gDeltaE(3, 1, {2}).matrix() == matrixPower(g3.matrix(), 2));
    CHECK_THROWS_AS(gDeltaE(3, 2, {1, 3}), PreconditionError);

    for (std::uint64_t p : {2u, 3u, 5u, 7u})
        for (std::size_t k = 1; k <= 3; ++k) {
            Word e(k);
            for (std::size_t i = 0; i < k; ++i)
                e[i] = 1 + i % (p - 1);
            const Isometry g = gDeltaE(p, k, e);
            CHECK(g.profile() == CyclotomicProfile{{{p, static_cast<unsigned>(k)}}});
            CHECK(matrixPower(g.matrix(), p) == IntMatrix::identity(g.rank()));
            for (std::uint64_t i = 1; i < p; ++i)
                CHECK(detOneMinusPower(g, static_cast<std::int64_t>(i)) != 0);
        }

    // stabilizes A(C) and B(C, e) for e orthogonal to C
    const GlueLattice rep = constructionA(namedCode("repetition8"));
    const Isometry gn = gDeltaEOnGlue(rep, Word(8, 1));
    CHECK(gn.matrix() == -IntMatrix::identity(8));
    const auto b = constructionB(rep, Word(8, 1));
    CHECK_NOTHROW(restrictTo(gn, b.sublattice));

    const GlueLattice tern = constructionA(namedCode("ternary_golay12"));
    const Isometry gt = gDeltaEOnGlue(tern, Word(12, 1));
    CHECK(gt.profile().toString() == "Phi3^12");
    Word full;
    for (const auto& w : namedCode("ternary_golay12").codewords())
        if (std::count(w.begin(), w.end(), 0u) == 0) {
            full = w;
            break;
        }
    REQUIRE(full.size() == 12);
    const auto bt = constructionB(tern, full);
    CHECK(bt.sublattice.index == 3);
    // for p = 3 the functional moves: (g x | gamma) = (x | gamma) - (x | alpha_1 + alpha_2)
    const Isometry ge = gDeltaEOnGlue(tern, full);
    CHECK(isCompletelyFixedPointFree(ge));
    CHECK_THROWS_AS(restrictTo(ge, bt.sublattice), PreconditionError);
}

TEST_CASE("named lattices")
{
    const GramLattice e8 = namedLattice("E8");
    CHECK(e8.determinant() == 1);
    CHECK(shellCount(e8, 2) == 240);
    CHECK(namedLattice("sqrt2E8").gram() == Int(2) * e8.gram());
    CHECK(namedLattice("A2").gram() == gramA2());
    CHECK(namedLattice("D4").determinant() == 4);
    CHECK(namedLattice("E6").determinant() == 3);
    CHECK(namedLattice("E7").determinant() == 2);
    CHECK(shellCount(namedLattice("D5"), 2) == 40);
    CHECK_THROWS_AS(namedLattice("F4"), PreconditionError);
    CHECK_THROWS_AS(namedLattice("A"), PreconditionError);
    CHECK_THROWS_AS(namedLattice("D2"), PreconditionError);

    const GramLattice leech = namedLattice("Leech");
    CHECK(leech.rank() == 24);
    CHECK(leech.determinant() == 1);
    CHECK(checkEven(leech));
    CHECK(shellCount(leech, 2) == 0);
}

TEST_CASE("Leech lattice with an order-3 isometry")
{
    const auto lw = leechWithOrderThree();
    CHECK(lw.lattice.rank() == 24);
    CHECK(lw.lattice.determinant() == 1);
    CHECK(checkEven(lw.lattice));
    CHECK(shellCount(lw.lattice, 2) == 0);
    CHECK(lw.isometry.profile().toString() == "Phi3^12");
    CHECK(isCompletelyFixedPointFree(lw.isometry));
}
