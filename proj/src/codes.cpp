#include "orbilat/codes.hpp"

#include "orbilat/errors.hpp"
#include "orbilat/number_theory.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <random>

namespace orbilat {

namespace {

std::uint64_t powMod(std::uint64_t b, std::uint64_t e, std::uint64_t m)
{
    std::uint64_t r = 1 % m;
    b %= m;
    while (e) {
        if (e & 1)
            r = static_cast<std::uint64_t>(static_cast<unsigned __int128>(r) * b % m);
        b = static_cast<std::uint64_t>(static_cast<unsigned __int128>(b) * b % m);
        e >>= 1;
    }
    return r;
}

std::uint64_t invMod(std::uint64_t a, std::uint64_t p) { return powMod(a, p - 2, p); }

// Reduced row echelon form over Z_p; zero rows removed.
std::vector<Word> rref(std::vector<Word> rows, std::uint64_t p, std::size_t n)
{
    std::size_t r = 0;
    for (std::size_t c = 0; c < n && r < rows.size(); ++c) {
        std::size_t piv = r;
        while (piv < rows.size() && rows[piv][c] == 0)
            ++piv;
        if (piv == rows.size())
            continue;
        std::swap(rows[r], rows[piv]);
        const std::uint64_t inv = invMod(rows[r][c], p);
        for (auto& v : rows[r])
            v = v * inv % p;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == r || rows[i][c] == 0)
                continue;
            const std::uint64_t f = rows[i][c];
            for (std::size_t j = 0; j < n; ++j)
                rows[i][j] = (rows[i][j] + (p - f) * rows[r][j]) % p;
        }
        ++r;
    }
    rows.resize(r);
    return rows;
}

IntMatrix cartanA(std::size_t n)
{
    IntMatrix g(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        g(i, i) = 2;
        if (i + 1 < n)
            g(i, i + 1) = g(i + 1, i) = -1;
    }
    return g;
}

// Chain of n-1 nodes plus node n-1 attached to chain node `attach` (0-based).
IntMatrix cartanBranched(std::size_t n, std::size_t attach)
{
    IntMatrix g(n, n);
    for (std::size_t i = 0; i < n; ++i)
        g(i, i) = 2;
    for (std::size_t i = 0; i + 2 < n; ++i)
        g(i, i + 1) = g(i + 1, i) = -1;
    g(n - 1, attach) = g(attach, n - 1) = -1;
    return g;
}

IntMatrix blockDiagonal(const IntMatrix& block, std::size_t k)
{
    const std::size_t b = block.rows();
    IntMatrix g(b * k, b * k);
    for (std::size_t t = 0; t < k; ++t)
        for (std::size_t i = 0; i < b; ++i)
            for (std::size_t j = 0; j < b; ++j)
                g(t * b + i, t * b + j) = block(i, j);
    return g;
}

// Cyclic code of length n generated by the polynomial with coefficients g (lowest degree first),
// extended by an overall parity coordinate so that the coordinates sum to 0 mod p.
std::vector<Word> extendedCyclic(std::uint64_t p, std::size_t n, const std::vector<std::uint64_t>& g)
{
    std::vector<Word> rows;
    const std::size_t dim = n - (g.size() - 1);
    for (std::size_t s = 0; s < dim; ++s) {
        Word w(n + 1, 0);
        std::uint64_t sum = 0;
        for (std::size_t i = 0; i < g.size(); ++i) {
            w[s + i] = g[i] % p;
            sum += g[i];
        }
        w[n] = (p - sum % p) % p;
        rows.push_back(w);
    }
    return rows;
}

} // namespace

CodeZp::CodeZp(std::uint64_t p, std::size_t length, const std::vector<Word>& generators, std::string name)
    : p_(p), length_(length), name_(std::move(name))
{
    require(isPrime(p), "code alphabet size " + std::to_string(p) + " is not prime");
    for (const auto& w : generators)
        require(w.size() == length, "code generator has length " + std::to_string(w.size()) + ", expected "
                                        + std::to_string(length));
    std::vector<Word> rows = generators;
    for (auto& w : rows)
        for (auto& v : w)
            v %= p;
    rows_ = rref(std::move(rows), p, length);
}

Int CodeZp::size() const
{
    Int s(1);
    for (std::size_t i = 0; i < dimension(); ++i)
        s *= static_cast<unsigned long>(p_);
    return s;
}

bool CodeZp::contains(const Word& w) const
{
    require(w.size() == length_, "word length does not match the code");
    std::vector<Word> rows = rows_;
    Word r = w;
    for (auto& v : r)
        v %= p_;
    rows.push_back(r);
    return rref(std::move(rows), p_, length_).size() == rows_.size();
}

std::vector<Word> CodeZp::codewords() const
{
    require(dimension() <= 24, "codewords: code too large to list");
    std::vector<Word> out;
    std::vector<std::uint64_t> msg(dimension(), 0);
    const std::uint64_t total = ipow(p_, static_cast<unsigned>(dimension()));
    out.reserve(total);
    for (std::uint64_t n = 0; n < total; ++n) {
        Word w(length_, 0);
        for (std::size_t i = 0; i < msg.size(); ++i)
            if (msg[i])
                for (std::size_t j = 0; j < length_; ++j)
                    w[j] = (w[j] + msg[i] * rows_[i][j]) % p_;
        out.push_back(std::move(w));
        for (std::size_t i = msg.size(); i-- > 0;) {
            if (++msg[i] < p_)
                break;
            msg[i] = 0;
        }
    }
    return out;
}

CodeZp CodeZp::dual() const
{
    // RREF rows have pivots; the dual is spanned by one vector per free column.
    std::vector<std::size_t> pivots;
    for (const auto& r : rows_) {
        std::size_t c = 0;
        while (r[c] == 0)
            ++c;
        pivots.push_back(c);
    }
    std::vector<Word> gens;
    for (std::size_t f = 0; f < length_; ++f) {
        if (std::find(pivots.begin(), pivots.end(), f) != pivots.end())
            continue;
        Word w(length_, 0);
        w[f] = 1;
        for (std::size_t i = 0; i < rows_.size(); ++i)
            w[pivots[i]] = (p_ - rows_[i][f]) % p_;
        gens.push_back(std::move(w));
    }
    return CodeZp(p_, length_, gens, name_.empty() ? std::string() : name_ + "_dual");
}

std::vector<std::uint64_t> CodeZp::weightDistribution() const
{
    std::vector<std::uint64_t> dist(length_ + 1, 0);
    for (const auto& w : codewords())
        ++dist[static_cast<std::size_t>(std::count_if(w.begin(), w.end(), [](std::uint64_t v) { return v != 0; }))];
    return dist;
}

CodeZp namedCode(const std::string& name)
{
    if (name == "hamming8")
        return CodeZp(2, 8,
                      {{1, 1, 1, 1, 1, 1, 1, 1}, {1, 1, 1, 1, 0, 0, 0, 0}, {1, 1, 0, 0, 1, 1, 0, 0}, {1, 0, 1, 0, 1, 0, 1, 0}},
                      name);
    if (name == "repetition8")
        return CodeZp(2, 8, {{1, 1, 1, 1, 1, 1, 1, 1}}, name);
    if (name == "tetracode")
        return CodeZp(3, 4, {{1, 0, 1, 1}, {0, 1, 1, 2}}, name);
    if (name == "golay24")
        // x^11 + x^10 + x^6 + x^5 + x^4 + x^2 + 1 divides x^23 - 1 over Z_2
        return CodeZp(2, 24, extendedCyclic(2, 23, {1, 0, 1, 0, 1, 1, 1, 0, 0, 0, 1, 1}), name);
    if (name == "ternary_golay12")
        // x^5 + x^4 + 2x^3 + x^2 + 2 divides x^11 - 1 over Z_3
        return CodeZp(3, 12, extendedCyclic(3, 11, {2, 0, 1, 2, 1, 1}), name);
    throw PreconditionError("unknown code '" + name + "'");
}

std::vector<std::string> namedCodeList() { return {"golay24", "hamming8", "repetition8", "ternary_golay12", "tetracode"}; }

RootLatticeA rootLatticeA(std::uint64_t p)
{
    require(isPrime(p), "rootLatticeA: " + std::to_string(p) + " is not prime");
    const std::size_t n = static_cast<std::size_t>(p - 1);
    RootLatticeA r{p, GramLattice(cartanA(n), "A" + std::to_string(n)), RationalVector(n)};
    for (std::size_t i = 0; i < n; ++i)
        r.glue[i] = makeRational(Int(static_cast<unsigned long>(n - i)), Int(static_cast<unsigned long>(p)));
    return r;
}

GlueLattice constructionA(const CodeZp& code)
{
    const std::uint64_t p = code.p();
    const std::size_t k = code.length();
    const RootLatticeA a = rootLatticeA(p);
    const std::size_t b = a.lattice.rank();
    const std::size_t l = b * k;
    const GramLattice root(blockDiagonal(a.lattice.gram(), k), "A" + std::to_string(b) + "^" + std::to_string(k));

    // p * gamma in root coordinates: (p-1, p-2, ..., 1)
    IntMatrix gens(l + code.dimension(), l);
    for (std::size_t i = 0; i < l; ++i)
        gens(i, i) = static_cast<unsigned long>(p);
    for (std::size_t r = 0; r < code.dimension(); ++r)
        for (std::size_t t = 0; t < k; ++t)
            for (std::size_t i = 0; i < b; ++i)
                gens(l + r, t * b + i) = static_cast<unsigned long>(code.generators()[r][t] * (b - i));
    const IntMatrix h = hermiteRowBasis(gens);
    ensure(h.rows() == l, "constructionA: glue generators do not have full rank");

    RatMatrix basis(l, l);
    const Rational inv = makeRational(Int(1), Int(static_cast<unsigned long>(p)));
    for (std::size_t i = 0; i < l; ++i)
        for (std::size_t j = 0; j < l; ++j)
            basis(i, j) = Rational(h(j, i) * inv);
    const RatMatrix gram = basis.transpose() * toRational(root.gram()) * basis;
    require(isIntegral(gram), "constructionA: glue vectors of the code do not pair integrally (code is not "
                              "self-orthogonal)");
    const IntMatrix gi = toIntegral(gram);
    require(checkEven(gi), "constructionA: the glued lattice is not even");

    GlueLattice out{code, root, GramLattice(gi, "A(" + (code.name().empty() ? std::string("C") : code.name()) + ")"),
                    basis, code.size()};
    ensure(out.lattice.determinant() * out.index * out.index == root.determinant(),
           "constructionA: index does not match the code size");
    return out;
}

ConstructionBResult constructionB(const GlueLattice& n, const Word& e)
{
    const std::uint64_t p = n.code.p();
    const std::size_t k = n.code.length();
    require(e.size() == k, "constructionB: e has the wrong length");
    for (const auto v : e)
        require(v % p != 0, "constructionB: e has a zero coordinate");
    const std::size_t b = static_cast<std::size_t>(p - 1);
    const std::size_t l = n.lattice.rank();

    // (x | gamma^(i)) is the coefficient of the first simple root of block i.
    IntVector f(l);
    for (std::size_t j = 0; j < l; ++j) {
        Rational s(0);
        for (std::size_t t = 0; t < k; ++t)
            s += static_cast<unsigned long>(e[t] % p) * n.basisInRoot(t * b, j);
        s.canonicalize();
        require(s.get_den() == 1, "constructionB: e is not orthogonal to the code, so the functional is not "
                                  "integral on A(C)");
        f[j] = ((s.get_num() % static_cast<unsigned long>(p)) + static_cast<unsigned long>(p))
               % static_cast<unsigned long>(p);
    }
    Sublattice s = sublatticeByFunctional(n.lattice, f, Int(static_cast<unsigned long>(p)));
    require(s.index == static_cast<unsigned long>(p), "constructionB: functional is degenerate on A(C)");
    s.lattice = s.lattice.renamed("B(" + (n.code.name().empty() ? std::string("C") : n.code.name()) + ")");
    return {s, f};
}

Isometry gDeltaE(std::uint64_t p, std::size_t k, const Word& e)
{
    require(isPrime(p), "gDeltaE: " + std::to_string(p) + " is not prime");
    require(e.size() == k, "gDeltaE: e has the wrong length");
    const std::size_t b = static_cast<std::size_t>(p - 1);
    // alpha_i -> alpha_{i+1}, alpha_{p-1} -> alpha_0 = -(alpha_1 + ... + alpha_{p-1})
    IntMatrix g(b, b);
    for (std::size_t i = 0; i + 1 < b; ++i)
        g(i + 1, i) = 1;
    for (std::size_t i = 0; i < b; ++i)
        g(i, b - 1) = -1;
    IntMatrix m(b * k, b * k);
    for (std::size_t t = 0; t < k; ++t) {
        require(e[t] % p != 0, "gDeltaE: e has a zero coordinate");
        const IntMatrix gt = matrixPower(g, e[t] % p);
        for (std::size_t i = 0; i < b; ++i)
            for (std::size_t j = 0; j < b; ++j)
                m(t * b + i, t * b + j) = gt(i, j);
    }
    Isometry iso(GramLattice(blockDiagonal(cartanA(b), k)), m, "gDelta");
    ensure(iso.order() == p || k == 0, "gDeltaE: order is not p");
    ensure(k == 0 || (iso.profile().factors.size() == 1 && iso.profile().factors[0].first == p),
           "gDeltaE: not fixed-point free");
    return iso;
}

Isometry gDeltaEOnGlue(const GlueLattice& n, const Word& e)
{
    const Isometry g = gDeltaE(n.code.p(), n.code.length(), e);
    const RatMatrix r = inverse(n.basisInRoot) * toRational(g.matrix()) * n.basisInRoot;
    ensure(isIntegral(r), "gDeltaE: the glued lattice is not stable");
    return Isometry(n.lattice, toIntegral(r), "gDelta");
}

GramLattice leechFromGolay()
{
    const CodeZp golay = namedCode("golay24");
    // Coordinates scaled by sqrt 8: 2c (c in the code), 4(e_0 +- e_j), (-3, 1^23).
    std::vector<std::vector<Int>> rows;
    for (const auto& c : golay.generators()) {
        std::vector<Int> r(24);
        for (std::size_t i = 0; i < 24; ++i)
            r[i] = static_cast<unsigned long>(2 * c[i]);
        rows.push_back(r);
    }
    for (std::size_t j = 1; j < 24; ++j)
        for (const int s : {1, -1}) {
            std::vector<Int> r(24, Int(0));
            r[0] = 4;
            r[j] = 4 * s;
            rows.push_back(r);
        }
    std::vector<Int> last(24, Int(1));
    last[0] = -3;
    rows.push_back(last);
    const IntMatrix h = hermiteRowBasis(IntMatrix::fromRows(rows));
    ensure(h.rows() == 24, "leechFromGolay: generators do not have full rank");
    const IntMatrix g8 = h * h.transpose();
    IntMatrix g(24, 24);
    for (std::size_t i = 0; i < 24; ++i)
        for (std::size_t j = 0; j < 24; ++j) {
            ensure(g8(i, j) % 8 == 0, "leechFromGolay: Gram matrix not integral");
            g(i, j) = g8(i, j) / 8;
        }
    GramLattice l(lllReduce(g).gram, "Leech");
    ensure(l.determinant() == 1 && checkEven(l), "leechFromGolay: lattice is not even unimodular");
    return l;
}

LatticeWithIsometry leechWithOrderThree(std::uint64_t seed)
{
    const GlueLattice n = constructionA(namedCode("ternary_golay12"));
    const Isometry g = gDeltaEOnGlue(n, Word(12, 1));
    const IntMatrix& gram = n.lattice.gram();
    const std::size_t r = n.lattice.rank();
    const IntMatrix oneMinus = IntMatrix::identity(r) - g.matrix();
    std::mt19937_64 rng(seed);
    auto small = [&] { return Int(static_cast<long>(rng() % 3) - 1); };

    for (int attempt = 0; attempt < 5000; ++attempt) {
        IntVector y(r), z(r);
        for (auto& a : y)
            a = small();
        for (auto& a : z)
            a = small();
        IntVector v = oneMinus.apply(y);
        for (std::size_t i = 0; i < r; ++i)
            v[i] += 3 * z[i];
        if (n.lattice.norm(v) % 18 != 0)
            continue;
        IntVector f = gram.apply(v);
        bool zero = true;
        for (auto& x : f) {
            x = ((x % 3) + 3) % 3;
            zero = zero && x == 0;
        }
        if (zero)
            continue;

        // M = N_v + Z v/3, basis in N-coordinates scaled by 3
        const Sublattice nv = sublatticeByFunctional(n.lattice, f, Int(3));
        IntMatrix gens(r + 1, r);
        for (std::size_t j = 0; j < r; ++j)
            for (std::size_t i = 0; i < r; ++i)
                gens(j, i) = 3 * nv.embedding(i, j);
        for (std::size_t i = 0; i < r; ++i)
            gens(r, i) = v[i];
        const IntMatrix h = hermiteRowBasis(gens);
        RatMatrix basis(r, r);
        const Rational third = makeRational(Int(1), Int(3));
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < r; ++j)
                basis(i, j) = Rational(h(j, i) * third);
        const RatMatrix mg = basis.transpose() * toRational(gram) * basis;
        const RatMatrix gm = inverse(basis) * toRational(g.matrix()) * basis;
        if (!isIntegral(mg) || !isIntegral(gm))
            continue;
        const ReducedBasis red = lllReduce(toIntegral(mg));
        GramLattice m(red.gram, "Leech");
        const auto roots = shortVectors(m, 2);
        if (roots.count(2) && roots.at(2).count() > 0)
            continue;
        ensure(m.determinant() == 1 && checkEven(m), "leechWithOrderThree: neighbour is not even unimodular");
        const IntMatrix t = red.transform;
        const IntMatrix gt = toIntegral(inverse(t) * toRational(toIntegral(gm) * t));
        Isometry iso(m, gt, "order-3 rotation");
        ensure(iso.profile() == CyclotomicProfile{{{3, 12}}}, "leechWithOrderThree: unexpected profile");
        return {m, iso};
    }
    throw InconsistencyError("leechWithOrderThree: no rootless neighbour found");
}

GramLattice namedLattice(const std::string& name)
{
    auto suffix = [&](std::size_t from) -> std::size_t {
        require(name.size() > from && std::all_of(name.begin() + static_cast<long>(from), name.end(),
                                                  [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }),
                "unknown lattice '" + name + "'");
        require(name.size() - from <= 3, "lattice rank too large in '" + name + "'");
        return static_cast<std::size_t>(std::stoul(name.substr(from)));
    };
    if (name == "E6")
        return GramLattice(cartanBranched(6, 2), name);
    if (name == "E7")
        return GramLattice(cartanBranched(7, 3), name);
    if (name == "E8")
        return GramLattice(cartanBranched(8, 4), name);
    if (name == "sqrt2E8")
        return GramLattice(Int(2) * cartanBranched(8, 4), name);
    if (name == "Leech")
        return leechFromGolay();
    if (!name.empty() && name[0] == 'A') {
        const std::size_t n = suffix(1);
        require(n >= 1, "A_n needs n >= 1");
        return GramLattice(cartanA(n), name);
    }
    if (!name.empty() && name[0] == 'D') {
        const std::size_t n = suffix(1);
        require(n >= 3, "D_n needs n >= 3");
        return GramLattice(cartanBranched(n, n - 3), name);
    }
    throw PreconditionError("unknown lattice '" + name + "'");
}

std::vector<std::string> namedLatticeList() { return {"A<n>", "D<n>", "E6", "E7", "E8", "sqrt2E8", "Leech"}; }

} // namespace orbilat
