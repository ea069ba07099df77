#include "orbilat/orbifold.hpp"

#include "orbilat/errors.hpp"
#include "orbilat/number_theory.hpp"

#include <algorithm>
#include <sstream>

namespace orbilat {

namespace {

Int u(std::uint64_t v) { return Int(static_cast<unsigned long>(v)); }

const std::vector<Coords>& shell(const GramLattice& l, std::int64_t norm, std::shared_ptr<const ShellMap>& keep)
{
    static const std::vector<Coords> empty;
    keep = shortVectorsCached(l, norm);
    const auto it = keep->find(norm);
    return it == keep->end() ? empty : it->second.vectors;
}

std::size_t indexOf(const std::vector<Coords>& sorted, const Coords& v)
{
    const auto it = std::lower_bound(sorted.begin(), sorted.end(), v);
    ensure(it != sorted.end() && *it == v, "isometry does not preserve a shell of short vectors");
    return static_cast<std::size_t>(it - sorted.begin());
}

} // namespace

bool ConformalWeight::inOneOverMZ() const { return Rational(value * u(m)).get_den() == 1; }

bool ConformalWeight::atMostOne() const { return value <= 1; }

ConformalWeight epsilonGeneral(const std::vector<std::uint64_t>& dims, std::uint64_t m)
{
    require(m >= 1, "epsilonGeneral: m must be positive");
    require(dims.size() == m, "epsilonGeneral: expected " + std::to_string(m) + " eigenspace dimensions");
    Int num(0);
    for (std::uint64_t i = 1; i < m; ++i) {
        require(dims[i] == dims[m - i], "epsilonGeneral: eigenspace dimensions are not symmetric");
        num += u(i) * u(m - i) * u(dims[i]);
    }
    return {makeRational(num, 4 * u(m) * u(m)), m};
}

ConformalWeight epsilonCFPF(std::uint64_t ell, std::uint64_t n, std::uint64_t s)
{
    require(n >= 1, "epsilonCFPF: n must be positive");
    const std::uint64_t m = n / gcd(n, s % n == 0 ? n : s % n);
    require(ell % eulerPhi(m) == 0,
            "epsilonCFPF: phi(" + std::to_string(m) + ") does not divide " + std::to_string(ell));
    const auto primes = primeDivisors(m);
    Int rad(1);
    for (const auto q : primes)
        rad *= u(q);
    Rational frac = makeRational(rad, u(m) * u(m));
    if (primes.size() % 2 == 0)
        frac = -frac;
    return {Rational(makeRational(u(ell), Int(24)) * (1 + frac)), m};
}

ConformalWeight epsilonOf(const Isometry& g, std::uint64_t s)
{
    const Isometry h = g.power(static_cast<std::int64_t>(s % g.order()));
    return epsilonGeneral(eigenspaceDims(h), h.order());
}

std::uint64_t weightOneDim(const Isometry& g, std::uint64_t j)
{
    const std::uint64_t n = g.order();
    j %= n;
    std::uint64_t dim = eigenspaceDims(g)[j];
    if (g.rank() == 0)
        return dim;
    std::shared_ptr<const ShellMap> keep;
    const auto& roots = shell(g.lattice(), 2, keep);
    std::vector<char> seen(roots.size(), 0);
    for (std::size_t i = 0; i < roots.size(); ++i) {
        if (seen[i])
            continue;
        std::uint64_t k = 0;
        for (std::size_t c = i; !seen[c]; c = indexOf(roots, g.apply(roots[c]))) {
            seen[c] = 1;
            ++k;
        }
        if ((j * k) % n == 0)
            ++dim;
    }
    return dim;
}

CosetRootCount cosetRootCount(const Isometry& g, const RationalVector& lambda)
{
    const std::size_t n = g.rank();
    require(lambda.size() == n, "cosetRootCount: lambda has the wrong length");
    require(inDual(g.lattice(), lambda), "cosetRootCount: lambda is not in the dual lattice");
    for (std::size_t i = 0; i < n; ++i) {
        Rational d = lambda[i];
        for (std::size_t k = 0; k < n; ++k)
            d -= g.matrix()(i, k) * lambda[k];
        require(Rational(d).get_den() == 1, "cosetRootCount: lambda + L is not stable under g");
    }
    CosetRootCount r;
    r.count = n == 0 ? 0 : cosetShortVectors(g.lattice(), lambda, 2).count();
    r.expected = makeRational(u(g.order()) * u(n), u(eulerPhi(g.order())));
    r.admissible = Rational(u(r.count)) == r.expected;
    return r;
}

TwistedTopDim twistedTopDim(const Isometry& g, std::int64_t s)
{
    TwistedTopDim t;
    const std::size_t n = g.rank();
    if (n == 0) {
        t.dim = Int(1);
        t.index = 1;
        return t;
    }
    const IntMatrix oneMinus = IntMatrix::identity(n) - g.power(s).matrix();
    const RatMatrix dual = inverse(g.lattice().gram()); // columns: dual basis
    const RatMatrix img = toRational(oneMinus) * dual;
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t i = 0; i < n; ++i)
            if (Rational(img(i, j)).get_den() != 1) {
                t.witness = dual.column(j);
                t.reason = "(1 - g^s) maps dual basis vector " + std::to_string(j) + " outside L";
                return t;
            }
    const Int det = abs(determinant(oneMinus));
    if (det == 0) {
        t.reason = "1 - g^s is singular, so (1 - g^s) L* has infinite index";
        return t;
    }
    const Rational index = makeRational(det, g.lattice().determinant());
    ensure(index.get_den() == 1, "twistedTopDim: index is not an integer");
    t.index = index.get_num();
    ensure(isPerfectSquare(t.index), "twistedTopDim: index " + toString(t.index) + " is not a perfect square");
    t.dim = isqrt(t.index);
    return t;
}

SelfDualReport orbifoldSelfDualCheck(std::uint64_t ell, std::uint64_t n)
{
    require(n >= 2, "orbifoldSelfDualCheck: n must be at least 2");
    SelfDualReport r;
    r.ell = ell;
    r.n = n;
    const Rational target = 1 - makeRational(Int(1), u(n));
    for (std::uint64_t s = 1; s < n; ++s) {
        const std::uint64_t m = n / gcd(n, s);
        if (ell % eulerPhi(m) != 0) {
            r.eps.emplace_back();
            r.failures.push_back("s=" + std::to_string(s) + ": phi(" + std::to_string(m) + ") does not divide "
                                 + std::to_string(ell));
            continue;
        }
        const ConformalWeight e = epsilonCFPF(ell, n, s);
        r.eps.push_back(e);
        if (gcd(n, s) == 1) {
            if (e.value != target)
                r.failures.push_back("s=" + std::to_string(s) + ": eps = " + e.toString() + ", expected "
                                     + toFractionString(target));
        } else if (!(e.value > 1)) {
            r.failures.push_back("s=" + std::to_string(s) + ": eps = " + e.toString() + " is not > 1");
        }
    }
    if (ell % eulerPhi(n) == 0) {
        const CyclotomicProfile prof{{{n, static_cast<unsigned>(ell / eulerPhi(n))}}};
        const auto dims = eigenspaceDims(prof, n);
        for (std::uint64_t s = 1; s < n; ++s)
            if (gcd(n, s) == 1)
                r.coprimeDimSum += dims[s];
    }
    if (r.coprimeDimSum != ell)
        r.failures.push_back("coprime eigenspaces have total dimension " + std::to_string(r.coprimeDimSum));
    r.pass = r.failures.empty();
    return r;
}

GradedTraceReport traceOnVPlusTwo(const Isometry& g)
{
    require(isDoublyEven(g.lattice()), "traceOnVPlusTwo: lattice is not doubly even");
    const std::size_t n = g.rank();
    GradedTraceReport r;
    const Int t1 = g.trace();
    const Int t2 = g.power(2).trace();
    r.symmetricSquareDim = u(n) * u(n + 1) / 2;
    r.symmetricSquareTrace = (t1 * t1 + t2) / 2;
    if (n > 0) {
        std::shared_ptr<const ShellMap> keep;
        const auto& v4 = shell(g.lattice(), 4, keep);
        r.exponentialDim = u(v4.size() / 2);
        for (const auto& v : v4) {
            const Coords w = g.apply(v);
            Coords neg = v;
            for (auto& x : neg)
                x = -x;
            if (w == v || w == neg)
                r.exponentialTrace += 1;
        }
        // each pair was counted twice
        r.exponentialTrace /= 2;
    }
    r.dimension = r.symmetricSquareDim + r.heisenbergDegreeTwoDim + r.exponentialDim;
    r.trace = r.symmetricSquareTrace + r.heisenbergDegreeTwoTrace + r.exponentialTrace;
    return r;
}

SectorLabel SectorLabel::make(std::string coset, std::uint64_t twist, std::uint64_t eigen, std::uint64_t n)
{
    require(n >= 1, "SectorLabel: n must be positive");
    SectorLabel l;
    l.n = n;
    l.twist = twist % n;
    l.eigen = eigen % n;
    l.coset = std::move(coset);
    l.kind = l.twist == 0 ? Kind::UntwistedCoset : Kind::Twisted;
    return l;
}

std::string SectorLabel::toString() const
{
    std::ostringstream os;
    os << "V_{" << (coset.empty() ? std::string("0") : coset) << "+L}";
    if (kind == Kind::Twisted)
        os << "^T[g^" << twist << "]";
    os << "(" << eigen << ")";
    return os.str();
}

} // namespace orbilat
