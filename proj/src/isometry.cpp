#include "orbilat/isometry.hpp"

#include "orbilat/errors.hpp"
#include "orbilat/number_theory.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace orbilat {

std::uint64_t CyclotomicProfile::order() const
{
    std::uint64_t n = 1;
    for (const auto& [d, mult] : factors)
        n = lcm(n, d);
    return n;
}

std::size_t CyclotomicProfile::degree() const
{
    std::size_t deg = 0;
    for (const auto& [d, mult] : factors)
        deg += mult * eulerPhi(d);
    return deg;
}

unsigned CyclotomicProfile::multiplicity(std::uint64_t d) const
{
    for (const auto& [e, mult] : factors)
        if (e == d)
            return mult;
    return 0;
}

IntPoly CyclotomicProfile::product() const
{
    IntPoly p{1};
    for (const auto& [d, mult] : factors)
        for (unsigned k = 0; k < mult; ++k)
            p = p * cyclotomic(d);
    return p;
}

std::string CyclotomicProfile::toString() const
{
    if (factors.empty())
        return "1";
    std::ostringstream os;
    for (std::size_t i = 0; i < factors.size(); ++i) {
        if (i)
            os << ' ';
        os << "Phi" << factors[i].first;
        if (factors[i].second != 1)
            os << '^' << factors[i].second;
    }
    return os.str();
}

CyclotomicProfile cyclotomicProfile(const IntPoly& charpoly)
{
    require(!charpoly.isZero() && charpoly.leading() == 1, "cyclotomicProfile: monic polynomial required");
    CyclotomicProfile profile;
    IntPoly rest = charpoly;
    for (std::uint64_t d = 1; rest.degree() > 0; ++d) {
        const std::uint64_t phi = eulerPhi(d);
        // phi(d) >= sqrt(d / 2), so no cyclotomic factor of degree <= deg(rest) has d beyond this.
        ensure(d <= 2 * static_cast<std::uint64_t>(rest.degree() * rest.degree()) + 2,
               "characteristic polynomial has a non-cyclotomic factor: " + rest.toString());
        if (phi > static_cast<std::uint64_t>(rest.degree()))
            continue;
        unsigned mult = 0;
        for (;;) {
            auto div = divideByMonic(rest, cyclotomic(d));
            if (!div.remainder.isZero())
                break;
            rest = std::move(div.quotient);
            ++mult;
        }
        if (mult)
            profile.factors.emplace_back(d, mult);
    }
    ensure(rest == IntPoly{1}, "characteristic polynomial has a non-cyclotomic factor");
    return profile;
}

CyclotomicProfile parseProfile(const std::string& text)
{
    CyclotomicProfile p;
    std::size_t i = 0;
    auto readNumber = [&](const char* what) {
        require(i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])),
                std::string("malformed profile '") + text + "': expected " + what);
        std::uint64_t v = 0;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
            v = v * 10 + static_cast<std::uint64_t>(text[i++] - '0');
        return v;
    };
    while (i < text.size()) {
        if (text[i] == ' ' || text[i] == '*') {
            ++i;
            continue;
        }
        require(text.compare(i, 3, "Phi") == 0, "malformed profile '" + text + "'");
        i += 3;
        const std::uint64_t d = readNumber("an index");
        require(d >= 1, "malformed profile '" + text + "': index 0");
        unsigned mult = 1;
        if (i < text.size() && text[i] == '^') {
            ++i;
            mult = static_cast<unsigned>(readNumber("an exponent"));
        }
        bool merged = false;
        for (auto& f : p.factors)
            if (f.first == d) {
                f.second += mult;
                merged = true;
            }
        if (!merged)
            p.factors.emplace_back(d, mult);
    }
    std::sort(p.factors.begin(), p.factors.end());
    return p;
}

Isometry::Isometry(GramLattice lattice, IntMatrix matrix, std::string claimedClass)
    : lattice_(std::move(lattice)), matrix_(std::move(matrix)), claimed_(std::move(claimedClass))
{
    require(matrix_.rows() == lattice_.rank() && matrix_.cols() == lattice_.rank(),
            "isometry matrix size does not match the lattice rank");
    require(matrix_.transpose() * lattice_.gram() * matrix_ == lattice_.gram(),
            "matrix does not preserve the Gram matrix");
    profile_ = cyclotomicProfile(charPoly(matrix_));
}

Isometry Isometry::identity(const GramLattice& l) { return Isometry(l, IntMatrix::identity(l.rank())); }

Isometry Isometry::negation(const GramLattice& l) { return Isometry(l, -IntMatrix::identity(l.rank())); }

Isometry Isometry::power(std::int64_t k) const
{
    const auto n = static_cast<std::int64_t>(order());
    const std::int64_t e = ((k % n) + n) % n;
    return Isometry(lattice_, matrixPower(matrix_, static_cast<std::uint64_t>(e)));
}

Isometry Isometry::after(const Isometry& other) const
{
    require(other.lattice_.gram() == lattice_.gram(), "isometries act on different lattices");
    return Isometry(lattice_, matrix_ * other.matrix_);
}

IntVector Isometry::apply(const IntVector& v) const { return matrix_.apply(v); }

Coords Isometry::apply(const Coords& v) const { return toCoords(matrix_.apply(toIntVector(v))); }

std::uint64_t isometryOrder(const Isometry& g) { return g.order(); }

Sublattice fixedSublattice(const Isometry& g)
{
    const IntMatrix k = integerKernel(g.matrix() - IntMatrix::identity(g.rank()));
    Sublattice s;
    s.embedding = k;
    s.lattice = GramLattice(k.transpose() * g.lattice().gram() * k);
    s.index = k.cols() == g.rank() ? latticeIndex(g.lattice(), k) : Int(0);
    if (g.rank() == 0)
        s.index = 1;
    return s;
}

Sublattice coinvariantSublattice(const Isometry& g)
{
    const Sublattice fixed = fixedSublattice(g);
    IntMatrix k;
    if (fixed.embedding.cols() == 0)
        k = IntMatrix::identity(g.rank());
    else
        k = integerKernel(fixed.embedding.transpose() * g.lattice().gram());
    Sublattice s;
    s.embedding = k;
    s.lattice = GramLattice(k.transpose() * g.lattice().gram() * k);
    s.index = k.cols() == g.rank() ? (g.rank() == 0 ? Int(1) : latticeIndex(g.lattice(), k)) : Int(0);
    return s;
}

bool isFixedPointFree(const Isometry& g) { return g.profile().multiplicity(1) == 0; }

bool isCompletelyFixedPointFree(const Isometry& g)
{
    const auto& f = g.profile().factors;
    return f.empty() || (f.size() == 1 && f.front().first == g.order());
}

std::vector<std::uint64_t> eigenspaceDims(const CyclotomicProfile& profile, std::uint64_t n)
{
    require(n >= 1 && n % profile.order() == 0, "eigenspaceDims: n must be a multiple of the order");
    std::vector<std::uint64_t> dims(n);
    for (std::uint64_t j = 0; j < n; ++j)
        dims[j] = profile.multiplicity(n / gcd(j, n));
    return dims;
}

std::vector<std::uint64_t> eigenspaceDims(const Isometry& g) { return eigenspaceDims(g.profile(), g.order()); }

Int detOneMinusPower(const Isometry& g, std::int64_t s)
{
    const IntMatrix gs = g.power(s).matrix();
    return abs(determinant(IntMatrix::identity(g.rank()) - gs));
}

Isometry restrictTo(const Isometry& g, const Sublattice& sub)
{
    const IntMatrix& e = sub.embedding;
    require(e.rows() == g.rank(), "restrictTo: embedding does not match the lattice");
    if (e.cols() == 0)
        return Isometry(sub.lattice, IntMatrix(0, 0));
    const IntMatrix ge = g.matrix() * e;
    const RatMatrix r = inverse(sub.lattice.gram()) * toRational(e.transpose() * g.lattice().gram() * ge);
    require(isIntegral(r), "restrictTo: the sublattice is not stable under the isometry");
    const IntMatrix ri = toIntegral(r);
    require(e * ri == ge, "restrictTo: the sublattice is not stable under the isometry");
    return Isometry(sub.lattice, ri, g.claimedClass());
}

ClassInvariant classInvariant(const Isometry& g)
{
    ClassInvariant c;
    c.order = g.order();
    c.profile = g.profile();
    IntMatrix p = IntMatrix::identity(g.rank());
    for (std::uint64_t s = 1; s <= c.order; ++s) {
        p = p * g.matrix();
        c.traces.push_back(p.trace());
        const auto prof = cyclotomicProfile(charPoly(p));
        c.fixedRanks.push_back(prof.multiplicity(1));
    }
    return c;
}

IntMatrix reflectionMatrix(const GramLattice& l, const IntVector& a)
{
    const Int aa = l.norm(a);
    require(aa > 0, "reflectionMatrix: zero vector");
    const std::size_t n = l.rank();
    IntMatrix m = IntMatrix::identity(n);
    for (std::size_t j = 0; j < n; ++j) {
        // (e_j | a)
        Int p(0);
        for (std::size_t i = 0; i < n; ++i)
            p += l.gram()(j, i) * a[i];
        require((2 * p) % aa == 0, "reflectionMatrix: reflection is not integral on the lattice");
        const Int c = 2 * p / aa;
        for (std::size_t i = 0; i < n; ++i)
            m(i, j) -= c * a[i];
    }
    return m;
}

std::vector<IntMatrix> simpleReflections(const GramLattice& l)
{
    std::vector<IntMatrix> gens;
    for (std::size_t i = 0; i < l.rank(); ++i) {
        IntVector e(l.rank(), Int(0));
        e[i] = 1;
        gens.push_back(reflectionMatrix(l, e));
    }
    return gens;
}

} // namespace orbilat
