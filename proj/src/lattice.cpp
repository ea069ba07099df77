#include "orbilat/lattice.hpp"

#include "orbilat/errors.hpp"

#include <algorithm>
#include <cstdlib>
#include <mutex>
#include <sstream>
#include <thread>

namespace orbilat {

struct ShellCache {
    std::mutex mutex;
    std::map<std::int64_t, std::shared_ptr<const ShellMap>> byBound;
};

GramLattice::GramLattice() : cache_(std::make_shared<ShellCache>()) {}

GramLattice::GramLattice(IntMatrix gram, std::string name)
    : gram_(std::move(gram)), name_(std::move(name)), cache_(std::make_shared<ShellCache>())
{
    require(gram_.isSymmetric(), "Gram matrix must be square and symmetric");
    for (const auto& minor : leadingPrincipalMinors(gram_))
        require(minor > 0, "Gram matrix is not positive definite");
}

GramLattice GramLattice::renamed(std::string name) const
{
    GramLattice l = *this;
    l.name_ = std::move(name);
    return l;
}

Int GramLattice::pairing(const IntVector& u, const IntVector& v) const
{
    require(u.size() == rank() && v.size() == rank(), "vector length does not match the lattice rank");
    Int s(0);
    for (std::size_t i = 0; i < rank(); ++i) {
        if (u[i] == 0)
            continue;
        Int row(0);
        for (std::size_t j = 0; j < rank(); ++j)
            row += gram_(i, j) * v[j];
        s += u[i] * row;
    }
    return s;
}

Int GramLattice::norm(const IntVector& v) const { return pairing(v, v); }

Int GramLattice::norm(const Coords& v) const { return norm(toIntVector(v)); }

Int GramLattice::determinant() const { return orbilat::determinant(gram_); }

IntVector toIntVector(const Coords& c)
{
    IntVector v;
    v.reserve(c.size());
    for (auto x : c)
        v.push_back(toInt(x));
    return v;
}

Coords toCoords(const IntVector& v)
{
    Coords c;
    c.reserve(v.size());
    for (const auto& x : v)
        c.push_back(toInt64(x));
    return c;
}

bool checkEven(const IntMatrix& gram)
{
    require(gram.isSymmetric(), "checkEven: Gram matrix must be symmetric");
    for (std::size_t i = 0; i < gram.rows(); ++i)
        if (gram(i, i) % 2 != 0)
            return false;
    return true;
}

bool checkEven(const GramLattice& l) { return checkEven(l.gram()); }

bool isDoublyEven(const GramLattice& l)
{
    const auto& g = l.gram();
    for (std::size_t i = 0; i < g.rows(); ++i) {
        if (g(i, i) % 4 != 0)
            return false;
        for (std::size_t j = 0; j < g.cols(); ++j)
            if (g(i, j) % 2 != 0)
                return false;
    }
    return true;
}

std::string DiscriminantGroup::toString() const
{
    if (divisors.empty())
        return "trivial";
    std::ostringstream os;
    std::size_t i = 0;
    bool first = true;
    while (i < divisors.size()) {
        std::size_t j = i;
        while (j < divisors.size() && divisors[j] == divisors[i])
            ++j;
        if (!first)
            os << " x ";
        first = false;
        if (j - i == 1)
            os << "Z" << divisors[i].get_str();
        else
            os << "(Z" << divisors[i].get_str() << ")^" << (j - i);
        i = j;
    }
    return os.str();
}

DiscriminantGroup discriminantGroup(const GramLattice& l)
{
    const Int det = l.determinant();
    require(det != 0, "discriminantGroup: singular Gram matrix");
    DiscriminantGroup d;
    for (const auto& x : smithNormalForm(l.gram()).diagonal)
        if (x > 1)
            d.divisors.push_back(x);
    d.order = abs(det);
    return d;
}

RationalVector CosetShell::vector(std::size_t i) const
{
    RationalVector v;
    for (auto x : vectors.at(i))
        v.push_back(makeRational(toInt(x), denominator));
    return v;
}

ReducedBasis lllReduce(const IntMatrix& gram)
{
    require(gram.isSymmetric(), "lllReduce: symmetric Gram matrix required");
    const std::size_t n = gram.rows();
    IntMatrix g = gram;
    IntMatrix h = IntMatrix::identity(n);
    if (n <= 1)
        return {h, g};

    // d[i + 1] is the i-th leading Gram determinant of the current basis; d[0] = 1.
    std::vector<Int> d(n + 1, Int(0));
    IntMatrix lambda(n, n);
    d[0] = 1;
    d[1] = g(0, 0);

    auto reduce = [&](std::size_t k, std::size_t l) {
        if (2 * abs(lambda(k, l)) <= d[l + 1])
            return;
        const Int q = floorDiv(2 * lambda(k, l) + d[l + 1], 2 * d[l + 1]);
        g.addRowMultiple(k, l, -q);
        g.addColMultiple(k, l, -q);
        h.addColMultiple(k, l, -q);
        lambda(k, l) -= q * d[l + 1];
        for (std::size_t i = 0; i < l; ++i)
            lambda(k, i) -= q * lambda(l, i);
    };

    std::size_t k = 1;
    std::size_t kmax = 0;
    while (k < n) {
        if (k > kmax) {
            kmax = k;
            for (std::size_t j = 0; j <= k; ++j) {
                Int u = g(k, j);
                for (std::size_t i = 0; i < j; ++i) {
                    u = d[i + 1] * u - lambda(k, i) * lambda(j, i);
                    mpz_divexact(u.get_mpz_t(), u.get_mpz_t(), d[i].get_mpz_t());
                }
                if (j < k)
                    lambda(k, j) = u;
                else
                    d[k + 1] = u;
            }
            ensure(d[k + 1] > 0, "lllReduce: Gram matrix is not positive definite");
        }
        reduce(k, k - 1);
        if (4 * d[k + 1] * d[k - 1] < 3 * d[k] * d[k] - 4 * lambda(k, k - 1) * lambda(k, k - 1)) {
            g.swapRows(k, k - 1);
            g.swapCols(k, k - 1);
            h.swapCols(k, k - 1);
            for (std::size_t j = 0; j + 1 < k; ++j)
                std::swap(lambda(k, j), lambda(k - 1, j));
            const Int lam = lambda(k, k - 1);
            Int b = d[k - 1] * d[k + 1] + lam * lam;
            mpz_divexact(b.get_mpz_t(), b.get_mpz_t(), d[k].get_mpz_t());
            for (std::size_t i = k + 1; i <= kmax; ++i) {
                const Int t = lambda(i, k);
                Int a = d[k + 1] * lambda(i, k - 1) - lam * t;
                mpz_divexact(a.get_mpz_t(), a.get_mpz_t(), d[k].get_mpz_t());
                lambda(i, k) = a;
                Int c = b * t + lam * lambda(i, k);
                mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), d[k + 1].get_mpz_t());
                lambda(i, k - 1) = c;
            }
            d[k] = b;
            if (k > 1)
                --k;
        } else {
            for (std::size_t l = k - 1; l-- > 0;)
                reduce(k, l);
            ++k;
        }
    }
    ensure(h.transpose() * gram * h == g, "lllReduce: Gram bookkeeping diverged");
    return {h, g};
}

namespace {

// ---------------------------------------------------------------------------------------------
// Exact Fincke-Pohst enumeration. The quadratic form is written as
//   Q(z) = sum_i q_ii (z_i + sum_{j>i} q_ij z_j)^2
// and scaled by a common integer E so that every level compares integers:
//   E * q_ii (...)^2 = w_i X_i^2,   X_i = den_i z_i + sum_{j>i} m_ij z_j.
// The engine runs on checked __int128 first and falls back to GMP integers on overflow.

struct Overflow {};

using i128 = __int128;

inline i128 mulc(i128 a, i128 b)
{
    i128 r;
    if (__builtin_mul_overflow(a, b, &r))
        throw Overflow{};
    return r;
}
inline i128 addc(i128 a, i128 b)
{
    i128 r;
    if (__builtin_add_overflow(a, b, &r))
        throw Overflow{};
    return r;
}
inline i128 subc(i128 a, i128 b)
{
    i128 r;
    if (__builtin_sub_overflow(a, b, &r))
        throw Overflow{};
    return r;
}
inline i128 fdiv(i128 a, i128 b)
{
    i128 q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0)))
        --q;
    return q;
}
inline i128 cdiv(i128 a, i128 b) { return -fdiv(-a, b); }
inline i128 isqrtN(i128 v)
{
    if (v < 2)
        return v;
    int bits = 0;
    for (i128 t = v; t > 0; t >>= 1)
        ++bits;
    i128 x = static_cast<i128>(1) << ((bits + 1) / 2);
    for (;;) {
        const i128 y = (x + v / x) / 2;
        if (y >= x)
            return x;
        x = y;
    }
}
inline i128 modN(i128 a, i128 q)
{
    i128 r = a % q;
    return r < 0 ? r + q : r;
}
inline i128 fromInt(const Int& v, i128*)
{
    if (mpz_sizeinbase(v.get_mpz_t(), 2) > 120)
        throw Overflow{};
    Int a = abs(v);
    const Int lo = a % Int("18446744073709551616");
    const Int hi = a / Int("18446744073709551616");
    i128 r = (static_cast<i128>(hi.get_ui()) << 64) | static_cast<i128>(lo.get_ui());
    return v < 0 ? -r : r;
}
inline std::int64_t toI64(i128 v)
{
    if (v > INT64_MAX || v < INT64_MIN)
        throw Overflow{};
    return static_cast<std::int64_t>(v);
}

inline Int mulc(const Int& a, const Int& b) { return a * b; }
inline Int addc(const Int& a, const Int& b) { return a + b; }
inline Int subc(const Int& a, const Int& b) { return a - b; }
inline Int fdiv(const Int& a, const Int& b) { return floorDiv(a, b); }
inline Int cdiv(const Int& a, const Int& b) { return ceilDiv(a, b); }
inline Int isqrtN(const Int& v) { return isqrt(v); }
inline Int modN(const Int& a, const Int& q)
{
    Int r;
    mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), q.get_mpz_t());
    return r;
}
inline Int fromInt(const Int& v, Int*) { return v; }
inline std::int64_t toI64(const Int& v)
{
    if (!v.fits_slong_p())
        throw Overflow{};
    return v.get_si();
}

/// Exact level data shared by both integer backends.
struct FormData {
    std::size_t n = 0;
    std::vector<Int> den;
    std::vector<std::vector<Int>> m; // m[i][j], j > i
    std::vector<Int> w;
    Int scale; // E
};

FormData decompose(const IntMatrix& gram)
{
    const std::size_t n = gram.rows();
    RatMatrix q = toRational(gram);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            q(j, i) = q(i, j);
            q(i, j) /= q(i, i);
        }
        for (std::size_t k = i + 1; k < n; ++k)
            for (std::size_t l = k; l < n; ++l)
                q(k, l) -= q(k, i) * q(i, l);
    }
    FormData f;
    f.n = n;
    f.den.resize(n);
    f.m.assign(n, std::vector<Int>(n, Int(0)));
    f.w.resize(n);
    std::vector<Int> ei(n);
    f.scale = 1;
    for (std::size_t i = 0; i < n; ++i) {
        ensure(q(i, i) > 0, "enumeration: Gram matrix is not positive definite");
        Int den(1);
        for (std::size_t j = i + 1; j < n; ++j)
            den = lcm(den, q(i, j).get_den());
        f.den[i] = den;
        for (std::size_t j = i + 1; j < n; ++j) {
            const Rational scaled = q(i, j) * Rational(den);
            f.m[i][j] = scaled.get_num();
        }
        ei[i] = q(i, i).get_den() * den * den;
        f.scale = lcm(f.scale, ei[i]);
    }
    for (std::size_t i = 0; i < n; ++i)
        f.w[i] = q(i, i).get_num() * (f.scale / ei[i]);
    return f;
}

struct Leaf {
    Coords z;
    std::int64_t scaledNorm; // q^2 * Q(z)
};

template <class N>
class Enumerator {
public:
    Enumerator(const FormData& f, const Int& modulus, const std::vector<Int>& residues, const Int& budget)
        : n_(f.n), q_(fromInt(modulus, static_cast<N*>(nullptr))),
          scale_(fromInt(f.scale, static_cast<N*>(nullptr))),
          budget_(fromInt(budget, static_cast<N*>(nullptr))), z_(f.n), cur_(f.n)
    {
        for (std::size_t i = 0; i < n_; ++i) {
            den_.push_back(fromInt(f.den[i], static_cast<N*>(nullptr)));
            w_.push_back(fromInt(f.w[i], static_cast<N*>(nullptr)));
            res_.push_back(fromInt(residues[i], static_cast<N*>(nullptr)));
            std::vector<N> row;
            for (std::size_t j = 0; j < n_; ++j)
                row.push_back(fromInt(f.m[i][j], static_cast<N*>(nullptr)));
            m_.push_back(std::move(row));
        }
    }

    /// Admissible values of the outermost coordinate.
    std::vector<N> outerValues() const
    {
        std::vector<N> vals;
        range(n_ - 1, budget_, [&](const N& zi, const N&) { vals.push_back(zi); });
        return vals;
    }

    void runOuter(const N& zi, std::vector<Leaf>& out)
    {
        out_ = &out;
        const std::size_t top = n_ - 1;
        z_[top] = zi;
        const N x = addc(mulc(den_[top], zi), N(0));
        const N rem = subc(budget_, mulc(w_[top], mulc(x, x)));
        descend(top, rem);
    }

private:
    template <class F>
    void range(std::size_t i, const N& budget, F&& visit) const
    {
        N c(0);
        for (std::size_t j = i + 1; j < n_; ++j)
            c = addc(c, mulc(m_[i][j], z_[j]));
        const N s = isqrtN(fdiv(budget, w_[i]));
        N lo = cdiv(subc(-s, c), den_[i]);
        const N hi = fdiv(subc(s, c), den_[i]);
        if (q_ != 1)
            lo = addc(lo, modN(subc(res_[i], lo), q_));
        for (N zi = lo; zi <= hi; zi = addc(zi, q_)) {
            const N x = addc(mulc(den_[i], zi), c);
            visit(zi, subc(budget, mulc(w_[i], mulc(x, x))));
        }
    }

    void descend(std::size_t level, const N& rem)
    {
        if (level == 0) {
            Leaf leaf;
            leaf.z.reserve(n_);
            for (std::size_t i = 0; i < n_; ++i)
                leaf.z.push_back(toI64(z_[i]));
            const N used = subc(budget_, rem);
            leaf.scaledNorm = toI64(used / scale_);
            out_->push_back(std::move(leaf));
            return;
        }
        const std::size_t i = level - 1;
        range(i, rem, [&](const N& zi, const N& next) {
            z_[i] = zi;
            descend(i, next);
        });
    }

    std::size_t n_;
    N q_;
    N scale_;
    N budget_;
    std::vector<N> den_, w_, res_;
    std::vector<std::vector<N>> m_;
    mutable std::vector<N> z_;
    std::vector<N> cur_;
    std::vector<Leaf>* out_ = nullptr;
};

template <class N>
std::vector<Leaf> runEnumeration(const FormData& f, const Int& modulus, const std::vector<Int>& residues,
                                 const Int& budget)
{
    Enumerator<N> root(f, modulus, residues, budget);
    const auto outer = root.outerValues();
    const unsigned threads = std::min<unsigned>(workerThreads(), static_cast<unsigned>(std::max<std::size_t>(1, outer.size())));
    std::vector<std::vector<Leaf>> parts(threads);
    if (threads <= 1) {
        for (const auto& v : outer)
            root.runOuter(v, parts[0]);
    } else {
        std::vector<std::thread> pool;
        std::vector<int> overflowed(threads, 0);
        for (unsigned t = 0; t < threads; ++t)
            pool.emplace_back([&, t] {
                try {
                    Enumerator<N> e(f, modulus, residues, budget);
                    for (std::size_t k = t; k < outer.size(); k += threads)
                        e.runOuter(outer[k], parts[t]);
                } catch (const Overflow&) {
                    overflowed[t] = 1;
                }
            });
        for (auto& th : pool)
            th.join();
        for (int o : overflowed)
            if (o)
                throw Overflow{};
    }
    std::vector<Leaf> all;
    for (auto& p : parts)
        for (auto& l : p)
            all.push_back(std::move(l));
    return all;
}

/// Integer points y = U z with y == target (mod modulus) and y^T G y <= modulus^2 * bound.
/// Returns y together with modulus^2 * norm.
std::vector<std::pair<Coords, std::int64_t>> enumerateCoset(const IntMatrix& gram, const Int& modulus,
                                                           const IntVector& target, std::int64_t bound)
{
    const std::size_t n = gram.rows();
    const ReducedBasis red = lllReduce(gram);
    const IntMatrix uInv = toIntegral(inverse(red.transform), "inverse basis change");
    std::vector<Int> residues(n);
    for (std::size_t i = 0; i < n; ++i) {
        Int s(0);
        for (std::size_t j = 0; j < n; ++j)
            s += uInv(i, j) * target[j];
        residues[i] = modN(s, modulus);
    }
    const FormData f = decompose(red.gram);
    const Int budget = f.scale * modulus * modulus * Int(static_cast<long>(bound));

    std::vector<Leaf> leaves;
    try {
        leaves = runEnumeration<i128>(f, modulus, residues, budget);
    } catch (const Overflow&) {
        leaves = runEnumeration<Int>(f, modulus, residues, budget);
    }

    std::vector<std::vector<i128>> u(n, std::vector<i128>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            u[i][j] = fromInt(red.transform(i, j), static_cast<i128*>(nullptr));

    std::vector<std::pair<Coords, std::int64_t>> out;
    out.reserve(leaves.size());
    for (const auto& leaf : leaves) {
        Coords y(n);
        for (std::size_t i = 0; i < n; ++i) {
            i128 s = 0;
            for (std::size_t j = 0; j < n; ++j)
                if (leaf.z[j] != 0)
                    s = addc(s, mulc(u[i][j], leaf.z[j]));
            y[i] = toI64(s);
        }
        out.emplace_back(std::move(y), leaf.scaledNorm);
    }
    return out;
}

} // namespace

unsigned workerThreads()
{
    if (const char* env = std::getenv("ORBILAT_THREADS")) {
        const long v = std::strtol(env, nullptr, 10);
        if (v >= 1)
            return static_cast<unsigned>(std::min<long>(v, 256));
    }
    return 1;
}

ShellMap shortVectors(const GramLattice& l, std::int64_t normBound)
{
    require(normBound > 0, "shortVectors: the norm bound must be positive");
    ShellMap shells;
    if (l.rank() == 0)
        return shells;
    auto points = enumerateCoset(l.gram(), Int(1), IntVector(l.rank(), Int(0)), normBound);
    std::sort(points.begin(), points.end());
    for (auto& [y, nrm] : points) {
        if (nrm == 0)
            continue;
        auto& shell = shells[nrm];
        if (shell.vectors.empty()) {
            shell.shift.assign(l.rank(), Rational(0));
            shell.norm = toInt(nrm);
        }
        shell.vectors.push_back(std::move(y));
    }
    return shells;
}

std::shared_ptr<const ShellMap> shortVectorsCached(const GramLattice& l, std::int64_t normBound)
{
    auto& cache = l.cache();
    std::lock_guard<std::mutex> lock(cache.mutex);
    auto it = cache.byBound.find(normBound);
    if (it != cache.byBound.end())
        return it->second;
    auto shells = std::make_shared<const ShellMap>(shortVectors(l, normBound));
    cache.byBound.emplace(normBound, shells);
    return shells;
}

bool inDual(const GramLattice& l, const RationalVector& shift)
{
    require(shift.size() == l.rank(), "shift length does not match the lattice rank");
    for (std::size_t i = 0; i < l.rank(); ++i) {
        Rational s(0);
        for (std::size_t j = 0; j < l.rank(); ++j)
            s += Rational(l.gram()(i, j)) * shift[j];
        if (s.get_den() != 1)
            return false;
    }
    return true;
}

CosetShell cosetShortVectors(const GramLattice& l, const RationalVector& shift, std::int64_t norm)
{
    require(norm > 0, "cosetShortVectors: the norm must be positive");
    require(inDual(l, shift), "cosetShortVectors: the shift is not in the dual lattice");
    CosetShell shell;
    shell.shift = shift;
    shell.norm = toInt(norm);
    Int q(1);
    for (const auto& s : shift)
        q = lcm(q, s.get_den());
    shell.denominator = q;
    if (l.rank() == 0)
        return shell;
    IntVector target;
    for (const auto& s : shift)
        target.push_back(Rational(s * q).get_num());
    const Int wanted = q * q * Int(static_cast<long>(norm));
    auto points = enumerateCoset(l.gram(), q, target, norm);
    for (auto& [y, nrm] : points)
        if (toInt(nrm) == wanted)
            shell.vectors.push_back(std::move(y));
    std::sort(shell.vectors.begin(), shell.vectors.end());
    return shell;
}

Int latticeIndex(const GramLattice& parent, const IntMatrix& embedding)
{
    require(embedding.rows() == parent.rank() && embedding.cols() == parent.rank(),
            "latticeIndex: the embedding must be square of the parent's rank");
    const Int d = abs(determinant(embedding));
    require(d != 0, "latticeIndex: the embedding is rank deficient");
    return d;
}

Sublattice sublatticeByFunctional(const GramLattice& l, const IntVector& f, const Int& modulus)
{
    const std::size_t n = l.rank();
    require(f.size() == n, "sublatticeByFunctional: functional length does not match the rank");
    require(modulus >= 1, "sublatticeByFunctional: modulus must be positive");
    IntMatrix row(1, n + 1);
    for (std::size_t i = 0; i < n; ++i)
        row(0, i) = f[i];
    row(0, n) = modulus;
    const IntMatrix k = integerKernel(row);
    ensure(k.cols() == n, "sublatticeByFunctional: unexpected kernel rank");
    const IntMatrix emb = hermiteRowBasis(k.submatrix(0, 0, n, n).transpose()).transpose();
    Sublattice s;
    s.embedding = emb;
    s.lattice = GramLattice(emb.transpose() * l.gram() * emb);
    s.index = n == 0 ? Int(1) : latticeIndex(l, emb);
    return s;
}

Sublattice spannedSublattice(const GramLattice& l, const IntMatrix& generatorColumns)
{
    require(generatorColumns.rows() == l.rank(), "spannedSublattice: generator length does not match the rank");
    const IntMatrix basisRows = hermiteRowBasis(generatorColumns.transpose());
    Sublattice s;
    s.embedding = basisRows.transpose();
    if (basisRows.rows() == 0)
        s.embedding = IntMatrix(l.rank(), 0);
    s.lattice = GramLattice(s.embedding.transpose() * l.gram() * s.embedding);
    s.index = s.embedding.cols() == l.rank() && l.rank() > 0 ? latticeIndex(l, s.embedding)
              : (l.rank() == 0 ? Int(1) : Int(0));
    return s;
}

GramLattice changeBasis(const GramLattice& l, const IntMatrix& u)
{
    require(u.rows() == l.rank() && u.cols() == l.rank(), "changeBasis: matrix size does not match the rank");
    require(abs(determinant(u)) == 1, "changeBasis: matrix is not unimodular");
    return GramLattice(u.transpose() * l.gram() * u, l.name());
}

} // namespace orbilat
