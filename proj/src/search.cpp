#include "orbilat/search.hpp"

#include "orbilat/errors.hpp"
#include "orbilat/number_theory.hpp"

#include <random>

namespace orbilat {

namespace {

constexpr std::int64_t kEntryLimit = std::int64_t(1) << 40;
constexpr std::size_t kOrderLimit = 120;

struct Mat64 {
    std::size_t n = 0;
    std::vector<std::int64_t> a;

    static Mat64 identity(std::size_t n)
    {
        Mat64 m{n, std::vector<std::int64_t>(n * n, 0)};
        for (std::size_t i = 0; i < n; ++i)
            m.a[i * n + i] = 1;
        return m;
    }
    bool isScalar(std::int64_t s) const
    {
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (a[i * n + j] != (i == j ? s : 0))
                    return false;
        return true;
    }
    std::int64_t trace() const
    {
        std::int64_t t = 0;
        for (std::size_t i = 0; i < n; ++i)
            t += a[i * n + i];
        return t;
    }
};

// nullopt when an entry leaves the safe range
std::optional<Mat64> multiply(const Mat64& x, const Mat64& y)
{
    const std::size_t n = x.n;
    Mat64 r{n, std::vector<std::int64_t>(n * n, 0)};
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) {
            const std::int64_t v = x.a[i * n + k];
            if (v == 0)
                continue;
            for (std::size_t j = 0; j < n; ++j)
                r.a[i * n + j] += v * y.a[k * n + j];
        }
    for (const auto v : r.a)
        if (v > kEntryLimit || v < -kEntryLimit)
            return std::nullopt;
    return r;
}

Mat64 toMat64(const IntMatrix& m)
{
    Mat64 r{m.rows(), std::vector<std::int64_t>(m.rows() * m.rows())};
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) {
            require(abs(m(i, j)) < kEntryLimit, "findIsometryWithProfile: generator entries too large");
            r.a[i * r.n + j] = toInt64(m(i, j));
        }
    return r;
}

IntMatrix toIntMatrix(const Mat64& m)
{
    IntMatrix r(m.n, m.n);
    for (std::size_t i = 0; i < m.n; ++i)
        for (std::size_t j = 0; j < m.n; ++j)
            r(i, j) = toInt(m.a[i * m.n + j]);
    return r;
}

std::int64_t ramanujanSum(std::uint64_t d, std::uint64_t s)
{
    const std::uint64_t g = gcd(d, s);
    std::int64_t c = 0;
    for (std::uint64_t k = 1; k <= g; ++k)
        if (g % k == 0)
            c += moebius(d / k) * static_cast<std::int64_t>(k);
    return c;
}

} // namespace

Int profileTrace(const CyclotomicProfile& profile, std::uint64_t s)
{
    Int t(0);
    for (const auto& [d, mult] : profile.factors)
        t += Int(static_cast<long>(mult)) * ramanujanSum(d, s);
    return t;
}

bool satisfies(const Isometry& g, const IsometryConstraints& c)
{
    if (c.order && g.order() != *c.order)
        return false;
    if (c.profile && !(g.profile() == *c.profile))
        return false;
    if (c.negativePower && !(g.power(static_cast<std::int64_t>(*c.negativePower)).matrix()
                             == -IntMatrix::identity(g.rank())))
        return false;
    for (const auto& [s, t] : c.traces)
        if (g.power(static_cast<std::int64_t>(s)).trace() != t)
            return false;
    return true;
}

SearchResult findIsometryWithProfile(const GramLattice& l, const std::vector<IntMatrix>& generators,
                                     const IsometryConstraints& constraints, const SearchOptions& options)
{
    require(constraints.order || constraints.profile, "findIsometryWithProfile: an order or a profile is required");
    const std::uint64_t n = constraints.order ? *constraints.order : constraints.profile->order();
    require(!constraints.profile || constraints.profile->order() == n,
            "findIsometryWithProfile: order does not match the profile");
    require(!constraints.profile || constraints.profile->degree() == l.rank(),
            "findIsometryWithProfile: profile degree does not match the rank");
    require(options.maxWordLength >= 1, "findIsometryWithProfile: word length must be positive");
    for (const auto& g : generators)
        require(g.rows() == l.rank() && g.cols() == l.rank() && g.transpose() * l.gram() * g == l.gram(),
                "findIsometryWithProfile: generator is not an isometry of the lattice");

    SearchResult result;
    result.seed = options.seed;
    const std::size_t rank = l.rank();

    auto accept = [&](const IntMatrix& m) -> bool {
        Isometry g(l, m);
        if (!satisfies(g, constraints))
            return false;
        result.isometry = std::move(g);
        return true;
    };

    // I and -I are the only candidates of order <= 2 that need no search.
    if (n <= 2 && accept(n == 1 ? IntMatrix::identity(rank) : -IntMatrix::identity(rank)))
        return result;
    if (generators.empty())
        return result;

    // Target traces of c^s, s = 1..n, when a profile is given.
    std::vector<std::optional<std::int64_t>> want(n + 1);
    if (constraints.profile)
        for (std::uint64_t s = 1; s <= n; ++s)
            want[s] = toInt64(profileTrace(*constraints.profile, s));
    for (const auto& [s, t] : constraints.traces)
        if (s >= 1 && s <= n) {
            if (want[s] && *want[s] != t)
                return result; // contradictory constraints
            want[s] = toInt64(t);
        }
    const auto primes = primeDivisors(n);

    std::vector<Mat64> gens;
    for (const auto& g : generators)
        gens.push_back(toMat64(g));
    std::mt19937_64 rng(options.seed);
    std::uniform_int_distribution<std::size_t> pickGen(0, gens.size() - 1);
    std::uniform_int_distribution<std::size_t> pickLen(1, options.maxWordLength);

    std::vector<Mat64> powers;
    for (std::uint64_t w = 0; w < options.budget; ++w) {
        result.wordsTried = w + 1;
        Mat64 h = Mat64::identity(rank);
        const std::size_t len = pickLen(rng);
        bool ok = true;
        for (std::size_t i = 0; i < len && ok; ++i) {
            auto next = multiply(h, gens[pickGen(rng)]);
            if (next)
                h = std::move(*next);
            else
                ok = false;
        }
        if (!ok)
            continue;

        // powers[k] = h^k up to the order of h
        powers.assign(1, Mat64::identity(rank));
        std::size_t m = 0;
        while (powers.size() <= kOrderLimit) {
            auto next = multiply(powers.back(), h);
            if (!next)
                break;
            powers.push_back(std::move(*next));
            if (powers.back().isScalar(1)) {
                m = powers.size() - 1;
                break;
            }
        }
        if (m == 0 || m % n != 0)
            continue;
        const std::size_t step = m / n;
        auto cpow = [&](std::uint64_t s) -> const Mat64& { return powers[(step * s) % m]; };
        bool match = true;
        for (std::uint64_t s = 1; s <= n && match; ++s)
            if (want[s] && cpow(s).trace() != *want[s])
                match = false;
        for (const auto q : primes)
            if (match && cpow(n / q).isScalar(1))
                match = false;
        if (match && constraints.negativePower && !cpow(*constraints.negativePower).isScalar(-1))
            match = false;
        if (match && accept(toIntMatrix(cpow(1))))
            return result;
    }
    return result;
}

} // namespace orbilat
