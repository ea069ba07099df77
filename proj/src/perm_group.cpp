#include "orbilat/perm_group.hpp"

#include "orbilat/errors.hpp"
#include "orbilat/number_theory.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>

namespace orbilat {

Perm identityPerm(std::size_t n)
{
    Perm p(n);
    std::iota(p.begin(), p.end(), 0U);
    return p;
}

Perm compose(const Perm& a, const Perm& b)
{
    Perm r(b.size());
    for (std::size_t i = 0; i < b.size(); ++i)
        r[i] = a[b[i]];
    return r;
}

Perm inversePerm(const Perm& p)
{
    Perm r(p.size());
    for (std::size_t i = 0; i < p.size(); ++i)
        r[p[i]] = static_cast<std::uint32_t>(i);
    return r;
}

bool isIdentity(const Perm& p)
{
    for (std::size_t i = 0; i < p.size(); ++i)
        if (p[i] != i)
            return false;
    return true;
}

Perm powerPerm(const Perm& p, std::int64_t k)
{
    Perm base = k < 0 ? inversePerm(p) : p;
    std::uint64_t e = static_cast<std::uint64_t>(k < 0 ? -k : k);
    Perm r = identityPerm(p.size());
    while (e) {
        if (e & 1U)
            r = compose(r, base);
        base = compose(base, base);
        e >>= 1U;
    }
    return r;
}

std::uint64_t permOrder(const Perm& p)
{
    std::vector<char> seen(p.size(), 0);
    std::uint64_t n = 1;
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (seen[i])
            continue;
        std::uint64_t len = 0;
        for (std::size_t j = i; !seen[j]; j = p[j]) {
            seen[j] = 1;
            ++len;
        }
        n = lcm(n, len);
    }
    return n;
}

PermGroup::PermGroup(std::size_t degree, std::vector<Perm> generators, std::vector<std::uint32_t> basePrefix)
    : degree_(degree)
{
    for (auto& g : generators) {
        require(g.size() == degree, "PermGroup: generator of wrong degree");
        std::vector<char> hit(degree, 0);
        for (auto x : g) {
            require(x < degree && !hit[x], "PermGroup: generator is not a permutation");
            hit[x] = 1;
        }
        if (!isIdentity(g))
            generators_.push_back(std::move(g));
    }
    for (auto b : basePrefix) {
        require(b < degree, "PermGroup: base point out of range");
        if (std::find(base_.begin(), base_.end(), b) == base_.end())
            base_.push_back(b);
    }
    schreierSims();
    computeFixedSets();
}

void PermGroup::buildOrbit(Level& level) const
{
    if (level.transIndex.empty()) {
        level.transIndex.assign(degree_, -1);
        level.transIndex[level.point] = 0;
        level.orbit = {level.point};
        level.trans = {identityPerm(degree_)};
        level.transInv = {identityPerm(degree_)};
    }
    for (std::size_t k = 0; k < level.orbit.size(); ++k)
        for (const auto& s : level.gens) {
            const std::uint32_t img = s[level.orbit[k]];
            if (level.transIndex[img] >= 0)
                continue;
            level.transIndex[img] = static_cast<std::int32_t>(level.orbit.size());
            level.orbit.push_back(img);
            level.trans.push_back(compose(s, level.trans[k]));
            level.transInv.push_back(inversePerm(level.trans.back()));
        }
}

std::pair<Perm, std::size_t> PermGroup::sift(const Perm& g, std::size_t from) const
{
    Perm h = g;
    Perm tmp(degree_);
    for (std::size_t i = from; i < levels_.size(); ++i) {
        const auto& lv = levels_[i];
        const std::int32_t idx = lv.transIndex[h[lv.point]];
        if (idx < 0)
            return {h, i};
        const Perm& inv = lv.transInv[static_cast<std::size_t>(idx)];
        for (std::size_t x = 0; x < degree_; ++x)
            tmp[x] = inv[h[x]];
        std::swap(h, tmp);
    }
    return {h, levels_.size()};
}

std::uint32_t PermGroup::movedPoint(const Perm& p) const
{
    for (std::uint32_t i = 0; i < degree_; ++i)
        if (p[i] != i)
            return i;
    return static_cast<std::uint32_t>(degree_);
}

bool PermGroup::addStrongGenerator(const Perm& h, std::size_t firstLevel, std::size_t stopLevel)
{
    if (isIdentity(h))
        return false;
    if (stopLevel == levels_.size()) {
        Level nl;
        nl.point = movedPoint(h);
        base_.push_back(nl.point);
        levels_.push_back(std::move(nl));
    }
    for (std::size_t l = firstLevel; l <= stopLevel; ++l) {
        levels_[l].gens.push_back(h);
        buildOrbit(levels_[l]);
    }
    return true;
}

void PermGroup::schreierSims()
{
    for (const auto& g : generators_) {
        bool fixesBase = true;
        for (auto b : base_)
            fixesBase = fixesBase && g[b] == b;
        if (fixesBase)
            base_.push_back(movedPoint(g));
    }
    levels_.clear();
    for (std::size_t i = 0; i < base_.size(); ++i) {
        Level lv;
        lv.point = base_[i];
        for (const auto& g : generators_) {
            bool fixes = true;
            for (std::size_t j = 0; j < i; ++j)
                fixes = fixes && g[base_[j]] == base_[j];
            if (fixes)
                lv.gens.push_back(g);
        }
        buildOrbit(lv);
        levels_.push_back(std::move(lv));
    }
    if (generators_.empty())
        return;

    // Random phase: sift product-replacement elements until a run of them sifts to the identity.
    // The seed is fixed, so the resulting chain is reproducible.
    std::mt19937_64 rng(0x5eed5eedULL);
    std::vector<Perm> pool;
    while (pool.size() < std::max<std::size_t>(10, generators_.size()))
        pool.push_back(generators_[pool.size() % generators_.size()]);
    Perm acc = identityPerm(degree_);
    auto randomElement = [&] {
        const std::size_t i = rng() % pool.size();
        std::size_t j = rng() % (pool.size() - 1);
        if (j >= i)
            ++j;
        pool[i] = (rng() & 1U) ? compose(pool[i], pool[j]) : compose(pool[i], inversePerm(pool[j]));
        acc = compose(acc, pool[i]);
        return acc;
    };
    for (int warm = 0; warm < 60; ++warm)
        randomElement();
    for (int quiet = 0; quiet < 40;) {
        auto [h, j] = sift(randomElement(), 0);
        if (addStrongGenerator(h, 1, j))
            quiet = 0;
        else
            ++quiet;
    }

    // Deterministic phase: every Schreier generator must sift to the identity. This certifies the
    // chain (and hence the order) independently of the random phase.
    std::vector<std::vector<std::size_t>> done(levels_.size());
    std::ptrdiff_t i = static_cast<std::ptrdiff_t>(levels_.size()) - 1;
    Perm schreier(degree_);
    while (i >= 0) {
        const std::size_t li = static_cast<std::size_t>(i);
        done.resize(levels_.size());
        done[li].resize(levels_[li].orbit.size(), 0);
        bool restarted = false;
        for (std::size_t k = 0; !restarted && k < levels_[li].orbit.size(); ++k) {
            for (std::size_t m = done[li][k]; m < levels_[li].gens.size(); ++m) {
                const Level& lv = levels_[li];
                const Perm& s = lv.gens[m];
                const Perm& tk = lv.trans[k];
                const Perm& inv = lv.transInv[static_cast<std::size_t>(lv.transIndex[s[lv.orbit[k]]])];
                for (std::size_t x = 0; x < degree_; ++x)
                    schreier[x] = inv[s[tk[x]]];
                done[li][k] = m + 1;
                if (isIdentity(schreier))
                    continue;
                auto [h, j] = sift(schreier, li + 1);
                if (addStrongGenerator(h, li + 1, j)) {
                    i = static_cast<std::ptrdiff_t>(j);
                    restarted = true;
                    break;
                }
            }
        }
        if (!restarted)
            --i;
    }
}

void PermGroup::computeFixedSets()
{
    for (std::size_t i = 0; i < levels_.size(); ++i) {
        auto& lv = levels_[i];
        lv.fixedByRest.clear();
        const std::vector<Perm>* next = i + 1 < levels_.size() ? &levels_[i + 1].gens : nullptr;
        for (std::uint32_t x = 0; x < degree_; ++x) {
            bool fixed = true;
            if (next)
                for (const auto& g : *next)
                    if (g[x] != x) {
                        fixed = false;
                        break;
                    }
            if (fixed)
                lv.fixedByRest.push_back(x);
        }
    }
}

Int PermGroup::order() const
{
    Int n(1);
    for (const auto& lv : levels_)
        n *= static_cast<unsigned long>(lv.orbit.size());
    return n;
}

bool PermGroup::contains(const Perm& p) const
{
    if (p.size() != degree_)
        return false;
    return isIdentity(sift(p, 0).first);
}

Int PermGroup::countConjugators(const Perm& c, const Perm& d) const
{
    require(c.size() == degree_ && d.size() == degree_, "countConjugators: permutation of wrong degree");
    if (levels_.empty())
        return compose(c, identityPerm(degree_)) == d ? Int(1) : Int(0);

    auto cycleLengths = [&](const Perm& p) {
        std::vector<std::uint32_t> len(degree_, 0);
        for (std::uint32_t i = 0; i < degree_; ++i) {
            if (len[i])
                continue;
            std::uint32_t l = 0;
            for (std::uint32_t j = i;;) {
                ++l;
                j = p[j];
                if (j == i)
                    break;
            }
            for (std::uint32_t j = i;;) {
                len[j] = l;
                j = p[j];
                if (j == i)
                    break;
            }
        }
        return len;
    };
    const auto lenC = cycleLengths(c);
    const auto lenD = cycleLengths(d);

    // Points whose relation x(c(w)) = d(x(w)) becomes decidable at each level.
    const std::size_t depth = levels_.size();
    std::vector<std::vector<std::uint32_t>> checks(depth);
    std::vector<char> known(degree_, 0);
    for (std::size_t i = 0; i < depth; ++i) {
        std::vector<char> now(degree_, 0);
        for (auto x : levels_[i].fixedByRest)
            now[x] = 1;
        for (std::uint32_t w = 0; w < degree_; ++w)
            if (now[w] && now[c[w]] && !(known[w] && known[c[w]]))
                checks[i].push_back(w);
        known = std::move(now);
    }

    Int count(0);
    std::vector<Perm> prefix(depth + 1);
    prefix[0] = identityPerm(degree_);
    // explicit stack of (level, next orbit index)
    std::vector<std::size_t> next(depth, 0);
    std::size_t level = 0;
    while (true) {
        if (next[level] >= levels_[level].orbit.size()) {
            next[level] = 0;
            if (level == 0)
                break;
            --level;
            continue;
        }
        const auto& lv = levels_[level];
        const std::size_t k = next[level]++;
        const std::uint32_t img = prefix[level][lv.orbit[k]];
        if (lenC[lv.point] != lenD[img])
            continue;
        Perm p = compose(prefix[level], lv.trans[k]);
        bool ok = true;
        for (auto w : checks[level])
            if (p[c[w]] != d[p[w]]) {
                ok = false;
                break;
            }
        if (!ok)
            continue;
        if (level + 1 == depth) {
            ++count;
            continue;
        }
        prefix[level + 1] = std::move(p);
        ++level;
    }
    return count;
}

Int centralizerOrder(const PermGroup& g, const Perm& c) { return g.countConjugators(c, c); }

Int normalizerOfCyclicOrder(const PermGroup& g, const Perm& c)
{
    const std::uint64_t n = permOrder(c);
    Int total(0);
    for (std::uint64_t k = 1; k <= n; ++k)
        if (gcd(k, n) == 1)
            total += g.countConjugators(c, powerPerm(c, static_cast<std::int64_t>(k)));
    return total;
}

std::vector<std::uint32_t> cycleBase(const Perm& c)
{
    std::vector<std::vector<std::uint32_t>> cycles;
    std::vector<char> seen(c.size(), 0);
    for (std::uint32_t i = 0; i < c.size(); ++i) {
        if (seen[i])
            continue;
        std::vector<std::uint32_t> cyc;
        for (std::uint32_t j = i; !seen[j]; j = c[j]) {
            seen[j] = 1;
            cyc.push_back(j);
        }
        cycles.push_back(std::move(cyc));
    }
    std::stable_sort(cycles.begin(), cycles.end(),
                     [](const auto& a, const auto& b) { return a.size() > b.size(); });
    std::vector<std::uint32_t> base;
    for (const auto& cyc : cycles)
        base.insert(base.end(), cyc.begin(), cyc.end());
    return base;
}

Perm inducedPermutation(const Isometry& g, const std::vector<Coords>& points)
{
    std::map<Coords, std::uint32_t> index;
    for (std::uint32_t i = 0; i < points.size(); ++i)
        index.emplace(points[i], i);
    Perm p(points.size());
    for (std::uint32_t i = 0; i < points.size(); ++i) {
        const auto it = index.find(g.apply(points[i]));
        require(it != index.end(), "the isometry does not preserve the point set");
        p[i] = it->second;
    }
    return p;
}

std::vector<std::uint32_t> antipodalPairs(const std::vector<Coords>& points)
{
    std::map<Coords, std::uint32_t> index;
    for (std::uint32_t i = 0; i < points.size(); ++i)
        index.emplace(points[i], i);
    std::vector<std::uint32_t> pairOf(points.size(), UINT32_MAX);
    std::uint32_t next = 0;
    for (std::uint32_t i = 0; i < points.size(); ++i) {
        if (pairOf[i] != UINT32_MAX)
            continue;
        Coords neg = points[i];
        for (auto& x : neg)
            x = -x;
        const auto it = index.find(neg);
        require(it != index.end() && it->second != i, "point set is not closed under negation");
        pairOf[i] = pairOf[it->second] = next++;
    }
    return pairOf;
}

Perm pairPermutation(const Perm& p, const std::vector<std::uint32_t>& pairOf, std::size_t pairCount)
{
    Perm q(pairCount, UINT32_MAX);
    for (std::size_t i = 0; i < p.size(); ++i) {
        const std::uint32_t from = pairOf[i];
        const std::uint32_t to = pairOf[p[i]];
        ensure(q[from] == UINT32_MAX || q[from] == to, "permutation does not respect antipodal pairs");
        q[from] = to;
    }
    return q;
}

bool spansFullRank(const std::vector<Coords>& points, std::size_t rank)
{
    if (rank == 0)
        return true;
    IntMatrix rows(0, rank);
    std::size_t current = 0;
    for (const auto& pnt : points) {
        IntMatrix trial(rows.rows() + 1, rank);
        for (std::size_t i = 0; i < rows.rows(); ++i)
            for (std::size_t j = 0; j < rank; ++j)
                trial(i, j) = rows(i, j);
        for (std::size_t j = 0; j < rank; ++j)
            trial(rows.rows(), j) = pnt[j];
        const std::size_t r = orbilat::rank(trial);
        if (r > current) {
            rows = std::move(trial);
            current = r;
            if (current == rank)
                return true;
        }
    }
    return false;
}

} // namespace orbilat
