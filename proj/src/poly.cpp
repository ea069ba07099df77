#include "orbilat/poly.hpp"

#include "orbilat/errors.hpp"
#include "orbilat/number_theory.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <sstream>

namespace orbilat {

IntPoly::IntPoly(std::vector<Int> ascending) : coeffs_(std::move(ascending)) { trim(); }

IntPoly::IntPoly(std::initializer_list<long> ascending)
{
    for (const long c : ascending)
        coeffs_.emplace_back(c);
    trim();
}

IntPoly IntPoly::monomial(const Int& coefficient, std::size_t degree)
{
    std::vector<Int> c(degree + 1, Int(0));
    c[degree] = coefficient;
    return IntPoly(std::move(c));
}

void IntPoly::trim()
{
    while (!coeffs_.empty() && coeffs_.back() == 0)
        coeffs_.pop_back();
}

Int IntPoly::coefficient(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : Int(0); }

const Int& IntPoly::leading() const
{
    require(!isZero(), "leading coefficient of the zero polynomial");
    return coeffs_.back();
}

Int IntPoly::evaluate(const Int& x) const
{
    Int acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
        acc = acc * x + *it;
    return acc;
}

IntPoly IntPoly::substitutePower(std::size_t k) const
{
    require(k >= 1, "substitutePower: exponent must be positive");
    if (isZero())
        return {};
    std::vector<Int> c((coeffs_.size() - 1) * k + 1, Int(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        c[i * k] = coeffs_[i];
    return IntPoly(std::move(c));
}

IntPoly operator+(const IntPoly& a, const IntPoly& b)
{
    std::vector<Int> c(std::max(a.coeffs_.size(), b.coeffs_.size()), Int(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
        c[i] += a.coeffs_[i];
    for (std::size_t i = 0; i < b.coeffs_.size(); ++i)
        c[i] += b.coeffs_[i];
    return IntPoly(std::move(c));
}

IntPoly operator-(const IntPoly& a, const IntPoly& b)
{
    std::vector<Int> c(std::max(a.coeffs_.size(), b.coeffs_.size()), Int(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
        c[i] += a.coeffs_[i];
    for (std::size_t i = 0; i < b.coeffs_.size(); ++i)
        c[i] -= b.coeffs_[i];
    return IntPoly(std::move(c));
}

IntPoly operator*(const IntPoly& a, const IntPoly& b)
{
    if (a.isZero() || b.isZero())
        return {};
    std::vector<Int> c(a.coeffs_.size() + b.coeffs_.size() - 1, Int(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
            c[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return IntPoly(std::move(c));
}

std::string IntPoly::toString() const
{
    if (isZero())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (long k = degree(); k >= 0; --k) {
        const Int& c = coeffs_[static_cast<std::size_t>(k)];
        if (c == 0)
            continue;
        const Int mag = abs(c);
        if (first)
            os << (c < 0 ? "-" : "");
        else
            os << (c < 0 ? " - " : " + ");
        if (mag != 1 || k == 0)
            os << mag;
        if (k >= 1)
            os << "x";
        if (k >= 2)
            os << "^" << k;
        first = false;
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const IntPoly& p) { return os << p.toString(); }

PolyDivision divideByMonic(const IntPoly& dividend, const IntPoly& monicDivisor)
{
    require(!monicDivisor.isZero() && monicDivisor.leading() == 1, "divideByMonic: divisor must be monic");
    std::vector<Int> rem = dividend.coefficients();
    const auto& d = monicDivisor.coefficients();
    const std::size_t dd = d.size() - 1;
    if (rem.size() <= dd)
        return {IntPoly{}, dividend};
    std::vector<Int> quot(rem.size() - dd, Int(0));
    for (std::size_t k = rem.size(); k-- > dd;) {
        const Int q = rem[k];
        if (q == 0)
            continue;
        quot[k - dd] = q;
        for (std::size_t j = 0; j <= dd; ++j)
            rem[k - dd + j] -= q * d[j];
    }
    return {IntPoly(std::move(quot)), IntPoly(std::move(rem))};
}

IntPoly divideExact(const IntPoly& dividend, const IntPoly& monicDivisor)
{
    auto [q, r] = divideByMonic(dividend, monicDivisor);
    ensure(r.isZero(), "divideExact: nonzero remainder " + r.toString());
    return q;
}

namespace {

std::mutex& cyclotomicMutex()
{
    static std::mutex m;
    return m;
}

// Node-based map: references to stored polynomials stay valid across inserts.
std::map<std::uint64_t, std::unique_ptr<IntPoly>>& cyclotomicTable()
{
    static std::map<std::uint64_t, std::unique_ptr<IntPoly>> table;
    return table;
}

const IntPoly& cyclotomicLocked(std::uint64_t n)
{
    auto& table = cyclotomicTable();
    if (auto it = table.find(n); it != table.end())
        return *it->second;
    IntPoly p = IntPoly::monomial(Int(1), n) - IntPoly{1};
    for (std::uint64_t d = 1; d < n; ++d)
        if (n % d == 0)
            p = divideExact(p, cyclotomicLocked(d));
    auto [it, inserted] = table.emplace(n, std::make_unique<IntPoly>(std::move(p)));
    return *it->second;
}

} // namespace

const IntPoly& cyclotomic(std::uint64_t n)
{
    require(n >= 1, "cyclotomic: n must be positive");
    std::lock_guard lock(cyclotomicMutex());
    return cyclotomicLocked(n);
}

Int cyclotomicAtOne(std::uint64_t n)
{
    require(n >= 2, "cyclotomicAtOne: n must be at least 2 (Phi_1(1) = 0)");
    if (const auto pp = asPrimePower(n))
        return Int(static_cast<unsigned long>(pp->prime));
    return Int(1);
}

} // namespace orbilat
