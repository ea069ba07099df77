#include "orbilat/matrix.hpp"

#include <optional>
#include <utility>

namespace orbilat {

RatMatrix toRational(const IntMatrix& m)
{
    RatMatrix r(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            r(i, j) = Rational(m(i, j));
    return r;
}

bool isIntegral(const RatMatrix& m)
{
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (m(i, j).get_den() != 1)
                return false;
    return true;
}

IntMatrix toIntegral(const RatMatrix& m, const std::string& what)
{
    IntMatrix r(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) {
            ensure(m(i, j).get_den() == 1, what + " has a non-integral entry " + toFractionString(m(i, j)));
            r(i, j) = m(i, j).get_num();
        }
    return r;
}

IntMatrix matrixPower(const IntMatrix& m, std::uint64_t exponent)
{
    require(m.isSquare(), "matrixPower: square matrix required");
    IntMatrix result = IntMatrix::identity(m.rows());
    IntMatrix base = m;
    while (exponent > 0) {
        if (exponent & 1U)
            result = result * base;
        exponent >>= 1U;
        if (exponent > 0)
            base = base * base;
    }
    return result;
}

namespace {

// Fraction-free elimination in place; returns the rank and (for square input) the determinant.
struct Elimination {
    std::size_t rank = 0;
    Int determinant;
};

Elimination bareiss(IntMatrix a)
{
    const std::size_t n = a.rows();
    const std::size_t m = a.cols();
    Int prev(1);
    int sign = 1;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m && r < n; ++c) {
        std::size_t pivot = r;
        while (pivot < n && a(pivot, c) == 0)
            ++pivot;
        if (pivot == n)
            continue;
        if (pivot != r) {
            a.swapRows(pivot, r);
            sign = -sign;
        }
        for (std::size_t i = r + 1; i < n; ++i) {
            for (std::size_t j = c + 1; j < m; ++j) {
                Int v = a(r, c) * a(i, j) - a(i, c) * a(r, j);
                mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
                a(i, j) = std::move(v);
            }
            a(i, c) = 0;
        }
        prev = a(r, c);
        ++r;
    }
    Elimination e;
    e.rank = r;
    if (n == m)
        e.determinant = (r == n) ? Int(sign * prev) : Int(0);
    return e;
}

} // namespace

Int determinant(const IntMatrix& m)
{
    require(m.isSquare(), "determinant: square matrix required");
    if (m.rows() == 0)
        return Int(1);
    return bareiss(m).determinant;
}

std::size_t rank(const IntMatrix& m) { return bareiss(m).rank; }

std::vector<Int> leadingPrincipalMinors(const IntMatrix& m)
{
    require(m.isSquare(), "leadingPrincipalMinors: square matrix required");
    std::vector<Int> minors;
    for (std::size_t k = 1; k <= m.rows(); ++k)
        minors.push_back(determinant(m.submatrix(0, 0, k, k)));
    return minors;
}

IntPoly charPoly(const IntMatrix& a)
{
    require(a.isSquare(), "charPoly: square matrix required");
    const std::size_t n = a.rows();
    std::vector<Int> c(n + 1, Int(0));
    c[n] = 1;
    IntMatrix mk(n, n); // M_0 = 0
    for (std::size_t k = 1; k <= n; ++k) {
        mk = a * mk;
        for (std::size_t i = 0; i < n; ++i)
            mk(i, i) += c[n - k + 1];
        Int t = (a * mk).trace();
        ensure(t % static_cast<unsigned long>(k) == 0, "charPoly: inexact Faddeev-LeVerrier step");
        c[n - k] = -t / static_cast<unsigned long>(k);
    }
    return IntPoly(std::move(c));
}

RatMatrix inverse(const RatMatrix& m)
{
    require(m.isSquare(), "inverse: square matrix required");
    const std::size_t n = m.rows();
    RatMatrix a = m;
    RatMatrix inv = RatMatrix::identity(n);
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t pivot = c;
        while (pivot < n && a(pivot, c) == 0)
            ++pivot;
        require(pivot < n, "inverse: singular matrix");
        a.swapRows(pivot, c);
        inv.swapRows(pivot, c);
        const Rational p = a(c, c);
        for (std::size_t j = 0; j < n; ++j) {
            a(c, j) /= p;
            inv(c, j) /= p;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == c || a(i, c) == 0)
                continue;
            const Rational f = -a(i, c);
            a.addRowMultiple(i, c, f);
            inv.addRowMultiple(i, c, f);
        }
    }
    return inv;
}

RatMatrix inverse(const IntMatrix& m) { return inverse(toRational(m)); }

namespace {

struct Pos {
    std::size_t i;
    std::size_t j;
};

std::optional<Pos> smallestNonzero(const IntMatrix& d, std::size_t t)
{
    std::optional<Pos> best;
    Int bestAbs;
    for (std::size_t i = t; i < d.rows(); ++i)
        for (std::size_t j = t; j < d.cols(); ++j) {
            if (d(i, j) == 0)
                continue;
            Int a = abs(d(i, j));
            if (!best || a < bestAbs) {
                best = Pos{i, j};
                bestAbs = std::move(a);
            }
        }
    return best;
}

Int truncDiv(const Int& a, const Int& b)
{
    Int q;
    mpz_tdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

} // namespace

SNFResult smithNormalForm(const IntMatrix& a)
{
    const std::size_t r = a.rows();
    const std::size_t c = a.cols();
    IntMatrix d = a;
    IntMatrix u = IntMatrix::identity(r);
    IntMatrix v = IntMatrix::identity(c);

    auto moveToCorner = [&](std::size_t t, Pos p) {
        if (p.i != t) {
            d.swapRows(p.i, t);
            u.swapRows(p.i, t);
        }
        if (p.j != t) {
            d.swapCols(p.j, t);
            v.swapCols(p.j, t);
        }
    };

    const std::size_t steps = std::min(r, c);
    for (std::size_t t = 0; t < steps; ++t) {
        const auto first = smallestNonzero(d, t);
        if (!first)
            break;
        moveToCorner(t, *first);
        for (;;) {
            bool clean = true;
            for (std::size_t i = t + 1; i < r; ++i) {
                if (d(i, t) == 0)
                    continue;
                const Int q = -truncDiv(d(i, t), d(t, t));
                d.addRowMultiple(i, t, q);
                u.addRowMultiple(i, t, q);
                if (d(i, t) != 0)
                    clean = false;
            }
            for (std::size_t j = t + 1; j < c; ++j) {
                if (d(t, j) == 0)
                    continue;
                const Int q = -truncDiv(d(t, j), d(t, t));
                d.addColMultiple(j, t, q);
                v.addColMultiple(j, t, q);
                if (d(t, j) != 0)
                    clean = false;
            }
            if (!clean) {
                // Remainders are smaller than the pivot: restart with the smallest of row/column t.
                Pos best{t, t};
                Int bestAbs = abs(d(t, t));
                for (std::size_t i = t + 1; i < r; ++i)
                    if (d(i, t) != 0 && abs(d(i, t)) < bestAbs) {
                        best = {i, t};
                        bestAbs = abs(d(i, t));
                    }
                for (std::size_t j = t + 1; j < c; ++j)
                    if (d(t, j) != 0 && abs(d(t, j)) < bestAbs) {
                        best = {t, j};
                        bestAbs = abs(d(t, j));
                    }
                moveToCorner(t, best);
                continue;
            }
            std::optional<std::size_t> offending;
            for (std::size_t i = t + 1; i < r && !offending; ++i)
                for (std::size_t j = t + 1; j < c; ++j)
                    if (d(i, j) % d(t, t) != 0) {
                        offending = i;
                        break;
                    }
            if (!offending)
                break;
            d.addRowMultiple(t, *offending, Int(1));
            u.addRowMultiple(t, *offending, Int(1));
        }
        if (d(t, t) < 0) {
            d.negateRow(t);
            u.negateRow(t);
        }
    }

    SNFResult res;
    for (std::size_t t = 0; t < steps; ++t)
        res.diagonal.push_back(d(t, t));
    res.U = std::move(u);
    res.V = std::move(v);
    return res;
}

IntMatrix hermiteRowBasis(const IntMatrix& generators)
{
    IntMatrix m = generators;
    const std::size_t n = m.rows();
    const std::size_t cols = m.cols();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < n; ++c) {
        for (;;) {
            std::optional<std::size_t> best;
            for (std::size_t i = r; i < n; ++i)
                if (m(i, c) != 0 && (!best || abs(m(i, c)) < abs(m(*best, c))))
                    best = i;
            if (!best)
                break;
            m.swapRows(*best, r);
            bool clean = true;
            for (std::size_t i = r + 1; i < n; ++i) {
                if (m(i, c) == 0)
                    continue;
                m.addRowMultiple(i, r, -truncDiv(m(i, c), m(r, c)));
                if (m(i, c) != 0)
                    clean = false;
            }
            if (clean)
                break;
        }
        if (m(r, c) == 0)
            continue;
        if (m(r, c) < 0)
            m.negateRow(r);
        for (std::size_t i = 0; i < r; ++i)
            m.addRowMultiple(i, r, -floorDiv(m(i, c), m(r, c)));
        ++r;
    }
    return m.submatrix(0, 0, r, cols);
}

IntMatrix integerKernel(const IntMatrix& a)
{
    const std::size_t c = a.cols();
    if (a.rows() == 0)
        return IntMatrix::identity(c);
    const SNFResult s = smithNormalForm(a);
    std::size_t rk = 0;
    while (rk < s.diagonal.size() && s.diagonal[rk] != 0)
        ++rk;
    if (rk == c)
        return IntMatrix(c, 0);
    // Columns rk.. of V span the kernel; tidy them with a Hermite basis of their row transpose.
    IntMatrix rowsOfKernel(c - rk, c);
    for (std::size_t k = rk; k < c; ++k)
        for (std::size_t i = 0; i < c; ++i)
            rowsOfKernel(k - rk, i) = s.V(i, k);
    return hermiteRowBasis(rowsOfKernel).transpose();
}

} // namespace orbilat
