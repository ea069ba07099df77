#pragma once

#include "orbilat/matrix.hpp"

#include <random>

namespace orbilat::testing {

inline IntMatrix gramA(std::size_t n)
{
    IntMatrix g(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        g(i, i) = 2;
        if (i + 1 < n)
            g(i, i + 1) = g(i + 1, i) = -1;
    }
    return g;
}

inline IntMatrix gramA2() { return gramA(2); }

/// E8 Cartan matrix, Bourbaki-style chain 1-2-3-4-5-6-7 with node 8 attached to node 5.
inline IntMatrix gramE8()
{
    return IntMatrix{{2, -1, 0, 0, 0, 0, 0, 0},  {-1, 2, -1, 0, 0, 0, 0, 0}, {0, -1, 2, -1, 0, 0, 0, 0},
                     {0, 0, -1, 2, -1, 0, 0, 0}, {0, 0, 0, -1, 2, -1, 0, -1}, {0, 0, 0, 0, -1, 2, -1, 0},
                     {0, 0, 0, 0, 0, -1, 2, 0},  {0, 0, 0, 0, -1, 0, 0, 2}};
}

/// Product of the two simple reflections of A2, acting on simple-root coordinates.
inline IntMatrix coxeterA2()
{
    return IntMatrix{{-1, 1}, {0, 1}} * IntMatrix{{1, 0}, {1, -1}};
}

/// M^T M + I for a random small M: positive definite with smallest eigenvalue at least 1.
inline IntMatrix randomPositiveGram(std::mt19937_64& rng, std::size_t n)
{
    std::uniform_int_distribution<long> dist(-2, 2);
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            m(i, j) = dist(rng);
    return m.transpose() * m + IntMatrix::identity(n);
}

/// Product of random elementary integer operations (determinant +-1).
inline IntMatrix randomUnimodular(std::mt19937_64& rng, std::size_t n, int steps)
{
    IntMatrix u = IntMatrix::identity(n);
    if (n < 2)
        return (rng() & 1) ? u : Int(-1) * u;
    std::uniform_int_distribution<long> mult(-2, 2);
    for (int s = 0; s < steps; ++s) {
        const std::size_t a = rng() % n;
        std::size_t b = rng() % n;
        if (a == b)
            b = (b + 1) % n;
        u.addColMultiple(a, b, Int(mult(rng)));
        if (rng() % 4 == 0)
            u.swapCols(a, b);
        if (rng() % 5 == 0)
            u.negateCol(a);
    }
    return u;
}

} // namespace orbilat::testing
