#pragma once

#include "orbilat/isometry.hpp"
#include "orbilat/lattice.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace orbilat {

using Word = std::vector<std::uint64_t>;

/// Linear code over Z_p, stored by its reduced row echelon generator matrix.
class CodeZp {
public:
    /// Row-reduces the generators mod p; dependent rows are dropped. PreconditionError if p is
    /// not prime or the rows have the wrong length.
    CodeZp(std::uint64_t p, std::size_t length, const std::vector<Word>& generators, std::string name = {});

    std::uint64_t p() const { return p_; }
    std::size_t length() const { return length_; }
    std::size_t dimension() const { return rows_.size(); }
    const std::vector<Word>& generators() const { return rows_; }
    const std::string& name() const { return name_; }
    Int size() const;

    bool contains(const Word& w) const;
    /// All p^dim codewords, in lexicographic order of their message vectors.
    std::vector<Word> codewords() const;
    CodeZp dual() const;
    /// Number of codewords of each Hamming weight 0..length.
    std::vector<std::uint64_t> weightDistribution() const;

private:
    std::uint64_t p_;
    std::size_t length_;
    std::vector<Word> rows_;
    std::string name_;
};

/// Bundled codes: "hamming8" (extended [8,4,4]), "repetition8" ([8,1,8]), "tetracode" ([4,2,3] over
/// Z_3), "golay24" (extended binary [24,12,8]), "ternary_golay12" ([12,6,6] over Z_3).
CodeZp namedCode(const std::string& name);
std::vector<std::string> namedCodeList();

/// A_{p-1} with its simple roots as basis and glue vector gamma (first fundamental weight).
struct RootLatticeA {
    std::uint64_t p;
    GramLattice lattice;
    RationalVector glue; ///< gamma in simple-root coordinates; p * gamma in the root lattice
};

/// PreconditionError if p is not prime.
RootLatticeA rootLatticeA(std::uint64_t p);

/// Construction A: N = union over c in C of (R + sum c_i gamma^(i)), R = A_{p-1}^k.
struct GlueLattice {
    CodeZp code;
    GramLattice root;   ///< R = A_{p-1}^k in block simple-root coordinates
    GramLattice lattice; ///< N
    RatMatrix basisInRoot; ///< columns: basis of N in the coordinates of R
    Int index;             ///< [N : R] = |C|
};

/// PreconditionError if the code is not self-orthogonal or N is not even.
GlueLattice constructionA(const CodeZp& code);

struct ConstructionBResult {
    Sublattice sublattice; ///< B inside N, embedding in N-coordinates
    IntVector functional;  ///< x -> sum e_i (x | gamma^(i)) on the basis of N, reduced mod p
};

/// B = {x in A(C) : sum e_i (x | gamma^(i)) = 0 mod p}. PreconditionError when e has a zero
/// coordinate or e is not orthogonal to C (then the functional is not integral on A(C)), or
/// when the index is not p.
ConstructionBResult constructionB(const GlueLattice& n, const Word& e);

/// The block isometry (g_{Delta_1}^{e_1}, ..., g_{Delta_k}^{e_k}) of R = A_{p-1}^k, where g_Delta
/// cyclically permutes the extended base alpha_1 -> alpha_2 -> ... -> alpha_{p-1} -> alpha_0 -> alpha_1.
Isometry gDeltaE(std::uint64_t p, std::size_t k, const Word& e);
/// Same isometry expressed on the basis of N (InconsistencyError if N is not stable).
Isometry gDeltaEOnGlue(const GlueLattice& n, const Word& e);

/// Named lattices: A<n>, D<n>, E6, E7, E8, sqrt2E8, Leech.
GramLattice namedLattice(const std::string& name);
std::vector<std::string> namedLatticeList();

/// Leech lattice from the extended binary Golay code, LLL-reduced Gram matrix.
GramLattice leechFromGolay();

struct LatticeWithIsometry {
    GramLattice lattice;
    Isometry isometry;
};

/// Leech lattice with a completely fixed-point free isometry of order 3 (profile Phi3^12): a
/// rootless 3-neighbour M = N_v + Z v/3 of N = A(ternary Golay) = A2^12 with v in (1 - g)N + 3N,
/// where g = gDelta with e = all-ones. Seeded search over v; InconsistencyError if none is found.
LatticeWithIsometry leechWithOrderThree(std::uint64_t seed = 7);

} // namespace orbilat
