#pragma once

#include "orbilat/arith.hpp"
#include "orbilat/matrix.hpp"

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <vector>

namespace orbilat {

/// Coordinates of a (coset) lattice vector in the lattice basis. For coset shells the stored
/// values are numerators over the shell's common denominator.
using Coords = std::vector<std::int64_t>;

struct ShellCache;

/// Positive definite lattice given by an exact integer Gram matrix. Odd lattices are allowed so
/// that evenness can be tested; rank 0 is allowed (empty Gram matrix).
class GramLattice {
public:
    GramLattice();
    /// Throws PreconditionError if `gram` is not symmetric or not positive definite.
    explicit GramLattice(IntMatrix gram, std::string name = {});

    const IntMatrix& gram() const { return gram_; }
    std::size_t rank() const { return gram_.rows(); }
    const std::string& name() const { return name_; }
    GramLattice renamed(std::string name) const;

    Int norm(const IntVector& v) const;
    Int pairing(const IntVector& u, const IntVector& v) const;
    Int norm(const Coords& v) const;
    Int determinant() const;

    /// Shared, thread-safe memo used by shortVectorsCached.
    ShellCache& cache() const { return *cache_; }

private:
    IntMatrix gram_;
    std::string name_;
    std::shared_ptr<ShellCache> cache_;
};

IntVector toIntVector(const Coords& c);
Coords toCoords(const IntVector& v);

/// True iff every diagonal entry of the Gram matrix is even. PreconditionError if asymmetric.
bool checkEven(const IntMatrix& gram);
bool checkEven(const GramLattice& l);
/// All inner products even and all norms divisible by 4.
bool isDoublyEven(const GramLattice& l);

struct DiscriminantGroup {
    std::vector<Int> divisors; ///< elementary divisors > 1, each dividing the next
    Int order;
    std::string toString() const; ///< e.g. "Z3", "(Z2)^8", "trivial"
};

/// L*/L from the Smith form of the Gram matrix. PreconditionError for singular Gram.
DiscriminantGroup discriminantGroup(const GramLattice& l);

/// Vectors of shift + L with one fixed norm. Vectors are numerators over `denominator`.
struct CosetShell {
    RationalVector shift;
    Int denominator{1};
    Int norm;
    std::vector<Coords> vectors; ///< sorted lexicographically
    std::size_t count() const { return vectors.size(); }
    RationalVector vector(std::size_t i) const;
};

using ShellMap = std::map<std::int64_t, CosetShell>;

struct ReducedBasis {
    IntMatrix transform; ///< columns are the reduced basis in the input coordinates (unimodular)
    IntMatrix gram;      ///< transform^T * G * transform
};

/// Exact integral LLL (delta = 3/4) acting on the Gram matrix only.
ReducedBasis lllReduce(const IntMatrix& gram);

/// All v in L with 0 < (v|v) <= normBound, grouped by norm. PreconditionError if normBound <= 0.
ShellMap shortVectors(const GramLattice& l, std::int64_t normBound);
/// Memoized variant; the result is shared and immutable.
std::shared_ptr<const ShellMap> shortVectorsCached(const GramLattice& l, std::int64_t normBound);

/// All v in shift + L with (v|v) == norm. Requires shift in L* (PreconditionError otherwise).
/// For shift in L the zero vector is never listed.
CosetShell cosetShortVectors(const GramLattice& l, const RationalVector& shift, std::int64_t norm);

/// True iff (shift | e_i) is integral for every basis vector.
bool inDual(const GramLattice& l, const RationalVector& shift);

/// A sublattice together with the matrix whose columns express its basis in parent coordinates.
struct Sublattice {
    GramLattice lattice;
    IntMatrix embedding;
    Int index; ///< [L : M] when the ranks agree, otherwise 0
};

/// Kernel of x -> f . x mod m, as a sublattice of full rank.
Sublattice sublatticeByFunctional(const GramLattice& l, const IntVector& f, const Int& modulus);

/// |det(embedding)|; PreconditionError when the embedding is not square of full rank.
Int latticeIndex(const GramLattice& parent, const IntMatrix& embedding);

/// Sublattice spanned by the given columns (need not be independent); basis in Hermite form.
Sublattice spannedSublattice(const GramLattice& l, const IntMatrix& generatorColumns);

/// Gram matrix U^T G U for unimodular U (PreconditionError otherwise).
GramLattice changeBasis(const GramLattice& l, const IntMatrix& u);

/// Number of worker threads for enumeration: ORBILAT_THREADS if set (>= 1), else 1.
unsigned workerThreads();

} // namespace orbilat
