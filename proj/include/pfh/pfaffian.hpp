#pragma once

#include <cstdint>
#include <vector>

#include "pfh/multipoly.hpp"
#include "pfh/series.hpp"

namespace pfh {

/// Homogeneous linear form in the ambient variables x1..xd
/// (or identically zero): one rational coefficient per variable.
struct LinearForm {
    std::vector<Rat> coeffs;

    bool is_zero() const;
    LinearForm operator-() const;
    bool operator==(const LinearForm& o) const { return coeffs == o.coeffs; }
    MultiPoly to_poly() const;
};

/// The n x (n+t) matrix rho = [X Y] whose left n x n block X is
/// alternating (skew-symmetric with zero diagonal). Validated on
/// construction.
class AlmostAlternatingMatrix {
public:
    AlmostAlternatingMatrix(ProblemShape shape, int ambient_dim,
                            std::vector<std::vector<LinearForm>> entries);

    const ProblemShape& shape() const { return shape_; }
    int ambient_dim() const { return dim_; }
    const LinearForm& entry(long i, long j) const {
        return entries_[static_cast<size_t>(i)][static_cast<size_t>(j)];
    }

private:
    ProblemShape shape_;
    int dim_;
    std::vector<std::vector<LinearForm>> entries_;  // n rows, n+t columns
};

/// The bordered (n+t) x (n+t) alternating matrix
/// T = [[X, Y], [-Y^t, 0]] as polynomial entries.
std::vector<std::vector<MultiPoly>> build_T(const AlmostAlternatingMatrix& rho);

/// Pfaffian of an alternating matrix of even size, by the row-1
/// expansion Pf = sum_{j>=2} (-1)^j m[0][j] Pf(minor), Pf(empty) = 1,
/// with memoization over index subsets. Rejects odd size and
/// non-alternating input.
MultiPoly pfaffian(const std::vector<std::vector<MultiPoly>>& m);

/// One generator of J(rho): the Pfaffian of the principal submatrix of
/// T indexed by {1..n} and the column subset S (1-based indices into
/// {n+1..n+t}).
struct GeneratorRecord {
    std::vector<long> column_subset;  // sorted, values in [n+1, n+t]
    MultiPoly pfaffian;
    long degree = 0;        // (n + |S|) / 2
    bool is_zero = false;   // degenerate draw diagnostic
};

struct IdealGenerators {
    std::vector<GeneratorRecord> records;

    bool any_zero() const;
};

/// Generators of J(rho): Pfaffians of all principal submatrices of T
/// containing X, i.e. one per subset S of the border columns with
/// n + |S| even. Zero Pfaffians are retained and flagged.
IdealGenerators ideal_generators(const AlmostAlternatingMatrix& rho);

/// Reproducible random instance: linear forms in x1..xd with integer
/// coefficients uniform in [-3, 3]; X is drawn above the diagonal and
/// skew-extended.
AlmostAlternatingMatrix random_generic_instance(const ProblemShape& shape, int ambient_dim,
                                                std::uint64_t seed);

}  // namespace pfh
