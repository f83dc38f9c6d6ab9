#pragma once

#include <vector>

#include "pfh/binom.hpp"
#include "pfh/errors.hpp"

namespace pfh {

/// Size parameters of an n x (n+t) almost alternating matrix:
/// n = alternating block size, t = number of extra columns.
struct ProblemShape {
    long n = 0;
    long t = 0;

    /// Throws InvalidShapeError unless n >= 1 and t >= 1.
    void validate() const;
};

/// One free summand of the resolution, generated in bidegree
/// (x_twist, y_twist); twists are stored negated (non-negative).
struct BettiSummand {
    long x_twist = 0;
    long y_twist = 0;
    Int multiplicity;
};

/// Graded Betti data of the length-t resolution of R/J(rho).
/// rows[N] lists the summands in homological degree N, 0 <= N <= t.
/// Zero-multiplicity summands are omitted.
struct BettiTable {
    ProblemShape shape;
    std::vector<std::vector<BettiSummand>> rows;

    Int row_rank(size_t N) const;
};

/// Rational function numerator / (1 - z)^denom_power; not necessarily
/// in lowest terms.
struct HilbertSeries {
    IntPolynomial numerator;
    long denom_power = 0;

    /// Equality as rational functions, by cross-multiplication.
    bool same_series(const HilbertSeries& o) const;
};

/// Closed-form Hilbert numerator hn(z) of R/J(rho) over the reduced
/// denominator (1-z)^(d-t): sum of binom(t+i-1, i) z^i minus the
/// correction sum over i with 2i >= n. Degree <= n-1, constant term 1.
IntPolynomial hn_polynomial(const ProblemShape& shape);

/// Multiplicity (normalized to e_R = 1):
/// sum over 0 <= i <= (n-1)/2 of binom(n-2-2i+t, t-1). Equals hn(1).
Int hn_multiplicity(const ProblemShape& shape);

/// The same multiplicity computed combinatorially: the number of
/// monomials of degree <= n-1 in t variables whose degree has parity
/// opposite to n, counted by explicit enumeration of exponent vectors.
Int multiplicity_by_monomial_count(const ProblemShape& shape, long budget = 10'000'000);

/// Resolution-derived numerator HN(z) over the full denominator
/// (1-z)^d, read off the Euler characteristic of the resolution.
IntPolynomial hn_numerator_from_formula(const ProblemShape& shape);

/// Bigraded Betti table of the resolution of R/J(rho).
BettiTable betti_table(const ProblemShape& shape);

/// Alternating sum over the table: sum_N (-1)^N sum_summands
/// mult * z^(x_twist + y_twist) (total single grading).
IntPolynomial euler_numerator(const BettiTable& table);

/// HS_{R/J}(z) = HS_R(z) * (1-z)^t * hn(z) for a given ambient series.
HilbertSeries hilbert_series(const ProblemShape& shape, const HilbertSeries& ambient);

/// Coefficient vector of hn(z); first entry 1, all entries >= 0.
std::vector<Int> h_vector(const ProblemShape& shape);

}  // namespace pfh
