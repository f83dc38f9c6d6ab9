#pragma once

#include <cstdint>
#include <vector>

#include "pfh/errors.hpp"
#include "pfh/multipoly.hpp"
#include "pfh/series.hpp"

namespace pfh {

/// Remainder of p on division by the basis (full normal form under the
/// global degrevlex order).
MultiPoly normal_form(const MultiPoly& p, const std::vector<MultiPoly>& basis);

/// Reduced Groebner basis of the ideal generated by `gens` under the
/// global degrevlex order: monic leading coefficients, no leading term
/// divides another, tails fully reduced.
std::vector<MultiPoly> buchberger(const std::vector<MultiPoly>& gens);

/// Post-pass check: every S-polynomial of the basis reduces to zero.
bool is_groebner_basis(const std::vector<MultiPoly>& basis);

/// Monomial ideal given by the minimal (antichain) generating set.
struct MonomialIdeal {
    int dim = 0;
    std::vector<Exponents> gens;
};

/// Prunes a generating set to the divisibility antichain.
std::vector<Exponents> minimalize(std::vector<Exponents> gens);

/// Leading-exponent ideal of a Groebner basis.
MonomialIdeal initial_ideal(const std::vector<MultiPoly>& gb);

/// Numerator N(z) with HS(R/I) = N(z) / (1-z)^dim, by the colon
/// recursion N(I + (m)) = N(I) - z^deg(m) N(I : m).
IntPolynomial monomial_hilbert_numerator(const MonomialIdeal& ideal, long node_budget = 1'000'000);

/// Codimension dim - max |V| over variable subsets V containing no
/// generator's support; exhaustive over subsets.
int monomial_codim(const MonomialIdeal& ideal);

struct OracleReport {
    ProblemShape shape;
    int ambient_dim = 0;
    std::uint64_t seed = 0;
    bool generic = false;
    int codim = 0;
    IntPolynomial hilbert_numerator;  // over (1-z)^ambient_dim
    bool matches_theorem = false;
    int redraws = 0;
};

struct OracleLimits {
    long max_shape = 8;  // n + t
    int max_dim = 8;
    long node_budget = 1'000'000;
};

/// Draws a generic instance, computes the actual Hilbert numerator of
/// R/J(rho) via a Groebner basis, and compares against the closed form
/// (1-z)^t * hn(n, t). Redraws (seed+1, seed+2, ...) on zero Pfaffians
/// or codim < t; throws GenericityError when redraws are exhausted and
/// ResourceError when outside the desk-scale budget.
OracleReport oracle_check(const ProblemShape& shape, int ambient_dim, std::uint64_t seed,
                          int max_redraws = 5, const OracleLimits& limits = {});

}  // namespace pfh
