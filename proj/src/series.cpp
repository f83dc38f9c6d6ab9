#include "pfh/series.hpp"

#include <sstream>

namespace pfh {

void ProblemShape::validate() const {
    if (n < 1 || t < 1) {
        std::ostringstream ss;
        ss << "shape requires n >= 1 and t >= 1, got n=" << n << ", t=" << t;
        throw InvalidShapeError(ss.str());
    }
}

Int BettiTable::row_rank(size_t N) const {
    Int total = 0;
    if (N < rows.size())
        for (const auto& s : rows[N]) total += s.multiplicity;
    return total;
}

bool HilbertSeries::same_series(const HilbertSeries& o) const {
    // numerator / (1-z)^a == o.numerator / (1-z)^b  iff
    // numerator * (1-z)^b == o.numerator * (1-z)^a.
    return numerator * one_minus_z_pow(o.denom_power) ==
           o.numerator * one_minus_z_pow(denom_power);
}

IntPolynomial hn_polynomial(const ProblemShape& shape) {
    shape.validate();
    const long n = shape.n, t = shape.t;
    std::vector<Int> v(static_cast<size_t>(n));
    for (long i = 0; i < n; ++i) v[static_cast<size_t>(i)] = gbinom(t + i - 1, i);
    for (long i = (n + 1) / 2; i < n; ++i)
        v[static_cast<size_t>(i)] -= gbinom(t + 2 * i - n - 1, 2 * i - n);
    return IntPolynomial(std::move(v));
}

Int hn_multiplicity(const ProblemShape& shape) {
    shape.validate();
    const long n = shape.n, t = shape.t;
    Int total = 0;
    for (long i = 0; i <= (n - 1) / 2; ++i) total += gbinom(n - 2 - 2 * i + t, t - 1);
    return total;
}

namespace {

// Counts exponent vectors in `t` variables with remaining degree budget
// `maxdeg` whose total degree so far has the parity we want tracked by
// the caller; enumeration is explicit on purpose (independent route).
void count_exponent_vectors(long var, long t, long maxdeg, long deg_so_far, long want_parity,
                            Int& count) {
    if (var == t) {
        if ((deg_so_far & 1L) == want_parity) ++count;
        return;
    }
    for (long e = 0; e <= maxdeg; ++e)
        count_exponent_vectors(var + 1, t, maxdeg - e, deg_so_far + e, want_parity, count);
}

}  // namespace

Int multiplicity_by_monomial_count(const ProblemShape& shape, long budget) {
    shape.validate();
    const long n = shape.n, t = shape.t;
    // Total monomials of degree <= n-1 in t variables.
    Int total = gbinom(t + n - 1, n - 1);
    if (total > budget)
        throw ResourceError("multiplicity_by_monomial_count: enumeration exceeds budget of " +
                            std::to_string(budget) + " monomials");
    const long want_parity = (n + 1) & 1L;  // deg m + n odd
    Int count = 0;
    count_exponent_vectors(0, t, n - 1, 0, want_parity, count);
    return count;
}

IntPolynomial hn_numerator_from_formula(const ProblemShape& shape) {
    shape.validate();
    const long n = shape.n, t = shape.t;
    std::vector<Int> v(static_cast<size_t>(n + t));
    v[0] = 1;
    for (long I = (n + 1) / 2; I <= n; ++I) v[static_cast<size_t>(I)] -= gbinom(t, 2 * I - n);
    for (long I = n + 1; I <= n + t - 1; ++I) {
        Int inner = 0;
        for (long i = 0; i < n; ++i)
            inner += gbinom(I - 1, n - i - 1) * gbinom(i + I - n - 1, i) * gbinom(t, I - i);
        v[static_cast<size_t>(I)] += ((I - n + 1) % 2 == 0) ? inner : -inner;
    }
    return IntPolynomial(std::move(v));
}

BettiTable betti_table(const ProblemShape& shape) {
    shape.validate();
    const long n = shape.n, t = shape.t;
    BettiTable table;
    table.shape = shape;
    table.rows.resize(static_cast<size_t>(t) + 1);
    table.rows[0].push_back({0, 0, 1});
    for (long i = 0; i <= n / 2; ++i) {
        Int mult = gbinom(t, n - 2 * i);
        if (mult > 0) table.rows[1].push_back({i, n - 2 * i, std::move(mult)});
    }
    for (long N = 2; N <= t; ++N) {
        for (long i = 0; i < n; ++i) {
            Int mult = gbinom(N + n - 2, n - i - 1) * gbinom(i + N - 2, i) * gbinom(t, N + n - 1 - i);
            if (mult > 0)
                table.rows[static_cast<size_t>(N)].push_back({i, N + n - 1 - i, std::move(mult)});
        }
    }
    return table;
}

IntPolynomial euler_numerator(const BettiTable& table) {
    IntPolynomial out;
    for (size_t N = 0; N < table.rows.size(); ++N) {
        for (const auto& s : table.rows[N]) {
            Int c = (N % 2 == 0) ? s.multiplicity : -s.multiplicity;
            out = out + IntPolynomial::monomial(std::move(c), static_cast<int>(s.x_twist + s.y_twist));
        }
    }
    return out;
}

HilbertSeries hilbert_series(const ProblemShape& shape, const HilbertSeries& ambient) {
    shape.validate();
    return {ambient.numerator * one_minus_z_pow(shape.t) * hn_polynomial(shape),
            ambient.denom_power};
}

std::vector<Int> h_vector(const ProblemShape& shape) {
    return hn_polynomial(shape).coeffs();
}

}  // namespace pfh
