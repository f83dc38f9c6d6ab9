#pragma once

#include <gmpxx.h>

#include <limits>
#include <optional>
#include <string>
#include <vector>

namespace pfh {

using Int = mpz_class;
using Rat = mpq_class;

/// Generalized binomial coefficient, defined for all integer arguments:
/// 0 when b < 0, otherwise the falling factorial a(a-1)...(a-b+1)/b!.
/// Valid for negative a and satisfies Pascal's identity everywhere.
Int gbinom(long a, long b);

/// Dense univariate polynomial in z with arbitrary-precision integer
/// coefficients. Index = exponent. The zero polynomial stores no
/// coefficients and reports kMinusInfinity as its degree.
class IntPolynomial {
public:
    static constexpr int kMinusInfinity = std::numeric_limits<int>::min();

    IntPolynomial() = default;
    explicit IntPolynomial(std::vector<Int> coeffs);

    static IntPolynomial constant(Int c);
    static IntPolynomial monomial(Int c, int exponent);

    bool is_zero() const { return coeffs_.empty(); }
    int degree() const {
        return coeffs_.empty() ? kMinusInfinity : static_cast<int>(coeffs_.size()) - 1;
    }
    /// Coefficient of z^k; zero outside the stored range.
    const Int& coeff(int k) const;
    const std::vector<Int>& coeffs() const { return coeffs_; }

    Int eval(const Int& x) const;

    IntPolynomial operator+(const IntPolynomial& o) const;
    IntPolynomial operator-(const IntPolynomial& o) const;
    IntPolynomial operator-() const;
    IntPolynomial operator*(const IntPolynomial& o) const;
    bool operator==(const IntPolynomial& o) const { return coeffs_ == o.coeffs_; }

    std::string str(const std::string& var = "z") const;

private:
    void normalize();
    std::vector<Int> coeffs_;
};

inline IntPolynomial poly_mul(const IntPolynomial& p, const IntPolynomial& q) {
    return p * q;
}

/// (1 - z)^t for t >= 0; coefficient of z^k is (-1)^k binom(t, k).
IntPolynomial one_minus_z_pow(long t);

/// k-th power series coefficient of (1 - z)^(-t) for t >= 1,
/// i.e. binom(t + k - 1, k); zero for k < 0.
Int geometric_inverse_coeff(long t, long k);

/// Quotient p / (1 - z) when the division is exact (p(1) == 0).
std::optional<IntPolynomial> divide_one_minus_z(const IntPolynomial& p);

/// Order of vanishing of p at z = 1 (number of (1-z) factors); 0 for p(1) != 0.
int one_minus_z_order(const IntPolynomial& p);

/// Power series with exact integer coefficients, truncated after z^order.
class TruncatedSeries {
public:
    explicit TruncatedSeries(int order);
    TruncatedSeries(const IntPolynomial& p, int order);
    static TruncatedSeries from_coeffs(std::vector<Int> coeffs);

    int order() const { return static_cast<int>(coeffs_.size()) - 1; }
    const Int& coeff(int k) const { return coeffs_.at(static_cast<size_t>(k)); }

    TruncatedSeries operator*(const TruncatedSeries& o) const;
    bool operator==(const TruncatedSeries& o) const { return coeffs_ == o.coeffs_; }

private:
    std::vector<Int> coeffs_;  // indices 0..order
};

}  // namespace pfh
