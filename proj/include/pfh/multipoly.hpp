#pragma once

#include <map>
#include <string>
#include <vector>

#include "pfh/binom.hpp"

namespace pfh {

/// Exponent vector of a monomial; length = ambient dimension.
using Exponents = std::vector<unsigned>;

long total_degree(const Exponents& e);
bool divides(const Exponents& a, const Exponents& b);  // a | b
Exponents exp_mul(const Exponents& a, const Exponents& b);
Exponents exp_div(const Exponents& a, const Exponents& b);  // assumes b | a
Exponents exp_lcm(const Exponents& a, const Exponents& b);
Exponents exp_gcd(const Exponents& a, const Exponents& b);

/// Degree-reverse-lexicographic order, "a comes before b" = a > b in
/// the term order, so an ordered map iterates leading term first.
struct DegRevLexGreater {
    bool operator()(const Exponents& a, const Exponents& b) const;
};

/// Sparse multivariate polynomial over the rationals with a fixed
/// global degrevlex term order. No zero coefficients are stored.
class MultiPoly {
public:
    using TermMap = std::map<Exponents, Rat, DegRevLexGreater>;

    explicit MultiPoly(int dim = 0) : dim_(dim) {}

    static MultiPoly constant(int dim, Rat c);
    static MultiPoly variable(int dim, int j);
    static MultiPoly monomial(int dim, Exponents e, Rat c);

    int dim() const { return dim_; }
    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }

    const Exponents& leading_exponents() const;
    const Rat& leading_coeff() const;
    long degree() const;  // total degree; -1 for zero
    bool is_homogeneous() const;

    void add_term(const Exponents& e, const Rat& c);

    MultiPoly operator+(const MultiPoly& o) const;
    MultiPoly operator-(const MultiPoly& o) const;
    MultiPoly operator-() const;
    MultiPoly operator*(const MultiPoly& o) const;
    MultiPoly scaled(const Rat& c) const;
    /// this * c * x^e
    MultiPoly times_term(const Rat& c, const Exponents& e) const;
    bool operator==(const MultiPoly& o) const { return dim_ == o.dim_ && terms_ == o.terms_; }

    std::string str(const std::vector<std::string>& var_names = {}) const;

private:
    int dim_;
    TermMap terms_;
};

}  // namespace pfh
