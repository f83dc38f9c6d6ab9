#include "pfh/binom.hpp"

#include <cassert>
#include <sstream>
#include <stdexcept>

namespace pfh {

Int gbinom(long a, long b) {
    if (b < 0) return 0;
    // Iterative product, dividing by the running index at each step.
    // Every intermediate division is exact: after multiplying k factors
    // the accumulator is k! * binom(a, k).
    Int acc = 1;
    for (long k = 1; k <= b; ++k) {
        acc *= Int(a - k + 1);
        mpz_divexact_ui(acc.get_mpz_t(), acc.get_mpz_t(), static_cast<unsigned long>(k));
    }
    return acc;
}

IntPolynomial::IntPolynomial(std::vector<Int> coeffs) : coeffs_(std::move(coeffs)) {
    normalize();
}

void IntPolynomial::normalize() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

IntPolynomial IntPolynomial::constant(Int c) {
    return IntPolynomial(std::vector<Int>{std::move(c)});
}

IntPolynomial IntPolynomial::monomial(Int c, int exponent) {
    if (exponent < 0) throw std::invalid_argument("monomial: negative exponent");
    std::vector<Int> v(static_cast<size_t>(exponent) + 1);
    v.back() = std::move(c);
    return IntPolynomial(std::move(v));
}

const Int& IntPolynomial::coeff(int k) const {
    static const Int zero = 0;
    if (k < 0 || static_cast<size_t>(k) >= coeffs_.size()) return zero;
    return coeffs_[static_cast<size_t>(k)];
}

Int IntPolynomial::eval(const Int& x) const {
    Int acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

IntPolynomial IntPolynomial::operator+(const IntPolynomial& o) const {
    std::vector<Int> out(std::max(coeffs_.size(), o.coeffs_.size()));
    for (size_t i = 0; i < out.size(); ++i) {
        if (i < coeffs_.size()) out[i] += coeffs_[i];
        if (i < o.coeffs_.size()) out[i] += o.coeffs_[i];
    }
    return IntPolynomial(std::move(out));
}

IntPolynomial IntPolynomial::operator-() const {
    std::vector<Int> out(coeffs_.size());
    for (size_t i = 0; i < out.size(); ++i) out[i] = -coeffs_[i];
    return IntPolynomial(std::move(out));
}

IntPolynomial IntPolynomial::operator-(const IntPolynomial& o) const {
    return *this + (-o);
}

IntPolynomial IntPolynomial::operator*(const IntPolynomial& o) const {
    if (is_zero() || o.is_zero()) return {};
    std::vector<Int> out(coeffs_.size() + o.coeffs_.size() - 1);
    for (size_t i = 0; i < coeffs_.size(); ++i)
        for (size_t j = 0; j < o.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * o.coeffs_[j];
    return IntPolynomial(std::move(out));
}

std::string IntPolynomial::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream ss;
    bool first = true;
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        const Int& c = coeffs_[i];
        if (c == 0) continue;
        if (first) {
            if (c < 0) ss << "-";
        } else {
            ss << (c < 0 ? " - " : " + ");
        }
        Int a = abs(c);
        if (i == 0) {
            ss << a.get_str();
        } else {
            if (a != 1) ss << a.get_str() << "*";
            ss << var;
            if (i > 1) ss << "^" << i;
        }
        first = false;
    }
    return ss.str();
}

IntPolynomial one_minus_z_pow(long t) {
    if (t < 0) throw std::invalid_argument("one_minus_z_pow: t must be non-negative");
    std::vector<Int> v(static_cast<size_t>(t) + 1);
    for (long k = 0; k <= t; ++k) {
        Int c = gbinom(t, k);
        v[static_cast<size_t>(k)] = (k % 2 == 0) ? c : -c;
    }
    return IntPolynomial(std::move(v));
}

Int geometric_inverse_coeff(long t, long k) {
    if (t < 1) throw std::invalid_argument("geometric_inverse_coeff: t must be positive");
    if (k < 0) return 0;
    return gbinom(t + k - 1, k);
}

std::optional<IntPolynomial> divide_one_minus_z(const IntPolynomial& p) {
    if (p.is_zero()) return IntPolynomial{};
    if (p.eval(1) != 0) return std::nullopt;
    // p = (1 - z) q + c with q_i - q_{i-1} = p_i; solve from the top down.
    int d = p.degree();
    std::vector<Int> q(static_cast<size_t>(d));
    Int run = 0;
    for (int i = d; i >= 1; --i) {
        run -= p.coeff(i);
        q[static_cast<size_t>(i) - 1] = run;
    }
    return IntPolynomial(std::move(q));
}

int one_minus_z_order(const IntPolynomial& p) {
    if (p.is_zero()) throw std::invalid_argument("one_minus_z_order: zero polynomial");
    int order = 0;
    IntPolynomial cur = p;
    while (true) {
        auto q = divide_one_minus_z(cur);
        if (!q) return order;
        cur = std::move(*q);
        ++order;
    }
}

TruncatedSeries::TruncatedSeries(int order) {
    if (order < 0) throw std::invalid_argument("TruncatedSeries: negative order");
    coeffs_.resize(static_cast<size_t>(order) + 1);
}

TruncatedSeries::TruncatedSeries(const IntPolynomial& p, int order) : TruncatedSeries(order) {
    for (int k = 0; k <= order; ++k) coeffs_[static_cast<size_t>(k)] = p.coeff(k);
}

TruncatedSeries TruncatedSeries::from_coeffs(std::vector<Int> coeffs) {
    TruncatedSeries s(static_cast<int>(coeffs.size()) - 1);
    s.coeffs_ = std::move(coeffs);
    return s;
}

TruncatedSeries TruncatedSeries::operator*(const TruncatedSeries& o) const {
    int ord = std::min(order(), o.order());
    TruncatedSeries out(ord);
    for (int k = 0; k <= ord; ++k) {
        Int acc = 0;
        for (int i = 0; i <= k; ++i) acc += coeffs_[static_cast<size_t>(i)] * o.coeffs_[static_cast<size_t>(k - i)];
        out.coeffs_[static_cast<size_t>(k)] = std::move(acc);
    }
    return out;
}

}  // namespace pfh
