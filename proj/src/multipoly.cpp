#include "pfh/multipoly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace pfh {

long total_degree(const Exponents& e) {
    long d = 0;
    for (unsigned x : e) d += x;
    return d;
}

bool divides(const Exponents& a, const Exponents& b) {
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

Exponents exp_mul(const Exponents& a, const Exponents& b) {
    Exponents out(a.size());
    for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
    return out;
}

Exponents exp_div(const Exponents& a, const Exponents& b) {
    Exponents out(a.size());
    for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
    return out;
}

Exponents exp_lcm(const Exponents& a, const Exponents& b) {
    Exponents out(a.size());
    for (size_t i = 0; i < a.size(); ++i) out[i] = std::max(a[i], b[i]);
    return out;
}

Exponents exp_gcd(const Exponents& a, const Exponents& b) {
    Exponents out(a.size());
    for (size_t i = 0; i < a.size(); ++i) out[i] = std::min(a[i], b[i]);
    return out;
}

bool DegRevLexGreater::operator()(const Exponents& a, const Exponents& b) const {
    long da = total_degree(a), db = total_degree(b);
    if (da != db) return da > db;
    // Same degree: a > b iff the last index where they differ has a smaller
    // entry in a.
    for (size_t i = a.size(); i-- > 0;) {
        if (a[i] != b[i]) return a[i] < b[i];
    }
    return false;
}

MultiPoly MultiPoly::constant(int dim, Rat c) {
    MultiPoly p(dim);
    p.add_term(Exponents(static_cast<size_t>(dim)), c);
    return p;
}

MultiPoly MultiPoly::variable(int dim, int j) {
    if (j < 0 || j >= dim) throw std::invalid_argument("MultiPoly::variable: index out of range");
    Exponents e(static_cast<size_t>(dim));
    e[static_cast<size_t>(j)] = 1;
    MultiPoly p(dim);
    p.add_term(e, 1);
    return p;
}

MultiPoly MultiPoly::monomial(int dim, Exponents e, Rat c) {
    if (e.size() != static_cast<size_t>(dim))
        throw std::invalid_argument("MultiPoly::monomial: exponent length mismatch");
    MultiPoly p(dim);
    p.add_term(e, c);
    return p;
}

const Exponents& MultiPoly::leading_exponents() const {
    if (terms_.empty()) throw std::logic_error("leading term of zero polynomial");
    return terms_.begin()->first;
}

const Rat& MultiPoly::leading_coeff() const {
    if (terms_.empty()) throw std::logic_error("leading term of zero polynomial");
    return terms_.begin()->second;
}

long MultiPoly::degree() const {
    if (terms_.empty()) return -1;
    return total_degree(terms_.begin()->first);
}

bool MultiPoly::is_homogeneous() const {
    if (terms_.empty()) return true;
    long d = total_degree(terms_.begin()->first);
    for (const auto& [e, c] : terms_)
        if (total_degree(e) != d) return false;
    return true;
}

void MultiPoly::add_term(const Exponents& e, const Rat& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
    MultiPoly out = *this;
    for (const auto& [e, c] : o.terms_) out.add_term(e, c);
    return out;
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly out(dim_);
    for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
    return out;
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const {
    MultiPoly out = *this;
    for (const auto& [e, c] : o.terms_) out.add_term(e, -c);
    return out;
}

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
    MultiPoly out(dim_);
    for (const auto& [e1, c1] : terms_)
        for (const auto& [e2, c2] : o.terms_) out.add_term(exp_mul(e1, e2), c1 * c2);
    return out;
}

MultiPoly MultiPoly::scaled(const Rat& c) const {
    MultiPoly out(dim_);
    if (c == 0) return out;
    for (const auto& [e, k] : terms_) out.terms_.emplace(e, k * c);
    return out;
}

MultiPoly MultiPoly::times_term(const Rat& c, const Exponents& e) const {
    MultiPoly out(dim_);
    if (c == 0) return out;
    for (const auto& [e1, c1] : terms_) out.terms_.emplace(exp_mul(e1, e), c1 * c);
    return out;
}

std::string MultiPoly::str(const std::vector<std::string>& var_names) const {
    if (terms_.empty()) return "0";
    std::ostringstream ss;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        Rat a = abs(c);
        if (first) {
            if (c < 0) ss << "-";
        } else {
            ss << (c < 0 ? " - " : " + ");
        }
        bool printed = false;
        if (a != 1 || total_degree(e) == 0) {
            ss << a.get_str();
            printed = true;
        }
        for (size_t j = 0; j < e.size(); ++j) {
            if (e[j] == 0) continue;
            if (printed) ss << "*";
            if (j < var_names.size())
                ss << var_names[j];
            else
                ss << "x" << (j + 1);
            if (e[j] > 1) ss << "^" << e[j];
            printed = true;
        }
        first = false;
    }
    return ss.str();
}

}  // namespace pfh
