#include "pfh/pfaffian.hpp"

#include <random>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace pfh {

bool LinearForm::is_zero() const {
    for (const auto& c : coeffs)
        if (c != 0) return false;
    return true;
}

LinearForm LinearForm::operator-() const {
    LinearForm out;
    out.coeffs.reserve(coeffs.size());
    for (const auto& c : coeffs) out.coeffs.push_back(-c);
    return out;
}

MultiPoly LinearForm::to_poly() const {
    int dim = static_cast<int>(coeffs.size());
    MultiPoly p(dim);
    for (int j = 0; j < dim; ++j) {
        if (coeffs[static_cast<size_t>(j)] == 0) continue;
        Exponents e(static_cast<size_t>(dim));
        e[static_cast<size_t>(j)] = 1;
        p.add_term(e, coeffs[static_cast<size_t>(j)]);
    }
    return p;
}

AlmostAlternatingMatrix::AlmostAlternatingMatrix(ProblemShape shape, int ambient_dim,
                                                 std::vector<std::vector<LinearForm>> entries)
    : shape_(shape), dim_(ambient_dim), entries_(std::move(entries)) {
    shape_.validate();
    if (dim_ < 1) throw std::invalid_argument("ambient dimension must be positive");
    const size_t n = static_cast<size_t>(shape_.n);
    const size_t cols = n + static_cast<size_t>(shape_.t);
    if (entries_.size() != n) throw std::invalid_argument("matrix must have n rows");
    for (size_t i = 0; i < n; ++i) {
        if (entries_[i].size() != cols) throw std::invalid_argument("matrix must have n+t columns");
        for (const auto& f : entries_[i])
            if (f.coeffs.size() != static_cast<size_t>(dim_))
                throw std::invalid_argument("entry coefficient length must equal ambient dimension");
    }
    for (size_t i = 0; i < n; ++i) {
        if (!entries_[i][i].is_zero()) {
            std::ostringstream ss;
            ss << "X block is not alternating: nonzero diagonal entry at (" << i + 1 << ","
               << i + 1 << ")";
            throw std::invalid_argument(ss.str());
        }
        for (size_t j = i + 1; j < n; ++j) {
            if (!(entries_[i][j] == -entries_[j][i])) {
                std::ostringstream ss;
                ss << "X block is not alternating: entry (" << i + 1 << "," << j + 1
                   << ") is not the negative of entry (" << j + 1 << "," << i + 1 << ")";
                throw std::invalid_argument(ss.str());
            }
        }
    }
}

std::vector<std::vector<MultiPoly>> build_T(const AlmostAlternatingMatrix& rho) {
    const long n = rho.shape().n, t = rho.shape().t;
    const long s = n + t;
    const int dim = rho.ambient_dim();
    std::vector<std::vector<MultiPoly>> T(static_cast<size_t>(s),
                                          std::vector<MultiPoly>(static_cast<size_t>(s), MultiPoly(dim)));
    for (long i = 0; i < n; ++i)
        for (long j = 0; j < s; ++j)
            T[static_cast<size_t>(i)][static_cast<size_t>(j)] = rho.entry(i, j).to_poly();
    // Bottom-left block is -Y^t; bottom-right stays zero.
    for (long i = n; i < s; ++i)
        for (long j = 0; j < n; ++j)
            T[static_cast<size_t>(i)][static_cast<size_t>(j)] = -rho.entry(j, i).to_poly();
    return T;
}

namespace {

// Pfaffian of the submatrix indexed by the set bits of `mask`,
// memoized per top-level call.
MultiPoly pfaffian_mask(const std::vector<std::vector<MultiPoly>>& m, int dim, std::uint32_t mask,
                        std::unordered_map<std::uint32_t, MultiPoly>& memo) {
    if (mask == 0) return MultiPoly::constant(dim, 1);
    auto it = memo.find(mask);
    if (it != memo.end()) return it->second;

    std::vector<int> idx;
    for (int i = 0; i < 32; ++i)
        if (mask & (1u << i)) idx.push_back(i);

    MultiPoly acc(dim);
    for (size_t j = 1; j < idx.size(); ++j) {
        const MultiPoly& entry = m[static_cast<size_t>(idx[0])][static_cast<size_t>(idx[j])];
        if (entry.is_zero()) continue;
        std::uint32_t sub = mask & ~(1u << idx[0]) & ~(1u << idx[j]);
        MultiPoly minor = pfaffian_mask(m, dim, sub, memo);
        // Row-1 expansion sign: (-1)^j with j the 1-based column, i.e. +
        // for the second index, alternating afterwards.
        MultiPoly contrib = entry * minor;
        acc = (j % 2 == 1) ? acc + contrib : acc - contrib;
    }
    memo.emplace(mask, acc);
    return acc;
}

}  // namespace

MultiPoly pfaffian(const std::vector<std::vector<MultiPoly>>& m) {
    const size_t s = m.size();
    if (s % 2 != 0) throw std::invalid_argument("pfaffian: matrix size must be even");
    if (s > 30) throw std::invalid_argument("pfaffian: matrix too large for subset recursion");
    int dim = 0;
    for (size_t i = 0; i < s; ++i) {
        if (m[i].size() != s) throw std::invalid_argument("pfaffian: matrix must be square");
        for (size_t j = 0; j < s; ++j) dim = std::max(dim, m[i][j].dim());
    }
    for (size_t i = 0; i < s; ++i) {
        if (!m[i][i].is_zero()) throw std::invalid_argument("pfaffian: nonzero diagonal");
        for (size_t j = i + 1; j < s; ++j)
            if (!(m[i][j] == -m[j][i])) throw std::invalid_argument("pfaffian: input not alternating");
    }
    std::unordered_map<std::uint32_t, MultiPoly> memo;
    std::uint32_t full = (s == 32) ? ~0u : ((1u << s) - 1u);
    return pfaffian_mask(m, dim, full, memo);
}

bool IdealGenerators::any_zero() const {
    for (const auto& r : records)
        if (r.is_zero) return true;
    return false;
}

IdealGenerators ideal_generators(const AlmostAlternatingMatrix& rho) {
    const long n = rho.shape().n, t = rho.shape().t;
    auto T = build_T(rho);
    IdealGenerators out;
    // Subsets S of the border columns {n+1..n+t} with n + |S| even.
    for (std::uint32_t sbits = 0; sbits < (1u << t); ++sbits) {
        long ssize = __builtin_popcount(sbits);
        if ((n + ssize) % 2 != 0) continue;
        // More than n border columns forces the [Y; 0] block rank-deficient,
        // so those Pfaffians vanish identically and generate nothing.
        if (ssize > n) continue;
        std::vector<long> subset;
        std::vector<std::vector<MultiPoly>> sub(static_cast<size_t>(n + ssize));
        std::vector<long> indices;
        for (long i = 0; i < n; ++i) indices.push_back(i);
        for (long j = 0; j < t; ++j)
            if (sbits & (1u << j)) {
                indices.push_back(n + j);
                subset.push_back(n + j + 1);
            }
        for (size_t a = 0; a < indices.size(); ++a) {
            sub[a].reserve(indices.size());
            for (size_t b = 0; b < indices.size(); ++b)
                sub[a].push_back(T[static_cast<size_t>(indices[a])][static_cast<size_t>(indices[b])]);
        }
        GeneratorRecord rec;
        rec.column_subset = std::move(subset);
        rec.pfaffian = pfaffian(sub);
        rec.degree = (n + ssize) / 2;
        rec.is_zero = rec.pfaffian.is_zero();
        out.records.push_back(std::move(rec));
    }
    return out;
}

namespace {

// Uniform draw from [-3, 3], bias-free, independent of the standard
// library's distribution implementation.
long draw_coeff(std::mt19937_64& rng) {
    const std::uint64_t bound = 7;
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    std::uint64_t v;
    do {
        v = rng();
    } while (v >= limit);
    return static_cast<long>(v % bound) - 3;
}

LinearForm random_form(std::mt19937_64& rng, int dim) {
    LinearForm f;
    f.coeffs.reserve(static_cast<size_t>(dim));
    for (int j = 0; j < dim; ++j) f.coeffs.emplace_back(draw_coeff(rng));
    return f;
}

}  // namespace

AlmostAlternatingMatrix random_generic_instance(const ProblemShape& shape, int ambient_dim,
                                                std::uint64_t seed) {
    shape.validate();
    if (ambient_dim < 1) throw std::invalid_argument("ambient dimension must be positive");
    const size_t n = static_cast<size_t>(shape.n);
    const size_t cols = n + static_cast<size_t>(shape.t);
    std::mt19937_64 rng(seed);
    std::vector<std::vector<LinearForm>> entries(
        n, std::vector<LinearForm>(cols, LinearForm{std::vector<Rat>(static_cast<size_t>(ambient_dim))}));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j) {
            entries[i][j] = random_form(rng, ambient_dim);
            entries[j][i] = -entries[i][j];
        }
    for (size_t i = 0; i < n; ++i)
        for (size_t j = n; j < cols; ++j) entries[i][j] = random_form(rng, ambient_dim);
    return AlmostAlternatingMatrix(shape, ambient_dim, std::move(entries));
}

}  // namespace pfh
