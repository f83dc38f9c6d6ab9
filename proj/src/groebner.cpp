#include "pfh/groebner.hpp"

#include <algorithm>
#include <optional>

#include "pfh/pfaffian.hpp"

namespace pfh {

namespace {

bool coprime(const Exponents& a, const Exponents& b) {
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] > 0 && b[i] > 0) return false;
    return true;
}

MultiPoly spoly(const MultiPoly& f, const MultiPoly& g) {
    Exponents l = exp_lcm(f.leading_exponents(), g.leading_exponents());
    MultiPoly a = f.times_term(Rat(1) / f.leading_coeff(), exp_div(l, f.leading_exponents()));
    MultiPoly b = g.times_term(Rat(1) / g.leading_coeff(), exp_div(l, g.leading_exponents()));
    return a - b;
}

}  // namespace

MultiPoly normal_form(const MultiPoly& p, const std::vector<MultiPoly>& basis) {
    MultiPoly rem(p.dim());
    MultiPoly work = p;
    while (!work.is_zero()) {
        const Exponents& lead = work.leading_exponents();
        const MultiPoly* reducer = nullptr;
        for (const auto& g : basis) {
            if (!g.is_zero() && divides(g.leading_exponents(), lead)) {
                reducer = &g;
                break;
            }
        }
        if (reducer == nullptr) {
            // Leading term is irreducible: move it to the remainder.
            rem.add_term(lead, work.leading_coeff());
            MultiPoly lt = MultiPoly::monomial(work.dim(), lead, work.leading_coeff());
            work = work - lt;
        } else {
            Rat c = work.leading_coeff() / reducer->leading_coeff();
            work = work - reducer->times_term(c, exp_div(lead, reducer->leading_exponents()));
        }
    }
    return rem;
}

std::vector<MultiPoly> buchberger(const std::vector<MultiPoly>& gens) {
    std::vector<MultiPoly> basis;
    for (const auto& g : gens)
        if (!g.is_zero()) basis.push_back(g);
    if (basis.empty()) return basis;

    struct Pair {
        size_t i, j;
        Exponents lcm;
    };
    std::vector<Pair> pairs;
    auto push_pairs = [&](size_t k) {
        for (size_t i = 0; i < k; ++i) {
            // Product criterion: coprime leading terms reduce to zero.
            if (coprime(basis[i].leading_exponents(), basis[k].leading_exponents())) continue;
            pairs.push_back({i, k, exp_lcm(basis[i].leading_exponents(), basis[k].leading_exponents())});
        }
    };
    for (size_t k = 1; k < basis.size(); ++k) push_pairs(k);

    DegRevLexGreater greater;
    while (!pairs.empty()) {
        // Normal selection: smallest lcm in the term order.
        size_t best = 0;
        for (size_t p = 1; p < pairs.size(); ++p)
            if (greater(pairs[best].lcm, pairs[p].lcm)) best = p;
        Pair pr = pairs[best];
        pairs[best] = pairs.back();
        pairs.pop_back();

        MultiPoly r = normal_form(spoly(basis[pr.i], basis[pr.j]), basis);
        if (!r.is_zero()) {
            basis.push_back(std::move(r));
            push_pairs(basis.size() - 1);
        }
        if (basis.size() > 4096)
            throw ResourceError("buchberger: basis size exceeded budget");
    }

    // Minimalize: drop elements whose lead is divisible by another lead.
    std::vector<MultiPoly> minimal;
    for (size_t i = 0; i < basis.size(); ++i) {
        bool redundant = false;
        for (size_t j = 0; j < basis.size() && !redundant; ++j) {
            if (i == j) continue;
            if (divides(basis[j].leading_exponents(), basis[i].leading_exponents())) {
                // Break ties so exactly one of two equal leads survives.
                if (basis[i].leading_exponents() == basis[j].leading_exponents())
                    redundant = j < i;
                else
                    redundant = true;
            }
        }
        if (!redundant) minimal.push_back(basis[i]);
    }

    // Reduce: monic leads, tails in normal form w.r.t. the others.
    std::vector<MultiPoly> reduced;
    for (size_t i = 0; i < minimal.size(); ++i) {
        std::vector<MultiPoly> others;
        for (size_t j = 0; j < minimal.size(); ++j)
            if (j != i) others.push_back(minimal[j]);
        MultiPoly r = normal_form(minimal[i], others);
        reduced.push_back(r.scaled(Rat(1) / r.leading_coeff()));
    }
    std::sort(reduced.begin(), reduced.end(), [&](const MultiPoly& a, const MultiPoly& b) {
        return greater(b.leading_exponents(), a.leading_exponents());
    });
    return reduced;
}

bool is_groebner_basis(const std::vector<MultiPoly>& basis) {
    for (size_t i = 0; i < basis.size(); ++i)
        for (size_t j = i + 1; j < basis.size(); ++j)
            if (!normal_form(spoly(basis[i], basis[j]), basis).is_zero()) return false;
    return true;
}

std::vector<Exponents> minimalize(std::vector<Exponents> gens) {
    std::sort(gens.begin(), gens.end());
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    std::vector<Exponents> out;
    for (size_t i = 0; i < gens.size(); ++i) {
        bool redundant = false;
        for (size_t j = 0; j < gens.size() && !redundant; ++j)
            if (i != j && divides(gens[j], gens[i]) && !(gens[i] == gens[j])) redundant = true;
        if (!redundant) out.push_back(gens[i]);
    }
    return out;
}

MonomialIdeal initial_ideal(const std::vector<MultiPoly>& gb) {
    MonomialIdeal ideal;
    std::vector<Exponents> leads;
    for (const auto& g : gb) {
        if (g.is_zero()) continue;
        ideal.dim = g.dim();
        leads.push_back(g.leading_exponents());
    }
    ideal.gens = minimalize(std::move(leads));
    return ideal;
}

namespace {

IntPolynomial hilbert_rec(std::vector<Exponents> gens, long& nodes, long budget) {
    if (++nodes > budget)
        throw ResourceError("monomial_hilbert_numerator: recursion budget exceeded");
    if (gens.empty()) return IntPolynomial::constant(1);
    // Any generator that is a pure power of one variable splits cheaply,
    // but plain last-generator pivoting is fine at this scale.
    Exponents m = gens.back();
    gens.pop_back();
    std::vector<Exponents> colon;
    colon.reserve(gens.size());
    for (const auto& g : gens) {
        Exponents q(g.size());
        for (size_t i = 0; i < g.size(); ++i) q[i] = g[i] > m[i] ? g[i] - m[i] : 0;
        colon.push_back(std::move(q));
    }
    IntPolynomial without = hilbert_rec(gens, nodes, budget);
    IntPolynomial quotient = hilbert_rec(minimalize(std::move(colon)), nodes, budget);
    return without - IntPolynomial::monomial(1, static_cast<int>(total_degree(m))) * quotient;
}

}  // namespace

IntPolynomial monomial_hilbert_numerator(const MonomialIdeal& ideal, long node_budget) {
    long nodes = 0;
    return hilbert_rec(ideal.gens, nodes, node_budget);
}

int monomial_codim(const MonomialIdeal& ideal) {
    const int d = ideal.dim;
    if (d > 20) throw ResourceError("monomial_codim: dimension too large for subset search");
    if (ideal.gens.empty()) return 0;
    int best_dim = 0;
    for (std::uint32_t v = 0; v < (1u << d); ++v) {
        bool ok = true;
        for (const auto& g : ideal.gens) {
            // V must not contain the full support of any generator.
            bool contained = true;
            for (int i = 0; i < d && contained; ++i)
                if (g[static_cast<size_t>(i)] > 0 && !(v & (1u << i))) contained = false;
            if (contained) {
                ok = false;
                break;
            }
        }
        if (ok) best_dim = std::max(best_dim, __builtin_popcount(v));
    }
    return d - best_dim;
}

OracleReport oracle_check(const ProblemShape& shape, int ambient_dim, std::uint64_t seed,
                          int max_redraws, const OracleLimits& limits) {
    shape.validate();
    if (shape.n + shape.t > limits.max_shape || ambient_dim > limits.max_dim)
        throw ResourceError("oracle_check: shape or dimension outside the desk-scale budget");
    if (ambient_dim < 1) throw std::invalid_argument("oracle_check: ambient_dim must be positive");

    OracleReport report;
    report.shape = shape;
    report.ambient_dim = ambient_dim;
    report.seed = seed;

    const IntPolynomial expected = one_minus_z_pow(shape.t) * hn_polynomial(shape);

    for (int attempt = 0; attempt <= max_redraws; ++attempt) {
        report.redraws = attempt;
        auto inst = random_generic_instance(shape, ambient_dim, seed + static_cast<std::uint64_t>(attempt));
        auto gens = ideal_generators(inst);
        if (gens.any_zero()) continue;  // degenerate draw

        std::vector<MultiPoly> polys;
        for (const auto& r : gens.records) polys.push_back(r.pfaffian);
        auto gb = buchberger(polys);
        auto in_ideal = initial_ideal(gb);
        report.codim = monomial_codim(in_ideal);
        if (report.codim < shape.t) continue;  // t <= grade J failed for this draw

        report.generic = true;
        report.hilbert_numerator = monomial_hilbert_numerator(in_ideal, limits.node_budget);
        HilbertSeries actual{report.hilbert_numerator, ambient_dim};
        HilbertSeries predicted{expected, ambient_dim};
        report.matches_theorem = actual.same_series(predicted);
        return report;
    }
    throw GenericityError("oracle_check: no generic draw within " + std::to_string(max_redraws) +
                          " redraws (codim t not reached)");
}

}  // namespace pfh
