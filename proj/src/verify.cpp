#include "pfh/verify.hpp"

#include <chrono>
#include <map>
#include <sstream>
#include <stdexcept>

#include "pfh/identities.hpp"
#include "pfh/pfaffian.hpp"

namespace pfh {

namespace {

using Clock = std::chrono::steady_clock;

class Sweep {
public:
    explicit Sweep(std::string name) : start_(Clock::now()) { report_.name = std::move(name); }

    void check_zero(const Int& residual, const std::string& args) {
        ++report_.cases;
        if (residual != 0) record_failure(args + " residual=" + residual.get_str());
    }

    void check(bool ok, const std::string& args) {
        ++report_.cases;
        if (!ok) record_failure(args);
    }

    void record_failure(const std::string& witness) {
        if (report_.failures == 0) report_.first_counterexample = witness;
        ++report_.failures;
    }

    VerifyReport finish() {
        report_.seconds = std::chrono::duration<double>(Clock::now() - start_).count();
        return report_;
    }

private:
    VerifyReport report_;
    Clock::time_point start_;
};

std::string shape_args(long n, long t) {
    return "n=" + std::to_string(n) + " t=" + std::to_string(t);
}

}  // namespace

VerifyReport sweep_q_vanishing(const SweepRanges& r) {
    Sweep s("q_vanishing_under_hypotheses");
    for (long w = r.w_min; w <= r.w_max; ++w)
        for (long t = 0; t <= r.q_t_max; ++t)
            for (long I = 1; I <= r.i_max; ++I)
                for (long a = 0; a <= r.alpha_max; ++a) {
                    QArgs args{w, t, I, a};
                    if (!prop_hypotheses_hold(args)) continue;
                    s.check_zero(q_value(args), "w=" + std::to_string(w) + " t=" + std::to_string(t) +
                                                    " I=" + std::to_string(I) + " alpha=" + std::to_string(a));
                }
    return s.finish();
}

VerifyReport sweep_recurrence(const SweepRanges& r) {
    Sweep s("q_recurrence");
    for (long w = r.w_min; w <= r.w_max; ++w)
        for (long t = 0; t <= r.q_t_max - 1; ++t)
            for (long I = 1; I <= r.i_max; ++I)
                for (long a = 0; a <= r.alpha_max; ++a) {
                    if (!prop_hypotheses_hold({w, t, I, a})) continue;
                    s.check_zero(recurrence_residual(w, t, I, a),
                                 "w=" + std::to_string(w) + " t=" + std::to_string(t) + " I=" +
                                     std::to_string(I) + " alpha=" + std::to_string(a));
                }
    // alpha = 0 needs no hypotheses; sweep an unrestricted grid too.
    for (long w = -5; w <= 8; ++w)
        for (long t = 0; t <= 6; ++t)
            for (long I = -5; I <= 8; ++I)
                s.check_zero(recurrence_residual(w, t, I, 0),
                             "w=" + std::to_string(w) + " t=" + std::to_string(t) + " I=" +
                                 std::to_string(I) + " alpha=0 (unrestricted)");
    return s.finish();
}

VerifyReport sweep_base_case(const SweepRanges& r) {
    Sweep s("q_base_case");
    for (long w = r.w_min; w <= r.w_max; ++w)
        for (long I = 1; I <= r.i_max; ++I)
            for (long a = 0; a <= r.alpha_max; ++a) {
                if (w + a < 0) continue;
                s.check_zero(q_value({w, 0, I, a}), "w=" + std::to_string(w) + " t=0 I=" +
                                                        std::to_string(I) + " alpha=" + std::to_string(a));
            }
    return s.finish();
}

VerifyReport sweep_partial_sum(const SweepRanges&) {
    Sweep s("alternating_partial_sum_truncation");
    for (long a = -10; a <= 10; ++a)
        for (long b = -10; b <= 10; ++b) {
            Int lhs = alternating_partial_sum(a, b);
            Int rhs = (b % 2 == 0 ? 1 : -1) * gbinom(a - 1, b);
            s.check_zero(lhs - rhs, "a=" + std::to_string(a) + " b=" + std::to_string(b));
        }
    return s.finish();
}

VerifyReport sweep_ku92(const SweepRanges&) {
    Sweep s("ku92_alternating_sum");
    for (long a = 0; a <= 8; ++a)
        for (long b = -8; b <= 8; ++b)
            for (long c = -8; c <= 8; ++c)
                s.check_zero(ku92_residual(a, b, c), "a=" + std::to_string(a) + " b=" +
                                                         std::to_string(b) + " c=" + std::to_string(c));
    return s.finish();
}

VerifyReport sweep_convolution(const SweepRanges& r) {
    Sweep s("binomial_convolution");
    for (long n = 1; n <= r.max_n; ++n)
        for (long t = 1; t <= r.max_t; ++t)
            for (long I = (n + 1) / 2; I <= n; ++I)
                s.check_zero(convolution_residual(n, t, I),
                             shape_args(n, t) + " I=" + std::to_string(I));
    return s.finish();
}

VerifyReport sweep_unit_series(const SweepRanges& r) {
    Sweep s("unit_series_expansion");
    for (long n = 1; n <= r.max_n; ++n)
        for (long t = 1; t <= r.max_t; ++t)
            for (long I = 0; I <= n; ++I)
                s.check_zero(unit_series_residual(n, t, I),
                             shape_args(n, t) + " I=" + std::to_string(I));
    return s.finish();
}

VerifyReport sweep_decomposition(const SweepRanges&) {
    Sweep s("proof_decomposition_equivalence");
    for (long n = 1; n <= 6; ++n)
        for (long t = 1; t <= 5; ++t) {
            ProblemShape shape{n, t};
            IntPolynomial delta =
                hn_numerator_from_formula(shape) - one_minus_z_pow(t) * hn_polynomial(shape);
            for (long I = 0; I <= n + t; ++I) {
                Int expected;
                if (I <= n) {
                    Int conv = (I >= (n + 1) / 2) ? convolution_residual(n, t, I) : Int(0);
                    expected = conv - unit_series_residual(n, t, I);
                } else if (I <= n + t - 1) {
                    Int q = q_value({n - 1, t, I, 0});
                    expected = ((I + n) % 2 == 0) ? q : -q;
                } else {
                    expected = 0;
                }
                s.check_zero(delta.coeff(static_cast<int>(I)) - expected,
                             shape_args(n, t) + " I=" + std::to_string(I));
            }
        }
    return s.finish();
}

VerifyReport sweep_factorization(const SweepRanges& r) {
    Sweep s("factorization_HN_eq_(1-z)^t_hn");
    for (long n = 1; n <= r.max_n; ++n)
        for (long t = 1; t <= r.max_t; ++t) {
            ProblemShape shape{n, t};
            s.check(hn_numerator_from_formula(shape) ==
                        one_minus_z_pow(t) * hn_polynomial(shape),
                    shape_args(n, t));
        }
    return s.finish();
}

VerifyReport sweep_multiplicity(const SweepRanges& r) {
    Sweep s("multiplicity_triple_agreement");
    for (long n = 1; n <= r.max_n; ++n)
        for (long t = 1; t <= r.max_t_multiplicity; ++t) {
            ProblemShape shape{n, t};
            Int via_hn = hn_polynomial(shape).eval(1);
            Int via_formula = hn_multiplicity(shape);
            Int via_count = multiplicity_by_monomial_count(shape);
            s.check(via_hn == via_formula && via_formula == via_count,
                    shape_args(n, t) + " hn(1)=" + via_hn.get_str() + " formula=" +
                        via_formula.get_str() + " count=" + via_count.get_str());
        }
    return s.finish();
}

VerifyReport sweep_vanishing_order(const SweepRanges& r) {
    Sweep s("HN_vanishing_order_t_at_z_1");
    for (long n = 1; n <= r.max_n; ++n)
        for (long t = 1; t <= r.max_t; ++t) {
            ProblemShape shape{n, t};
            IntPolynomial hn_formula = hn_numerator_from_formula(shape);
            bool ok = one_minus_z_order(hn_formula) == t;
            if (ok) {
                IntPolynomial quotient = hn_formula;
                for (long k = 0; k < t; ++k) quotient = *divide_one_minus_z(quotient);
                ok = quotient.eval(1) > 0;
            }
            s.check(ok, shape_args(n, t));
        }
    return s.finish();
}

VerifyReport sweep_h_vector(const SweepRanges& r) {
    Sweep s("h_vector_positivity");
    for (long n = 1; n <= r.max_n; ++n)
        for (long t = 1; t <= r.max_t; ++t) {
            ProblemShape shape{n, t};
            auto h = h_vector(shape);
            bool ok = !h.empty() && h.front() == 1 && static_cast<long>(h.size()) <= n;
            for (const auto& c : h)
                if (c < 0) ok = false;
            s.check(ok, shape_args(n, t));
        }
    return s.finish();
}

VerifyReport sweep_resolution(const SweepRanges& r) {
    Sweep s("euler_characteristic_eq_HN");
    for (long n = 1; n <= r.max_n; ++n)
        for (long t = 1; t <= r.max_t; ++t) {
            ProblemShape shape{n, t};
            s.check(euler_numerator(betti_table(shape)) == hn_numerator_from_formula(shape),
                    shape_args(n, t));
        }
    return s.finish();
}

VerifyReport sweep_rank_alternating_sum(const SweepRanges& r) {
    Sweep s("betti_rank_alternating_sum_zero");
    for (long n = 1; n <= r.max_n; ++n)
        for (long t = 1; t <= r.max_t; ++t) {
            BettiTable table = betti_table({n, t});
            Int acc = 0;
            for (size_t N = 0; N < table.rows.size(); ++N)
                acc += (N % 2 == 0) ? table.row_rank(N) : -table.row_rank(N);
            s.check_zero(acc, shape_args(n, t));
        }
    return s.finish();
}

VerifyReport sweep_generator_census(long max_n, long max_t, int ambient_dim, std::uint64_t seed) {
    Sweep s("generator_census_vs_betti_row_1");
    for (long n = 1; n <= max_n; ++n)
        for (long t = 1; t <= max_t; ++t) {
            ProblemShape shape{n, t};
            auto inst = random_generic_instance(shape, ambient_dim, seed + static_cast<std::uint64_t>(100 * n + t));
            auto gens = ideal_generators(inst);
            BettiTable table = betti_table(shape);

            bool ok = Int(static_cast<long>(gens.records.size())) == table.row_rank(1);
            // Degree multiset of generators vs total twists of row N=1.
            std::map<long, Int> expected, actual;
            for (const auto& summand : table.rows[1])
                expected[summand.x_twist + summand.y_twist] += summand.multiplicity;
            for (const auto& rec : gens.records) {
                actual[rec.degree] += 1;
                if (!rec.is_zero &&
                    (!rec.pfaffian.is_homogeneous() || rec.pfaffian.degree() != rec.degree))
                    ok = false;
            }
            if (expected != actual) ok = false;
            s.check(ok, shape_args(n, t) + " dim=" + std::to_string(ambient_dim));
        }
    return s.finish();
}

std::vector<VerifyReport> run_suite(const std::string& suite, const SweepRanges& r) {
    std::vector<VerifyReport> out;
    bool all = suite == "all";
    if (all || suite == "identities") {
        out.push_back(sweep_q_vanishing(r));
        out.push_back(sweep_recurrence(r));
        out.push_back(sweep_base_case(r));
        out.push_back(sweep_partial_sum(r));
        out.push_back(sweep_ku92(r));
        out.push_back(sweep_convolution(r));
        out.push_back(sweep_unit_series(r));
        out.push_back(sweep_decomposition(r));
    }
    if (all || suite == "series") {
        out.push_back(sweep_factorization(r));
        out.push_back(sweep_multiplicity(r));
        out.push_back(sweep_vanishing_order(r));
        out.push_back(sweep_h_vector(r));
    }
    if (all || suite == "resolution") {
        out.push_back(sweep_resolution(r));
        out.push_back(sweep_rank_alternating_sum(r));
        out.push_back(sweep_generator_census());
    }
    if (out.empty()) throw std::invalid_argument("unknown suite: " + suite);
    return out;
}

}  // namespace pfh
