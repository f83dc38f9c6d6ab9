#pragma once

#include <string>
#include <vector>

#include "pfh/series.hpp"

namespace pfh {

/// Outcome of one verification sweep: number of cases checked and the
/// first counterexample (arguments plus residual) if any.
struct VerifyReport {
    std::string name;
    long cases = 0;
    long failures = 0;
    std::string first_counterexample;
    double seconds = 0.0;

    bool passed() const { return failures == 0; }
};

struct SweepRanges {
    long max_n = 10;
    long max_t = 8;
    long max_t_multiplicity = 6;
    // Q-family grid.
    long w_min = -6, w_max = 10;
    long q_t_max = 8;
    long i_max = 12;
    long alpha_max = 6;
};

// Identity sweeps.
VerifyReport sweep_q_vanishing(const SweepRanges& r = {});
VerifyReport sweep_recurrence(const SweepRanges& r = {});
VerifyReport sweep_base_case(const SweepRanges& r = {});
VerifyReport sweep_partial_sum(const SweepRanges& r = {});
VerifyReport sweep_ku92(const SweepRanges& r = {});
VerifyReport sweep_convolution(const SweepRanges& r = {});
VerifyReport sweep_unit_series(const SweepRanges& r = {});
VerifyReport sweep_decomposition(const SweepRanges& r = {});

// Series sweeps.
VerifyReport sweep_factorization(const SweepRanges& r = {});
VerifyReport sweep_multiplicity(const SweepRanges& r = {});
VerifyReport sweep_vanishing_order(const SweepRanges& r = {});
VerifyReport sweep_h_vector(const SweepRanges& r = {});

// Resolution sweeps.
VerifyReport sweep_resolution(const SweepRanges& r = {});
VerifyReport sweep_rank_alternating_sum(const SweepRanges& r = {});
VerifyReport sweep_generator_census(long max_n = 6, long max_t = 4, int ambient_dim = 6,
                                    std::uint64_t seed = 2024);

std::vector<VerifyReport> run_suite(const std::string& suite, const SweepRanges& r = {});

}  // namespace pfh
