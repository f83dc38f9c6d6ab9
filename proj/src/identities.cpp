#include "pfh/identities.hpp"

#include <cassert>
#include <stdexcept>

namespace pfh {

namespace {

long ceil_half(long p) { return p / 2 + ((p > 0 && p % 2 != 0) ? 1 : 0); }

Int sign(long k) { return (k % 2 == 0) ? 1 : -1; }

}  // namespace

Int q_value(const QArgs& args, int widen) {
    if (args.alpha < 0) throw std::invalid_argument("q_value: alpha must be non-negative");
    const long w = args.w, t = args.t, I = args.I, a = args.alpha;

    // Sum over all integers i of binom(I-1, w-i) binom(i+I-w-2, i) binom(t, I-i-a).
    // Support: binom(i+I-w-2, i) kills i < 0 and binom(I-1, w-i) kills i > w,
    // both unconditionally, so the support is [0, w] (empty when w < 0).
    Int full_sum = 0;
    for (long i = 0 - widen; i <= w + widen; ++i) {
        Int term = gbinom(I - 1, w - i) * gbinom(i + I - w - 2, i) * gbinom(t, I - i - a);
        if (i < 0 || i > w) {
            assert(term == 0);
        }
        full_sum += term;
    }

    // Sum over i <= w; lower support bound from the second-argument
    // vanishing of the alternating-block binomial: 2i - w - 1 + a >= 0.
    Int tail_sum = 0;
    const long lo = ceil_half(w + 1 - a);
    for (long i = lo - widen; i <= w; ++i) {
        Int term = sign(i + w + 1 + a) * gbinom(2 * i - w - 2 + t + a, 2 * i - w - 1 + a) *
                   gbinom(t, I - i - a);
        if (i < lo) {
            assert(term == 0);
        }
        tail_sum += term;
    }

    Int third_sum = 0;
    if (a == 0) {
        // Sum over i <= w of (-1)^(i+w) binom(t+i-1, i) binom(t, I-i);
        // binom(t+i-1, i) kills i < 0.
        for (long i = 0 - widen; i <= w; ++i) {
            Int term = sign(i + w) * gbinom(t + i - 1, i) * gbinom(t, I - i);
            if (i < 0) {
                assert(term == 0);
            }
            third_sum += term;
        }
    } else {
        for (long i = 1; i <= a - 1; ++i)
            third_sum += sign(i + 1) * gbinom(I - 1, w + i) * gbinom(t + w + i, I - a + i);
    }

    return -full_sum + tail_sum + third_sum;
}

bool prop_hypotheses_hold(const QArgs& args) {
    return args.alpha >= 0 && args.t >= 0 && args.w + args.alpha >= 0 && args.I >= 1;
}

Int recurrence_residual(long w, long t, long I, long alpha) {
    return q_value({w, t + 1, I, alpha}) - q_value({w, t, I, alpha}) -
           q_value({w, t, I, alpha + 1});
}

Int alternating_partial_sum(long a, long b) {
    Int acc = 0;
    for (long l = 0; l <= b; ++l) acc += sign(l) * gbinom(a, l);
    return acc;
}

Int ku92_residual(long a, long b, long c) {
    if (a < 0) throw std::invalid_argument("ku92_residual: requires a >= 0");
    Int lhs = 0;
    for (long k = 0; k <= a; ++k) lhs += sign(k) * gbinom(b + k, c + k) * gbinom(a, k);
    return lhs - sign(a) * gbinom(b, a + c);
}

Int convolution_residual(long n, long t, long I) {
    if (n < 1 || t < 1) throw std::invalid_argument("convolution_residual: n, t must be positive");
    if (I < (n + 1) / 2 || I > n)
        throw std::invalid_argument("convolution_residual: I outside [floor((n+1)/2), n]");
    Int rhs = 0;
    for (long i = (n + 1) / 2; i <= n; ++i)
        rhs += sign(I - i) * gbinom(t, I - i) * gbinom(t + 2 * i - n - 1, 2 * i - n);
    return rhs - gbinom(t, 2 * I - n);
}

Int unit_series_residual(long n, long t, long I) {
    if (n < 1 || t < 1) throw std::invalid_argument("unit_series_residual: n, t must be positive");
    if (I < 0 || I > n) throw std::invalid_argument("unit_series_residual: I outside [0, n]");
    Int acc = 0;
    for (long i = 0; i <= n; ++i) acc += sign(I - i) * gbinom(t, I - i) * gbinom(t + i - 1, i);
    return acc - (I == 0 ? 1 : 0);
}

}  // namespace pfh
