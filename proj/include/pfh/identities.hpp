#pragma once

#include "pfh/binom.hpp"

namespace pfh {

/// Arguments of the Q family. alpha >= 0 is a construction constraint;
/// the hypothesis domain of the vanishing statement is the separate
/// predicate prop_hypotheses_hold.
struct QArgs {
    long w = 0;
    long t = 0;
    long I = 0;
    long alpha = 0;
};

/// Exact evaluation of Q(w, t, I, alpha). The formally unbounded sums
/// are evaluated over their finite support, derived from the vanishing
/// rules of gbinom. `widen` extends the derived bounds by that many
/// extra terms on each open side and asserts they contribute zero.
Int q_value(const QArgs& args, int widen = 0);

/// True iff alpha >= 0, t >= 0, w + alpha >= 0 and I >= 1.
bool prop_hypotheses_hold(const QArgs& args);

/// Q(w, t+1, I, alpha) - Q(w, t, I, alpha) - Q(w, t, I, alpha+1);
/// zero whenever the hypotheses above hold.
Int recurrence_residual(long w, long t, long I, long alpha);

/// Sum over 0 <= l <= b of (-1)^l binom(a, l); equals
/// (-1)^b binom(a-1, b) for all integers a, b.
Int alternating_partial_sum(long a, long b);

/// LHS - RHS of the alternating-sum identity
/// sum_k (-1)^k binom(b+k, c+k) binom(a, k) = (-1)^a binom(b, a+c),
/// valid for a >= 0 and all integers b, c. Rejects a < 0.
Int ku92_residual(long a, long b, long c);

/// RHS - LHS of the convolution identity
/// binom(t, 2I-n) = sum_i (-1)^(I-i) binom(t, I-i) binom(t+2i-n-1, 2i-n)
/// over floor((n+1)/2) <= i <= n; requires I in that same range.
Int convolution_residual(long n, long t, long I);

/// Coefficient of z^I in (1-z)^t * (1-z)^(-t) truncated at order n,
/// minus [I == 0]; zero for 0 <= I <= n.
Int unit_series_residual(long n, long t, long I);

}  // namespace pfh
