#pragma once

#include <optional>
#include <vector>

#include "pellian/integer.hpp"

namespace pellian {

/// One full period of the continued fraction of sqrt(d), with the exact
/// (P_i, Q_i) state sequence: sqrt(d) = [a0; a1, ..., al repeating] and
/// (P_i + sqrt(d))/Q_i is the i-th complete quotient.
struct CfExpansion {
    i64 d = 0;
    i64 a0 = 0;
    std::vector<i64> period;  // a_1 .. a_l
    std::vector<i64> P, Q;    // states 0 .. l; P[0] = 0, Q[0] = 1

    i64 period_length() const { return static_cast<i64>(period.size()); }
    /// a0 followed by one period.
    std::vector<i64> partial_quotients() const;
};

/// Exact solution of t^2 - d u^2 = norm with norm in {+1, -1}.
struct PellSolution {
    i64 d = 0;
    mpz_class t, u;
    int norm = 1;

    bool verifies() const { return t * t - mpz_class(d) * u * u == norm; }
};

CfExpansion cf_expand_sqrt(i64 d);

/// Minimal (t, u) with t, u >= 1 and t^2 - d u^2 = 1.
PellSolution fundamental_solution(i64 d);

/// Minimal (t, u) with t, u >= 1 and |t^2 - d u^2| = 1; norm is -1 exactly
/// when the continued-fraction period of sqrt(d) is odd.
PellSolution fundamental_unit_pm(i64 d);

/// (t_n, u_n) with t_n + u_n sqrt(d) = eps_d^n, n >= 1.
PellSolution nth_solution(i64 d, u64 n);

/// Group law: (t1 + u1 sqrt(d)) * (t2 + u2 sqrt(d)).
PellSolution compose(const PellSolution& a, const PellSolution& b);

/// log(t + u sqrt(d)) for a solution with t, u >= 0, u or t positive.
/// Computed from big-integer magnitudes; never narrows t to double.
double log_value(const PellSolution& s);

/// log(eps_d) with relative error well below `rel_error_target`.
double log_eps(i64 d, double rel_error_target = 1e-12);

/// Closed form eps_{z^2+1} = (2z^2 + 1) + sqrt(z^2+1) * 2z.
PellSolution family_z2p1(i64 z);

/// Closed form eps_{9k^2+3} = (6k^2 + 1) + sqrt(9k^2+3) * 2k  (z = 3k).
PellSolution family_9k2p3(i64 k);

/// All (t_n, u_n), n >= 1, with t_n <= T, in increasing order.
std::vector<PellSolution> solutions_up_to(i64 d, const mpz_class& T);

/// Fast exact path: the fundamental solution when t1 <= bound, nullopt when
/// t1 > bound. Uses 128-bit arithmetic when safe, big integers otherwise.
std::optional<PellSolution> fundamental_solution_within(i64 d, const mpz_class& bound);

/// Number of n >= 1 with t_n <= bound (t-coordinate of eps_d^n).
u64 count_solutions_t_upto(i64 d, const mpz_class& bound);

}  // namespace pellian
