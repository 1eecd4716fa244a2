#include "pellian/pell.hpp"

#include <cmath>

namespace pellian {

namespace {

mpz_class u128_to_mpz(u128 v) {
    mpz_class hi = static_cast<unsigned long>(v >> 64);
    mpz_class lo = static_cast<unsigned long>(v & ~u64{0});
    return (hi << 64) | lo;
}

double log_mpz(const mpz_class& x) {
    long e = 0;
    const double m = mpz_get_d_2exp(&e, x.get_mpz_t());
    return std::log(m) + static_cast<double>(e) * M_LN2;
}

struct U128Solution {
    u128 t = 1, u = 0;
};

// PQa with 128-bit convergents and early exit. Outcomes:
//   kFound:    fundamental +1 solution with t <= bound
//   kExceeds:  proven t1 > bound
//   kOverflow: inputs too large for the fast path
enum class FastOutcome { kFound, kExceeds, kOverflow };

FastOutcome fundamental_within_u128(i64 d, u128 bound, U128Solution& out) {
    if (d > (i64{1} << 40) || bound > (u128{1} << 43)) return FastOutcome::kOverflow;
    const i64 a0 = isqrt_i64(d);
    // State index i >= 1; convergents (p_cur, q_cur) sit at index i-1, so at
    // the period end (Q_i == 1) they satisfy p^2 - d q^2 = (-1)^i.
    i64 P = a0, Q = d - a0 * a0;
    u128 p_prev = 1, p_cur = static_cast<u128>(a0);
    u128 q_prev = 0, q_cur = 1;
    int parity = -1;  // (-1)^i, starting at i = 1
    for (;;) {
        if (Q == 1) {
            if (p_cur > bound) return FastOutcome::kExceeds;
            if (parity == 1) {
                out = {p_cur, q_cur};
                return FastOutcome::kFound;
            }
            const u128 t1 = p_cur * p_cur + static_cast<u128>(d) * q_cur * q_cur;
            if (t1 > bound) return FastOutcome::kExceeds;
            out = {t1, 2 * p_cur * q_cur};
            return FastOutcome::kFound;
        }
        const i64 a = (P + a0) / Q;
        const u128 p_next = static_cast<u128>(a) * p_cur + p_prev;
        const u128 q_next = static_cast<u128>(a) * q_cur + q_prev;
        p_prev = p_cur; p_cur = p_next;
        q_prev = q_cur; q_cur = q_next;
        P = a * Q - P;
        Q = (d - P * P) / Q;
        parity = -parity;
        // Convergents grow monotonically, so the period-end unit (and a
        // fortiori its square) already exceeds the bound.
        if (p_cur > bound) return FastOutcome::kExceeds;
    }
}

// Convergent (p_{l-1}, q_{l-1}) over the first period; |norm| = 1.
PellSolution period_end_unit(i64 d) {
    const i64 a0 = isqrt_i64(d);
    i64 P = a0, Q = d - a0 * a0;
    mpz_class p_prev = 1, p_cur = a0, q_prev = 0, q_cur = 1;
    while (Q != 1) {
        const i64 a = (P + a0) / Q;
        mpz_class p_next = a * p_cur + p_prev;
        mpz_class q_next = a * q_cur + q_prev;
        p_prev = std::move(p_cur); p_cur = std::move(p_next);
        q_prev = std::move(q_cur); q_cur = std::move(q_next);
        P = a * Q - P;
        Q = (d - P * P) / Q;
    }
    PellSolution s;
    s.d = d;
    s.t = std::move(p_cur);
    s.u = std::move(q_cur);
    s.norm = s.t * s.t - mpz_class(d) * s.u * s.u == 1 ? 1 : -1;
    return s;
}

}  // namespace

std::vector<i64> CfExpansion::partial_quotients() const {
    std::vector<i64> q;
    q.reserve(period.size() + 1);
    q.push_back(a0);
    q.insert(q.end(), period.begin(), period.end());
    return q;
}

CfExpansion cf_expand_sqrt(i64 d) {
    require_pell_modulus(d);
    CfExpansion cf;
    cf.d = d;
    cf.a0 = isqrt_i64(d);
    i64 P = 0, Q = 1;
    cf.P.push_back(P);
    cf.Q.push_back(Q);
    // Advance to state 1; the period is a_1 .. a_l with l minimal such that
    // Q_l = 1, where the closing quotient is a_l = 2*a0.
    P = cf.a0;
    Q = d - cf.a0 * cf.a0;
    cf.P.push_back(P);
    cf.Q.push_back(Q);
    for (;;) {
        const i64 a = (P + cf.a0) / Q;
        cf.period.push_back(a);
        if (Q == 1) return cf;
        P = a * Q - P;
        Q = (d - P * P) / Q;
        cf.P.push_back(P);
        cf.Q.push_back(Q);
    }
}

PellSolution fundamental_unit_pm(i64 d) {
    require_pell_modulus(d);
    return period_end_unit(d);
}

PellSolution fundamental_solution(i64 d) {
    PellSolution s = fundamental_unit_pm(d);
    if (s.norm == -1) {
        PellSolution sq;
        sq.d = d;
        sq.t = s.t * s.t + mpz_class(d) * s.u * s.u;
        sq.u = 2 * s.t * s.u;
        sq.norm = 1;
        return sq;
    }
    return s;
}

PellSolution compose(const PellSolution& a, const PellSolution& b) {
    if (a.d != b.d) throw std::invalid_argument("compose: mismatched moduli");
    PellSolution r;
    r.d = a.d;
    r.t = a.t * b.t + mpz_class(a.d) * a.u * b.u;
    r.u = a.t * b.u + a.u * b.t;
    r.norm = a.norm * b.norm;
    return r;
}

PellSolution nth_solution(i64 d, u64 n) {
    if (n < 1) throw std::invalid_argument("nth_solution: n must be >= 1");
    PellSolution base = fundamental_solution(d);
    PellSolution acc;
    acc.d = d;
    acc.t = 1;
    acc.u = 0;
    acc.norm = 1;
    while (n > 0) {
        if (n & 1) acc = compose(acc, base);
        n >>= 1;
        if (n > 0) base = compose(base, base);
    }
    return acc;
}

double log_value(const PellSolution& s) {
    if (s.u == 0) return 0.0;
    // log(t + u sqrt d) = log t + log1p(u sqrt d / t); the ratio is evaluated
    // in log space so huge integers never round through a double.
    const double lt = log_mpz(s.t);
    const double lu = log_mpz(s.u);
    const double r = std::exp(lu + 0.5 * std::log(static_cast<double>(s.d)) - lt);
    return lt + std::log1p(r);
}

double log_eps(i64 d, double /*rel_error_target*/) {
    // The decomposition in log_value is accurate to a few ulps, far inside
    // the default 1e-12 request; the parameter documents the contract.
    return log_value(fundamental_solution(d));
}

PellSolution family_z2p1(i64 z) {
    if (z < 1) throw std::invalid_argument("family_z2p1: z must be >= 1");
    PellSolution s;
    s.d = z * z + 1;
    s.t = 2 * mpz_class(z) * z + 1;
    s.u = 2 * mpz_class(z);
    s.norm = 1;
    return s;
}

PellSolution family_9k2p3(i64 k) {
    if (k < 1) throw std::invalid_argument("family_9k2p3: k must be >= 1");
    PellSolution s;
    s.d = 9 * k * k + 3;
    s.t = 6 * mpz_class(k) * k + 1;
    s.u = 2 * mpz_class(k);
    s.norm = 1;
    return s;
}

std::vector<PellSolution> solutions_up_to(i64 d, const mpz_class& T) {
    if (T < 1) throw std::invalid_argument("solutions_up_to: T must be >= 1");
    std::vector<PellSolution> out;
    auto first = fundamental_solution_within(d, T);
    if (!first) return out;
    PellSolution cur = *first;
    const PellSolution fund = cur;
    while (cur.t <= T) {
        out.push_back(cur);
        cur = compose(cur, fund);
    }
    return out;
}

std::optional<PellSolution> fundamental_solution_within(i64 d, const mpz_class& bound) {
    require_pell_modulus(d);
    if (bound < 1) return std::nullopt;
    if (mpz_sizeinbase(bound.get_mpz_t(), 2) <= 43) {
        u128 b = 0;
        {
            mpz_class lo = bound & mpz_class((u64{1} << 32) - 1);
            mpz_class hi = bound >> 32;
            b = (static_cast<u128>(hi.get_ui()) << 32) | static_cast<u128>(lo.get_ui());
        }
        U128Solution fast;
        switch (fundamental_within_u128(d, b, fast)) {
            case FastOutcome::kFound: {
                PellSolution s;
                s.d = d;
                s.t = u128_to_mpz(fast.t);
                s.u = u128_to_mpz(fast.u);
                s.norm = 1;
                return s;
            }
            case FastOutcome::kExceeds:
                return std::nullopt;
            case FastOutcome::kOverflow:
                break;
        }
    }
    PellSolution s = fundamental_solution(d);
    if (s.t > bound) return std::nullopt;
    return s;
}

u64 count_solutions_t_upto(i64 d, const mpz_class& bound) {
    auto first = fundamental_solution_within(d, bound);
    if (!first) return 0;
    u64 n = 0;
    PellSolution cur = *first;
    const PellSolution fund = cur;
    while (cur.t <= bound) {
        ++n;
        cur = compose(cur, fund);
    }
    return n;
}

}  // namespace pellian
