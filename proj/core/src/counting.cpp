#include "pellian/counting.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

#include "pellian/pell.hpp"

namespace pellian {

namespace {

u64 count_N_brute(i64 B) {
    u64 count = 0;
    for (i64 d = 2; d <= B; ++d) {
        if (is_perfect_square(d)) continue;
        for (i64 u = 1; u <= B; ++u) {
            const i128 v = 1 + static_cast<i128>(d) * u * u;
            if (v > static_cast<i128>(B) * B) break;
            const i64 t = isqrt_i64(static_cast<i64>(v));
            if (static_cast<i128>(t) * t == v && t <= B) count += 4;
        }
    }
    return count;
}

u64 count_N_per_d(i64 B) {
    u64 count = 0;
    const mpz_class bound = B;
    for (i64 d = 2; d <= B; ++d) {
        if (is_perfect_square(d)) continue;
        count += 4 * count_solutions_t_upto(d, bound);
    }
    return count;
}

// Decides t + u sqrt(d) <= d^e. Exact integer arithmetic when q*e is an
// integer for some small q; otherwise long-double logs with ties included.
bool eta_le_power(const mpz_class& t, const mpz_class& u, i64 d, double e) {
    for (int q = 1; q <= 8; ++q) {
        const double pe = e * q;
        const double pr = std::round(pe);
        if (std::abs(pe - pr) < 1e-12 && pr >= 0) {
            const auto p = static_cast<unsigned long>(pr);
            // (t + u sqrt d)^q = T + U sqrt d
            mpz_class T = 1, U = 0;
            for (int i = 0; i < q; ++i) {
                mpz_class T2 = T * t + mpz_class(d) * U * u;
                U = T * u + U * t;
                T = std::move(T2);
            }
            mpz_class N;
            mpz_ui_pow_ui(N.get_mpz_t(), static_cast<unsigned long>(d), p);
            if (T > N) return false;
            return mpz_class(d) * U * U <= (N - T) * (N - T);
        }
    }
    const long double lhs = logl(mpz_get_d(t.get_mpz_t()) +
                                 sqrtl(static_cast<long double>(d)) *
                                     mpz_get_d(u.get_mpz_t()));
    const long double rhs = static_cast<long double>(e) * logl(static_cast<long double>(d));
    if (fabsl(lhs - rhs) <= 1e-10L) return true;  // ties toward inclusion
    return lhs < rhs;
}

}  // namespace

u64 count_N(i64 B, CountStrategy strategy) {
    if (B < 2) throw std::invalid_argument("count_N: B must be >= 2");
    return strategy == CountStrategy::kBrute ? count_N_brute(B) : count_N_per_d(B);
}

u64 count_N_range(i64 d_lo, i64 d_hi, i64 B) {
    if (B < 2) throw std::invalid_argument("count_N_range: B must be >= 2");
    u64 count = 0;
    const mpz_class bound = B;
    for (i64 d = std::max<i64>(2, d_lo); d <= std::min(d_hi, B); ++d) {
        if (is_perfect_square(d)) continue;
        count += 4 * count_solutions_t_upto(d, bound);
    }
    return count;
}

u64 count_S_range(i64 d_lo, i64 d_hi, double alpha) {
    if (alpha <= 0) throw std::invalid_argument("count_S_range: alpha must be positive");
    const double e = 0.5 + alpha;
    u64 count = 0;
    for (i64 d = std::max<i64>(2, d_lo); d <= d_hi; ++d) {
        if (is_perfect_square(d)) continue;
        const long double est = powl(static_cast<long double>(d), static_cast<long double>(e));
        mpz_class bound;
        if (est < 4e17L) {
            bound = static_cast<i64>(est) + 2;  // overshoot; exact compare below
        } else {
            mpz_class big = 1;
            mpz_ui_pow_ui(big.get_mpz_t(), static_cast<unsigned long>(d),
                          static_cast<unsigned long>(std::ceil(e)));
            bound = big + 2;
        }
        auto fund = fundamental_solution_within(d, bound);
        if (!fund) continue;
        PellSolution cur = *fund;
        const PellSolution base = cur;
        while (eta_le_power(cur.t, cur.u, d, e)) {
            ++count;
            cur = compose(cur, base);
        }
    }
    return count;
}

u64 count_S(i64 x, double alpha) {
    if (x < 2 || alpha <= 0) throw std::invalid_argument("count_S: need x >= 2, alpha > 0");
    return count_S_range(2, x, alpha);
}

double hooley_ratio(i64 x, double alpha) {
    const double S = static_cast<double>(count_S(x, alpha));
    const double lx = std::log(static_cast<double>(x));
    const double main_term = 4.0 * alpha * alpha / (std::numbers::pi * std::numbers::pi) *
                             std::sqrt(static_cast<double>(x)) * lx * lx;
    return S / main_term;
}

InitialDecomposition decompose_solution(i64 t, i64 d, i64 u) {
    if (t < 1 || u < 1) throw std::invalid_argument("decompose: need t, u >= 1");
    require_pell_modulus(d);
    if (t > i64{3'000'000'000})
        throw std::invalid_argument("decompose: t too large for 64-bit splitting");
    if (static_cast<i128>(t) * t - static_cast<i128>(d) * u * u != 1)
        throw std::invalid_argument("decompose: (t, d, u) is not a Pell solution");
    InitialDecomposition out;
    i64 A, Bside, uu;
    if (t % 2 == 0) {
        out.kase = DecompositionCase::kTEven;
        out.eta = 2;
        A = t + 1;
        Bside = t - 1;
        uu = u;
    } else if (d % 4 != 0) {
        out.kase = DecompositionCase::kTOddD4Free;
        out.eta = 1;
        if (u % 2 != 0) throw std::logic_error("decompose: odd u with t odd, 4 not dividing d");
        A = (t + 1) / 2;
        Bside = (t - 1) / 2;
        uu = u / 2;
    } else {
        out.kase = DecompositionCase::kTOddD4Divides;
        out.eta = 1;
        A = (t + 1) / 2;
        Bside = (t - 1) / 2;
        uu = u;
    }
    const i64 uu2 = uu * uu;
    out.u1 = isqrt_i64(std::gcd(A, uu2));
    out.u2 = isqrt_i64(std::gcd(Bside, uu2));
    out.d1 = A / (out.u1 * out.u1);
    out.d2 = Bside / (out.u2 * out.u2);
    if (out.u1 * out.u2 != uu) throw std::logic_error("decompose: square split failed");
    const PellTriple back = recompose(out);
    if (back.t != t || back.d != d || back.u != u)
        throw std::logic_error("decompose: recompose mismatch");
    return out;
}

PellTriple recompose(const InitialDecomposition& dec) {
    PellTriple s;
    switch (dec.kase) {
        case DecompositionCase::kTEven:
            s.t = dec.d1 * dec.u1 * dec.u1 - 1;
            s.d = dec.d1 * dec.d2;
            s.u = dec.u1 * dec.u2;
            break;
        case DecompositionCase::kTOddD4Free:
            s.t = 2 * dec.d1 * dec.u1 * dec.u1 - 1;
            s.d = dec.d1 * dec.d2;
            s.u = 2 * dec.u1 * dec.u2;
            break;
        case DecompositionCase::kTOddD4Divides:
            s.t = 2 * dec.d1 * dec.u1 * dec.u1 - 1;
            s.d = 4 * dec.d1 * dec.d2;
            s.u = dec.u1 * dec.u2;
            break;
    }
    return s;
}

u64 count_N_eta(const DyadicBox& box) {
    if (box.eta != 1 && box.eta != -1 && box.eta != 2 && box.eta != -2)
        throw std::invalid_argument("count_N_eta: eta must be +-1 or +-2");
    if (box.D1 < 0.5 || box.D2 < 0.5 || box.U1 < 0.5 || box.U2 < 0.5)
        throw std::invalid_argument("count_N_eta: anchors must be >= 1/2");
    const auto lo = [](double X) { return static_cast<i64>(std::floor(X)) + 1; };
    const auto hi = [](double X) { return static_cast<i64>(std::floor(2 * X)); };
    const i64 d1lo = lo(box.D1), d1hi = hi(box.D1);
    u64 count = 0;
    for (i64 d2 = lo(box.D2); d2 <= hi(box.D2); ++d2)
        for (i64 u2 = lo(box.U2); u2 <= hi(box.U2); ++u2) {
            const i128 rhs_base = static_cast<i128>(d2) * u2 * u2 + box.eta;
            if (rhs_base <= 0) continue;
            for (i64 u1 = lo(box.U1); u1 <= hi(box.U1); ++u1) {
                const i128 q = static_cast<i128>(u1) * u1;
                if (rhs_base % q != 0) continue;
                const i128 d1 = rhs_base / q;
                if (d1 >= d1lo && d1 <= d1hi) ++count;
            }
        }
    return count;
}

ReussBound reuss_bound(const DyadicBox& box, double B) {
    if (box.D1 <= 1 || box.D2 <= 1 || box.U1 <= 1 || box.U2 <= 1)
        throw std::invalid_argument("reuss_bound: anchors must exceed 1");
    ReussBound r;
    const double logM = 9.0 / 8.0 * std::log(box.D1 * box.D2) * std::log(box.U1 * box.U2) /
                        std::log(box.D1 * box.U1 * box.U1);
    r.M = std::exp(logM);
    r.u_side = std::sqrt(box.U1 * box.U2 * r.M) + box.U1 + box.U2;
    r.d_side = std::sqrt(box.D1 * box.D2 * r.M) + box.D1 + box.D2;
    r.bound = std::min(r.u_side, r.d_side);
    r.exponent_logB = std::log(r.bound) / std::log(B);
    return r;
}

ExponentData exponent_data(const mpq_class& k) {
    ExponentData e;
    e.k = k;
    e.m = mpq_class(9, 16) * k * (mpq_class(2) - k);
    e.m.canonicalize();
    return e;
}

double ExponentData::M_for(double B) const { return std::pow(B, m.get_d()); }

namespace {

double envelope_at(double k, double delta1) {
    const double m = 9.0 / 16.0 * k * (2.0 - k);
    const double delta2 = k - delta1;
    const double ups1 = (1.0 - delta1) / 2.0;
    const double ups2 = (1.0 - delta2) / 2.0;
    const double e8_u = std::max({(1.0 - k / 2.0 + m) / 2.0, ups1, ups2});
    const double e8_d = std::max({(k + m) / 2.0, delta1, delta2});
    const double e8 = std::min(e8_u, e8_d);
    const double e9 = std::max(k / 2.0, delta1 + ups2);
    return std::min(e8, e9);
}

}  // namespace

Envelope lemma21_envelope(int grid_resolution) {
    if (grid_resolution < 10)
        throw std::invalid_argument("lemma21_envelope: resolution must be >= 10");
    Envelope env;
    env.table.reserve(static_cast<std::size_t>(grid_resolution) + 1);
    for (int i = 0; i <= grid_resolution; ++i) {
        const double k = static_cast<double>(i) / grid_resolution;
        const int steps = std::max(1, static_cast<int>(std::ceil(grid_resolution * k / 2.0)));
        double best = 0;
        for (int j = 0; j <= steps; ++j) {
            const double delta1 = (k / 2.0) * j / steps;
            best = std::max(best, envelope_at(k, delta1));
        }
        env.table.push_back({k, best});
        if (best > env.supremum) {
            env.supremum = best;
            env.arg_k = k;
        }
    }
    return env;
}

DyadicSplitCounts dyadic_split(i64 B) {
    if (B < 4) throw std::invalid_argument("dyadic_split: B must be >= 4");
    DyadicSplitCounts out;
    out.N_2B = count_N(2 * B, CountStrategy::kPerD);
    out.N_B = count_N(B, CountStrategy::kPerD);
    const mpz_class bB = B, b2B = 2 * B;
    for (i64 d = B + 1; d <= 2 * B; ++d) {
        if (is_perfect_square(d)) continue;
        out.M1 += 4 * count_solutions_t_upto(d, b2B);
    }
    const i64 droot = isqrt_i64(B);
    for (i64 d = 2; d <= B; ++d) {
        if (is_perfect_square(d)) continue;
        const u64 inner = count_solutions_t_upto(d, b2B) - count_solutions_t_upto(d, bB);
        out.M2 += 4 * inner;
        if (d > droot) out.M3 += 4 * inner;
    }
    if (out.M1 + out.M2 != out.N_2B - out.N_B)
        throw std::logic_error("dyadic_split: M1 + M2 != N(2B) - N(B)");
    return out;
}

}  // namespace pellian
