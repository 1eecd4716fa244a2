#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numeric>
#include <set>
#include <vector>

#include "pellian/counting.hpp"
#include "pellian/pell.hpp"

using namespace pellian;

namespace {

// Enumerates every positive Pell solution (t, d, u) with t <= T by walking
// the square divisors of t^2 - 1. Independent of the per-d machinery.
std::vector<PellTriple> solutions_with_t_upto(i64 T) {
    std::vector<PellTriple> out;
    for (i64 t = 2; t <= T; ++t) {
        const i64 n = t * t - 1;
        for (i64 u = 1; u * u <= n; ++u) {
            if (n % (u * u) != 0) continue;
            const i64 d = n / (u * u);
            if (d >= 2 && !is_perfect_square(d)) out.push_back({t, d, u});
        }
    }
    return out;
}

// Independent oracle for S(x, alpha): brute-force fundamental solution by
// incrementing u, then long-double power comparison.
u64 count_S_oracle(i64 x, double alpha) {
    u64 count = 0;
    for (i64 d = 2; d <= x; ++d) {
        if (is_perfect_square(d)) continue;
        long double eps = 0;
        for (i64 u = 1; u <= 2000000; ++u) {
            const i64 v = 1 + d * u * u;
            const i64 t = isqrt_i64(v);
            if (t * t == v) {
                eps = t + u * sqrtl(static_cast<long double>(d));
                break;
            }
        }
        // A miss means eps > 2e6 sqrt(2), far past every cap d^(1/2+alpha)
        // that the callers below use; such d contribute nothing.
        if (eps == 0) continue;
        const long double cap = powl(static_cast<long double>(d), 0.5L + static_cast<long double>(alpha));
        long double eta = eps;
        while (eta <= cap * (1 + 1e-15L)) {
            ++count;
            eta *= eps;
        }
    }
    return count;
}

u64 count_N_eta_oracle(const DyadicBox& box) {
    const auto lo = [](double X) { return static_cast<i64>(std::floor(X)) + 1; };
    const auto hi = [](double X) { return static_cast<i64>(std::floor(2 * X)); };
    u64 count = 0;
    for (i64 d1 = lo(box.D1); d1 <= hi(box.D1); ++d1)
        for (i64 d2 = lo(box.D2); d2 <= hi(box.D2); ++d2)
            for (i64 u1 = lo(box.U1); u1 <= hi(box.U1); ++u1)
                for (i64 u2 = lo(box.U2); u2 <= hi(box.U2); ++u2)
                    if (static_cast<i128>(d1) * u1 * u1 - static_cast<i128>(d2) * u2 * u2 ==
                        box.eta)
                        ++count;
    return count;
}

}  // namespace

TEST_CASE("count_N examples") {
    CHECK(count_N(10, CountStrategy::kBrute) == 28);
    CHECK(count_N(10, CountStrategy::kPerD) == 28);
    // d = 2 contributes (+-3, +-2) and d = 3 contributes (+-2, +-1); the
    // latter has max(2, 3, 1) = 3, so both moduli count at B = 3.
    CHECK(count_N(3, CountStrategy::kBrute) == 8);
    CHECK(count_N(2, CountStrategy::kBrute) == 0);
    CHECK_THROWS_AS(count_N(1, CountStrategy::kBrute), std::invalid_argument);
}

TEST_CASE("count_N strategies agree for B <= 300") {
    for (i64 B = 2; B <= 300; ++B)
        CHECK(count_N(B, CountStrategy::kPerD) == count_N(B, CountStrategy::kBrute));
}

TEST_CASE("count_N range splitting is exact") {
    const u64 whole = count_N(500, CountStrategy::kPerD);
    u64 parts = 0;
    for (i64 lo = 2; lo <= 500; lo += 61) parts += count_N_range(lo, std::min<i64>(lo + 60, 500), 500);
    CHECK(parts == whole);
}

TEST_CASE("count_S examples and oracle") {
    CHECK(count_S(10, 0.5) == 1);  // only d = 8: eps = 3 + 2 sqrt 2 <= 8
    CHECK(count_S(10, 1e-9) == 0);
    CHECK(count_S(10, 1.5) == count_S_oracle(10, 1.5));
    CHECK(count_S(50, 1.5) == count_S_oracle(50, 1.5));
    CHECK(count_S(200, 0.5) == count_S_oracle(200, 0.5));
    CHECK(count_S(200, 0.25) == count_S_oracle(200, 0.25));
    CHECK_THROWS_AS(count_S(1, 0.5), std::invalid_argument);
    CHECK_THROWS_AS(count_S(10, 0.0), std::invalid_argument);
}

TEST_CASE("count_S is monotone in x") {
    u64 prev = 0;
    for (i64 x = 2; x <= 400; ++x) {
        const u64 cur = count_S(x, 0.5);
        CHECK(cur >= prev);
        prev = cur;
    }
}

TEST_CASE("hooley_ratio normalization") {
    const i64 x = 10000;
    const u64 S = count_S(x, 0.5);
    const double lx = std::log(static_cast<double>(x));
    const double expect = S / (4 * 0.25 / (M_PI * M_PI) * std::sqrt(static_cast<double>(x)) * lx * lx);
    CHECK(hooley_ratio(x, 0.5) == doctest::Approx(expect).epsilon(1e-12));
}

TEST_CASE("decompose: worked examples") {
    const InitialDecomposition a = decompose_solution(3, 2, 2);
    CHECK(a.eta == 1);
    CHECK(a.kase == DecompositionCase::kTOddD4Free);
    CHECK(a.d1 == 2);
    CHECK(a.d2 == 1);
    CHECK(a.u1 == 1);
    CHECK(a.u2 == 1);

    const InitialDecomposition b = decompose_solution(2, 3, 1);
    CHECK(b.eta == 2);
    CHECK(b.kase == DecompositionCase::kTEven);
    CHECK(b.d1 == 3);
    CHECK(b.d2 == 1);
    CHECK(b.u1 == 1);
    CHECK(b.u2 == 1);

    // t odd with 4 | d: (7, 12, 2)
    const InitialDecomposition c = decompose_solution(7, 12, 2);
    CHECK(c.kase == DecompositionCase::kTOddD4Divides);
    CHECK(c.d1 * c.u1 * c.u1 == 4);  // (t+1)/2
    CHECK(c.d2 * c.u2 * c.u2 == 3);  // (t-1)/2
    const PellTriple back = recompose(c);
    CHECK(back.t == 7);
    CHECK(back.d == 12);
    CHECK(back.u == 2);

    CHECK_THROWS_AS(decompose_solution(3, 2, 1), std::invalid_argument);  // not a solution
    CHECK_THROWS_AS(decompose_solution(3, 4, 1), std::invalid_argument);  // square d
}

TEST_CASE("decompose: round trip, case partition, and extraction rule (t <= 2000)") {
    const auto sols = solutions_with_t_upto(2000);
    CHECK(sols.size() > 2000);
    for (const auto& s : sols) {
        CHECK(std::gcd(s.t - 1, s.t + 1) <= 2);  // the premise of the splitting
        const InitialDecomposition dec = decompose_solution(s.t, s.d, s.u);
        const PellTriple back = recompose(dec);
        CHECK(back.t == s.t);
        CHECK(back.d == s.d);
        CHECK(back.u == s.u);
        // Exactly one case fits.
        const bool even = s.t % 2 == 0;
        if (even) CHECK(dec.kase == DecompositionCase::kTEven);
        else if (s.d % 4 != 0) CHECK(dec.kase == DecompositionCase::kTOddD4Free);
        else CHECK(dec.kase == DecompositionCase::kTOddD4Divides);
        // eta constraint from the sides.
        CHECK(dec.d1 * dec.u1 * dec.u1 - dec.d2 * dec.u2 * dec.u2 == dec.eta);
        // u1 is the largest valid square extraction.
        i64 A, Bs, uu;
        if (even) { A = s.t + 1; Bs = s.t - 1; uu = s.u; }
        else if (s.d % 4 != 0) { A = (s.t + 1) / 2; Bs = (s.t - 1) / 2; uu = s.u / 2; }
        else { A = (s.t + 1) / 2; Bs = (s.t - 1) / 2; uu = s.u; }
        i64 best = 0;
        for (i64 v = 1; v <= uu; ++v) {
            if (uu % v != 0) continue;
            const i64 w = uu / v;
            if (A % (v * v) == 0 && Bs % (w * w) == 0) best = std::max(best, v);
        }
        CHECK(dec.u1 == best);
    }
}

TEST_CASE("count_N_eta: trivial boxes and quadruple-loop oracle") {
    CHECK(count_N_eta({2, 0.5, 0.5, 0.5, 0.5}) == 0);
    CHECK(count_N_eta({1, 1, 1, 1, 1}) == 0);
    CHECK(count_N_eta({1, 2, 1, 1, 1}) == 0);
    for (const DyadicBox& box : {DyadicBox{1, 4, 2, 1.5, 1}, DyadicBox{2, 8, 4, 2, 2},
                                 DyadicBox{-1, 3, 6, 2, 1}, DyadicBox{-2, 5, 5, 3, 3},
                                 DyadicBox{1, 20, 10, 4, 3}}) {
        CHECK(count_N_eta(box) == count_N_eta_oracle(box));
    }
    CHECK_THROWS_AS(count_N_eta({3, 1, 1, 1, 1}), std::invalid_argument);
    CHECK_THROWS_AS(count_N_eta({1, 0.2, 1, 1, 1}), std::invalid_argument);
}

TEST_CASE("reuss bound at the balanced corner k = 2/3") {
    // D1 U1^2 = D2 U2^2 = B with D1 D2 = B^(2/3), B = 10^6.
    const double B = 1e6;
    const DyadicBox box{2, 100, 100, 100, 100};
    const ReussBound r = reuss_bound(box, B);
    // log M / log B = m(2/3) = 1/2 exactly in exact arithmetic.
    CHECK(std::abs(std::log(r.M) / std::log(B) - 0.5) < 1e-12);
    CHECK(std::abs(r.exponent_logB - 7.0 / 12.0) < 0.01);
    CHECK(r.bound == doctest::Approx(std::min(r.u_side, r.d_side)));
    CHECK_THROWS_AS(reuss_bound({1, 1, 2, 2, 2}, B), std::invalid_argument);
}

TEST_CASE("exponent data m(k) as exact rationals") {
    CHECK(exponent_data(mpq_class(1, 3)).m == mpq_class(5, 16));
    CHECK(exponent_data(mpq_class(2, 3)).m == mpq_class(1, 2));
    const mpq_class seven_twelfths(7, 12);
    const ExponentData e23 = exponent_data(mpq_class(2, 3));
    CHECK(mpq_class((e23.k + e23.m) / 2) == seven_twelfths);
    // m increasing, k + m increasing, -k/2 + m decreasing past 5/9.
    mpq_class prev_m(-1), prev_km(-1);
    for (int i = 0; i <= 64; ++i) {
        const mpq_class k(i, 64);
        const ExponentData e = exponent_data(k);
        CHECK(e.m > prev_m);
        CHECK(k + e.m > prev_km);
        prev_m = e.m;
        prev_km = k + e.m;
        CHECK(e.m == mpq_class(1, 16) * k * (mpq_class(10) - 9 * k) + k / 2);
    }
    mpq_class prev_tail(100);
    for (int i = 41; i <= 72; ++i) {  // k > 5/9 on a 72-grid
        const mpq_class k(i, 72);
        const mpq_class tail = exponent_data(k).m - k / 2;
        CHECK(tail < prev_tail);
        prev_tail = tail;
    }
}

TEST_CASE("lemma 2.1 envelope peaks at 7/12") {
    const Envelope env = lemma21_envelope(2000);
    CHECK(std::abs(env.supremum - 7.0 / 12.0) < 3e-3);
    CHECK(std::abs(env.arg_k - 2.0 / 3.0) < 0.01);
    for (const auto& pt : env.table) CHECK(pt.exponent <= 7.0 / 12.0 + 1e-9);
    CHECK_THROWS_AS(lemma21_envelope(5), std::invalid_argument);
}

TEST_CASE("dyadic split identity and oracle at B = 1000") {
    const DyadicSplitCounts d10 = dyadic_split(10);
    CHECK(d10.M1 + d10.M2 == d10.N_2B - d10.N_B);
    const DyadicSplitCounts d100 = dyadic_split(100);
    CHECK(d100.M2 >= d100.M3);

    const DyadicSplitCounts d = dyadic_split(1000);
    CHECK(d.M1 + d.M2 == d.N_2B - d.N_B);
    // Independent brute-force recount of all three sets.
    u64 m1 = 0, m2 = 0, m3 = 0;
    const i64 B = 1000;
    for (i64 dd = 2; dd <= 2 * B; ++dd) {
        if (is_perfect_square(dd)) continue;
        for (i64 u = 1;; ++u) {
            const i128 v = 1 + static_cast<i128>(dd) * u * u;
            if (v > static_cast<i128>(2 * B) * (2 * B)) break;
            const i64 t = isqrt_i64(static_cast<i64>(v));
            if (static_cast<i128>(t) * t != v) continue;
            if (dd > B && t <= 2 * B) m1 += 4;
            if (dd <= B && t > B && t <= 2 * B) {
                m2 += 4;
                if (dd > isqrt_i64(B)) m3 += 4;
            }
        }
    }
    CHECK(d.M1 == m1);
    CHECK(d.M2 == m2);
    CHECK(d.M3 == m3);
}
