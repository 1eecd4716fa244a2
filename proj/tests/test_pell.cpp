#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <vector>

#include "pellian/pell.hpp"

using namespace pellian;

namespace {

// Independent oracle: increment u and test whether 1 + d u^2 is a square.
// Returns (t, u) or nothing if u exceeds the cap.
std::optional<std::pair<mpz_class, mpz_class>> brute_fundamental(i64 d, i64 u_cap) {
    for (i64 u = 1; u <= u_cap; ++u) {
        const i64 v = 1 + d * u * u;
        const i64 t = isqrt_i64(v);
        if (t * t == v) return std::make_pair(mpz_class(t), mpz_class(u));
    }
    return std::nullopt;
}

}  // namespace

TEST_CASE("continued fraction of sqrt(d): hand expansions") {
    const CfExpansion c2 = cf_expand_sqrt(2);
    CHECK(c2.a0 == 1);
    CHECK(c2.period == std::vector<i64>{2});
    CHECK(c2.period_length() == 1);

    const CfExpansion c3 = cf_expand_sqrt(3);
    CHECK(c3.partial_quotients() == std::vector<i64>{1, 1, 2});
    CHECK(c3.period_length() == 2);

    const CfExpansion c7 = cf_expand_sqrt(7);
    CHECK(c7.partial_quotients() == std::vector<i64>{2, 1, 1, 1, 4});
    CHECK(c7.period_length() == 4);

    CHECK_THROWS_AS(cf_expand_sqrt(1), std::invalid_argument);
    CHECK_THROWS_AS(cf_expand_sqrt(9), std::invalid_argument);
    CHECK_THROWS_AS(cf_expand_sqrt(-3), std::invalid_argument);
}

TEST_CASE("continued fraction state invariants for d <= 500") {
    for (i64 d = 2; d <= 500; ++d) {
        if (is_perfect_square(d)) continue;
        const CfExpansion cf = cf_expand_sqrt(d);
        REQUIRE(cf.P.size() == cf.Q.size());
        for (std::size_t i = 0; i < cf.Q.size(); ++i) {
            CHECK(cf.Q[i] > 0);
            CHECK((d - cf.P[i] * cf.P[i]) % cf.Q[i] == 0);
        }
        for (i64 a : cf.period) CHECK(a >= 1);
        CHECK(cf.period.back() == 2 * cf.a0);
    }
}

TEST_CASE("fundamental solutions: examples") {
    const PellSolution s2 = fundamental_solution(2);
    CHECK(s2.t == 3);
    CHECK(s2.u == 2);
    CHECK(s2.verifies());

    const PellSolution s5 = fundamental_solution(5);
    CHECK(s5.t == 9);
    CHECK(s5.u == 4);

    const PellSolution s61 = fundamental_solution(61);
    CHECK(s61.t == mpz_class("1766319049"));
    CHECK(s61.u == mpz_class("226153980"));
    CHECK(s61.verifies());
}

TEST_CASE("fundamental solutions match the brute-force oracle for d <= 300") {
    for (i64 d = 2; d <= 300; ++d) {
        if (is_perfect_square(d)) continue;
        const auto oracle = brute_fundamental(d, 1000000);
        if (!oracle) continue;
        const PellSolution s = fundamental_solution(d);
        CHECK(s.t == oracle->first);
        CHECK(s.u == oracle->second);
    }
}

TEST_CASE("norm +-1 unit") {
    const PellSolution u2 = fundamental_unit_pm(2);
    CHECK(u2.t == 1);
    CHECK(u2.u == 1);
    CHECK(u2.norm == -1);

    const PellSolution u3 = fundamental_unit_pm(3);
    CHECK(u3.t == 2);
    CHECK(u3.u == 1);
    CHECK(u3.norm == 1);
}

TEST_CASE("negative Pell solvable iff the cf period is odd (d <= 10000)") {
    for (i64 d = 2; d <= 10000; ++d) {
        if (is_perfect_square(d)) continue;
        const bool odd_period = cf_expand_sqrt(d).period_length() % 2 == 1;
        CHECK((fundamental_unit_pm(d).norm == -1) == odd_period);
    }
}

TEST_CASE("7 | z^2 + 3 forces norm +1") {
    for (i64 z = 1; z <= 200; ++z) {
        const i64 d = z * z + 3;
        if (d % 7 != 0 || is_perfect_square(d)) continue;
        CHECK(fundamental_unit_pm(d).norm == 1);
    }
}

TEST_CASE("nth_solution recurrence") {
    const PellSolution a = nth_solution(3, 2);
    CHECK(a.t == 7);
    CHECK(a.u == 4);
    const PellSolution b = nth_solution(2, 1);
    CHECK(b.t == 3);
    CHECK(b.u == 2);
    const PellSolution c = nth_solution(3, 3);
    CHECK(c.t == 26);
    CHECK(c.u == 15);
    CHECK(c.verifies());
    CHECK_THROWS_AS(nth_solution(3, 0), std::invalid_argument);
}

TEST_CASE("log_eps high-precision values") {
    // Oracles: direct double evaluation; the operands are far from overflow.
    const double l2 = std::log(3.0 + 2.0 * std::sqrt(2.0));
    const double l3 = std::log(2.0 + std::sqrt(3.0));
    const double l5 = std::log(9.0 + 4.0 * std::sqrt(5.0));
    CHECK(std::abs(log_eps(2) - l2) <= 1e-12 * l2);
    CHECK(std::abs(log_eps(3) - l3) <= 1e-12 * l3);
    CHECK(std::abs(log_eps(5) - l5) <= 1e-12 * l5);
    // A modulus whose fundamental solution dwarfs double range.
    const PellSolution s = fundamental_solution(1621);
    CHECK(log_value(s) > 100.0);
    CHECK(std::isfinite(log_value(s)));
}

TEST_CASE("closed-form families agree with the continued-fraction engine") {
    for (i64 z = 1; z <= 200; ++z) {
        const PellSolution fam = family_z2p1(z);
        CHECK(fam.verifies());
        const PellSolution cf = fundamental_solution(z * z + 1);
        CHECK(fam.t == cf.t);
        CHECK(fam.u == cf.u);
    }
    for (i64 k = 1; k <= 200; ++k) {
        const PellSolution fam = family_9k2p3(k);
        CHECK(fam.verifies());
        const PellSolution cf = fundamental_solution(9 * k * k + 3);
        CHECK(fam.t == cf.t);
        CHECK(fam.u == cf.u);
    }
    CHECK(family_z2p1(1).d == 2);
    CHECK(family_9k2p3(1).t == 7);
    CHECK(family_9k2p3(1).u == 2);
    CHECK(family_9k2p3(2).t == 25);
    CHECK(family_9k2p3(2).u == 4);
    CHECK(family_9k2p3(5).t == 151);
    CHECK(family_9k2p3(5).u == 10);
}

TEST_CASE("solutions_up_to") {
    const auto s3 = solutions_up_to(3, 10);
    REQUIRE(s3.size() == 2);
    CHECK(s3[0].t == 2);
    CHECK(s3[0].u == 1);
    CHECK(s3[1].t == 7);
    CHECK(s3[1].u == 4);

    CHECK(solutions_up_to(10, 10).empty());  // eps_10 = 19 + 6 sqrt(10)

    const auto s2 = solutions_up_to(2, 3);
    REQUIRE(s2.size() == 1);
    CHECK(s2[0].t == 3);
}

TEST_CASE("bounded fundamental path agrees with the full computation") {
    for (i64 d = 2; d <= 500; ++d) {
        if (is_perfect_square(d)) continue;
        const PellSolution full = fundamental_solution(d);
        const std::vector<mpz_class> bounds{mpz_class(10), mpz_class(100000), full.t,
                                            mpz_class(full.t - 1)};
        for (const mpz_class& bound : bounds) {
            if (bound < 1) continue;
            const auto got = fundamental_solution_within(d, bound);
            if (full.t <= bound) {
                REQUIRE(got.has_value());
                CHECK(got->t == full.t);
                CHECK(got->u == full.u);
            } else {
                CHECK_FALSE(got.has_value());
            }
        }
        CHECK(count_solutions_t_upto(d, 1000000) == solutions_up_to(d, 1000000).size());
    }
}

TEST_CASE("lower bound eps_d >= sqrt(d+1) + sqrt(d), equality iff d+1 square (d <= 2000)") {
    for (i64 d = 2; d <= 2000; ++d) {
        if (is_perfect_square(d)) continue;
        const PellSolution s = fundamental_solution(d);
        CHECK(s.t * s.t >= d + 1);
        CHECK(s.u >= 1);
        const bool attained = s.u == 1 && s.t * s.t == d + 1;
        CHECK(attained == is_perfect_square(d + 1));
    }
}

TEST_CASE("log_eps growth diagnostic (monitored, not asserted)") {
    double worst = 0;
    i64 worst_d = 0;
    for (i64 d = 2; d <= 2000; ++d) {
        if (is_perfect_square(d)) continue;
        const double v = log_eps(d) /
                         (std::sqrt(static_cast<double>(d)) * std::log(static_cast<double>(d)));
        if (v > worst) {
            worst = v;
            worst_d = d;
        }
    }
    MESSAGE("max log eps / (sqrt d log d) for d <= 2000: ", worst, " at d = ", worst_d);
    CHECK(std::isfinite(worst));
}
