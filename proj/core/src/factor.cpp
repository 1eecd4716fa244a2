#include "pellian/factor.hpp"

#include <algorithm>
#include <map>

namespace pellian {

namespace {

constexpr i64 kTrialBound = 10'000;

const std::vector<i64>& small_primes() {
    static const std::vector<i64> primes = [] {
        std::vector<bool> sieve(kTrialBound + 1, true);
        std::vector<i64> p;
        for (i64 i = 2; i <= kTrialBound; ++i) {
            if (!sieve[i]) continue;
            p.push_back(i);
            for (i64 j = i * i; j <= kTrialBound; j += i) sieve[j] = false;
        }
        return p;
    }();
    return primes;
}

bool is_probable_prime(const mpz_class& n) {
    if (n.fits_ulong_p()) return is_prime_u64(n.get_ui());
    // Fixed rep count keeps the verdict deterministic for a given GMP build.
    return mpz_probab_prime_p(n.get_mpz_t(), 40) > 0;
}

// Pollard-Brent rho. Returns a nontrivial factor or 0 if the iteration
// budget was exhausted. Deterministic: constants advance on a fixed schedule.
mpz_class rho_brent(const mpz_class& n, u64& budget) {
    if (mpz_even_p(n.get_mpz_t())) return 2;
    for (unsigned long c = 1; budget > 0; ++c) {
        mpz_class x = 2, y = 2, d = 1, q = 1, ys = y;
        unsigned long r = 1;
        const unsigned long batch = 128;
        while (d == 1 && budget > 0) {
            x = y;
            for (unsigned long i = 0; i < r && budget > 0; ++i) {
                y = (y * y + c) % n;
                if (budget) --budget;
            }
            unsigned long k = 0;
            while (k < r && d == 1 && budget > 0) {
                ys = y;
                const unsigned long lim = std::min(batch, r - k);
                for (unsigned long i = 0; i < lim && budget > 0; ++i) {
                    y = (y * y + c) % n;
                    q = q * abs(x - y) % n;
                    if (budget) --budget;
                }
                d = gcd(q, n);
                k += lim;
            }
            r *= 2;
        }
        if (d == n) {
            // Backtrack one step at a time to split the collapsed batch.
            do {
                ys = (ys * ys + c) % n;
                d = gcd(mpz_class(abs(x - ys)), n);
            } while (d == 1);
        }
        if (d != n && d != 1) return d;
        // d == n: retry with the next polynomial constant.
    }
    return 0;
}

}  // namespace

mpz_class Factorization::reassemble() const {
    mpz_class prod = remainder;
    for (const auto& [p, e] : factors) {
        for (int i = 0; i < e; ++i) prod *= p;
    }
    return prod;
}

Factorization factorize(const mpz_class& n, u64 effort_budget) {
    if (n < 1) throw std::invalid_argument("factorize: n must be positive");
    Factorization out;
    out.n = n;
    std::map<mpz_class, int> acc;
    mpz_class m = n;
    for (i64 p : small_primes()) {
        if (m == 1) break;
        if (mpz_class(p) * p > m) break;
        while (mpz_divisible_ui_p(m.get_mpz_t(), static_cast<unsigned long>(p))) {
            mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), static_cast<unsigned long>(p));
            ++acc[p];
        }
    }
    std::vector<mpz_class> pending;
    if (m > 1) pending.push_back(m);
    u64 budget = effort_budget;
    bool exhausted = false;
    while (!pending.empty()) {
        mpz_class cur = pending.back();
        pending.pop_back();
        if (cur == 1) continue;
        if (is_probable_prime(cur)) {
            ++acc[cur];
            continue;
        }
        if (is_perfect_square(cur)) {
            mpz_class r = isqrt(cur);
            pending.push_back(r);
            pending.push_back(r);
            continue;
        }
        mpz_class f = rho_brent(cur, budget);
        if (f == 0) {
            exhausted = true;
            out.remainder *= cur;
            continue;
        }
        pending.push_back(f);
        pending.push_back(cur / f);
    }
    out.complete = !exhausted;
    for (auto& [p, e] : acc) out.factors.emplace_back(p, e);
    return out;
}

std::optional<mpz_class> squarefree_part(const mpz_class& n, u64 effort_budget) {
    if (n < 1) throw std::invalid_argument("squarefree_part: n must be positive");
    Factorization f = factorize(n, effort_budget);
    if (!f.complete) return std::nullopt;
    mpz_class d1 = 1;
    for (const auto& [p, e] : f.factors)
        if (e % 2 == 1) d1 *= p;
    return d1;
}

std::optional<bool> is_squarefree(const mpz_class& n, u64 effort_budget) {
    auto sf = squarefree_part(n, effort_budget);
    if (!sf) return std::nullopt;
    return *sf == n;
}

u64 count_Qf(const IntPolynomial& f, i64 S, i64 Z) {
    if (S < 1 || Z < 1) throw std::invalid_argument("count_Qf: bounds must be >= 1");
    u64 count = 0;
    for (i64 z = 1; z <= Z; ++z) {
        const mpz_class v = f.eval(z);
        if (v < 1) continue;
        for (i64 s = 1; s <= S; ++s) {
            if (v < s) break;
            if (!mpz_divisible_ui_p(v.get_mpz_t(), static_cast<unsigned long>(s))) continue;
            mpz_class q = v / s;
            if (is_perfect_square(q) && q >= 1) ++count;
        }
    }
    return count;
}

}  // namespace pellian
