#include "pellian/integer.hpp"

#include <cmath>

namespace pellian {

i64 isqrt_i64(i64 n) {
    if (n < 0) throw std::invalid_argument("isqrt: negative input");
    if (n == 0) return 0;
    i64 r = static_cast<i64>(std::sqrt(static_cast<double>(n)));
    // sqrt() is within one ulp; settle exactly.
    while (r > 0 && r > n / r) --r;
    while ((r + 1) <= n / (r + 1)) ++r;
    return r;
}

mpz_class isqrt(const mpz_class& n) {
    if (n < 0) throw std::invalid_argument("isqrt: negative input");
    mpz_class r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    return r;
}

bool is_perfect_square(i64 n) {
    if (n < 0) return false;
    const i64 r = isqrt_i64(n);
    return r * r == n;
}

bool is_perfect_square(const mpz_class& n) {
    if (n < 0) return false;
    return mpz_perfect_square_p(n.get_mpz_t()) != 0;
}

bool is_pell_modulus(i64 d) { return d >= 2 && !is_perfect_square(d); }

void require_pell_modulus(i64 d) {
    if (!is_pell_modulus(d))
        throw std::invalid_argument("d must be >= 2 and not a perfect square, got " +
                                    std::to_string(d));
}

int jacobi(i64 a, i64 n) {
    if (n <= 0 || n % 2 == 0)
        throw std::invalid_argument("jacobi: n must be odd and positive");
    a %= n;
    if (a < 0) a += n;
    i64 m = n;
    int result = 1;
    while (a != 0) {
        while (a % 2 == 0) {
            a /= 2;
            const i64 r = m % 8;
            if (r == 3 || r == 5) result = -result;
        }
        std::swap(a, m);
        if (a % 4 == 3 && m % 4 == 3) result = -result;
        a %= m;
    }
    return m == 1 ? result : 0;
}

int jacobi(const mpz_class& a, const mpz_class& n) {
    if (n <= 0 || mpz_even_p(n.get_mpz_t()))
        throw std::invalid_argument("jacobi: n must be odd and positive");
    return mpz_jacobi(a.get_mpz_t(), n.get_mpz_t());
}

u64 mulmod_u64(u64 a, u64 b, u64 m) {
    return static_cast<u64>((static_cast<u128>(a) * b) % m);
}

u64 powmod_u64(u64 base, u64 exp, u64 m) {
    u64 r = m == 1 ? 0 : 1;
    base %= m;
    while (exp > 0) {
        if (exp & 1) r = mulmod_u64(r, base, m);
        base = mulmod_u64(base, base, m);
        exp >>= 1;
    }
    return r;
}

bool is_prime_u64(u64 n) {
    if (n < 2) return false;
    for (u64 p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % p == 0) return n == p;
    }
    u64 d = n - 1;
    int s = 0;
    while (d % 2 == 0) { d /= 2; ++s; }
    // This witness set is deterministic for all n < 2^64.
    for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        u64 x = powmod_u64(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod_u64(x, x, n);
            if (x == n - 1) { composite = false; break; }
        }
        if (composite) return false;
    }
    return true;
}

std::string to_string(const i128 v) {
    if (v == 0) return "0";
    u128 x = v < 0 ? static_cast<u128>(-(v + 1)) + 1 : static_cast<u128>(v);
    std::string s;
    while (x > 0) {
        s.push_back(static_cast<char>('0' + static_cast<int>(x % 10)));
        x /= 10;
    }
    if (v < 0) s.push_back('-');
    return {s.rbegin(), s.rend()};
}

}  // namespace pellian
