#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace pellian {

using i64 = std::int64_t;
using u64 = std::uint64_t;
using i128 = __int128;
using u128 = unsigned __int128;

/// Floor square root, exact for any nonnegative 64-bit input.
i64 isqrt_i64(i64 n);

/// Floor square root of an arbitrary-precision nonnegative integer.
mpz_class isqrt(const mpz_class& n);

bool is_perfect_square(i64 n);
bool is_perfect_square(const mpz_class& n);

/// d qualifies as a Pell modulus: d >= 2 and not a perfect square.
bool is_pell_modulus(i64 d);
void require_pell_modulus(i64 d);

/// Jacobi symbol (a/n); n must be odd and positive. Zero iff gcd(a,n) > 1.
int jacobi(i64 a, i64 n);
int jacobi(const mpz_class& a, const mpz_class& n);

u64 mulmod_u64(u64 a, u64 b, u64 m);
u64 powmod_u64(u64 base, u64 exp, u64 m);

/// Deterministic Miller-Rabin for the full 64-bit range.
bool is_prime_u64(u64 n);

std::string to_string(const i128 v);

}  // namespace pellian
