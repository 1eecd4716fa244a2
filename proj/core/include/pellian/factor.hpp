#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "pellian/integer.hpp"
#include "pellian/poly.hpp"

namespace pellian {

/// Prime factorization of a positive integer. When `complete` is false the
/// effort budget ran out and `remainder` holds the unfactored composite
/// cofactor (1 otherwise); the listed factors are still correct primes.
struct Factorization {
    mpz_class n;
    std::vector<std::pair<mpz_class, int>> factors;  // (prime, exponent), primes ascending
    bool complete = false;
    mpz_class remainder = 1;

    /// product of prime^exp times remainder; equals n always.
    mpz_class reassemble() const;
};

inline constexpr u64 kDefaultFactorBudget = 2'000'000;

/// Trial division up to a fixed bound, then Pollard-Brent rho with a fixed
/// seed. Budget exhaustion is reported through `complete`, never thrown.
Factorization factorize(const mpz_class& n, u64 effort_budget = kDefaultFactorBudget);

/// Square-free part d1 of n = d1*d2^2. Empty when factorization is incomplete.
std::optional<mpz_class> squarefree_part(const mpz_class& n,
                                         u64 effort_budget = kDefaultFactorBudget);

/// True iff squarefree_part(n) == n. Empty when unknown within budget.
std::optional<bool> is_squarefree(const mpz_class& n, u64 effort_budget = kDefaultFactorBudget);

/// Q_f(S,Z) = #{(z,r,s): 1 <= z <= Z, 1 <= s <= S, r >= 1, f(z) = s*r^2}.
u64 count_Qf(const IntPolynomial& f, i64 S, i64 Z);

}  // namespace pellian
