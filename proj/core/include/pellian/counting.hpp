#pragma once

#include <vector>

#include "pellian/integer.hpp"

namespace pellian {

enum class CountStrategy { kPerD, kBrute };

/// N(B): integer triples (t, d, u) with t^2 - d u^2 = 1, u != 0,
/// max(|t|,|d|,|u|) <= B and 2 <= d <= B nonsquare. Each positive solution
/// contributes its four sign combinations.
u64 count_N(i64 B, CountStrategy strategy = CountStrategy::kPerD);

/// S(x, alpha): solutions eta_d = eps_d^n (n >= 1) with eta_d <= d^(1/2+alpha),
/// summed over nonsquare 2 <= d <= x. Boundary ties resolve toward inclusion;
/// the comparison is exact whenever 1/2+alpha has a small denominator.
u64 count_S(i64 x, double alpha);

/// S(x, alpha) divided by the conjectured main term (4 alpha^2/pi^2) sqrt(x) log^2 x.
double hooley_ratio(i64 x, double alpha);

/// Contribution to count_N / count_S from moduli d in [d_lo, d_hi] only.
/// Summing over disjoint ranges reproduces the full count exactly.
u64 count_N_range(i64 d_lo, i64 d_hi, i64 B);
u64 count_S_range(i64 d_lo, i64 d_hi, double alpha);

enum class DecompositionCase {
    kTEven,         // u = u1 u2, d = d1 d2, d1 u1^2 - d2 u2^2 = 2
    kTOddD4Free,    // u = 2 u1 u2, d = d1 d2, d1 u1^2 - d2 u2^2 = 1
    kTOddD4Divides  // u = u1 u2, d = 4 d1 d2, d1 u1^2 - d2 u2^2 = 1
};

/// Legendre-Dirichlet splitting of (t+1)(t-1) = d u^2. The square part of
/// each side is extracted by the fixed rule u_i = sqrt(gcd(side, uu^2)),
/// which makes the output deterministic and recompose exact.
struct InitialDecomposition {
    int eta = 0;
    i64 d1 = 0, d2 = 0, u1 = 0, u2 = 0;
    DecompositionCase kase = DecompositionCase::kTEven;
};

struct PellTriple {
    i64 t = 0, d = 0, u = 0;
};

InitialDecomposition decompose_solution(i64 t, i64 d, i64 u);
PellTriple recompose(const InitialDecomposition& dec);

/// Dyadic box: d_i in (D_i, 2 D_i], u_i in (U_i, 2 U_i], integer entries.
struct DyadicBox {
    int eta = 1;
    double D1 = 1, D2 = 1, U1 = 1, U2 = 1;
};

/// Exact count of (d1, d2, u1, u2) in the box with d1 u1^2 - d2 u2^2 = eta.
u64 count_N_eta(const DyadicBox& box);

/// min((U1 U2 M)^(1/2) + U1 + U2, (D1 D2 M)^(1/2) + D1 + D2) with
/// log M = (9/8) log(D1 D2) log(U1 U2) / log(D1 U1^2).
struct ReussBound {
    double M = 0;
    double u_side = 0;
    double d_side = 0;
    double bound = 0;
    double exponent_logB = 0;
};
ReussBound reuss_bound(const DyadicBox& box, double B);

/// k = log(D1 D2)/log B and m = (9/16) k (2-k), exact as rationals.
struct ExponentData {
    mpq_class k;
    mpq_class m;
    double M_for(double B) const;
};
ExponentData exponent_data(const mpq_class& k);

struct EnvelopePoint {
    double k = 0;
    double exponent = 0;
};

/// Exponent envelope over the region D1 <= D2, D1 D2 <= B, D1 U1^2 = D2 U2^2 = B:
/// per grid point the log_B exponent of the smaller of the two box bounds,
/// maximized over the D1 split; supremum expected at 7/12.
struct Envelope {
    std::vector<EnvelopePoint> table;
    double supremum = 0;
    double arg_k = 0;
};
Envelope lemma21_envelope(int grid_resolution);

/// N(2B) - N(B) = M1 + M2 split, with M3 the part of M2 with d > sqrt(B).
struct DyadicSplitCounts {
    u64 M1 = 0, M2 = 0, M3 = 0;
    u64 N_2B = 0, N_B = 0;
};
DyadicSplitCounts dyadic_split(i64 B);

}  // namespace pellian
