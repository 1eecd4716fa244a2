#pragma once

#include <array>
#include <string>
#include <vector>

#include "pellian/integer.hpp"
#include "pellian/poly.hpp"

namespace pellian {

/// Integer point on 2uyz = y^2 - k u^2 - 1 (k = 3 unless stated).
struct SurfacePoint {
    mpz_class y, u;
    i64 z = 0;
    i64 k = 3;

    bool on_surface() const;
};

/// The change of variable y = t + u z from t^2 - (z^2+k) u^2 = 1.
SurfacePoint pell_to_surface(const mpz_class& t, const mpz_class& u, i64 z, i64 k = 3);

/// The small-branch integer point built from the fundamental solution of
/// d(z) = z^2 + 3: y = t1 - u1 z with the u-sign flipped so the surface
/// identity holds exactly.
struct BranchLift {
    SurfacePoint point;
    mpz_class t1, u1;
    mpz_class height;  // max(|y|, u1, z)
    bool height_is_u1 = false;
    bool u1_gt_z = false;
    bool u1_gt_y = false;
};
BranchLift small_branch_lift(i64 z);

/// Polynomial curve with exact integer coefficients, either a Pell triple
/// (t(x), d(x), u(x)) or a surface triple (y(x), u(x), z(x)) for fixed k.
struct A1Curve {
    enum class Kind { kPellTDU, kSurfaceYUZ };
    Kind kind = Kind::kPellTDU;
    i64 k = 3;  // only read for kSurfaceYUZ
    IntPolynomial p1, p2, p3;

    /// t^2 - d u^2 - 1 resp. y^2 - k u^2 - 1 - 2uyz; zero iff the curve
    /// lies on its surface as a polynomial identity.
    IntPolynomial identity_residual() const;
};

A1Curve zapponi_curve(i64 t0, i64 d0, i64 u0);
A1Curve known_curve_k1();
A1Curve known_curve_3k();

enum class Membership { kOnKnownCurve, kNotOnAnyIntegerCurve, kUndetermined };

struct MembershipVerdict {
    Membership verdict = Membership::kUndetermined;
    std::string witness;
};

/// Verdict for a solution of t^2 - (z^2+3) u^2 = 1: u = 0 and 3 | z (z != 0)
/// lie on known curves; 3 not dividing z with z^2+3 square-free and u != 0 is
/// excluded from every integer curve; anything else is undetermined.
MembershipVerdict a1_membership(const mpz_class& t, const mpz_class& u, i64 z);

/// #{1 <= z <= B : 3 not dividing z, z^2+3 square-free, eps_{z^2+3} <= B},
/// with the eps comparison done in exact integer arithmetic.
u64 count_NUcirc_lower(i64 B);

struct SBCount {
    u64 count = 0;
    i64 z_range = 0;  // floor((log B)^(4+eps))
    std::vector<i64> exceeding;  // qualifying z in range with log eps > log B
};
SBCount count_SB(double B, double epsilon_exponent);

struct VerdictPoint {
    SurfacePoint p;
    MembershipVerdict v;
};

/// All integer points of 2uyz = y^2 - 3u^2 - 1 with max(|y|,|u|,|z|) <= B,
/// ordered by (z, u, y), each with its membership verdict.
std::vector<VerdictPoint> enumerate_surface_points(i64 B);

const std::array<std::array<int, 7>, 7>& intersection_matrix();

/// Exact linear algebra over the embedded pairing table of (L1..L5, E1, E2).
/// The Gram rows satisfy L2 + L3 - L4 - L5 = 0: the hyperplane sections
/// v = 0 and v + y = 0 cut L1+L2+L3 and L1+L4+L5 with equal exceptional
/// corrections, so the honest Gram rank is 6 even though the Picard rank of
/// the resolved surface is 7 (degree-3 weak del Pezzo).
struct RankReport {
    int rank = 0;           // computed rank of the 7x7 pairing table
    int boundary_rank = 0;  // computed rank of the L1, L2, L3, E1, E2 rows
    int picard_rank = 7;    // rank of Pic over Q of the resolution
    int rho_U = 0;          // picard_rank - boundary_rank
    int b = 0;
    int exponent = 0;  // rho_U + b
    std::string dependency;  // nonempty when the Gram rows are dependent
};
RankReport intersection_rank_check();

struct GolubevaCheck {
    i64 n = 0, z = 0, d = 0;
    bool holds = false;
    bool exact_equality = false;
    double rel_slack = 0;  // (rhs - lhs)/lhs, nonnegative when the bound holds
    double lhs_log = 0, rhs_log = 0;
};
GolubevaCheck golubeva_check(int n);

struct YamamotoRow {
    i64 z = 0, d = 0;
    mpz_class sf;
    double log_eps = 0;
    double log_sf_sq = 0;
    double ratio = 0;  // log_eps / (log sf)^2
};
std::vector<YamamotoRow> yamamoto_diagnostic(i64 Z);

struct LiftSweepRow {
    i64 z = 0;
    bool u1_gt_z = false;
    bool u1_gt_y = false;
    bool height_is_u1 = false;
};

struct LiftSweep {
    i64 threshold_z = 0;  // smallest qualifying z from which height == u1 onward
    std::vector<LiftSweepRow> rows;
    std::vector<i64> failures_after_threshold;
};
LiftSweep lemma36_lift_sweep(i64 z_max, int threads = 1);

}  // namespace pellian
