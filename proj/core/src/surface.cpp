#include "pellian/surface.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <thread>

#include "pellian/factor.hpp"
#include "pellian/pell.hpp"

namespace pellian {

namespace {

double log_mpz_local(const mpz_class& x) {
    long e = 0;
    const double m = mpz_get_d_2exp(&e, x.get_mpz_t());
    return std::log(m) + static_cast<double>(e) * M_LN2;
}

void require_k3_solution(const mpz_class& t, const mpz_class& u, i64 z) {
    const mpz_class d = mpz_class(z) * z + 3;
    if (t * t - d * u * u != 1)
        throw std::invalid_argument("not a solution of t^2 - (z^2+3) u^2 = 1");
}

bool qualifying_z(i64 z) {
    if (z < 1 || z % 3 == 0) return false;
    const auto sf = is_squarefree(mpz_class(z) * z + 3);
    return sf.has_value() && *sf;
}

}  // namespace

bool SurfacePoint::on_surface() const {
    return 2 * u * y * z == y * y - k * u * u - 1;
}

SurfacePoint pell_to_surface(const mpz_class& t, const mpz_class& u, i64 z, i64 k) {
    const mpz_class d = mpz_class(z) * z + k;
    if (t * t - d * u * u != 1)
        throw std::invalid_argument("pell_to_surface: not a solution for d = z^2 + k");
    SurfacePoint p;
    p.y = t + u * z;
    p.u = u;
    p.z = z;
    p.k = k;
    if (!p.on_surface()) throw std::logic_error("pell_to_surface: identity failed");
    return p;
}

BranchLift small_branch_lift(i64 z) {
    if (z < 1) throw std::invalid_argument("small_branch_lift: z must be >= 1");
    if (z % 3 == 0) throw std::invalid_argument("small_branch_lift: 3 divides z");
    const mpz_class dz = mpz_class(z) * z + 3;
    const auto sf = is_squarefree(dz);
    if (!sf.has_value() || !*sf)
        throw std::invalid_argument("small_branch_lift: z^2 + 3 is not square-free");
    const PellSolution eps = fundamental_solution(z * z + 3);
    BranchLift lift;
    lift.t1 = eps.t;
    lift.u1 = eps.u;
    // With y = t1 - u1 z the identity forces the point (y, -u1, z).
    lift.point.y = eps.t - eps.u * z;
    lift.point.u = -eps.u;
    lift.point.z = z;
    lift.point.k = 3;
    if (!lift.point.on_surface()) throw std::logic_error("small_branch_lift: identity failed");
    const mpz_class abs_y = abs(lift.point.y);
    lift.height = std::max({abs_y, lift.u1, mpz_class(z)});
    lift.height_is_u1 = lift.height == lift.u1;
    lift.u1_gt_z = lift.u1 > z;
    lift.u1_gt_y = lift.u1 > abs_y;
    return lift;
}

IntPolynomial A1Curve::identity_residual() const {
    const IntPolynomial one = IntPolynomial::constant(1);
    if (kind == Kind::kPellTDU) return p1 * p1 - p2 * (p3 * p3) - one;
    return p1 * p1 - (p2 * p2) * mpz_class(k) - one - (p1 * p2 * p3) * mpz_class(2);
}

A1Curve zapponi_curve(i64 t0, i64 d0, i64 u0) {
    if (u0 == 0) throw std::invalid_argument("zapponi_curve: u0 must be nonzero");
    if (static_cast<i128>(t0) * t0 - static_cast<i128>(d0) * u0 * u0 != 1)
        throw std::invalid_argument("zapponi_curve: base is not a Pell solution");
    const mpz_class T0 = t0, D0 = d0, U0 = u0;
    const mpz_class tp1 = T0 + 1;
    A1Curve c;
    c.kind = A1Curve::Kind::kPellTDU;
    c.p1 = IntPolynomial({T0, 2 * tp1 * U0 * U0, tp1 * U0 * U0 * U0 * U0});
    c.p2 = IntPolynomial({D0, 2 * tp1 * tp1, tp1 * tp1 * U0 * U0});
    c.p3 = IntPolynomial({U0, U0 * U0 * U0});
    return c;
}

A1Curve known_curve_k1() {
    A1Curve c;
    c.kind = A1Curve::Kind::kSurfaceYUZ;
    c.k = 1;
    c.p1 = IntPolynomial{1, 0, 4};  // y = 4x^2 + 1
    c.p2 = IntPolynomial{0, 2};     // u = 2x
    c.p3 = IntPolynomial::identity();
    return c;
}

A1Curve known_curve_3k() {
    A1Curve c;
    c.kind = A1Curve::Kind::kPellTDU;
    c.p1 = IntPolynomial{1, 0, 6};  // t = 6x^2 + 1
    c.p2 = IntPolynomial{3, 0, 9};  // d = 9x^2 + 3, i.e. z = 3x
    c.p3 = IntPolynomial{0, 2};     // u = 2x
    return c;
}

MembershipVerdict a1_membership(const mpz_class& t, const mpz_class& u, i64 z) {
    require_k3_solution(t, u, z);
    if (u == 0) return {Membership::kOnKnownCurve, "trivial line u = 0"};
    if (z == 0) {
        // d(0) = 3; the 3k-family degenerates to (1, 0) at k = 0 and covers
        // none of the nontrivial solutions, so nothing is known here.
        return {Membership::kUndetermined, "z = 0 degenerate"};
    }
    if (z % 3 == 0) {
        const i64 kk = z / 3;
        PellSolution base;
        base.d = z * z + 3;
        base.t = 6 * mpz_class(kk) * kk + 1;
        base.u = abs(2 * mpz_class(kk));
        base.norm = 1;
        const mpz_class at = abs(t), au = abs(u);
        PellSolution cur = base;
        for (int n = 1; cur.t <= at; ++n) {
            if (cur.t == at && cur.u == au)
                return {Membership::kOnKnownCurve,
                        "3k-family power " + std::to_string(n)};
            cur = compose(cur, base);
        }
        throw std::logic_error("a1_membership: solution escaped the 3k family");
    }
    const auto sf = is_squarefree(mpz_class(z) * z + 3);
    if (!sf.has_value())
        return {Membership::kUndetermined, "square-free status unknown within budget"};
    if (*sf) return {Membership::kNotOnAnyIntegerCurve, "criterion: 3 not | z, d square-free, u != 0"};
    return {Membership::kUndetermined, "z^2 + 3 not square-free"};
}

u64 count_NUcirc_lower(i64 B) {
    if (B < 2) throw std::invalid_argument("count_NUcirc_lower: B must be >= 2");
    u64 count = 0;
    const mpz_class bound = B;
    for (i64 z = 1; z <= B; ++z) {
        if (!qualifying_z(z)) continue;
        const auto fund = fundamental_solution_within(z * z + 3, bound);
        if (!fund) continue;
        // eps = t1 + u1 sqrt(d) <= B  <=>  t1 <= B and d u1^2 <= (B - t1)^2
        if (fund->t > bound) continue;
        const mpz_class rest = bound - fund->t;
        if (mpz_class(fund->d) * fund->u * fund->u <= rest * rest) ++count;
    }
    return count;
}

SBCount count_SB(double B, double epsilon_exponent) {
    if (!(B > 1) || epsilon_exponent <= 0)
        throw std::invalid_argument("count_SB: need B > 1 and a positive exponent");
    SBCount out;
    const double logB = std::log(B);
    out.z_range = static_cast<i64>(std::floor(std::pow(logB, 4.0 + epsilon_exponent)));
    mpz_class bound(std::ceil(B));
    bound += 2;
    for (i64 z = 1; z <= out.z_range; ++z) {
        if (!qualifying_z(z)) continue;
        const auto fund = fundamental_solution_within(z * z + 3, bound);
        bool le = false;
        if (fund) {
            const double le_log = log_value(*fund);
            le = le_log <= logB + 1e-10;  // ties toward inclusion
        }
        if (le) ++out.count;
        else out.exceeding.push_back(z);
    }
    return out;
}

std::vector<VerdictPoint> enumerate_surface_points(i64 B) {
    if (B < 1) throw std::invalid_argument("enumerate_surface_points: B must be >= 1");
    if (B > 50000) throw std::invalid_argument("enumerate_surface_points: B > 50000 unsupported");
    std::vector<SurfacePoint> pts;
    // Trivial lines u = 0, y = +-1.
    for (i64 z = -B; z <= B; ++z)
        for (i64 y : {-1, 1}) {
            SurfacePoint p;
            p.y = y;
            p.u = 0;
            p.z = z;
            pts.push_back(p);
        }
    // u != 0: solve the quadratic in y; y = u z +- r with r^2 = u^2 z^2 + 3 u^2 + 1.
    for (i64 u = -B; u <= B; ++u) {
        if (u == 0) continue;
        for (i64 z = -B; z <= B; ++z) {
            const i128 disc = static_cast<i128>(u) * u * z * z +
                              3 * static_cast<i128>(u) * u + 1;
            const i64 r = isqrt_i64(static_cast<i64>(disc));
            if (static_cast<i128>(r) * r != disc) continue;
            for (i64 y : {u * z + r, u * z - r}) {
                if (std::abs(y) > B) continue;
                SurfacePoint p;
                p.y = y;
                p.u = u;
                p.z = z;
                if (!p.on_surface()) throw std::logic_error("enumerate: identity failed");
                pts.push_back(p);
            }
        }
    }
    std::sort(pts.begin(), pts.end(), [](const SurfacePoint& a, const SurfacePoint& b) {
        if (a.z != b.z) return a.z < b.z;
        if (a.u != b.u) return a.u < b.u;
        return a.y < b.y;
    });
    std::vector<VerdictPoint> out;
    out.reserve(pts.size());
    for (auto& p : pts) {
        const mpz_class t = p.y - p.u * p.z;
        VerdictPoint vp;
        vp.v = a1_membership(t, p.u, p.z);
        vp.p = std::move(p);
        out.push_back(std::move(vp));
    }
    return out;
}

const std::array<std::array<int, 7>, 7>& intersection_matrix() {
    // Basis order: L1, L2, L3, L4, L5, E1, E2.
    static const std::array<std::array<int, 7>, 7> m = {{
        {-1, 0, 1, 1, 0, 1, 0},
        {0, -1, 1, 0, 0, 0, 1},
        {1, 1, -1, 0, 0, 0, 0},
        {1, 0, 0, -1, 1, 0, 0},
        {0, 0, 0, 1, -1, 0, 1},
        {1, 0, 0, 0, 0, -2, 1},
        {0, 1, 0, 0, 1, 1, -2},
    }};
    return m;
}

namespace {

int rank_exact(std::vector<std::vector<mpq_class>> rows) {
    const std::size_t nr = rows.size();
    const std::size_t nc = nr == 0 ? 0 : rows[0].size();
    int rank = 0;
    std::size_t row = 0;
    for (std::size_t col = 0; col < nc && row < nr; ++col) {
        std::size_t piv = row;
        while (piv < nr && rows[piv][col] == 0) ++piv;
        if (piv == nr) continue;
        std::swap(rows[piv], rows[row]);
        for (std::size_t r = row + 1; r < nr; ++r) {
            if (rows[r][col] == 0) continue;
            const mpq_class f = rows[r][col] / rows[row][col];
            for (std::size_t c = col; c < nc; ++c) rows[r][c] -= f * rows[row][c];
        }
        ++row;
        ++rank;
    }
    return rank;
}

}  // namespace

RankReport intersection_rank_check() {
    const auto& m = intersection_matrix();
    std::vector<std::vector<mpq_class>> all, boundary;
    for (int i = 0; i < 7; ++i) {
        std::vector<mpq_class> row(7);
        for (int j = 0; j < 7; ++j) row[j] = m[i][j];
        all.push_back(row);
        if (i == 0 || i == 1 || i == 2 || i == 5 || i == 6) boundary.push_back(row);
    }
    RankReport r;
    r.rank = rank_exact(all);
    r.boundary_rank = rank_exact(boundary);
    bool dependent = true;  // check L2 + L3 - L4 - L5 = 0 entrywise
    for (int j = 0; j < 7; ++j)
        if (m[1][j] + m[2][j] - m[3][j] - m[4][j] != 0) dependent = false;
    if (dependent) r.dependency = "L2 + L3 - L4 - L5 = 0";
    r.picard_rank = 7;
    r.rho_U = r.picard_rank - r.boundary_rank;
    r.b = 2;  // three boundary lines meet pairwise; at most two share a real point
    r.exponent = r.rho_U + r.b;
    return r;
}

namespace {

// Exact element a + b sqrt(d) of Q(sqrt d).
struct QuadField {
    i64 d;
    mpq_class a, b;

    QuadField mul(const QuadField& o) const {
        return {d, a * o.a + mpq_class(d) * b * o.b, a * o.b + b * o.a};
    }
    QuadField square() const { return mul(*this); }
};

// sign of a + b sqrt(d)
int sign_of(const QuadField& v) {
    const int sa = sgn(v.a), sb = sgn(v.b);
    if (sa >= 0 && sb >= 0) return (sa == 0 && sb == 0) ? 0 : 1;
    if (sa <= 0 && sb <= 0) return -1;
    const mpq_class lhs = v.a * v.a, rhs = mpq_class(v.d) * v.b * v.b;
    if (lhs == rhs) return 0;
    const bool a_wins = lhs > rhs;
    return a_wins ? sa : sb;
}

double log_qd(const QuadField& v) {
    // log((A + B sqrt d)/D) with integer A, B and common denominator D > 0.
    mpz_class D = lcm(v.a.get_den(), v.b.get_den());
    mpz_class A = v.a.get_num() * (D / v.a.get_den());
    mpz_class B = v.b.get_num() * (D / v.b.get_den());
    // assumes the value is positive and A, B >= 0 in our uses
    const double sq = 0.5 * std::log(static_cast<double>(v.d));
    double lead;
    if (A == 0) lead = log_mpz_local(B) + sq;
    else if (B == 0) lead = log_mpz_local(A);
    else {
        const double la = log_mpz_local(A);
        const double lb = log_mpz_local(B) + sq;
        const double hi = std::max(la, lb), lo2 = std::min(la, lb);
        lead = hi + std::log1p(std::exp(lo2 - hi));
    }
    return lead - log_mpz_local(D);
}

}  // namespace

GolubevaCheck golubeva_check(int n) {
    if (n < 1) throw std::invalid_argument("golubeva_check: n must be >= 1");
    GolubevaCheck out;
    out.n = n;
    i64 z = 1;
    for (int i = 0; i < n; ++i) z *= 3;
    z += 1;  // z = 3^n + 1
    out.z = z;
    const i64 d = z * z + 3;
    out.d = d;
    const PellSolution eps = fundamental_solution(d);

    const QuadField A{d, mpq_class(z, 3), mpq_class(1, 3)};
    const QuadField Bq{d, mpq_class(2, z + 1), mpq_class(1, z + 1)};
    const QuadField C{d, mpq_class(z - 1, 2), mpq_class(1, 2)};
    QuadField prod{d, 1, 0};
    for (int i = 0; i < n; ++i) prod = prod.mul(A);
    prod = prod.mul(Bq).mul(C);
    QuadField rhs = prod.square();
    rhs.a *= 2;
    rhs.b *= 2;

    const QuadField lhs{d, mpq_class(eps.t), mpq_class(eps.u)};
    QuadField diff{d, rhs.a - lhs.a, rhs.b - lhs.b};
    const int s = sign_of(diff);
    out.holds = s >= 0;
    out.exact_equality = rhs.a == lhs.a && rhs.b == lhs.b;
    out.lhs_log = log_value(eps);
    out.rhs_log = log_qd(rhs);
    out.rel_slack = out.exact_equality ? 0.0 : std::expm1(out.rhs_log - out.lhs_log);
    return out;
}

std::vector<YamamotoRow> yamamoto_diagnostic(i64 Z) {
    if (Z < 2) throw std::invalid_argument("yamamoto_diagnostic: Z must be >= 2");
    std::vector<YamamotoRow> rows;
    for (i64 z = 2; z <= Z; ++z) {
        if (z % 3 == 0) continue;
        YamamotoRow row;
        row.z = z;
        row.d = z * z + 3;
        const auto sf = squarefree_part(mpz_class(row.d));
        if (!sf) continue;  // out of factoring budget; skip the row
        row.sf = *sf;
        row.log_eps = log_eps(row.d);
        const double ls = log_mpz_local(row.sf);
        row.log_sf_sq = ls * ls;
        row.ratio = row.log_eps / row.log_sf_sq;
        rows.push_back(row);
    }
    return rows;
}

LiftSweep lemma36_lift_sweep(i64 z_max, int threads) {
    std::vector<i64> zs;
    for (i64 z = 2; z <= z_max; ++z)
        if (qualifying_z(z)) zs.push_back(z);
    std::vector<LiftSweepRow> rows(zs.size());
    std::atomic<std::size_t> next{0};
    auto work = [&] {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= zs.size()) return;
            const BranchLift lift = small_branch_lift(zs[i]);
            rows[i] = {zs[i], lift.u1_gt_z, lift.u1_gt_y, lift.height_is_u1};
        }
    };
    std::vector<std::thread> pool;
    for (int t = 0; t < std::max(1, threads); ++t) pool.emplace_back(work);
    for (auto& th : pool) th.join();

    LiftSweep sweep;
    sweep.rows = std::move(rows);
    // Smallest qualifying z from which |u1| > |z| and |u1| > |y| both hold
    // for every later qualifying z.
    i64 threshold = zs.empty() ? 0 : zs.front();
    for (std::size_t i = 0; i < sweep.rows.size(); ++i) {
        if (!(sweep.rows[i].u1_gt_z && sweep.rows[i].u1_gt_y)) {
            threshold = i + 1 < sweep.rows.size() ? sweep.rows[i + 1].z : sweep.rows[i].z + 1;
        }
    }
    sweep.threshold_z = threshold;
    for (const auto& row : sweep.rows)
        if (row.z >= threshold && !(row.u1_gt_z && row.u1_gt_y && row.height_is_u1))
            sweep.failures_after_threshold.push_back(row.z);
    return sweep;
}

}  // namespace pellian
