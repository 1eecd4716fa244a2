#include "pellian/forms.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <map>
#include <numeric>
#include <thread>

#include "pellian/factor.hpp"
#include "pellian/pell.hpp"

namespace pellian {

namespace {

i64 checked_determinant(const IndefiniteForm& f) {
    const i128 det = static_cast<i128>(f.b) * f.b - static_cast<i128>(f.a) * f.c;
    if (det > INT64_MAX || det < INT64_MIN)
        throw std::overflow_error("form determinant overflows 64 bits");
    return static_cast<i64>(det);
}

void require_indefinite(i64 d) {
    if (d <= 0 || is_perfect_square(d))
        throw std::invalid_argument("form determinant must be positive and nonsquare");
}

i64 floor_mod(i64 x, i64 n) {
    i64 r = x % n;
    return r < 0 ? r + n : r;
}

}  // namespace

i64 IndefiniteForm::determinant() const { return checked_determinant(*this); }

bool IndefiniteForm::properly_primitive() const {
    return std::gcd(std::gcd(a, 2 * b), c) == 1;
}

bool is_reduced(const IndefiniteForm& f) {
    const i64 d = checked_determinant(f);
    if (d <= 0 || is_perfect_square(d)) return false;
    const i64 s = isqrt_i64(d);
    if (f.b < 1 || f.b > s) return false;
    const i64 absa = std::abs(f.a);
    return absa >= s - f.b + 1 && absa <= s + f.b;
}

IndefiniteForm rho_step(const IndefiniteForm& f) {
    const i64 d = checked_determinant(f);
    require_indefinite(d);
    if (f.c == 0) throw std::invalid_argument("rho_step: degenerate form (c = 0)");
    const i64 s2 = isqrt_i64(4 * d);  // floor(2 sqrt d); 4d is never a square
    const i64 m = std::abs(f.c);
    // Work with the even middle coefficient B = 2b, determined mod 2|c|.
    const i64 lo = m > s2 ? -m + 1 : s2 - 2 * m + 1;
    const i64 r = floor_mod(-2 * f.b, 2 * m);
    const i64 B = lo + floor_mod(r - lo, 2 * m);
    if (B % 2 != 0) throw std::logic_error("rho_step: middle coefficient parity lost");
    const i64 b1 = B / 2;
    const i128 num = static_cast<i128>(b1) * b1 - d;
    if (num % f.c != 0) throw std::logic_error("rho_step: inexact division");
    const i128 c1 = num / f.c;
    if (c1 > INT64_MAX || c1 < INT64_MIN) throw std::overflow_error("rho_step overflow");
    return {f.c, b1, static_cast<i64>(c1)};
}

IndefiniteForm reduce(const IndefiniteForm& f) {
    require_indefinite(checked_determinant(f));
    IndefiniteForm g = f;
    for (int i = 0; i < 100000; ++i) {
        if (is_reduced(g)) return g;
        g = rho_step(g);
    }
    throw std::logic_error("reduce: did not converge");
}

std::vector<IndefiniteForm> reduced_forms(i64 d) {
    require_indefinite(d);
    const i64 s = isqrt_i64(d);
    std::vector<IndefiniteForm> out;
    for (i64 b = 1; b <= s; ++b) {
        const i64 n = d - b * b;  // = -a*c > 0
        for (i64 absa = s - b + 1; absa <= s + b; ++absa) {
            if (n % absa != 0) continue;
            const i64 q = n / absa;
            IndefiniteForm f1{absa, b, -q};
            IndefiniteForm f2{-absa, b, q};
            if (f1.properly_primitive()) out.push_back(f1);
            if (f2.properly_primitive()) out.push_back(f2);
        }
    }
    std::sort(out.begin(), out.end(), [](const IndefiniteForm& x, const IndefiniteForm& y) {
        return std::tie(x.b, x.a, x.c) < std::tie(y.b, y.a, y.c);
    });
    return out;
}

std::vector<std::vector<IndefiniteForm>> reduction_cycles(i64 d) {
    const std::vector<IndefiniteForm> forms = reduced_forms(d);
    std::map<IndefiniteForm, std::size_t> index;
    for (std::size_t i = 0; i < forms.size(); ++i) index.emplace(forms[i], i);
    std::vector<bool> seen(forms.size(), false);
    std::vector<std::vector<IndefiniteForm>> cycles;
    for (std::size_t i = 0; i < forms.size(); ++i) {
        if (seen[i]) continue;
        std::vector<IndefiniteForm> cycle;
        IndefiniteForm g = forms[i];
        for (;;) {
            const auto it = index.find(g);
            if (it == index.end()) throw std::logic_error("rho left the reduced set");
            if (seen[it->second]) break;
            seen[it->second] = true;
            cycle.push_back(g);
            g = rho_step(g);
        }
        cycles.push_back(std::move(cycle));
    }
    return cycles;
}

namespace {

// Cycle ids plus the pairing induced by f -> -f.
struct CycleStructure {
    int h_narrow = 0;
    int h_identified = 0;
    int self_paired = 0;
};

CycleStructure cycle_structure(i64 d) {
    const auto cycles = reduction_cycles(d);
    std::map<IndefiniteForm, int> cycle_of;
    for (std::size_t i = 0; i < cycles.size(); ++i)
        for (const auto& f : cycles[i]) cycle_of[f] = static_cast<int>(i);
    CycleStructure cs;
    cs.h_narrow = static_cast<int>(cycles.size());
    std::vector<bool> counted(cycles.size(), false);
    for (std::size_t i = 0; i < cycles.size(); ++i) {
        if (counted[i]) continue;
        counted[i] = true;
        const IndefiniteForm mate = reduce(cycles[i].front().negated());
        const auto it = cycle_of.find(mate);
        if (it == cycle_of.end()) throw std::logic_error("negated form left the reduced set");
        const int j = it->second;
        if (j == static_cast<int>(i)) ++cs.self_paired;
        else counted[j] = true;
        ++cs.h_identified;
    }
    return cs;
}

}  // namespace

int class_number(i64 d, bool identify_negation) {
    const CycleStructure cs = cycle_structure(d);
    return identify_negation ? cs.h_identified : cs.h_narrow;
}

LValue L_value(i64 d, double abs_error_target, u64 term_cap) {
    require_pell_modulus(d);
    if (abs_error_target <= 0) throw std::invalid_argument("L_value: target must be positive");
    const i64 P = 4 * d;
    std::vector<signed char> chi(static_cast<std::size_t>(P), 0);
    i64 run = 0, run_max = 0, run_min = 0;
    for (i64 m = 1; m < P; m += 2) {
        const int v = jacobi(d, m);
        chi[static_cast<std::size_t>(m)] = static_cast<signed char>(v);
        run += v;
        run_max = std::max(run_max, run);
        run_min = std::min(run_min, run);
    }
    if (run != 0) throw std::logic_error("L_value: character is not mean-zero over its period");
    const i64 window = run_max - run_min;  // worst |T(x) - T(y)| over any window
    const u64 terms = static_cast<u64>(std::ceil(static_cast<double>(window) / abs_error_target));
    if (terms > term_cap)
        throw LValueUnreachable("L_value: target " + std::to_string(abs_error_target) +
                                " needs " + std::to_string(terms) + " terms, cap is " +
                                std::to_string(term_cap));
    double sum = 0.0;
    std::size_t idx = 1;
    for (u64 m = 1; m <= terms; m += 2) {
        const int v = chi[idx];
        if (v != 0) sum += static_cast<double>(v) / static_cast<double>(m);
        idx += 2;
        if (idx >= static_cast<std::size_t>(P)) idx -= static_cast<std::size_t>(P);
    }
    LValue out;
    out.value = sum;
    // Abel: |sum_{m > M} chi(m)/m| <= window / M; small cushion for fp noise.
    out.half_width = static_cast<double>(window) / static_cast<double>(terms) +
                     1e-12 * (1.0 + std::abs(sum));
    out.terms_used = terms;
    out.period = P;
    out.worst_window = window;
    return out;
}

ClassNumberReport class_formula_ratio(i64 d, bool identify_negation, double l_target) {
    ClassNumberReport r;
    r.d = d;
    const CycleStructure cs = cycle_structure(d);
    r.h_narrow = cs.h_narrow;
    r.h_identified = cs.h_identified;
    r.self_paired_cycles = cs.self_paired;
    r.negative_pell_solvable = fundamental_unit_pm(d).norm == -1;
    r.L = L_value(d, l_target);
    r.log_eps = log_eps(d);
    r.identify_negation = identify_negation;
    const int h = identify_negation ? r.h_identified : r.h_narrow;
    r.formula_ratio = std::sqrt(static_cast<double>(d)) * r.L.value /
                      (static_cast<double>(h) * r.log_eps);
    return r;
}

namespace {

double mean_of(const std::vector<double>& v) {
    if (v.empty()) return 0;
    return std::accumulate(v.begin(), v.end(), 0.0) / static_cast<double>(v.size());
}

double stddev_of(const std::vector<double>& v) {
    if (v.size() < 2) return 0;
    const double m = mean_of(v);
    double acc = 0;
    for (double x : v) acc += (x - m) * (x - m);
    return std::sqrt(acc / static_cast<double>(v.size() - 1));
}

}  // namespace

Reconciliation reconcile_formula(i64 d_max, double l_target, int threads) {
    std::vector<i64> ds;
    for (i64 d = 2; d <= d_max; ++d)
        if (!is_perfect_square(d)) ds.push_back(d);
    std::vector<ClassNumberReport> reports(ds.size());
    const int nt = std::max(1, threads);
    std::vector<std::thread> pool;
    std::atomic<std::size_t> next{0};
    auto work = [&] {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= ds.size()) return;
            reports[i] = class_formula_ratio(ds[i], false, l_target);
        }
    };
    for (int t = 0; t < nt; ++t) pool.emplace_back(work);
    for (auto& th : pool) th.join();

    std::vector<double> ratio_narrow, ratio_ident, ratio_solv, ratio_unsolv;
    for (const auto& r : reports) {
        const double base = std::sqrt(static_cast<double>(r.d)) * r.L.value / r.log_eps;
        ratio_narrow.push_back(base / r.h_narrow);
        ratio_ident.push_back(base / r.h_identified);
    }
    Reconciliation rec;
    const double sd_narrow = stddev_of(ratio_narrow);
    const double sd_ident = stddev_of(ratio_ident);
    rec.identify_negation = sd_ident < sd_narrow;
    const auto& chosen = rec.identify_negation ? ratio_ident : ratio_narrow;
    rec.mean_ratio = mean_of(chosen);
    rec.stddev = rec.identify_negation ? sd_ident : sd_narrow;
    rec.mean_ratio_other = mean_of(rec.identify_negation ? ratio_narrow : ratio_ident);
    rec.stddev_other = rec.identify_negation ? sd_narrow : sd_ident;
    rec.c = 1.0 / rec.mean_ratio;
    for (auto& r : reports) {
        r.identify_negation = rec.identify_negation;
        const int h = rec.identify_negation ? r.h_identified : r.h_narrow;
        r.formula_ratio = std::sqrt(static_cast<double>(r.d)) * r.L.value / (h * r.log_eps);
        (r.negative_pell_solvable ? ratio_solv : ratio_unsolv).push_back(r.formula_ratio);
    }
    rec.mean_ratio_neg_solvable = mean_of(ratio_solv);
    rec.mean_ratio_neg_unsolvable = mean_of(ratio_unsolv);
    rec.reports = std::move(reports);
    return rec;
}

HFamilySum h_sum_family(i64 Z, bool identify_negation, double l_target, int threads) {
    if (Z < 2) throw std::invalid_argument("h_sum_family: Z must be >= 2");
    std::vector<i64> zs;
    for (i64 z = 2; z <= Z; ++z) {
        if (z % 3 == 0) continue;
        const mpz_class dz = mpz_class(z) * z + 3;
        auto sf = is_squarefree(dz);
        if (!sf.has_value()) throw std::runtime_error("h_sum_family: square-free test ran out of budget");
        if (*sf) zs.push_back(z);
    }
    std::vector<HFamilyRecord> records(zs.size());
    const int nt = std::max(1, threads);
    std::atomic<std::size_t> next{0};
    auto work = [&] {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= zs.size()) return;
            const i64 z = zs[i];
            const i64 d = z * z + 3;
            HFamilyRecord rec;
            rec.z = z;
            rec.d = d;
            const CycleStructure cs = cycle_structure(d);
            rec.h_narrow = cs.h_narrow;
            rec.h_identified = cs.h_identified;
            rec.log_eps = log_eps(d);
            double target = l_target;
            if (target <= 0) {
                // Tight enough to round the analytic class number exactly.
                target = std::max(1e-9, 0.15 * rec.log_eps / std::sqrt(static_cast<double>(d)));
            }
            const LValue L = L_value(d, target);
            rec.L_value = L.value;
            rec.L_half_width = L.half_width;
            const int h = identify_negation ? rec.h_identified : rec.h_narrow;
            rec.formula_ratio =
                std::sqrt(static_cast<double>(d)) * L.value / (h * rec.log_eps);
            records[i] = rec;
        }
    };
    std::vector<std::thread> pool;
    for (int t = 0; t < nt; ++t) pool.emplace_back(work);
    for (auto& th : pool) th.join();
    HFamilySum out;
    for (const auto& r : records)
        out.sum += identify_negation ? r.h_identified : r.h_narrow;
    out.records = std::move(records);
    return out;
}

}  // namespace pellian
