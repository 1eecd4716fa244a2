#pragma once

#include <stdexcept>
#include <vector>

#include "pellian/integer.hpp"

namespace pellian {

/// Indefinite binary quadratic form a x^2 + 2b xy + c y^2 in Gauss's
/// even-middle convention. Its determinant is d = b^2 - ac; the matching
/// discriminant-form (a, 2b, c) has discriminant 4d.
struct IndefiniteForm {
    i64 a = 0, b = 0, c = 0;

    i64 determinant() const;
    bool properly_primitive() const;  // gcd(a, 2b, c) == 1
    IndefiniteForm negated() const { return {-a, -b, -c}; }
    auto operator<=>(const IndefiniteForm&) const = default;
};

/// Reduced: 0 < b < sqrt(d) and sqrt(d) - b < |a| < sqrt(d) + b.
bool is_reduced(const IndefiniteForm& f);

/// One step of the reduction operator: (a,b,c) -> (c, b', c') with
/// b' = -b (mod |c|) normalized into the standard window. Proper
/// equivalence and the determinant are preserved.
IndefiniteForm rho_step(const IndefiniteForm& f);

/// Iterate rho_step until reduced.
IndefiniteForm reduce(const IndefiniteForm& f);

/// All reduced properly primitive forms of determinant d, both signs of a,
/// sorted by (b, a, c).
std::vector<IndefiniteForm> reduced_forms(i64 d);

/// Partition of reduced_forms(d) into rho-cycles (proper classes).
std::vector<std::vector<IndefiniteForm>> reduction_cycles(i64 d);

/// Number of cycles; with identify_negation the cycles of f and -f merge.
int class_number(i64 d, bool identify_negation);

struct LValueUnreachable : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// L_d(1) = sum over odd m of (d/m)/m, as a certified interval
/// [value - half_width, value + half_width]. The tail beyond the cutoff is
/// bounded by Abel summation against the worst partial sum of the character
/// over its period 4d.
struct LValue {
    double value = 0;
    double half_width = 0;
    u64 terms_used = 0;
    i64 period = 0;
    i64 worst_window = 0;  // max - min of the prefix sums over one period
};

LValue L_value(i64 d, double abs_error_target = 1e-6, u64 term_cap = 4'000'000'000ULL);

struct ClassNumberReport {
    i64 d = 0;
    int h_narrow = 0;
    int h_identified = 0;
    int self_paired_cycles = 0;  // h_identified == (h_narrow + self_paired)/2
    bool negative_pell_solvable = false;
    LValue L;
    double log_eps = 0;
    double formula_ratio = 0;  // sqrt(d) L_d(1) / (h log eps_d), h per convention
    bool identify_negation = false;
};

ClassNumberReport class_formula_ratio(i64 d, bool identify_negation = false,
                                      double l_target = 1e-6);

/// Empirical fixing of the Eq-style class number formula: sweeps all
/// nonsquare d <= d_max, computes the ratio under both negation conventions
/// and keeps the one with the smaller sample standard deviation.
struct Reconciliation {
    bool identify_negation = false;
    double c = 0;  // h(d) ~= round(c sqrt(d) L_d(1) / log eps_d)
    double mean_ratio = 0;
    double stddev = 0;
    double mean_ratio_other = 0;
    double stddev_other = 0;
    double mean_ratio_neg_solvable = 0;
    double mean_ratio_neg_unsolvable = 0;
    std::vector<ClassNumberReport> reports;
};

Reconciliation reconcile_formula(i64 d_max, double l_target = 1e-4, int threads = 1);

struct HFamilyRecord {
    i64 z = 0;
    i64 d = 0;
    int h_narrow = 0;
    int h_identified = 0;
    double log_eps = 0;
    double L_value = 0;
    double L_half_width = 0;
    double formula_ratio = 0;
};

struct HFamilySum {
    mpz_class sum = 0;  // sum of the convention class number over the family
    std::vector<HFamilyRecord> records;
};

/// Sum of h(z^2+3) over 2 <= z <= Z with 3 not dividing z and z^2+3
/// square-free. l_target <= 0 selects a per-z target tight enough to round
/// the analytic class number to the nearest integer.
HFamilySum h_sum_family(i64 Z, bool identify_negation = false, double l_target = 0,
                        int threads = 1);

}  // namespace pellian
