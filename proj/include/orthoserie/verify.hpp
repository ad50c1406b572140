#pragma once

#include "orthoserie/fourier.hpp"

#include <optional>
#include <string>
#include <vector>

namespace orthoserie {

// Empirical stand-ins for the existential constants of the convergence bounds.
struct TheoremConstants {
    double delta = 0.5;  // V_delta exponent, in (0,1) for the Erdos bound
    double d = 0.5;      // a_{dn} cutoff parameter, in (0,1]
    double c = 1.0;      // envelope exponent multiplier in exp(c x Q'(x))
    double C = 1.0;      // overall scale (reporting only)
    double c1 = 1.0;        // Freud-mode tail cutoff |u| >= c1 a_n
    bool split_form = false;  // swap the k-sum for the wide+narrow window split
};

enum class RhsMode { erdos_js, mhaskar_freud };

struct RhsBreakdown {
    double term1 = 0;  // k-sum of V_delta (or its two-window split form)
    double term2 = 0;  // (1/n) int_{|u|<=a_{dn}} w^delta |df|   (Freud mode: tail integral)
    double term3 = 0;  // (1/(n T^{1/4})) int_{|u|<=a_{dn/2}} w |df|
    double term4 = 0;  // (1/T^{1/4}) int_{|u|>=a_{dn/2}} w |df|
    double envelope = 1;  // exp(c x Q'(x))
    double total = 0;     // C * envelope * (term1+term2+term3+term4)
};

// RHS of the pointwise bound.  erdos_js: the four-term Erdos-type bound;
// mhaskar_freud: the two-term Freud bound (delta forced to 1).  Enforces the
// standing assumption |x| <= a_{dn}/6 and the mode/class pairing.
RhsBreakdown theorem_rhs(const WeightSpec& spec, const BVFunction& f, double x, int n,
                         const TheoremConstants& k, RhsMode mode);

struct ConvergenceRow {
    int n = 0;
    double x = 0;
    double s_n = 0;
    double f_x = 0;
    double abs_error = 0;
    RhsBreakdown rhs;
    bool assumption_ok = true;   // |x| <= a_{dn}/6 held for this row
    bool weighted_value = false; // s_n reported as weighted sum (w underflow)
};

struct ConvergenceReport {
    std::string weight;
    std::string f;
    RhsMode mode = RhsMode::erdos_js;
    TheoremConstants constants;
    std::vector<ConvergenceRow> rows;  // sorted by (n, x)
    struct PerX {
        double x;
        bool error_improved;  // error at max n < error at min n
    };
    std::vector<PerX> per_x;
};

// Runs the expansion for each x in x_list over n_list; every x must be a
// continuity point of f.  The RHS is evaluated for every row, with rows
// violating the standing assumption flagged rather than rejected.
ConvergenceReport convergence_experiment(const WeightSpec& spec, const BVFunction& f,
                                         const std::vector<double>& x_list,
                                         const std::vector<int>& n_list,
                                         const TheoremConstants& k);

struct LemmaConfig {
    double bracket = 20.0;  // ratios certified inside [1/bracket, bracket]
    unsigned long long seed = 42;
    int trials = 20;          // random polynomials for the restricted-range check
    int x_points = 25;        // grid size for the Christoffel-ratio checks
    double x_frac = 0.9;      // ratio grids capped at x_frac * a_n
    int dense_points = 1200;  // sup scan for the weighted-polynomial bounds
    int tail_points = 600;    // restricted-range tail scan
    double delta = 0.5;       // tail-integral shape check
    double d = 0.5;
    std::vector<double> t_grid = {1, 2, 4, 8, 16, 32, 64, 128, 256};
};

struct LemmaEntry {
    std::string check;   // e.g. "2.1(2)", "2.2", "2.5 sup-form"
    double min_ratio = 0;
    double max_ratio = 0;
    bool one_sided = false;  // pass requires only max <= bracket
    bool pass = false;
};

struct RestrictedRangeEntry {
    int n = 0;
    double ratio = 0;  // worst tail/interior sup ratio over the trials
    bool pass = false; // ratio <= 1e-3, required for n >= 32
};

struct TailShapeEntry {
    int n = 0;
    double sup = 0;  // sup_t |Lambda_n(t)| n / (sqrt(a_n) w^delta(t))
};

struct LemmaReport {
    std::string weight;
    std::vector<int> n_list;
    double bracket = 20.0;
    std::vector<LemmaEntry> entries;
    std::vector<RestrictedRangeEntry> restricted;
    std::vector<TailShapeEntry> tail_shape;
    bool all_pass = false;  // every entry pass and every restricted row pass
};

LemmaReport lemma_suite(const WeightSpec& spec, const std::vector<int>& n_list,
                        const LemmaConfig& config = {});

// Serialization: JSON carries the full breakdown, CSV the flat rows
// (columns weight,f,x,n,s_n,f_x,abs_error,rhs_total,term1,term2,term3,term4).
std::string convergence_to_json(const ConvergenceReport& report);
std::string convergence_to_csv(const ConvergenceReport& report);
std::string lemmas_to_json(const LemmaReport& report);
std::string lemmas_to_csv(const LemmaReport& report);

// 17-significant-digit text form used by every CSV writer.
std::string fmt17(double v);

}  // namespace orthoserie
