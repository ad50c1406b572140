#pragma once

#include "orthoserie/bvfun.hpp"
#include "orthoserie/orthopoly.hpp"

#include <string>
#include <vector>

namespace orthoserie {

struct ExpansionCoeffs {
    std::string weight;
    std::string f;
    int N = 0;
    std::vector<double> c;  // c[k] = a_k f = int f p_k w^2
};

// Christoffel-Darboux kernel K_n(x,t).  Uses the CD form with prefactor
// B[n] = gamma_{n-1}/gamma_n when |x-t| > 1e-3 * a_n, the direct sum
// sum_{k<n} p_k(x) p_k(t) otherwise; both built from weighted values.
double kernel(const RecurrenceTable& table, const WeightSpec& spec, int n, double x,
              double t);

// Fourier coefficients c[0..N-1] by panel quadrature split at every breakpoint
// of f, truncated at a_{4N}; panels refined until successive estimates differ
// by < 1e-11 per coefficient.  For polynomial f a caller-supplied Gauss rule
// (exact for the integrand) is used instead.
ExpansionCoeffs coefficients(const RecurrenceTable& table, const WeightSpec& spec,
                             const GaussRule* rule, const BVFunction& f, int N);

// s_n(f,x) = sum_{k<n} c[k] p_k(x), evaluated as (sum c[k] q_k(x)) / w(x).
// When w(x) underflows the weighted sum is returned and *weighted_value set.
double partial_sum(const ExpansionCoeffs& coeffs, const RecurrenceTable& table,
                   const WeightSpec& spec, int n, double x, bool* weighted_value = nullptr);

// Lambda_n(t) = int_t^inf p_n w^2, truncated at a_{4n} + 10 with the remainder
// bound reported through *remainder if given.
double tail_integral(const RecurrenceTable& table, const WeightSpec& spec, int n, double t,
                     double* remainder = nullptr);

std::string coeffs_to_json(const ExpansionCoeffs& coeffs);

}  // namespace orthoserie
