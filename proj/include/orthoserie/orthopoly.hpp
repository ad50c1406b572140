#pragma once

#include "orthoserie/recurrence.hpp"
#include "orthoserie/weights.hpp"

#include <vector>

namespace orthoserie {

// Fills out[k] = q_k(x) = p_k(x) w(x) for k = 0..n via the weighted recurrence
// q_{k+1} = ((x - A[k]) q_k - B[k] q_{k-1}) / B[k+1], seeded q_0 = w(x)/sqrt(mu0).
// Weighted values stay O(n^{1/6}) near the edge, so no overflow guard is needed.
void eval_weighted_all(const RecurrenceTable& table, const WeightSpec& spec, int n,
                       double x, std::vector<double>& out);

// p_n(x) w(x).
double eval_weighted(const RecurrenceTable& table, const WeightSpec& spec, int n, double x);

// Gauss rule for w^2 dx: zeros of p_n and Christoffel numbers.  Nodes are
// stored ascending (x_{n,n} < ... < x_{1,n}); node_desc maps the 1-based
// descending label of the text, node_desc(1) being the largest zero.
struct GaussRule {
    int n = 0;
    std::vector<double> nodes;    // ascending
    std::vector<double> weights;  // lambda_{k,n} matching nodes[]
    double node_desc(int k) const { return nodes.at(static_cast<size_t>(n - k)); }
    double weight_desc(int k) const { return weights.at(static_cast<size_t>(n - k)); }
};

// Golub-Welsch on the symmetric tridiagonal (A, B): implicit-shift QL tracking
// first eigenvector components; weights = mu0 * component^2.
GaussRule gauss_rule(const RecurrenceTable& table, int n);

// Christoffel function lambda_{n,2}(w;x) = w^2(x) / sum_{k<n} (p_k w)^2(x).
// Underflow of w^2 at extreme x yields 0 with *underflow set.
double christoffel(const RecurrenceTable& table, const WeightSpec& spec, int n, double x,
                   bool* underflow = nullptr);

}  // namespace orthoserie
