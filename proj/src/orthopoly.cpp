#include "orthoserie/orthopoly.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace orthoserie {

void eval_weighted_all(const RecurrenceTable& table, const WeightSpec& spec, int n,
                       double x, std::vector<double>& out) {
    if (n < 0 || n > table.N()) throw std::out_of_range("eval_weighted: degree outside table range");
    out.assign(static_cast<size_t>(n) + 1, 0.0);
    out[0] = spec.w(x) / std::sqrt(table.mu0());
    if (n == 0) return;
    out[1] = (x - table.A(0)) * out[0] / table.B(1);
    for (int k = 1; k < n; ++k)
        out[k + 1] = ((x - table.A(k)) * out[k] - table.B(k) * out[k - 1]) / table.B(k + 1);
}

double eval_weighted(const RecurrenceTable& table, const WeightSpec& spec, int n, double x) {
    static thread_local std::vector<double> q;
    eval_weighted_all(table, spec, n, x, q);
    return q[static_cast<size_t>(n)];
}

namespace {

// Implicit-shift QL for a symmetric tridiagonal, accumulating only the first
// row of the eigenvector matrix (the Golub-Welsch weight vector).
void tridiag_ql(std::vector<double>& d, std::vector<double>& e, std::vector<double>& z) {
    const int n = static_cast<int>(d.size());
    e.push_back(0.0);
    for (int l = 0; l < n; ++l) {
        int iter = 0;
        int m;
        do {
            for (m = l; m < n - 1; ++m) {
                const double dd = std::abs(d[m]) + std::abs(d[m + 1]);
                if (std::abs(e[m]) <= 1e-17 * dd) break;
            }
            if (m != l) {
                if (iter++ == 50) throw std::runtime_error("gauss_rule: eigenvalue iteration failed to converge");
                double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
                double r = std::hypot(g, 1.0);
                g = d[m] - d[l] + e[l] / (g + std::copysign(r, g));
                double s = 1.0, c = 1.0, p = 0.0;
                for (int i = m - 1; i >= l; --i) {
                    double f = s * e[i];
                    const double b = c * e[i];
                    r = std::hypot(f, g);
                    e[i + 1] = r;
                    if (r == 0.0) {
                        d[i + 1] -= p;
                        e[m] = 0.0;
                        break;
                    }
                    s = f / r;
                    c = g / r;
                    g = d[i + 1] - p;
                    r = (d[i] - g) * s + 2.0 * c * b;
                    p = s * r;
                    d[i + 1] = g + p;
                    g = c * r - b;
                    f = z[i + 1];
                    z[i + 1] = s * z[i] + c * f;
                    z[i] = c * z[i] - s * f;
                }
                if (r == 0.0 && m - 1 >= l) continue;
                d[l] -= p;
                e[l] = g;
                e[m] = 0.0;
            }
        } while (m != l);
    }
}

}  // namespace

GaussRule gauss_rule(const RecurrenceTable& table, int n) {
    if (n < 1 || n > table.N()) throw std::out_of_range("gauss_rule: 1 <= n <= table.N required");
    std::vector<double> d(n), e(n > 1 ? n - 1 : 0), z(n, 0.0);
    for (int k = 0; k < n; ++k) d[k] = table.A(k);
    for (int k = 1; k < n; ++k) e[k - 1] = table.B(k);
    z[0] = 1.0;
    tridiag_ql(d, e, z);

    std::vector<int> idx(n);
    std::iota(idx.begin(), idx.end(), 0);
    std::sort(idx.begin(), idx.end(), [&](int a, int b) { return d[a] < d[b]; });

    GaussRule rule;
    rule.n = n;
    rule.nodes.resize(n);
    rule.weights.resize(n);
    for (int k = 0; k < n; ++k) {
        rule.nodes[k] = d[idx[k]];
        rule.weights[k] = table.mu0() * z[idx[k]] * z[idx[k]];
    }
    return rule;
}

double christoffel(const RecurrenceTable& table, const WeightSpec& spec, int n, double x,
                   bool* underflow) {
    if (n < 1 || n > table.N()) throw std::out_of_range("christoffel: 1 <= n <= table.N required");
    if (underflow) *underflow = false;
    const double wx = spec.w(x);
    if (wx == 0.0) {
        if (underflow) *underflow = true;
        return 0.0;
    }
    static thread_local std::vector<double> q;
    eval_weighted_all(table, spec, n - 1, x, q);
    double s = 0;
    for (double v : q) s += v * v;
    if (s == 0.0) {
        if (underflow) *underflow = true;
        return 0.0;
    }
    return wx * wx / s;
}

}  // namespace orthoserie
