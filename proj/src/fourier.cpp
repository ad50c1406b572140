#include "orthoserie/fourier.hpp"
#include "orthoserie/mrs.hpp"
#include "orthoserie/quadrature.hpp"

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace orthoserie {

double kernel(const RecurrenceTable& table, const WeightSpec& spec, int n, double x,
              double t) {
    if (n < 1 || n > table.N()) throw std::out_of_range("kernel: 1 <= n <= table.N required");
    const double wx = spec.w(x), wt = spec.w(t);
    const double a_n = mrs_a(spec, n);
    static thread_local std::vector<double> qx, qt;
    if (std::abs(x - t) <= 1e-3 * a_n) {
        eval_weighted_all(table, spec, n - 1, x, qx);
        eval_weighted_all(table, spec, n - 1, t, qt);
        double s = 0;
        for (int k = 0; k < n; ++k) s += qx[k] * qt[k];
        return s / (wx * wt);
    }
    eval_weighted_all(table, spec, n, x, qx);
    eval_weighted_all(table, spec, n, t, qt);
    const double num = qx[n] * qt[n - 1] - qx[n - 1] * qt[n];
    return table.B(n) * num / ((x - t) * wx * wt);
}

namespace {

// One pass of the coefficient quadrature on a fixed panel set.
void accumulate_coeffs(const RecurrenceTable& table, const WeightSpec& spec,
                       const BVFunction& f, int N, const std::vector<double>& edges,
                       int order, std::vector<double>& c) {
    c.assign(N, 0.0);
    const GLRule& gl = gauss_legendre(order);
    std::vector<double> q;
    for (size_t i = 0; i + 1 < edges.size(); ++i) {
        if (!(edges[i + 1] > edges[i])) continue;
        const double mid = 0.5 * (edges[i] + edges[i + 1]);
        const double half = 0.5 * (edges[i + 1] - edges[i]);
        for (size_t j = 0; j < gl.x.size(); ++j) {
            const double xx = mid + half * gl.x[j];
            const double fac = half * gl.w[j] * f(xx) * spec.w(xx);
            if (fac == 0.0) continue;
            eval_weighted_all(table, spec, N - 1, xx, q);
            for (int k = 0; k < N; ++k) c[k] += fac * q[k];
        }
    }
}

std::vector<double> coeff_edges(const WeightSpec& spec, const BVFunction& f, int N,
                                int mult) {
    const double aN = mrs_a(spec, N);
    const double R = mrs_a(spec, 4.0 * N);
    const int panels = mult * std::max(24, N);
    std::vector<double> half = arcsine_edges(aN, panels);
    const int tails = 12 * mult;
    for (int j = 1; j <= tails; ++j) half.push_back(aN + (R - aN) * j / tails);
    std::vector<double> edges;
    for (size_t i = half.size(); i >= 1; --i) edges.push_back(-half[i - 1]);
    for (size_t i = 1; i < half.size(); ++i) edges.push_back(half[i]);
    for (double b : f.breakpoints())
        if (std::abs(b) < R) edges.push_back(b);
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    return edges;
}

}  // namespace

ExpansionCoeffs coefficients(const RecurrenceTable& table, const WeightSpec& spec,
                             const GaussRule* rule, const BVFunction& f, int N) {
    if (N < 1 || N > table.N()) throw std::out_of_range("coefficients: 1 <= N <= table.N required");
    ExpansionCoeffs out;
    out.weight = spec.descriptor();
    out.f = f.descriptor();
    out.N = N;

    if (rule && f.breakpoints().empty()) {
        // smooth f: the Gauss rule integrates f p_k w^2 exactly for polynomial f
        out.c.assign(N, 0.0);
        std::vector<double> q;
        for (int i = 0; i < rule->n; ++i) {
            const double xx = rule->nodes[i];
            const double fv = f(xx);
            if (fv == 0.0) continue;
            eval_weighted_all(table, spec, N - 1, xx, q);
            const double wx = spec.w(xx);
            if (wx == 0.0) continue;
            // Gauss weight carries w^2 dx; divide one w back out of q_k = p_k w
            const double fac = rule->weights[i] * fv / wx;
            for (int k = 0; k < N; ++k) out.c[k] += fac * q[k];
        }
        return out;
    }

    for (double b : f.breakpoints())
        if (!std::isfinite(f(b))) throw std::domain_error("coefficients: f not finite at breakpoint");

    std::vector<double> prev;
    accumulate_coeffs(table, spec, f, N, coeff_edges(spec, f, N, 1), 24, prev);
    for (int mult = 2; mult <= 16; mult *= 2) {
        accumulate_coeffs(table, spec, f, N, coeff_edges(spec, f, N, mult), 24, out.c);
        double diff = 0;
        for (int k = 0; k < N; ++k) diff = std::max(diff, std::abs(out.c[k] - prev[k]));
        if (diff < 1e-11) return out;
        prev = out.c;
    }
    return out;
}

double partial_sum(const ExpansionCoeffs& coeffs, const RecurrenceTable& table,
                   const WeightSpec& spec, int n, double x, bool* weighted_value) {
    if (n < 1 || n > coeffs.N) throw std::out_of_range("partial_sum: 1 <= n <= coeffs.N required");
    if (weighted_value) *weighted_value = false;
    static thread_local std::vector<double> q;
    eval_weighted_all(table, spec, n - 1, x, q);
    double s = 0;
    for (int k = 0; k < n; ++k) s += coeffs.c[k] * q[k];
    const double wx = spec.w(x);
    if (wx == 0.0) {
        if (weighted_value) *weighted_value = true;
        return s;
    }
    return s / wx;
}

double tail_integral(const RecurrenceTable& table, const WeightSpec& spec, int n, double t,
                     double* remainder) {
    if (n < 0 || n > table.N()) throw std::out_of_range("tail_integral: 0 <= n <= table.N required");
    const double R = mrs_a(spec, std::max(1, 4 * n)) + 10.0;
    if (remainder) {
        // beyond R the integrand is dominated by a one-sided exponential
        const double qR = std::abs(eval_weighted(table, spec, n, R)) * spec.w(R);
        const double decay = std::max(spec.Qp(R), 1.0);
        *remainder = qR / decay;
    }
    if (t >= R) return 0.0;
    const auto integrand = [&](double v) {
        return eval_weighted(table, spec, n, v) * spec.w(v);
    };
    // split at zero-crossing scale: panel edges graded like the node spacing
    const double a = std::max(t, -R);
    const int panels = std::max(8, 4 * n);
    std::vector<double> edges(static_cast<size_t>(panels) + 1);
    for (int j = 0; j <= panels; ++j) edges[j] = a + (R - a) * j / panels;
    double s = 0;
    for (int j = 0; j < panels; ++j)
        s += adaptive_integrate(integrand, edges[j], edges[j + 1], 1e-11 / panels);
    return s;
}

std::string coeffs_to_json(const ExpansionCoeffs& coeffs) {
    nlohmann::json j;
    j["weight"] = coeffs.weight;
    j["f"] = coeffs.f;
    j["N"] = coeffs.N;
    j["c"] = coeffs.c;
    return j.dump(2);
}

}  // namespace orthoserie
