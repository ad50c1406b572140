#include "orthoserie/quadrature.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>

namespace orthoserie {

namespace {

// Newton iteration from Chebyshev-like initial guesses; standard construction.
GLRule make_gl(int n) {
    GLRule r;
    r.x.resize(n);
    r.w.resize(n);
    const int m = (n + 1) / 2;
    for (int i = 0; i < m; ++i) {
        double z = std::cos(M_PI * (i + 0.75) / (n + 0.5));
        double pp = 0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0, p1 = 0.0;
            for (int j = 0; j < n; ++j) {
                const double p2 = p1;
                p1 = p0;
                p0 = ((2.0 * j + 1.0) * z * p1 - j * p2) / (j + 1.0);
            }
            pp = n * (z * p0 - p1) / (z * z - 1.0);
            const double dz = p0 / pp;
            z -= dz;
            if (std::abs(dz) < 1e-15) break;
        }
        r.x[i] = -z;
        r.x[n - 1 - i] = z;
        r.w[i] = 2.0 / ((1.0 - z * z) * pp * pp);
        r.w[n - 1 - i] = r.w[i];
    }
    return r;
}

std::map<int, GLRule>& gl_cache() {
    static std::map<int, GLRule> cache;
    return cache;
}
std::mutex gl_mutex;

}  // namespace

const GLRule& gauss_legendre(int order) {
    if (order < 1) throw std::invalid_argument("gauss_legendre: order >= 1 required");
    std::lock_guard<std::mutex> lock(gl_mutex);
    auto& cache = gl_cache();
    auto it = cache.find(order);
    if (it == cache.end()) it = cache.emplace(order, make_gl(order)).first;
    return it->second;
}

double gl_integrate(const std::function<double(double)>& f, double a, double b, int order) {
    const GLRule& r = gauss_legendre(order);
    const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
    double s = 0;
    for (size_t i = 0; i < r.x.size(); ++i) s += r.w[i] * f(mid + half * r.x[i]);
    return s * half;
}

double composite_integrate(const std::function<double(double)>& f,
                           const std::vector<double>& edges, int order) {
    double s = 0;
    for (size_t i = 0; i + 1 < edges.size(); ++i)
        if (edges[i + 1] > edges[i]) s += gl_integrate(f, edges[i], edges[i + 1], order);
    return s;
}

namespace {

double adapt_rec(const std::function<double(double)>& f, double a, double b, double tol,
                 double whole, int order, int depth) {
    const double mid = 0.5 * (a + b);
    const double left = gl_integrate(f, a, mid, order);
    const double right = gl_integrate(f, mid, b, order);
    const double refined = left + right;
    if (depth <= 0 || std::abs(refined - whole) <= tol) return refined;
    return adapt_rec(f, a, mid, 0.5 * tol, left, order, depth - 1) +
           adapt_rec(f, mid, b, 0.5 * tol, right, order, depth - 1);
}

}  // namespace

double adaptive_integrate(const std::function<double(double)>& f, double a, double b,
                          double abs_tol, int order, int max_depth) {
    if (!(b > a)) return 0.0;
    return adapt_rec(f, a, b, abs_tol, gl_integrate(f, a, b, order), order, max_depth);
}

std::vector<double> arcsine_edges(double r, int panels) {
    std::vector<double> e(static_cast<size_t>(panels) + 1);
    for (int j = 0; j <= panels; ++j) e[j] = r * std::sin(M_PI_2 * j / panels);
    e.back() = r;
    return e;
}

}  // namespace orthoserie
