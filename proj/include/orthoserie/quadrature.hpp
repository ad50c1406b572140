#pragma once

#include <functional>
#include <vector>

namespace orthoserie {

struct GLRule {
    std::vector<double> x;  // nodes on [-1, 1], ascending
    std::vector<double> w;
};

// Gauss-Legendre rule of given order, computed once (Newton on P_n) and cached.
const GLRule& gauss_legendre(int order);

// Integral over [a, b] with a fixed-order rule.
double gl_integrate(const std::function<double(double)>& f, double a, double b, int order);

// Composite rule over consecutive panel edges.
double composite_integrate(const std::function<double(double)>& f,
                           const std::vector<double>& edges, int order);

// Globally adaptive bisection: accepts a panel when GL(order) and the two-half
// refinement agree to abs_tol (scaled by panel share).  The integrand must be
// smooth inside (a, b); callers split at breakpoints beforehand.
double adaptive_integrate(const std::function<double(double)>& f, double a, double b,
                          double abs_tol, int order = 24, int max_depth = 48);

// Arcsine-graded edges on [0, r]: x_j = r sin(pi j / 2P).  Spacing tracks the
// equilibrium density edge factor sqrt(1 - x/r), which is how panels are sized
// proportionally to the local scale 1/phi.
std::vector<double> arcsine_edges(double r, int panels);

}  // namespace orthoserie
