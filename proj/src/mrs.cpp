#include "orthoserie/mrs.hpp"
#include "orthoserie/quadrature.hpp"

#include <cmath>
#include <stdexcept>

namespace orthoserie {

double mrs_equation_lhs(const WeightSpec& spec, double a) {
    const auto integrand = [&](double th) {
        const double s = a * std::sin(th);
        return s * spec.Qp(s);
    };
    double prev = 0;
    for (int order = 64; order <= 1024; order *= 2) {
        const double val = (2.0 / M_PI) * gl_integrate(integrand, 0.0, M_PI_2, order);
        if (order > 64 && std::abs(val - prev) <= 1e-13 * std::abs(val)) return val;
        prev = val;
    }
    return prev;
}

MrsValue mrs_number(const WeightSpec& spec, double t) {
    if (!(t > 0)) throw std::domain_error("mrs_number: t > 0 required");
    MrsValue out;
    out.t = t;
    double memoized = 0;
    if (spec.memo().lookup(t, memoized)) {
        out.a_t = memoized;
        out.T_at = spec.T(memoized);
        return out;
    }

    // Bracket by doubling/halving from a = 1; F is strictly increasing.
    double lo = 1.0, hi = 1.0;
    double flo = mrs_equation_lhs(spec, 1.0);
    double fhi = flo;
    int guard = 0;
    if (flo < t) {
        while (fhi < t) {
            lo = hi;
            flo = fhi;
            hi *= 2.0;
            fhi = mrs_equation_lhs(spec, hi);
            if (++guard > 200) throw std::runtime_error("mrs_number: bracketing failed");
        }
    } else {
        while (flo > t) {
            hi = lo;
            fhi = flo;
            lo *= 0.5;
            flo = mrs_equation_lhs(spec, lo);
            if (++guard > 200) throw std::runtime_error("mrs_number: bracketing failed");
        }
    }

    // Bisection to a modest width, then secant steps inside the bracket.
    while (hi - lo > 1e-6 * hi) {
        const double mid = 0.5 * (lo + hi);
        const double fm = mrs_equation_lhs(spec, mid);
        if (fm < t) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
            fhi = fm;
        }
    }
    for (int it = 0; it < 60 && hi - lo > 1e-12 * hi; ++it) {
        double cand = (fhi != flo) ? lo + (t - flo) * (hi - lo) / (fhi - flo)
                                   : 0.5 * (lo + hi);
        if (!(cand > lo) || !(cand < hi)) cand = 0.5 * (lo + hi);
        const double fc = mrs_equation_lhs(spec, cand);
        if (fc < t) {
            lo = cand;
            flo = fc;
        } else {
            hi = cand;
            fhi = fc;
        }
    }
    out.a_t = 0.5 * (lo + hi);
    out.T_at = spec.T(out.a_t);
    spec.memo().insert(t, out.a_t);
    return out;
}

double mrs_a(const WeightSpec& spec, double t) { return mrs_number(spec, t).a_t; }

ScaleFactors scale_factors(const WeightSpec& spec, double u, double x) {
    if (!(u > 0)) throw std::domain_error("scale_factors: u > 0 required");
    ScaleFactors s;
    s.u = u;
    const double a_u = mrs_a(spec, u);
    const double a_2u = mrs_a(spec, 2.0 * u);
    s.delta_u = std::pow(u * spec.T(a_u), -2.0 / 3.0);
    const double ax = std::min(std::abs(x), a_u);  // plateau branch beyond a_u
    s.phi_at_x = (a_u / u) * (1.0 - ax / a_2u) / std::sqrt(1.0 - ax / a_u + s.delta_u);
    return s;
}

}  // namespace orthoserie
