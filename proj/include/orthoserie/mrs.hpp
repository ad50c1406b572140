#pragma once

#include "orthoserie/weights.hpp"

#include <map>
#include <mutex>

namespace orthoserie {

struct MrsValue {
    double t = 0;
    double a_t = 0;
    double T_at = 0;  // T evaluated at a_t
};

struct ScaleFactors {
    double u = 0;
    double delta_u = 0;   // (u T(a_u))^{-2/3}
    double phi_at_x = 0;  // phi_u(x), plateau value for |x| > a_u
};

// Memoized a_t values per weight; concurrent reads, insert-once writes.
class MrsMemo {
public:
    bool lookup(double t, double& a) const {
        std::lock_guard<std::mutex> lock(mu_);
        auto it = map_.find(t);
        if (it == map_.end()) return false;
        a = it->second;
        return true;
    }
    void insert(double t, double a) {
        std::lock_guard<std::mutex> lock(mu_);
        map_.emplace(t, a);  // first writer wins; values agree to tolerance
    }
    std::map<double, double> snapshot() const {
        std::lock_guard<std::mutex> lock(mu_);
        return map_;
    }

private:
    mutable std::mutex mu_;
    std::map<double, double> map_;
};

// F(a) = (2/pi) * int_0^1 a u Q'(a u) (1-u^2)^{-1/2} du, evaluated after
// u = sin(theta); strictly increasing in a.
double mrs_equation_lhs(const WeightSpec& spec, double a);

// Solves F(a_t) = t by bracketing + bisection with secant refinement,
// relative tolerance 1e-12; memoized on the spec.
MrsValue mrs_number(const WeightSpec& spec, double t);

// Shorthand for mrs_number(spec, t).a_t.
double mrs_a(const WeightSpec& spec, double t);

// delta_u and the spacing function phi_u evaluated at x (plateau beyond a_u).
ScaleFactors scale_factors(const WeightSpec& spec, double u, double x);

}  // namespace orthoserie
