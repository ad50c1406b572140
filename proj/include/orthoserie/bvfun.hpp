#pragma once

#include "orthoserie/weights.hpp"

#include <functional>
#include <string>
#include <vector>

namespace orthoserie {

// Piecewise-smooth function of bounded variation: finitely many jumps plus
// C^1 pieces with supplied derivatives.  |df| = jump atoms + |f'| dt.
// Evaluation is right-continuous at breakpoints.
class BVFunction {
public:
    struct Piece {
        std::function<double(double)> f;
        std::function<double(double)> df;
    };

    // pieces.size() == breaks.size() + 1; piece i lives on [breaks[i-1], breaks[i]).
    BVFunction(std::vector<double> breaks, std::vector<Piece> pieces,
               double support_radius, std::string descriptor);

    static BVFunction step(double x0, double lo, double hi);
    static BVFunction sgn();
    static BVFunction indicator(double a, double b);
    static BVFunction polynomial(std::vector<double> coeffs);  // c0 + c1 x + ...
    static BVFunction piecewise(std::vector<double> breaks, std::vector<Piece> pieces);

    double operator()(double x) const;
    double deriv(double x) const;  // derivative of the active smooth piece

    const std::vector<double>& breakpoints() const { return breaks_; }
    double jump(size_t i) const { return jumps_[i]; }  // f(b+) - f(b-)
    bool is_breakpoint(double x) const;
    double support_radius() const { return support_radius_; }
    bool has_derivative_mass() const { return has_deriv_; }
    const std::string& descriptor() const { return descriptor_; }

private:
    std::vector<double> breaks_;
    std::vector<double> jumps_;
    std::vector<Piece> pieces_;
    double support_radius_ = 0;
    bool has_deriv_ = false;
    std::string descriptor_;
};

// Descriptor grammar: sgn | step:<x0> | ind:<a>:<b> | poly:<c0,c1,...>
BVFunction parse_bv(const std::string& descriptor);

// V_delta([lo,hi], f) = sum of w^delta(b)|jump| over breakpoints inside, plus
// the integral of w^delta |f'| over the smooth parts.  Infinite endpoints are
// truncated where the weighted density falls below 1e-14.
double v_delta(const WeightSpec& spec, const BVFunction& f, double lo, double hi,
               double delta);

// V_delta over the complement |u| >= r.
double v_delta_tail(const WeightSpec& spec, const BVFunction& f, double r, double delta);

}  // namespace orthoserie
