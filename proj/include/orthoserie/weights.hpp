#pragma once

#include <functional>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace orthoserie {

// Evaluation of Q and derivatives at a point.  `overflow` marks points where
// the exp tower left the representable range; Q is then saturated to a large
// finite value and w to exactly 0.
struct WeightEvalRecord {
    double Q = 0;
    double Qp = 0;   // Q'(x), odd in x
    double Qpp = 0;  // Q''(x)
    double T = 0;    // xQ'(x)/Q(x), analytic limit at x = 0
    double w = 1;    // exp(-Q)
    bool overflow = false;
};

struct ClassReport {
    bool cond_a = false;  // Q(0) = 0, Q' continuous (spot checks)
    bool cond_b = false;  // Q'' > 0 off the origin
    bool cond_c = false;  // Q -> infinity
    bool cond_d = false;  // T quasi-increasing, T >= Lambda > 1
    bool cond_e = false;  // Q''/Q' <= C1 Q'/Q, reported via the observed ratio
    bool freud_type = false;
    double sup_e_ratio = 0;   // sup over grid of Q''Q/Q'^2
    double t_growth = 0;      // T(max)/T(min) on the grid, classification basis
    bool all() const { return cond_a && cond_b && cond_c && cond_d && cond_e; }
};

class MrsMemo;  // defined in mrs.hpp

// An exponential weight w = exp(-Q) on the real line.  Freud family
// Q = |x|^alpha, Erdos family Q = exp_ell(|x|^alpha) - exp_ell(0); derivatives
// of the tower are chain-rule exact, never finite differences.
class WeightSpec {
public:
    enum class Family { freud, erdos, custom };

    static WeightSpec freud(double alpha);
    static WeightSpec erdos(int ell, double alpha);
    static WeightSpec custom(std::function<double(double)> Q,
                             std::function<double(double)> Qp,
                             std::function<double(double)> Qpp,
                             double lambda_lower,
                             std::string name = "custom");

    WeightEvalRecord eval(double x) const;

    double Q(double x) const { return eval(x).Q; }
    double Qp(double x) const { return eval(x).Qp; }
    double Qpp(double x) const { return eval(x).Qpp; }
    double T(double x) const { return eval(x).T; }
    double w(double x) const { return eval(x).w; }
    double w2(double x) const { double v = eval(x).w; return v * v; }
    double w_delta(double x, double delta) const;  // w^delta, underflow-safe

    Family family() const { return family_; }
    double alpha() const { return alpha_; }
    int ell() const { return ell_; }
    double lambda_lower() const { return lambda_lower_; }
    bool freud_type() const { return freud_type_; }
    const std::string& descriptor() const { return descriptor_; }

    MrsMemo& memo() const { return *memo_; }

private:
    WeightSpec() = default;

    Family family_ = Family::custom;
    double alpha_ = 0;
    int ell_ = 0;
    double lambda_lower_ = 0;
    bool freud_type_ = true;
    std::string descriptor_;
    std::function<double(double)> q_, qp_, qpp_;
    std::shared_ptr<MrsMemo> memo_;
};

// Descriptor grammar: freud:<alpha> | erdos:<ell>:<alpha>
WeightSpec parse_weight(const std::string& descriptor);

ClassReport validate_class(const WeightSpec& spec, const std::vector<double>& grid);

}  // namespace orthoserie
