#include "orthoserie/weights.hpp"
#include "orthoserie/mrs.hpp"

#include <cmath>
#include <cstdio>
#include <limits>

namespace orthoserie {

namespace {

constexpr double kExpMax = 700.0;          // exp(709.78) overflows binary64
constexpr double kSaturatedQ = 1e300;      // finite stand-in once the tower overflows

// Evaluates the exp tower E_k(u) = exp_k(u), k = 0..ell, stopping early when
// the next exp would overflow.  Returns false on overflow.
bool exp_tower(double u, int ell, std::vector<double>& levels) {
    levels.assign(static_cast<size_t>(ell) + 1, 0.0);
    levels[0] = u;
    for (int k = 1; k <= ell; ++k) {
        if (levels[k - 1] > kExpMax) return false;
        levels[k] = std::exp(levels[k - 1]);
    }
    return true;
}

double exp_tower_at_zero(int ell) {
    double v = 0.0;
    for (int k = 0; k < ell; ++k) v = std::exp(v);
    return v;
}

}  // namespace

WeightSpec WeightSpec::freud(double alpha) {
    if (!(alpha > 1.0))
        throw std::invalid_argument("freud weight: class condition T >= Lambda > 1 violated (alpha <= 1)");
    WeightSpec s;
    s.family_ = Family::freud;
    s.alpha_ = alpha;
    s.lambda_lower_ = alpha;
    s.freud_type_ = true;
    char buf[64];
    std::snprintf(buf, sizeof buf, "freud:%g", alpha);
    s.descriptor_ = buf;
    s.memo_ = std::make_shared<MrsMemo>();
    return s;
}

WeightSpec WeightSpec::erdos(int ell, double alpha) {
    if (ell < 1) throw std::invalid_argument("erdos weight: ell must be >= 1");
    if (!(alpha > 1.0))
        throw std::invalid_argument("erdos weight: class condition T >= Lambda > 1 violated (alpha <= 1)");
    WeightSpec s;
    s.family_ = Family::erdos;
    s.alpha_ = alpha;
    s.ell_ = ell;
    s.lambda_lower_ = alpha;
    s.freud_type_ = false;
    char buf[64];
    std::snprintf(buf, sizeof buf, "erdos:%d:%g", ell, alpha);
    s.descriptor_ = buf;
    s.memo_ = std::make_shared<MrsMemo>();
    return s;
}

WeightSpec WeightSpec::custom(std::function<double(double)> Q,
                              std::function<double(double)> Qp,
                              std::function<double(double)> Qpp,
                              double lambda_lower,
                              std::string name) {
    if (!Q || !Qp || !Qpp) throw std::invalid_argument("custom weight: Q, Q', Q'' all required");
    WeightSpec s;
    s.family_ = Family::custom;
    s.lambda_lower_ = lambda_lower;
    s.descriptor_ = std::move(name);
    s.q_ = std::move(Q);
    s.qp_ = std::move(Qp);
    s.qpp_ = std::move(Qpp);
    s.memo_ = std::make_shared<MrsMemo>();
    return s;
}

WeightEvalRecord WeightSpec::eval(double x) const {
    WeightEvalRecord r;
    const double ax = std::abs(x);
    const double sgn = (x > 0) - (x < 0);

    switch (family_) {
        case Family::freud: {
            const double a = alpha_;
            r.Q = std::pow(ax, a);
            r.Qp = (ax == 0) ? 0.0 : a * sgn * std::pow(ax, a - 1);
            r.Qpp = (ax == 0) ? 0.0 : a * (a - 1) * std::pow(ax, a - 2);
            r.T = a;  // xQ'/Q = alpha identically; limit used at x = 0
            break;
        }
        case Family::erdos: {
            const double a = alpha_;
            const double u = std::pow(ax, a);
            static thread_local std::vector<double> lv;
            if (!exp_tower(u, ell_, lv)) {
                r.Q = kSaturatedQ;
                r.Qp = sgn * kSaturatedQ;
                r.Qpp = kSaturatedQ;
                r.T = std::numeric_limits<double>::max();
                r.w = 0.0;
                r.overflow = true;
                return r;
            }
            const double e0 = exp_tower_at_zero(ell_);
            // P_l(u) = d/du exp_l(u) = prod_{k=1..l} E_k(u);
            // P_l'(u) = P_l(u) * sum_{k=0..l-1} P_k(u).
            double P = 1.0, sumP = 0.0, Pk = 1.0;
            for (int k = 1; k <= ell_; ++k) {
                sumP += Pk;       // P_{k-1}
                P *= lv[k];
                Pk = P;
                if (!std::isfinite(P)) break;
            }
            const double Pprime = P * sumP;
            r.Q = lv[ell_] - e0;
            if (ax == 0) {
                r.Qp = 0.0;
                r.Qpp = 0.0;  // alpha > 1 makes both derivative terms vanish at 0
            } else {
                r.Qp = a * sgn * std::pow(ax, a - 1) * P;
                r.Qpp = a * (a - 1) * std::pow(ax, a - 2) * P +
                        a * a * std::pow(ax, 2 * a - 2) * Pprime;
            }
            // T = alpha * u * P_l(u) / (E_l(u) - E_l(0)); limit alpha at u = 0.
            r.T = (u < 1e-300 || r.Q <= 0) ? a : a * u * P / r.Q;
            if (!std::isfinite(r.Q) || !std::isfinite(r.Qp)) {
                r.Q = kSaturatedQ;
                r.Qp = sgn * kSaturatedQ;
                r.Qpp = kSaturatedQ;
                r.T = std::numeric_limits<double>::max();
                r.w = 0.0;
                r.overflow = true;
                return r;
            }
            break;
        }
        case Family::custom: {
            r.Q = q_(x);
            r.Qp = qp_(x);
            r.Qpp = qpp_(x);
            r.T = (x == 0 || r.Q == 0) ? std::numeric_limits<double>::quiet_NaN()
                                       : x * r.Qp / r.Q;
            break;
        }
    }
    r.w = (r.Q > kExpMax * 1.06) ? 0.0 : std::exp(-r.Q);
    return r;
}

double WeightSpec::w_delta(double x, double delta) const {
    const WeightEvalRecord r = eval(x);
    if (r.overflow) return 0.0;
    const double e = delta * r.Q;
    return (e > kExpMax * 1.06) ? 0.0 : std::exp(-e);
}

WeightSpec parse_weight(const std::string& descriptor) {
    const auto bad = [&]() -> std::invalid_argument {
        return std::invalid_argument("bad weight descriptor '" + descriptor +
                                     "': expected freud:<alpha> or erdos:<ell>:<alpha>");
    };
    const auto colon = descriptor.find(':');
    if (colon == std::string::npos) throw bad();
    const std::string kind = descriptor.substr(0, colon);
    const std::string rest = descriptor.substr(colon + 1);
    try {
        if (kind == "freud") {
            size_t used = 0;
            const double alpha = std::stod(rest, &used);
            if (used != rest.size()) throw bad();
            return WeightSpec::freud(alpha);
        }
        if (kind == "erdos") {
            const auto colon2 = rest.find(':');
            if (colon2 == std::string::npos) throw bad();
            size_t used = 0;
            const std::string ell_s = rest.substr(0, colon2);
            const std::string alpha_s = rest.substr(colon2 + 1);
            const int ell = std::stoi(ell_s, &used);
            if (used != ell_s.size()) throw bad();
            const double alpha = std::stod(alpha_s, &used);
            if (used != alpha_s.size()) throw bad();
            return WeightSpec::erdos(ell, alpha);
        }
    } catch (const std::invalid_argument&) {
        throw;
    } catch (const std::exception&) {
        throw bad();
    }
    throw bad();
}

ClassReport validate_class(const WeightSpec& spec, const std::vector<double>& grid) {
    if (grid.empty()) throw std::invalid_argument("validate_class: empty grid");
    for (size_t i = 0; i < grid.size(); ++i) {
        if (grid[i] <= 0 || (i && grid[i] <= grid[i - 1]))
            throw std::invalid_argument("validate_class: grid must be positive strictly increasing");
    }
    ClassReport rep;
    const WeightEvalRecord at0 = spec.eval(0.0);
    rep.cond_a = (at0.Q == 0.0);
    rep.cond_b = true;
    rep.cond_d = true;
    rep.cond_e = true;
    double t_min = std::numeric_limits<double>::infinity();
    double t_max = 0.0;
    double t_prev = 0.0;
    double q_last = 0.0;
    for (size_t i = 0; i < grid.size(); ++i) {
        const WeightEvalRecord r = spec.eval(grid[i]);
        if (r.overflow) break;
        if (!(r.Qpp > 0)) rep.cond_b = false;
        const double T = r.T;
        if (!(T >= spec.lambda_lower()) || !(spec.lambda_lower() > 1) || !(T > 1))
            rep.cond_d = false;
        // quasi-increasing, checked with a 10% sampling slack
        if (i && T < 0.9 * t_prev) rep.cond_d = false;
        t_prev = T;
        t_min = std::min(t_min, T);
        t_max = std::max(t_max, T);
        if (r.Qp != 0 && r.Q > 0)
            rep.sup_e_ratio = std::max(rep.sup_e_ratio, r.Qpp * r.Q / (r.Qp * r.Qp));
        q_last = r.Q;
    }
    rep.cond_c = q_last > spec.eval(grid.front()).Q && q_last > 1.0;
    rep.cond_e = std::isfinite(rep.sup_e_ratio) && rep.sup_e_ratio > 0;
    rep.t_growth = (t_min > 0) ? t_max / t_min : std::numeric_limits<double>::infinity();
    // bounded vs unbounded T, judged by growth across the grid
    rep.freud_type = rep.t_growth < 10.0;
    return rep;
}

}  // namespace orthoserie
