#include "orthoserie/bvfun.hpp"
#include "orthoserie/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace orthoserie {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();

BVFunction::Piece constant(double v) {
    return {[v](double) { return v; }, [](double) { return 0.0; }};
}
}  // namespace

BVFunction::BVFunction(std::vector<double> breaks, std::vector<Piece> pieces,
                       double support_radius, std::string descriptor)
    : breaks_(std::move(breaks)),
      pieces_(std::move(pieces)),
      support_radius_(support_radius),
      descriptor_(std::move(descriptor)) {
    if (pieces_.size() != breaks_.size() + 1)
        throw std::invalid_argument("BVFunction: need breaks.size()+1 pieces");
    for (size_t i = 1; i < breaks_.size(); ++i)
        if (!(breaks_[i] > breaks_[i - 1]))
            throw std::invalid_argument("BVFunction: breakpoints must be strictly increasing");
    jumps_.resize(breaks_.size());
    for (size_t i = 0; i < breaks_.size(); ++i)
        jumps_[i] = pieces_[i + 1].f(breaks_[i]) - pieces_[i].f(breaks_[i]);
    has_deriv_ = false;
    for (const auto& p : pieces_) {
        // cheap probe: treat a piece as flat only if df is identically the zero lambda
        if (p.df(0.0) != 0.0 || p.df(0.5) != 0.0 || p.df(-1.25) != 0.0) {
            has_deriv_ = true;
            break;
        }
    }
}

double BVFunction::operator()(double x) const {
    const auto it = std::upper_bound(breaks_.begin(), breaks_.end(), x);
    const size_t i = static_cast<size_t>(it - breaks_.begin());
    // x < breaks_[i] and x >= breaks_[i-1]: piece i, which is right-continuous
    // at its left endpoint
    return pieces_[i].f(x);
}

double BVFunction::deriv(double x) const {
    const auto it = std::upper_bound(breaks_.begin(), breaks_.end(), x);
    return pieces_[static_cast<size_t>(it - breaks_.begin())].df(x);
}

bool BVFunction::is_breakpoint(double x) const {
    return std::binary_search(breaks_.begin(), breaks_.end(), x);
}

BVFunction BVFunction::step(double x0, double lo, double hi) {
    std::ostringstream d;
    d << "step:" << x0;
    return BVFunction({x0}, {constant(lo), constant(hi)}, std::abs(x0), d.str());
}

BVFunction BVFunction::sgn() {
    return BVFunction({0.0}, {constant(-1.0), constant(1.0)}, 0.0, "sgn");
}

BVFunction BVFunction::indicator(double a, double b) {
    if (!(a < b)) throw std::invalid_argument("indicator: a < b required");
    std::ostringstream d;
    d << "ind:" << a << ":" << b;
    return BVFunction({a, b}, {constant(0.0), constant(1.0), constant(0.0)},
                      std::max(std::abs(a), std::abs(b)), d.str());
}

BVFunction BVFunction::polynomial(std::vector<double> coeffs) {
    if (coeffs.empty()) coeffs.push_back(0.0);
    std::vector<double> dcoeffs;
    for (size_t i = 1; i < coeffs.size(); ++i) dcoeffs.push_back(coeffs[i] * static_cast<double>(i));
    const auto horner = [](const std::vector<double>& c, double x) {
        double v = 0;
        for (size_t i = c.size(); i >= 1; --i) v = v * x + c[i - 1];
        return v;
    };
    std::ostringstream d;
    d << "poly:";
    for (size_t i = 0; i < coeffs.size(); ++i) d << (i ? "," : "") << coeffs[i];
    Piece p{[coeffs, horner](double x) { return horner(coeffs, x); },
            [dcoeffs, horner](double x) { return dcoeffs.empty() ? 0.0 : horner(dcoeffs, x); }};
    return BVFunction({}, {std::move(p)}, kInf, d.str());
}

BVFunction BVFunction::piecewise(std::vector<double> breaks, std::vector<Piece> pieces) {
    double r = 0;
    for (double b : breaks) r = std::max(r, std::abs(b));
    return BVFunction(std::move(breaks), std::move(pieces), kInf, "piecewise");
}

BVFunction parse_bv(const std::string& descriptor) {
    const auto bad = [&]() -> std::invalid_argument {
        return std::invalid_argument("bad f descriptor '" + descriptor +
                                     "': expected sgn | step:<x0> | ind:<a>:<b> | poly:<c0,c1,...>");
    };
    if (descriptor == "sgn") return BVFunction::sgn();
    const auto colon = descriptor.find(':');
    if (colon == std::string::npos) throw bad();
    const std::string kind = descriptor.substr(0, colon);
    const std::string rest = descriptor.substr(colon + 1);
    try {
        if (kind == "step") return BVFunction::step(std::stod(rest), 0.0, 1.0);
        if (kind == "ind") {
            const auto c2 = rest.find(':');
            if (c2 == std::string::npos) throw bad();
            return BVFunction::indicator(std::stod(rest.substr(0, c2)), std::stod(rest.substr(c2 + 1)));
        }
        if (kind == "poly") {
            std::vector<double> coeffs;
            std::stringstream ss(rest);
            std::string tok;
            while (std::getline(ss, tok, ',')) coeffs.push_back(std::stod(tok));
            if (coeffs.empty()) throw bad();
            return BVFunction::polynomial(std::move(coeffs));
        }
    } catch (const std::invalid_argument&) {
        throw bad();
    }
    throw bad();
}

namespace {

// Truncation radius for int w^delta |f'|: march outward until the density is
// below 1e-14 (and keep going a little, the pieces are polynomially bounded).
double truncation_radius(const WeightSpec& spec, const BVFunction& f, double delta,
                         double from) {
    double r = std::max({1.0, std::abs(from), f.breakpoints().empty() ? 0.0
                                              : std::abs(f.breakpoints().back())});
    for (int i = 0; i < 64; ++i) {
        const double dens = spec.w_delta(r, delta) * std::abs(f.deriv(r));
        if (dens < 1e-14 && spec.w_delta(r, delta) < 1e-14) return r;
        r *= 1.5;
    }
    return r;
}

}  // namespace

double v_delta(const WeightSpec& spec, const BVFunction& f, double lo, double hi,
               double delta) {
    if (!(delta > 0.0) || !(delta <= 1.0))
        throw std::domain_error("v_delta: delta in (0,1] required");
    if (!(lo <= hi)) throw std::invalid_argument("v_delta: lo <= hi required");

    double total = 0;
    for (size_t i = 0; i < f.breakpoints().size(); ++i) {
        const double b = f.breakpoints()[i];
        if (b >= lo && b <= hi) total += spec.w_delta(b, delta) * std::abs(f.jump(i));
    }
    if (!f.has_derivative_mass()) return total;

    double a = std::isinf(lo) ? -truncation_radius(spec, f, delta, hi == kInf ? 0 : hi) : lo;
    double b = std::isinf(hi) ? truncation_radius(spec, f, delta, lo == -kInf ? 0 : lo) : hi;
    if (!(b > a)) return total;

    // split at breakpoints and at 0 (kink of w^delta), adapt inside each part
    std::vector<double> edges{a};
    for (double bp : f.breakpoints())
        if (bp > a && bp < b) edges.push_back(bp);
    if (0.0 > a && 0.0 < b) edges.push_back(0.0);
    edges.push_back(b);
    std::sort(edges.begin(), edges.end());

    const auto dens = [&](double t) { return spec.w_delta(t, delta) * std::abs(f.deriv(t)); };
    for (size_t i = 0; i + 1 < edges.size(); ++i)
        total += adaptive_integrate(dens, edges[i], edges[i + 1], 1e-12);
    return total;
}

double v_delta_tail(const WeightSpec& spec, const BVFunction& f, double r, double delta) {
    return v_delta(spec, f, -kInf, -r, delta) + v_delta(spec, f, r, kInf, delta);
}

}  // namespace orthoserie
