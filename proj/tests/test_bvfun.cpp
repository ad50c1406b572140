#include "orthoserie/bvfun.hpp"

#include <doctest.h>

#include <cmath>
#include <limits>
#include <stdexcept>

using namespace orthoserie;

TEST_SUITE_BEGIN("bvfun");

TEST_CASE("sgn factory") {
    const BVFunction f = BVFunction::sgn();
    CHECK(f(-2.0) == -1.0);
    CHECK(f(0.0) == 1.0);  // right-continuous at the jump
    CHECK(f(3.0) == 1.0);
    REQUIRE(f.breakpoints().size() == 1);
    CHECK(f.breakpoints()[0] == 0.0);
    CHECK(f.jump(0) == 2.0);
    CHECK(f.is_breakpoint(0.0));
    CHECK_FALSE(f.is_breakpoint(0.5));
    CHECK_FALSE(f.has_derivative_mass());
    CHECK(f.descriptor() == "sgn");
}

TEST_CASE("step and indicator factories") {
    const BVFunction s = BVFunction::step(1.0, 0.0, 3.0);
    CHECK(s(0.999) == 0.0);
    CHECK(s(1.0) == 3.0);
    CHECK(s.jump(0) == 3.0);

    const BVFunction ind = BVFunction::indicator(0.5, 1.5);
    CHECK(ind(0.4) == 0.0);
    CHECK(ind(0.5) == 1.0);  // closed on the left
    CHECK(ind(1.0) == 1.0);
    CHECK(ind(1.5) == 0.0);  // open on the right
    REQUIRE(ind.breakpoints().size() == 2);
    CHECK(ind.jump(0) == 1.0);
    CHECK(ind.jump(1) == -1.0);
}

TEST_CASE("polynomial factory uses horner and exposes the derivative") {
    const BVFunction p = BVFunction::polynomial({1.0, -2.0, 0.5});
    CHECK(p(0.0) == 1.0);
    CHECK(p(2.0) == doctest::Approx(1.0 - 4.0 + 2.0));
    CHECK(p.deriv(2.0) == doctest::Approx(-2.0 + 2.0 * 0.5 * 2.0));
    CHECK(p.breakpoints().empty());
    CHECK(p.has_derivative_mass());
}

TEST_CASE("descriptor grammar round trips") {
    CHECK(parse_bv("sgn")(1.0) == 1.0);
    CHECK(parse_bv("step:1.5")(1.5) == 1.0);
    CHECK(parse_bv("step:1.5")(1.4) == 0.0);
    CHECK(parse_bv("ind:0.5:1.5")(1.0) == 1.0);
    const BVFunction p = parse_bv("poly:1,0,2");
    CHECK(p(3.0) == doctest::Approx(19.0));
    CHECK(p.descriptor() == "poly:1,0,2");
    CHECK_THROWS_AS(parse_bv("nope"), std::invalid_argument);
    CHECK_THROWS_AS(parse_bv("step:"), std::invalid_argument);
    CHECK_THROWS_AS(parse_bv("ind:2:1"), std::invalid_argument);
}

TEST_CASE("v_delta of sgn over the whole line is exactly the weighted atom") {
    // Single jump of size 2 at 0 where w = 1: V_delta = 2 for every weight.
    const double inf = std::numeric_limits<double>::infinity();
    for (double d : {0.25, 0.5, 1.0}) {
        CHECK(v_delta(WeightSpec::freud(2.0), BVFunction::sgn(), -inf, inf, d) ==
              doctest::Approx(2.0).epsilon(1e-14));
        CHECK(v_delta(WeightSpec::erdos(1, 2.0), BVFunction::sgn(), -inf, inf, d) ==
              doctest::Approx(2.0).epsilon(1e-14));
    }
}

TEST_CASE("v_delta of a shifted step picks up w^delta at the jump") {
    // step at 1, jump 1: V_delta = w(1)^delta = exp(-delta).
    const WeightSpec f2 = WeightSpec::freud(2.0);
    const BVFunction s = BVFunction::step(1.0, 0.0, 1.0);
    const double inf = std::numeric_limits<double>::infinity();
    CHECK(v_delta(f2, s, -inf, inf, 0.5) == doctest::Approx(std::exp(-0.5)).epsilon(1e-13));
    CHECK(v_delta(f2, s, -inf, inf, 0.5) == doctest::Approx(0.6065306597126334).epsilon(1e-13));
    // window excluding the jump sees no variation
    CHECK(v_delta(f2, s, -inf, 0.5, 0.5) == 0.0);
    CHECK(v_delta(f2, s, 1.5, inf, 0.5) == 0.0);
}

TEST_CASE("v_delta of the identity matches the gaussian integral") {
    // f = x: V_delta([-inf,inf]) = int w^delta dx = sqrt(pi / (delta alpha)) for Q = x^2.
    const WeightSpec f2 = WeightSpec::freud(2.0);
    const BVFunction lin = BVFunction::polynomial({0.0, 1.0});
    const double inf = std::numeric_limits<double>::infinity();
    const double got = v_delta(f2, lin, -inf, inf, 0.5);
    CHECK(got == doctest::Approx(std::sqrt(M_PI / 0.5)).epsilon(1e-11));
}

TEST_CASE("v_delta is additive over adjacent windows and monotone in the window") {
    const WeightSpec e12 = WeightSpec::erdos(1, 2.0);
    const BVFunction p = BVFunction::polynomial({0.0, 0.0, 1.0});
    const double whole = v_delta(e12, p, -2.0, 2.0, 0.5);
    const double left = v_delta(e12, p, -2.0, 0.3, 0.5);
    const double right = v_delta(e12, p, 0.3, 2.0, 0.5);
    CHECK(whole == doctest::Approx(left + right).epsilon(1e-11));
    CHECK(whole >= left);
    CHECK(v_delta(e12, p, -1.0, 1.0, 0.5) <= whole);
}

TEST_CASE("v_delta_tail complements the central window") {
    const WeightSpec f2 = WeightSpec::freud(2.0);
    const BVFunction lin = BVFunction::polynomial({0.0, 1.0});
    const double inf = std::numeric_limits<double>::infinity();
    const double whole = v_delta(f2, lin, -inf, inf, 0.5);
    const double inner = v_delta(f2, lin, -1.2, 1.2, 0.5);
    const double tail = v_delta_tail(f2, lin, 1.2, 0.5);
    CHECK(whole == doctest::Approx(inner + tail).epsilon(1e-11));
}

TEST_CASE("v_delta argument guards") {
    const WeightSpec f2 = WeightSpec::freud(2.0);
    const BVFunction f = BVFunction::sgn();
    CHECK_THROWS_AS(v_delta(f2, f, -1.0, 1.0, 0.0), std::domain_error);
    CHECK_THROWS_AS(v_delta(f2, f, -1.0, 1.0, 1.5), std::domain_error);
    CHECK_THROWS_AS(v_delta(f2, f, 1.0, -1.0, 0.5), std::invalid_argument);
}

TEST_CASE("piecewise factory derives jumps from the pieces") {
    std::vector<BVFunction::Piece> pieces(2);
    pieces[0] = {[](double) { return 1.0; }, [](double) { return 0.0; }};
    pieces[1] = {[](double x) { return x * x; }, [](double x) { return 2.0 * x; }};
    const BVFunction f = BVFunction::piecewise({1.0}, std::move(pieces));
    CHECK(f(0.5) == 1.0);
    CHECK(f(1.0) == 1.0);   // x^2 at 1
    CHECK(f(2.0) == 4.0);
    CHECK(f.jump(0) == doctest::Approx(0.0));  // continuous: 1 -> 1
    CHECK(f.deriv(2.0) == 4.0);
}

TEST_CASE("local increments are controlled by the weighted variation") {
    // w^delta(x+t) |f(x+t) - f(x)| <= exp(c_hat x Q'(x)) V_delta([x+t, x], f)
    // on grids with x t < 0, |t| < 2|x|.  The smallest constant c_hat that
    // makes the bound hold over the whole test family is fitted and must stay
    // finite and small.
    const double delta = 0.5;

    std::vector<BVFunction::Piece> pieces(2);
    pieces[0] = {[](double u) { return u * u; }, [](double u) { return 2.0 * u; }};
    pieces[1] = {[](double u) { return u * u + 1.0; }, [](double u) { return 2.0 * u; }};
    const BVFunction smooth_jump = BVFunction::piecewise({0.0}, std::move(pieces));

    const std::vector<BVFunction> family = {BVFunction::sgn(),
                                            BVFunction::indicator(-0.25, 0.75),
                                            smooth_jump};
    for (const auto& wname : {std::string("freud:2"), std::string("erdos:1:2")}) {
        const WeightSpec spec = parse_weight(wname);
        double c_hat = 0;
        for (const BVFunction& f : family) {
            for (double x : {0.5, 1.0}) {
                const double fx = f(x);
                const double xqp = x * spec.Qp(x);
                for (int j = 1; j <= 48; ++j) {
                    const double t = -2.0 * x * j / 49.0;  // x t < 0, |t| < 2|x|
                    const double num =
                        spec.w_delta(x + t, delta) * std::abs(f(x + t) - fx);
                    if (num == 0.0) continue;
                    const double var = v_delta(spec, f, x + t, x, delta);
                    REQUIRE(var > 0.0);
                    const double ratio = num / var;
                    if (ratio > 1.0) c_hat = std::max(c_hat, std::log(ratio) / xqp);
                }
            }
        }
        const std::string note = "weight " + wname + " fitted c_hat = " + std::to_string(c_hat);
        INFO(note);
        CHECK(std::isfinite(c_hat));
        CHECK(c_hat < 1.0);
        // the fitted constant closes the bound across the whole family
        const double env_guard = 1.0 + 1e-12;
        for (const BVFunction& f : family) {
            for (double x : {0.5, 1.0}) {
                const double fx = f(x);
                const double env = std::exp(c_hat * x * spec.Qp(x)) * env_guard;
                for (int j = 1; j <= 48; ++j) {
                    const double t = -2.0 * x * j / 49.0;
                    const double num =
                        spec.w_delta(x + t, delta) * std::abs(f(x + t) - fx);
                    if (num == 0.0) continue;
                    CHECK(num <= env * v_delta(spec, f, x + t, x, delta));
                }
            }
        }
    }
}

TEST_SUITE_END();
