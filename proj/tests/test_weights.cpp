#include "orthoserie/weights.hpp"

#include <doctest.h>

#include <cmath>
#include <random>

using namespace orthoserie;

TEST_SUITE_BEGIN("weights");

TEST_CASE("freud basics") {
    const WeightSpec s = WeightSpec::freud(2.0);
    const WeightEvalRecord r = s.eval(1.0);
    CHECK(r.Q == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(r.Qp == doctest::Approx(2.0).epsilon(1e-14));
    CHECK(r.T == doctest::Approx(2.0).epsilon(1e-14));
    CHECK(r.w == doctest::Approx(std::exp(-1.0)).epsilon(1e-14));
    CHECK(s.descriptor() == "freud:2");
    CHECK(s.freud_type());

    const WeightEvalRecord at0 = s.eval(0.0);
    CHECK(at0.Q == 0.0);
    CHECK(at0.w == 1.0);
}

TEST_CASE("freud rejects alpha <= 1") {
    CHECK_THROWS_AS(WeightSpec::freud(0.5), std::invalid_argument);
    CHECK_THROWS_AS(WeightSpec::freud(1.0), std::invalid_argument);
    CHECK_THROWS_AS(parse_weight("freud:0.5"), std::invalid_argument);
}

TEST_CASE("erdos basics") {
    const WeightSpec s = WeightSpec::erdos(1, 2.0);
    CHECK(s.Q(1.0) == doctest::Approx(std::exp(1.0) - 1.0).epsilon(1e-14));
    // T(1) = 2 e / (e - 1)
    CHECK(s.T(1.0) ==
          doctest::Approx(2.0 * std::exp(1.0) / (std::exp(1.0) - 1.0)).epsilon(1e-13));
    CHECK(s.T(1e-9) == doctest::Approx(2.0).epsilon(1e-6));  // limit alpha at 0
    CHECK(s.eval(0.0).T == doctest::Approx(2.0));
    CHECK_FALSE(s.freud_type());
    CHECK(s.descriptor() == "erdos:1:2");
}

TEST_CASE("erdos rejects bad parameters") {
    CHECK_THROWS_AS(WeightSpec::erdos(0, 2.0), std::invalid_argument);
    CHECK_THROWS_AS(WeightSpec::erdos(1, 1.0), std::invalid_argument);
}

TEST_CASE("record invariants: w = exp(-Q), TQ = xQ'") {
    for (const auto& s : {WeightSpec::freud(2.0), WeightSpec::freud(4.0),
                          WeightSpec::erdos(1, 2.0), WeightSpec::erdos(2, 1.5)}) {
        for (double x : {0.3, 1.0, 1.7, 2.2}) {
            const WeightEvalRecord r = s.eval(x);
            if (r.overflow) continue;
            CHECK(r.w == doctest::Approx(std::exp(-r.Q)).epsilon(1e-15));
            CHECK(r.T * r.Q == doctest::Approx(x * r.Qp).epsilon(1e-12));
        }
    }
}

TEST_CASE("evenness in Q over random points") {
    std::mt19937_64 eng(12345);
    std::uniform_real_distribution<double> dist(-3.0, 3.0);
    const WeightSpec f2 = WeightSpec::freud(2.0);
    const WeightSpec e12 = WeightSpec::erdos(1, 2.0);
    for (int i = 0; i < 100; ++i) {
        const double x = dist(eng);
        CHECK(f2.Q(x) == doctest::Approx(f2.Q(-x)).epsilon(1e-15));
        CHECK(e12.Q(x) == doctest::Approx(e12.Q(-x)).epsilon(1e-15));
    }
}

TEST_CASE("erdos chain rule matches finite differences") {
    const double h = 1e-6;
    for (const auto& s : {WeightSpec::erdos(1, 2.0), WeightSpec::erdos(2, 1.5)}) {
        for (double x = 0.1; x <= 3.0; x += 0.18) {
            const double fd = (s.Q(x + h) - s.Q(x - h)) / (2 * h);
            if (!std::isfinite(fd) || s.eval(x + h).overflow) continue;
            CHECK(s.Qp(x) == doctest::Approx(fd).epsilon(1e-5));
            const double fd2 = (s.Qp(x + h) - s.Qp(x - h)) / (2 * h);
            CHECK(s.Qpp(x) == doctest::Approx(fd2).epsilon(1e-4));
        }
    }
}

TEST_CASE("erdos T monotone on [1, inf)") {
    const WeightSpec s = WeightSpec::erdos(1, 2.0);
    double prev = s.T(1.0);
    for (double x = 1.1; x < 4.0; x += 0.1) {
        const double t = s.T(x);
        CHECK(t >= prev);
        prev = t;
    }
}

TEST_CASE("freud T is exactly alpha") {
    const WeightSpec s = WeightSpec::freud(3.5);
    for (double x : {0.2, 0.9, 4.1, 17.0}) CHECK(s.T(x) == doctest::Approx(3.5).epsilon(1e-15));
}

TEST_CASE("overflow saturates w to zero with finite Q") {
    const WeightSpec s = WeightSpec::erdos(2, 2.0);
    const WeightEvalRecord r = s.eval(10.0);  // exp(exp(100)) is far beyond range
    CHECK(r.overflow);
    CHECK(r.w == 0.0);
    CHECK(std::isfinite(r.Q));
}

TEST_CASE("validate_class verdicts") {
    std::vector<double> grid;
    for (double x = 0.1; x <= 10.0; x += 0.1) grid.push_back(x);

    const ClassReport f2 = validate_class(WeightSpec::freud(2.0), grid);
    CHECK(f2.all());
    CHECK(f2.freud_type);

    std::vector<double> grid5(grid.begin(), grid.begin() + 49);
    const ClassReport e12 = validate_class(WeightSpec::erdos(1, 2.0), grid5);
    CHECK(e12.all());
    CHECK_FALSE(e12.freud_type);  // T(5)/T(1) > 10 on this grid

    // Q = |x| has T = 1: condition (d) must fail
    const WeightSpec abs_spec = WeightSpec::custom(
        [](double x) { return std::abs(x); },
        [](double x) { return x < 0 ? -1.0 : 1.0; }, [](double) { return 0.0; }, 1.0);
    const ClassReport bad = validate_class(abs_spec, grid);
    CHECK_FALSE(bad.cond_d);
}

TEST_CASE("descriptor parser grammar") {
    CHECK(parse_weight("freud:2").descriptor() == "freud:2");
    CHECK(parse_weight("erdos:1:2").descriptor() == "erdos:1:2");
    CHECK_THROWS_AS(parse_weight("gauss:2"), std::invalid_argument);
    CHECK_THROWS_AS(parse_weight("freud"), std::invalid_argument);
    CHECK_THROWS_AS(parse_weight("erdos:1"), std::invalid_argument);
    CHECK_THROWS_AS(parse_weight("freud:abc"), std::invalid_argument);
}

TEST_SUITE_END();
