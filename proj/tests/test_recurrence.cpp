#include "orthoserie/recurrence.hpp"

#include <doctest.h>

#include <cmath>
#include <stdexcept>

using namespace orthoserie;

TEST_SUITE_BEGIN("recurrence");

TEST_CASE("freud(2) reproduces the hermite-type coefficients") {
    // w^2 = exp(-2x^2): mu0 = sqrt(pi/2), A = 0, B[k] = sqrt(k)/2.
    const WeightSpec f2 = WeightSpec::freud(2.0);
    const RecurrenceTable t = recurrence_table(f2, 32);
    CHECK(t.mu0() == doctest::Approx(std::sqrt(M_PI / 2.0)).epsilon(1e-13));
    for (int k = 1; k <= 32; ++k)
        CHECK(t.B(k) == doctest::Approx(std::sqrt(double(k)) / 2.0).epsilon(1e-12));
    for (int k = 0; k < 32; ++k) CHECK(std::abs(t.A(k)) < 1e-13);
    CHECK(t.B(0) == 0.0);
}

TEST_CASE("meta carries a certified discretization") {
    const RecurrenceTable t = recurrence_table(WeightSpec::erdos(1, 2.0), 24);
    CHECK(t.meta().doubling_rel_change < 1e-12);
    CHECK(t.meta().points >= 20 * 24);
    CHECK(t.meta().weight == "erdos:1:2");
    for (int k = 1; k <= 24; ++k) CHECK(t.B(k) > 0.0);
}

TEST_CASE("refined discretization agrees with the default") {
    DiscretizationConfig fine;
    fine.panel_mult = 2;
    const WeightSpec f4 = WeightSpec::freud(4.0);
    const RecurrenceTable a = recurrence_table(f4, 16);
    const RecurrenceTable b = recurrence_table(f4, 16, fine);
    for (int k = 1; k <= 16; ++k)
        CHECK(a.B(k) == doctest::Approx(b.B(k)).epsilon(1e-12));
    CHECK(a.mu0() == doctest::Approx(b.mu0()).epsilon(1e-13));
}

TEST_CASE("json round trip is exact") {
    const RecurrenceTable t = recurrence_table(WeightSpec::freud(3.0), 12);
    const RecurrenceTable u = table_from_json(table_to_json(t));
    CHECK(u.N() == t.N());
    CHECK(u.mu0() == t.mu0());
    for (int k = 0; k < 12; ++k) CHECK(u.A(k) == t.A(k));
    for (int k = 1; k <= 12; ++k) CHECK(u.B(k) == t.B(k));
    CHECK(u.meta().weight == t.meta().weight);
    CHECK(u.meta().disc == t.meta().disc);
    CHECK(u.meta().points == t.meta().points);
}

TEST_CASE("index guards") {
    const RecurrenceTable t = recurrence_table(WeightSpec::freud(2.0), 4);
    CHECK_THROWS_AS(t.A(-1), std::out_of_range);
    CHECK_THROWS_AS(t.A(4), std::out_of_range);
    CHECK_THROWS_AS(t.B(5), std::out_of_range);
    CHECK_NOTHROW(t.B(4));
}

TEST_CASE("argument guards") {
    const WeightSpec f2 = WeightSpec::freud(2.0);
    CHECK_THROWS_AS(recurrence_table(f2, 0), std::invalid_argument);
    DiscretizationConfig bad;
    bad.c = 1.5;
    CHECK_THROWS_AS(recurrence_table(f2, 8, bad), std::invalid_argument);
}

TEST_CASE("uncertifiable discretization is refused, not returned") {
    DiscretizationConfig crude;
    crude.gl_order = 1;
    crude.tail_panels = 1;
    CHECK_THROWS_AS(recurrence_table(WeightSpec::freud(2.0), 16, crude), std::runtime_error);
}

TEST_SUITE_END();
