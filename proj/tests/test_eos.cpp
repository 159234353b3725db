#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <fstream>

#include "elastoshock/eos.hpp"
#include "elastoshock/sampling.hpp"

using namespace elastoshock;

TEST_CASE("polytropic closed forms") {
    const auto sq = EquationOfState::polytropic(1.0, 2.0);
    CHECK(sq.pressure(1.0) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(sq.sound_speed_sq(1.0) == doctest::Approx(2.0).epsilon(1e-14));
    CHECK(sq.pressure(3.0) == doctest::Approx(9.0).epsilon(1e-14));
    CHECK(sq.sound_speed_sq(3.0) == doctest::Approx(6.0).epsilon(1e-14));

    const auto lin = EquationOfState::polytropic(1.0, 1.0);
    CHECK(lin.evaluate(5.0).p == doctest::Approx(5.0).epsilon(1e-14));
    CHECK(lin.evaluate(5.0).c2 == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(lin.evaluate(0.25).c2 == doctest::Approx(1.0).epsilon(1e-14));

    // frozen from a 30-digit power evaluation
    const auto air = EquationOfState::polytropic(0.5, 1.4);
    CHECK(air.pressure(2.0) == doctest::Approx(1.3195079107728942594).epsilon(1e-15));
    CHECK(air.sound_speed_sq(2.0) == doctest::Approx(0.92365553754102598156).epsilon(1e-15));
}

TEST_CASE("parameter and domain errors") {
    CHECK_THROWS_AS(EquationOfState::polytropic(0.0, 2.0), ParameterError);
    CHECK_THROWS_AS(EquationOfState::polytropic(1.0, -1.0), ParameterError);
    const auto eos = EquationOfState::polytropic(1.0, 2.0);
    CHECK_THROWS_AS(eos.pressure(-1.0), DomainError);
    CHECK_THROWS_AS(eos.pressure(0.0), DomainError);

    const auto tab = EquationOfState::tabulated({{1.0, 1.0}, {2.0, 4.0}});
    CHECK_THROWS_AS(tab.pressure(0.5), DomainError);
    CHECK_THROWS_AS(tab.pressure(2.5), DomainError);
    CHECK_THROWS_AS(EquationOfState::tabulated({{1.0, 1.0}}), ParameterError);
    CHECK_THROWS_AS(EquationOfState::tabulated({{1.0, 1.0}, {2.0, 0.5}}), ParameterError);
    CHECK_THROWS_AS(EquationOfState::tabulated({{1.0, 1.0}, {1.0, 2.0}}), ParameterError);
}

TEST_CASE("tabulated interpolation tracks the closed form") {
    std::vector<std::array<double, 2>> samples;
    for (int i = 0; i < 100; ++i) {
        const double rho = 1.0 + i / 99.0;
        samples.push_back({rho, rho * rho});
    }
    const auto tab = EquationOfState::tabulated(samples);
    const auto v = tab.evaluate(1.37);
    CHECK(v.p == doctest::Approx(1.37 * 1.37).epsilon(1e-6));
    // the interpolant derivative is second-order accurate, not exact
    CHECK(v.c2 == doctest::Approx(2.0 * 1.37).epsilon(5e-4));
}

TEST_CASE("csv loading") {
    const char* path = "eos_test.csv";
    {
        std::ofstream out(path);
        out << "rho,p\n";
        for (int i = 0; i < 50; ++i) {
            const double rho = 0.5 + i * 0.05;
            out << rho << "," << rho * rho << "\n";
        }
    }
    const auto tab = EquationOfState::tabulated_from_csv(path);
    CHECK(tab.domain_min() == doctest::Approx(0.5));
    CHECK(tab.pressure(1.0) == doctest::Approx(1.0).epsilon(1e-8));
    CHECK_THROWS_AS(EquationOfState::tabulated_from_csv("no_such_file.csv"), ParameterError);
}

TEST_CASE("convexity classification") {
    CHECK(EquationOfState::polytropic(1.0, 2.0).convexity(0.5, 3.0) == Convexity::convex);
    CHECK(EquationOfState::polytropic(1.0, 1.0).convexity(0.5, 3.0) == Convexity::convex);
    CHECK(EquationOfState::polytropic(1.0, 0.5).convexity(1.0, 2.0) == Convexity::nonconvex);
    const auto eos = EquationOfState::polytropic(1.0, 2.0);
    CHECK_THROWS_AS(eos.convexity(2.0, 1.0), ParameterError);

    Rng rng(71);
    for (int i = 0; i < 50; ++i) {
        const double gamma = rng.uniform(1.0, 4.0);
        CHECK(EquationOfState::polytropic(1.0, gamma).convexity(0.2, 5.0, 1000) ==
              Convexity::convex);
    }
}

TEST_CASE("hyperbolicity and round-trip inversion") {
    Rng rng(12345);
    for (int i = 0; i < 200; ++i) {
        const auto eos =
            EquationOfState::polytropic(rng.uniform(0.1, 3.0), rng.uniform(0.3, 3.0));
        const double rho = rng.uniform(0.05, 10.0);
        const auto v = eos.evaluate(rho);
        CHECK(v.c2 > 0.0);
        CHECK(eos.density(v.p) == doctest::Approx(rho).epsilon(1e-10));
    }
    // tabulated round trip
    std::vector<std::array<double, 2>> samples;
    for (int i = 0; i < 64; ++i) {
        const double rho = 0.5 + i * 0.1;
        samples.push_back({rho, 0.7 * std::pow(rho, 1.7)});
    }
    const auto tab = EquationOfState::tabulated(samples);
    for (int i = 0; i < 100; ++i) {
        const double rho = rng.uniform(0.5, 6.8);
        CHECK(tab.density(tab.pressure(rho)) == doctest::Approx(rho).epsilon(1e-10));
        CHECK(tab.sound_speed_sq(rho) > 0.0);
    }
}

TEST_CASE("describe/parse round trip") {
    const auto eos = EquationOfState::polytropic(0.5, 1.4);
    const auto back = EquationOfState::parse(eos.describe());
    CHECK(back.pressure(2.0) == doctest::Approx(eos.pressure(2.0)).epsilon(1e-15));

    const auto tab = EquationOfState::tabulated({{1.0, 1.0}, {2.0, 4.0}, {3.0, 9.0}});
    const auto tab2 = EquationOfState::parse(tab.describe());
    CHECK(tab2.pressure(1.5) == doctest::Approx(tab.pressure(1.5)).epsilon(1e-15));
}
