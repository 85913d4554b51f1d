#include "comptonqcd/error.hpp"
#include "comptonqcd/stressfield.hpp"

#include "doctest.h"
#include "oracles.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>
#include <vector>

using namespace comptonqcd;
using namespace comptonqcd::stressfield;

namespace {

ErrorCode code_of(auto&& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("no error thrown");
    return ErrorCode::InvalidQuantity;
}

double rel(double a, double b) { return std::abs(a - b) / std::abs(b); }

SourceDensity triangle(double R, double E) {
    const std::vector<DensitySample> s{{0.0, 1.0}, {0.5 * R, 0.5}, {R, 0.0}};
    return SourceDensity::radial_table(s, energy(E));
}

}  // namespace

TEST_CASE("uniform ball obeys the shell theorem outside") {
    const double R = 1.7, E = 2.3;
    const auto src = SourceDensity::uniform_ball(length(R), energy(E));
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> out(R, 50.0 * R);
    for (int i = 0; i < 50; ++i) {
        const double r = out(rng);
        const Quantity v = radial_reduce_inverse(src, length(r));
        CHECK(v.dim() == 2);
        CHECK(rel(v.value(), E / r) <= 1e-10);
    }
}

TEST_CASE("uniform ball interior and centre") {
    const double R = 0.8, E = 1.5;
    const auto src = SourceDensity::uniform_ball(length(R), energy(E));
    for (double f : {0.05, 0.3, 0.5, 0.77, 0.99}) {
        const double r = f * R;
        CHECK(rel(radial_reduce_inverse(src, length(r)).value(), oracle::ball_inverse(E, R, r)) <=
              1e-8);
        CHECK(rel(radial_reduce_linear(src, length(r)).value(), oracle::ball_linear(E, R, r)) <=
              1e-8);
    }
    CHECK(rel(radial_reduce_inverse(src, length(0.0)).value(), 1.5 * E / R) <= 1e-12);
    CHECK(rel(radial_reduce_linear(src, length(0.0)).value(), 0.75 * E * R) <= 1e-12);
}

TEST_CASE("linear kernel exterior closed form") {
    const double R = 1.0, E = 1.0;
    const auto src = SourceDensity::uniform_ball(length(R), energy(E));
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> out(R, 100.0);
    for (int i = 0; i < 50; ++i) {
        const double r = out(rng);
        const Quantity v = radial_reduce_linear(src, length(r));
        CHECK(v.dim() == 0);
        CHECK(rel(v.value(), E * (r + R * R / (5.0 * r))) <= 1e-8);
    }
}

TEST_CASE("linear kernel at random radii inside and outside") {
    const auto src = SourceDensity::uniform_ball(length(1.0), energy(1.0));
    std::mt19937_64 rng(13);
    std::uniform_real_distribution<double> any(1e-6, 5.0);
    for (int i = 0; i < 50; ++i) {
        const double r = any(rng);
        CHECK(rel(radial_reduce_linear(src, length(r)).value(), oracle::ball_linear(1.0, 1.0, r)) <=
              1e-8);
    }
    CHECK(rel(radial_reduce_linear(src, length(2.0)).value(), 2.1) <= 1e-12);
    CHECK(rel(radial_reduce_linear(src, length(10.0)).value(), 10.02) <= 1e-12);
    CHECK(rel(radial_reduce_inverse(src, length(0.5)).value(), 1.375) <= 1e-12);
    CHECK(rel(near_field_potential(src, mass(1.0), length(2.0)).value(), 6.2) <= 1e-12);
}

TEST_CASE("tabulated profiles are renormalized and obey the shell theorem") {
    const double R = 2.0, E = 3.0;
    const auto src = triangle(R, E);
    CHECK(src.kind() == SourceDensity::Kind::RadialTable);
    CHECK(src.support_radius() == length(R));
    CHECK(rel(src.normalization_integral(), E) <= 1e-14);
    CHECK(src.breakpoints().back() == R);
    CHECK(src.density(3.0 * R) == 0.0);
    CHECK(src.density(0.25 * R) > src.density(0.75 * R));
    for (double r : {2.0, 2.5, 7.0, 40.0}) {
        CHECK(rel(radial_reduce_inverse(src, length(r)).value(), E / r) <= 1e-10);
    }
    // The inverse-kernel integrand is cubic per panel, so Simpson is exact.
    QuadratureOptions coarse{64};
    for (double r : {0.3, 1.1, 1.9}) {
        CHECK(rel(radial_reduce_inverse(src, length(r), coarse).value(),
                  radial_reduce_inverse(src, length(r)).value()) <= 1e-12);
    }
}

TEST_CASE("halving the quadrature step") {
    const auto ball = SourceDensity::uniform_ball(length(1.0), energy(1.0));
    const auto tri = triangle(1.3, 0.9);
    QuadratureOptions fine{8192};
    for (const auto* src : {&ball, &tri}) {
        for (double r : {0.05, 0.4, 0.99, 1.2, 3.0}) {
            CHECK(rel(radial_reduce_inverse(*src, length(r), fine).value(),
                      radial_reduce_inverse(*src, length(r)).value()) <= 1e-8);
            CHECK(rel(radial_reduce_linear(*src, length(r), fine).value(),
                      radial_reduce_linear(*src, length(r)).value()) <= 1e-8);
        }
    }
}

TEST_CASE("a flat table reproduces the uniform ball") {
    const double R = 1.0, E = 2.0;
    const std::vector<DensitySample> flat{{0.0, 1.0}, {R * (1.0 - 1e-9), 1.0}, {R, 0.0}};
    const auto tab = SourceDensity::radial_table(flat, energy(E));
    const auto ball = SourceDensity::uniform_ball(length(R), energy(E));
    for (double r : {0.0, 0.2, 0.7, 1.0, 1.5, 10.0}) {
        CHECK(rel(radial_reduce_inverse(tab, length(r)).value(),
                  radial_reduce_inverse(ball, length(r)).value()) <= 1e-6);
        CHECK(rel(radial_reduce_linear(tab, length(r)).value(),
                  radial_reduce_linear(ball, length(r)).value()) <= 1e-6);
    }
}

TEST_CASE("default source") {
    const auto src = SourceDensity::default_for_mass(mass(4.0));
    CHECK(src.support_radius() == length(0.25));
    CHECK(src.total_energy() == energy(4.0));
    CHECK(code_of([] { SourceDensity::default_for_mass(mass(0.0)); }) == ErrorCode::InvalidMass);
}

TEST_CASE("source validation") {
    CHECK(code_of([] { SourceDensity::uniform_ball(length(-1.0), energy(1.0)); }) ==
          ErrorCode::DomainError);
    CHECK(code_of([] { SourceDensity::uniform_ball(mass(1.0), energy(1.0)); }) ==
          ErrorCode::DimensionError);
    CHECK(code_of([] { SourceDensity::uniform_ball(length(1.0), energy(0.0)); }) ==
          ErrorCode::InvalidSource);
    const std::vector<DensitySample> open_end{{0.0, 1.0}, {1.0, 0.5}};
    CHECK(code_of([&] { SourceDensity::radial_table(open_end, energy(1.0)); }) ==
          ErrorCode::InvalidSource);
    const std::vector<DensitySample> unordered{{0.0, 1.0}, {0.5, 0.5}, {0.4, 0.0}};
    CHECK(code_of([&] { SourceDensity::radial_table(unordered, energy(1.0)); }) ==
          ErrorCode::InvalidSource);
    const std::vector<DensitySample> negative{{0.0, 1.0}, {0.5, -0.5}, {1.0, 0.0}};
    CHECK(code_of([&] { SourceDensity::radial_table(negative, energy(1.0)); }) ==
          ErrorCode::InvalidSource);
    const std::vector<DensitySample> empty{{0.0, 0.0}, {1.0, 0.0}};
    CHECK(code_of([&] { SourceDensity::radial_table(empty, energy(1.0)); }) ==
          ErrorCode::InvalidSource);
    const auto src = SourceDensity::uniform_ball(length(1.0), energy(1.0));
    CHECK(code_of([&] { radial_reduce_inverse(src, length(-0.1)); }) == ErrorCode::DomainError);
    CHECK(code_of([&] { radial_reduce_linear(src, mass(1.0)); }) == ErrorCode::DimensionError);
}

TEST_CASE("CSV tables") {
    std::istringstream good("r,eps\n0,2\n0.5,1\n1,0\n");
    const auto src = load_radial_table_csv(good, energy(1.0));
    CHECK(src.support_radius() == length(1.0));
    CHECK(rel(src.normalization_integral(), 1.0) <= 1e-14);
    CHECK(rel(src.density(0.0), 2.0 * src.density(0.5)) <= 1e-14);

    std::istringstream bad_header("radius,eps\n0,1\n1,0\n");
    CHECK(code_of([&] { load_radial_table_csv(bad_header, energy(1.0)); }) ==
          ErrorCode::ParseError);
    std::istringstream bad_row("r,eps\n0,abc\n1,0\n");
    CHECK(code_of([&] { load_radial_table_csv(bad_row, energy(1.0)); }) == ErrorCode::ParseError);
    std::istringstream blank("");
    CHECK(code_of([&] { load_radial_table_csv(blank, energy(1.0)); }) == ErrorCode::ParseError);
    std::istringstream tail("r,eps\n0,1\n1,1\n");
    CHECK(code_of([&] { load_radial_table_csv(tail, energy(1.0)); }) == ErrorCode::InvalidSource);
    CHECK(code_of([] {
              load_radial_table_csv(std::filesystem::path("/nonexistent/table.csv"), energy(1.0));
          }) == ErrorCode::IoError);
}

TEST_CASE("near field combines both kernels") {
    const double m = 2.0;
    const auto src = SourceDensity::default_for_mass(mass(m));
    for (double r : {0.1, 0.5, 3.0}) {
        const Quantity v = near_field_potential(src, mass(m), length(r));
        CHECK(v.dim() == 3);
        const double expect = 4.0 * m * radial_reduce_inverse(src, length(r)).value() +
                              2.0 * m * m * m * radial_reduce_linear(src, length(r)).value();
        CHECK(rel(v.value(), expect) <= 1e-14);
    }
}

TEST_CASE("near field has a single minimum") {
    for (double m : {0.5, 1.0, 2.0}) {
        const auto src = SourceDensity::default_for_mass(mass(m));
        std::vector<double> v;
        for (double r = 1e-2 / m; r < 1e2 / m; r *= 1.02)
            v.push_back(near_field_potential(src, mass(m), length(r)).value());
        const auto arg = std::min_element(v.begin(), v.end()) - v.begin();
        CHECK(arg > 0);
        CHECK(arg < static_cast<long>(v.size()) - 1);
        for (std::size_t i = 1; i < v.size(); ++i) {
            if (static_cast<long>(i) <= arg)
                CHECK(v[i] < v[i - 1]);
            else
                CHECK(v[i] > v[i - 1]);
        }
    }
}

TEST_CASE("near field grows linearly far from the source") {
    for (double m : {0.5, 1.0, 3.0}) {
        const auto src = SourceDensity::default_for_mass(mass(m));
        const double R = 1.0 / m, E = m;
        const double r = 1e4 * R, h = 1e-2 * r;
        const double slope = (near_field_potential(src, mass(m), length(r + h)).value() -
                              near_field_potential(src, mass(m), length(r - h)).value()) /
                             (2.0 * h);
        CHECK(rel(slope, 2.0 * m * m * m * E) <= 1e-4);
    }
}

TEST_CASE("far field charge fractions") {
    CHECK(far_field_charge_factor(1) == Rational(1, 3));
    CHECK(far_field_charge_factor(2) == Rational(2, 3));
    CHECK(far_field_charge_factor(3) == Rational(1));
    CHECK(code_of([] { far_field_charge_factor(0); }) == ErrorCode::InvalidDimension);
    CHECK(code_of([] { far_field_charge_factor(4); }) == ErrorCode::InvalidDimension);

    const double m = 1.0;
    const auto src = SourceDensity::default_for_mass(mass(m));
    const double r = 5.0;
    const double full = far_field_coupling(src, mass(m), 3, length(r)).value();
    CHECK(rel(full, (1.0 / 137.0) / r) <= 1e-14);
    CHECK(rel(far_field_coupling(src, mass(m), 1, length(r)).value(), full / 3.0) <= 1e-14);
    CHECK(rel(far_field_coupling(src, mass(m), 2, length(r)).value(), 2.0 * full / 3.0) <= 1e-14);
    CHECK(rel(far_field_coupling(src, mass(m), 3, length(r), E2Mode::Unit).value(), 1.0 / r) <=
          1e-14);
    CHECK(code_of([&] { far_field_coupling(src, mass(m), 3, length(0.5)); }) ==
          ErrorCode::RegimeError);
    CHECK(code_of([&] { far_field_coupling(src, mass(m), 5, length(5.0)); }) ==
          ErrorCode::InvalidDimension);
}
