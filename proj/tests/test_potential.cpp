#include "comptonqcd/error.hpp"
#include "comptonqcd/potential.hpp"

#include "doctest.h"
#include "oracles.hpp"

#include <cmath>
#include <random>
#include <vector>

using namespace comptonqcd;
using namespace comptonqcd::potential;

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

constexpr double kE2 = 1.0 / 137.0;

}  // namespace

TEST_CASE("cornell parameters from the mass chain") {
    const auto v = cornell_from_paper(mass(1233.0));
    CHECK(v.alpha() == dimensionless(1.0));
    CHECK(v.sigma().dim() == 2);
    CHECK(rel(v.sigma().value(), 1233.0) <= 1e-15);
    const auto w = cornell_from_paper(mass(1233.0), length(2.0));
    CHECK(rel(w.sigma().value(), 1.0 / (1233.0 * 4.0)) <= 1e-15);
    CHECK(code_of([] { cornell_from_paper(mass(0.0)); }) == ErrorCode::InvalidMass);
    CHECK(code_of([] { cornell_from_paper(mass(1.0), length(-1.0)); }) == ErrorCode::DomainError);
}

TEST_CASE("cornell evaluation and shape") {
    const CornellPotential v(dimensionless(2.0), Quantity(8.0, 2));
    CHECK(evaluate_cornell(v, length(1.0)) == energy(6.0));
    const double rc = cornell_crossover(v).value();
    CHECK(rel(rc, 0.5) <= 1e-15);
    CHECK(rel(2.0 / rc, 8.0 * rc) <= 1e-15);
    // Strictly increasing on a log grid: the numeric argmin is the first node.
    double last = -1e300;
    for (double r = 1e-4; r < 1e4; r *= 1.05) {
        const double now = evaluate_cornell(v, length(r)).value();
        CHECK(now > last);
        last = now;
    }
    CHECK(code_of([&] { evaluate_cornell(v, length(0.0)); }) == ErrorCode::DomainError);
    CHECK(code_of([] { CornellPotential(dimensionless(-1.0), Quantity(1.0, 2)); }) ==
          ErrorCode::DomainError);
    CHECK(code_of([] { CornellPotential(dimensionless(1.0), Quantity(1.0, 1)); }) ==
          ErrorCode::DimensionError);
    CHECK(code_of([] { cornell_crossover(CornellPotential(dimensionless(1.0), Quantity(0.0, 2))); }) ==
          ErrorCode::DomainError);
    CHECK(CornellPotential(dimensionless(0.0), Quantity(0.0, 2)).is_trivial());
}

TEST_CASE("cornell values") {
    CHECK(evaluate_cornell(CornellPotential(dimensionless(1.0), Quantity(0.0, 2)), length(2.0)) ==
          energy(-0.5));
    CHECK(evaluate_cornell(CornellPotential(dimensionless(1.0), Quantity(1.0, 2)), length(1.0)) ==
          energy(0.0));
    const auto v = cornell_from_paper(mass(1233.0));
    CHECK(rel(evaluate_cornell(v, length(0.1)).value(), 113.3) <= 1e-14);
    CHECK(cornell_from_paper(mass(1.0)).sigma() == Quantity(1.0, 2));
    CHECK(cornell_from_paper(mass(2.0)).sigma() == Quantity(2.0, 2));
}

TEST_CASE("charge fractions per dimension") {
    CHECK(charge_fraction(1) == Rational(1, 3));
    CHECK(charge_fraction(2) == Rational(2, 3));
    CHECK(charge_fraction(3) == Rational(1, 1));
    CHECK(code_of([] { charge_fraction(0); }) == ErrorCode::InvalidDimension);
    CHECK(code_of([] { charge_fraction(4); }) == ErrorCode::InvalidDimension);
}

TEST_CASE("proton configuration") {
    const auto p = proton_configuration(length(1.0));
    CHECK(p.total_charge() == Rational(1));
    CHECK(p.charges.size() == 3);
    CHECK(p.charges[1] == Rational(-1, 3));
    CHECK(p.positions == std::vector<double>{-1.0, 0.0, 1.0});
    CHECK(rel(configuration_energy(p).value(), -2.0 * kE2 / 9.0) <= 1e-14);
    CHECK(rel(configuration_energy(proton_configuration(length(2.0))).value(), -kE2 / 9.0) <= 1e-14);
    CHECK(configuration_energy(p, E2Mode::Unit) ==
          central_displacement_energy(p, 0.0, DisplacementAxis::Axial, E2Mode::Unit));
    QuarkConfiguration pair;
    pair.charges = {Rational(1), Rational(1)};
    pair.positions = {0.0, 2.0};
    CHECK(rel(configuration_energy(pair).value(), kE2 / 2.0) <= 1e-15);
    CHECK(code_of([] { proton_configuration(length(0.0)); }) == ErrorCode::DomainError);
    CHECK(rel(paper_confinement_slope(length(1.0)).value(), 1.0 / 1233.0) <= 1e-15);
    CHECK(rel(paper_confinement_slope(length(1.0), E2Mode::Unit).value(), 1.0 / 9.0) <= 1e-15);
    CHECK(rel(paper_confinement_slope(length(2.0)).value(),
              paper_confinement_slope(length(1.0)).value() / 4.0) <= 1e-15);
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> ls(0.01, 100.0);
    for (int i = 0; i < 20; ++i) {
        const double l = ls(rng);
        const auto q = proton_configuration(length(l));
        CHECK(rel(configuration_energy(q).value(), -2.0 * kE2 / (9.0 * l)) <= 1e-13);
        CHECK(rel(configuration_energy(q, E2Mode::Unit).value(), -2.0 / (9.0 * l)) <= 1e-13);
    }
}

TEST_CASE("displaced middle charge matches the closed form") {
    const double l = 0.7;
    const auto p = proton_configuration(length(l));
    for (double d : {-0.6, -0.1, 0.0, 0.25, 0.9}) {
        CHECK(rel(central_displacement_energy(p, d, DisplacementAxis::Axial).value(),
                  oracle::proton_axial_energy(kE2, l, d * l)) <= 1e-13);
        CHECK(rel(central_displacement_energy(p, d, DisplacementAxis::Transverse).value(),
                  oracle::proton_transverse_energy(kE2, l, d * l)) <= 1e-13);
    }
    CHECK(code_of([&] { central_displacement_energy(p, 1.0, DisplacementAxis::Axial); }) ==
          ErrorCode::SingularConfiguration);
    CHECK(code_of([&] { central_displacement_energy(p, -1.5, DisplacementAxis::Axial); }) ==
          ErrorCode::SingularConfiguration);
    CHECK_NOTHROW(central_displacement_energy(p, 5.0, DisplacementAxis::Transverse));
    // The symmetric configuration has no linear term in either direction.
    const double h = 1e-4;
    for (auto axis : {DisplacementAxis::Axial, DisplacementAxis::Transverse}) {
        const double d1 = (central_displacement_energy(p, h, axis).value() -
                           central_displacement_energy(p, -h, axis).value()) /
                          (2.0 * h);
        CHECK(std::abs(d1) <= 1e-12);
    }
}

TEST_CASE("configuration validation") {
    QuarkConfiguration c;
    c.charges = {Rational(1, 3), Rational(2, 3)};
    c.positions = {0.0};
    CHECK(code_of([&] { validate(c); }) == ErrorCode::DomainError);
    c.positions = {0.5, 0.5};
    CHECK(code_of([&] { validate(c); }) == ErrorCode::SingularConfiguration);
    c.positions = {0.0, 1.0};
    CHECK_NOTHROW(validate(c));
    c.charges = {Rational(1, 3)};
    c.positions = {0.0};
    CHECK(code_of([&] { validate(c); }) == ErrorCode::DomainError);
}

TEST_CASE("linearization of the displaced proton") {
    for (double l : {0.5, 1.0, 3.0}) {
        const auto rep = linearize_proton(length(l));
        CHECK(std::abs(rep.axial_first_derivative) <= 1e-9);
        CHECK(rel(rep.axial_second_derivative_exact, -8.0 * kE2 / (9.0 * l * l * l)) <= 1e-14);
        CHECK(rel(rep.transverse_second_derivative_exact, 4.0 * kE2 / (9.0 * l * l * l)) <= 1e-14);
        CHECK(rel(rep.axial_second_derivative, rep.axial_second_derivative_exact) <= 1e-6);
        CHECK(rel(rep.transverse_second_derivative, rep.transverse_second_derivative_exact) <= 1e-6);
        CHECK(rel(rep.declared_slope, kE2 / (9.0 * l * l)) <= 1e-14);
        CHECK(rel(rep.declared_slope, paper_confinement_slope(length(l)).value()) <= 1e-15);
        CHECK(rel(rep.single_pair_slope, 2.0 * rep.declared_slope) <= 1e-6);
        CHECK(rel(rep.single_pair_slope_exact, 2.0 * rep.declared_slope) <= 1e-14);
    }
}

TEST_CASE("configuration JSON round trip") {
    auto p = proton_configuration(length(0.0008110300081));
    p.positions[1] = 0.1234567890123;
    const auto back = configuration_from_json(to_json(p));
    CHECK(back.charges == p.charges);
    CHECK(back.positions == p.positions);
    CHECK(back.separation == p.separation);
    CHECK(code_of([] { configuration_from_json("{\"charges\":[\"1/3\",\"2/3\"],\"positions\":[0,1],"
                                               "\"l\":1,\"spin\":2}"); }) == ErrorCode::ParseError);
    CHECK(code_of([] { configuration_from_json("[1,2]"); }) == ErrorCode::ParseError);
    CHECK(code_of([] { configuration_from_json("{"); }) == ErrorCode::ParseError);
    CHECK(code_of([] { configuration_from_json("{\"charges\":[\"1/3\",\"2/3\"],\"positions\":[0,0],"
                                               "\"l\":1}"); }) == ErrorCode::SingularConfiguration);
}
