#include "comptonqcd/error.hpp"
#include "comptonqcd/natunits.hpp"

#include "doctest.h"

#include <cmath>
#include <limits>
#include <random>

using namespace comptonqcd;

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

}  // namespace

TEST_CASE("quantities reject non-finite values") {
    CHECK(code_of([] { Quantity(std::nan(""), 1); }) == ErrorCode::InvalidQuantity);
    CHECK(code_of([] { make_quantity(std::numeric_limits<double>::infinity(), 0); }) ==
          ErrorCode::InvalidQuantity);
    CHECK(make_quantity(2.5, -1) == length(2.5));
}

TEST_CASE("arithmetic tracks mass dimension") {
    const Quantity m = mass(3.0);
    const Quantity r = length(2.0);
    CHECK((m * r).dim() == 0);
    CHECK((m * r).value() == 6.0);
    CHECK((m / r).dim() == 2);
    CHECK((r / m).dim() == -2);
    CHECK((m + mass(1.0)).value() == 4.0);
    CHECK((m - mass(1.0)).value() == 2.0);
    CHECK((2.0 * r).value() == 4.0);
    CHECK((r * 0.5).dim() == -1);
    CHECK(code_of([&] { m + r; }) == ErrorCode::DimensionError);
    CHECK(code_of([&] { m - dimensionless(1.0); }) == ErrorCode::DimensionError);
    CHECK(code_of([&] { m / length(0.0); }) == ErrorCode::DivByZero);
    CHECK(qarith(m, r, ArithOp::Mul) == m * r);
}

TEST_CASE("compton wavelength is the inverse mass") {
    CHECK(compton_wavelength(mass(1.0)) == length(1.0));
    CHECK(compton_wavelength(mass(4.0)) == length(0.25));
    CHECK(code_of([] { compton_wavelength(mass(0.0)); }) == ErrorCode::InvalidMass);
    CHECK(code_of([] { compton_wavelength(mass(-2.0)); }) == ErrorCode::InvalidMass);
    CHECK(code_of([] { compton_wavelength(length(1.0)); }) == ErrorCode::DimensionError);
}

TEST_CASE("coupling modes") {
    CHECK(fine_structure_exact(E2Mode::Paper) == Rational(1, 137));
    CHECK(fine_structure_exact(E2Mode::Precise) == Rational(1000000, 137035999));
    CHECK(fine_structure_exact(E2Mode::Unit) == Rational(1));
    CHECK(fine_structure_constant().dim() == 0);
    CHECK(fine_structure_constant().value() == doctest::Approx(1.0 / 137.0).epsilon(1e-15));
    CHECK(fine_structure_constant(E2Mode::Precise).value() ==
          doctest::Approx(1.0 / 137.035999).epsilon(1e-14));
    CHECK(parse_e2_mode("paper") == E2Mode::Paper);
    CHECK(parse_e2_mode("paper-137") == E2Mode::Paper);
    CHECK(parse_e2_mode("precise") == E2Mode::Precise);
    CHECK(parse_e2_mode("unit") == E2Mode::Unit);
    CHECK(code_of([] { parse_e2_mode("codata"); }) == ErrorCode::ParseError);
    CHECK(parse_e2_mode(to_string(E2Mode::Precise)) == E2Mode::Precise);
}

TEST_CASE("rational helpers") {
    CHECK(to_string(Rational(2, 3)) == "2/3");
    CHECK(to_string(Rational(-4, 2)) == "-2");
    CHECK(parse_rational("-1/3") == Rational(-1, 3));
    CHECK(parse_rational("5") == Rational(5));
    CHECK(to_double(Rational(1, 4)) == 0.25);
    CHECK(code_of([] { parse_rational("1/0"); }) == ErrorCode::ParseError);
    CHECK(code_of([] { parse_rational("x"); }) == ErrorCode::ParseError);
}

TEST_CASE("products add dimensions") {
    for (int a = -5; a <= 5; ++a)
        for (int b = -5; b <= 5; ++b) {
            CHECK(qarith(Quantity(1.5, a), Quantity(2.0, b), ArithOp::Mul).dim() == a + b);
            CHECK(qarith(Quantity(1.5, a), Quantity(2.0, b), ArithOp::Div).dim() == a - b);
        }
    CHECK(qarith(dimensionless(1.0), mass(4.0), ArithOp::Div) == length(0.25));
}

TEST_CASE("compton wavelength times mass is one") {
    for (double m : {1e-3, 0.7, 1.0, 1233.0, 2.5e6}) {
        const Quantity p = compton_wavelength(mass(m)) * mass(m);
        CHECK(p.dim() == 0);
        CHECK(p.value() == doctest::Approx(1.0).epsilon(1e-15));
    }
    CHECK(fine_structure_exact() * 137 == Rational(1));
    CHECK(9 / fine_structure_exact() == Rational(1233));
}

TEST_CASE("random products and quotients round-trip") {
    std::mt19937_64 rng(20261015);
    std::uniform_real_distribution<double> val(-1e3, 1e3);
    std::uniform_int_distribution<int> dim(-4, 4);
    for (int i = 0; i < 500; ++i) {
        const Quantity a(val(rng), dim(rng));
        double bv = val(rng);
        if (bv == 0.0) bv = 1.0;
        const Quantity b(bv, dim(rng));
        const Quantity back = (a * b) / b;
        CHECK(back.dim() == a.dim());
        CHECK(back.value() == doctest::Approx(a.value()).epsilon(1e-14));
        CHECK(((a + a) - a).value() == doctest::Approx(a.value()).epsilon(1e-14));
    }
}
