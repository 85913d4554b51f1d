#pragma once

// Natural-units arithmetic with hbar = c = 1 and the electron mass as the
// base scale. Every quantity is a real value tagged with its mass-dimension
// exponent: masses and energies are +1, lengths -1, pure numbers 0.

#include "comptonqcd/rational.hpp"

#include <string_view>

namespace comptonqcd {

class Quantity {
public:
    /// Throws InvalidQuantity for NaN or infinite values.
    Quantity(double value, int dim);

    double value() const noexcept { return value_; }
    int dim() const noexcept { return dim_; }

    friend bool operator==(const Quantity&, const Quantity&) = default;

private:
    double value_;
    int dim_;
};

Quantity make_quantity(double value, int dim);

inline Quantity mass(double v) { return Quantity(v, 1); }
inline Quantity energy(double v) { return Quantity(v, 1); }
inline Quantity length(double v) { return Quantity(v, -1); }
inline Quantity dimensionless(double v) { return Quantity(v, 0); }

enum class ArithOp { Add, Sub, Mul, Div };

/// Add/Sub require equal dimensions (DimensionError); Div by a zero value
/// raises DivByZero.
Quantity qarith(const Quantity& a, const Quantity& b, ArithOp op);

Quantity operator+(const Quantity& a, const Quantity& b);
Quantity operator-(const Quantity& a, const Quantity& b);
Quantity operator*(const Quantity& a, const Quantity& b);
Quantity operator/(const Quantity& a, const Quantity& b);
Quantity operator*(double s, const Quantity& q);
Quantity operator*(const Quantity& q, double s);

/// l = 1/m. Requires a positive mass (InvalidMass otherwise).
Quantity compton_wavelength(const Quantity& m);

/// Which value of the Gaussian coupling e^2 = alpha the computation uses.
///   Paper   - exactly 1/137
///   Precise - 1/137.035999
///   Unit    - e^2 = 1, for checking formulas at unit inputs
enum class E2Mode { Paper, Precise, Unit };

std::string_view to_string(E2Mode mode) noexcept;

/// Accepts "paper", "paper-137", "precise" and "unit".
E2Mode parse_e2_mode(std::string_view text);

/// e^2 as an exact fraction.
Rational fine_structure_exact(E2Mode mode = E2Mode::Paper);

/// e^2 as a dimensionless quantity.
Quantity fine_structure_constant(E2Mode mode = E2Mode::Paper);

}  // namespace comptonqcd
