#pragma once

#include "comptonqcd/natunits.hpp"
#include "comptonqcd/rational.hpp"

#include <optional>
#include <string>
#include <vector>

namespace comptonqcd::potential {

/// V(r) = -alpha/r + sigma r, with alpha dimensionless and sigma of mass
/// dimension 2.
class CornellPotential {
public:
    /// Both coefficients must be non-negative (DomainError).
    CornellPotential(const Quantity& alpha, const Quantity& sigma);

    const Quantity& alpha() const noexcept { return alpha_; }
    const Quantity& sigma() const noexcept { return sigma_; }

    bool is_trivial() const noexcept {
        return alpha_.value() == 0.0 && sigma_.value() == 0.0;
    }

private:
    Quantity alpha_;
    Quantity sigma_;
};

/// alpha = 1 and sigma = beta m_e / l^2 with beta = 1/m_quark. The
/// separation l defaults to the quark Compton wavelength, which reduces
/// sigma to m_quark (in m_e^2).
CornellPotential cornell_from_paper(const Quantity& m_quark,
                                    std::optional<Quantity> l = std::nullopt);

/// Requires r > 0 (DomainError).
Quantity evaluate_cornell(const CornellPotential& v, const Quantity& r);

/// Radius sqrt(alpha/sigma) where the Coulomb and linear terms have equal
/// magnitude. V itself is strictly increasing for alpha, sigma > 0 and has
/// no interior minimum. Needs both coefficients positive.
Quantity cornell_crossover(const CornellPotential& v);

/// Charge in units of e carried in d spatial dimensions: d/3.
Rational charge_fraction(int d);

/// Point charges on a line. Positions are in units of the separation l.
struct QuarkConfiguration {
    std::vector<Rational> charges;
    std::vector<double> positions;
    Quantity separation = length(1.0);

    Rational total_charge() const;
};

/// Throws DomainError / SingularConfiguration if the configuration breaks
/// its invariants (length mismatch, fewer than two charges, coincident
/// positions, non-positive l).
void validate(const QuarkConfiguration& cfg);

/// Charges (2/3, -1/3, 2/3) at (-1, 0, +1).
QuarkConfiguration proton_configuration(const Quantity& l);

/// Coulomb energy sum_{i<j} q_i q_j e^2 / |x_i - x_j|.
Quantity configuration_energy(const QuarkConfiguration& cfg,
                              E2Mode mode = E2Mode::Paper);

enum class DisplacementAxis { Axial, Transverse };

/// Energy with the middle charge moved by disp * l along the line or
/// perpendicular to it. The middle charge is the one at the median position
/// of an odd-sized configuration.
Quantity central_displacement_energy(const QuarkConfiguration& cfg, double disp,
                                     DisplacementAxis axis,
                                     E2Mode mode = E2Mode::Paper);

/// The linear confinement coefficient e^2/(9 l^2), as stated rather than
/// derived (the symmetric Coulomb expansion has no linear term).
Quantity paper_confinement_slope(const Quantity& l, E2Mode mode = E2Mode::Paper);

/// Taylor data of the displaced proton energy around zero displacement,
/// reported next to the stated linear slope.
struct LinearizationReport {
    double separation;
    double axial_first_derivative;         // numeric, should vanish
    double axial_second_derivative;        // numeric
    double axial_second_derivative_exact;  // -(8/9) e^2 / l^3
    double transverse_second_derivative;   // numeric
    double transverse_second_derivative_exact;  // +(4/9) e^2 / l^3
    double single_pair_slope;              // numeric |d/dr| of one outer pair
    double single_pair_slope_exact;        // (2/9) e^2 / l^2
    double declared_slope;                 // e^2 / (9 l^2)
};

LinearizationReport linearize_proton(const Quantity& l, E2Mode mode = E2Mode::Paper);

/// {"charges": ["2/3", ...], "positions": [...], "l": ...}. Doubles are
/// written in shortest round-trip form so reading back is bit-exact.
std::string to_json(const QuarkConfiguration& cfg);
QuarkConfiguration configuration_from_json(const std::string& text);

}  // namespace comptonqcd::potential
