#pragma once

#include "comptonqcd/natunits.hpp"
#include "comptonqcd/rational.hpp"

#include <string>
#include <string_view>

namespace comptonqcd::estimator {

/// A mass read off from comparing a confinement slope k e^2 / l^2 with the
/// Cornell string tension (1/m)(m_e / l^2): m = m_e / (k e^2).
struct MassEstimate {
    Rational exact_mass;     // in m_e
    Quantity mass;           // same value as a Quantity of dimension 1
    Rational slope_coefficient;
    E2Mode e2_mode;
    std::string provenance;
};

MassEstimate effective_mass_from_slope(const Rational& k, E2Mode mode = E2Mode::Paper);

/// k = 1/9, giving 9/e^2 = 1233 m_e with e^2 = 1/137.
MassEstimate quark_mass_estimate(E2Mode mode = E2Mode::Paper);

/// Whether 10^2 < m/m_e < 10^4, i.e. the estimate is of order 10^3.
bool order_of_magnitude_satisfied(const MassEstimate& est);

/// One fermion at k = 1 gives 137 m_e; the pion is two of them.
MassEstimate pion_single_fermion_estimate(E2Mode mode = E2Mode::Paper);
MassEstimate pion_mass_estimate(E2Mode mode = E2Mode::Paper);

/// Reads the mass off a numeric slope at separation l: m = m_e/(slope l^2).
Quantity mass_from_confinement_slope(const Quantity& slope, const Quantity& l);

enum class Regime { Electron, Pion, Quark };

std::string_view to_string(Regime r) noexcept;

/// Quark for x <= 1 - delta, Electron for x >= 1 + delta, Pion in between,
/// where x is the probed scale in units of the Compton wavelength.
Regime classify_regime(double scale_over_compton, double delta = 0.5);

}  // namespace comptonqcd::estimator
