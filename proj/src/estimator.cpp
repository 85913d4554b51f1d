#include "comptonqcd/estimator.hpp"

#include "comptonqcd/error.hpp"

#include <cmath>

namespace comptonqcd::estimator {

MassEstimate effective_mass_from_slope(const Rational& k, E2Mode mode) {
    if (k <= 0) throw Error(ErrorCode::DomainError, "slope coefficient must be positive");
    // k e^2 / l^2 ~ (1/m)(m_e / l^2)  =>  m = m_e / (k e^2); l cancels.
    const Rational m = 1 / (k * fine_structure_exact(mode));
    return {m, mass(to_double(m)), k, mode,
            "slope " + comptonqcd::to_string(k) + " e^2/l^2 matched to string tension m_e/(m l^2)"};
}

MassEstimate quark_mass_estimate(E2Mode mode) {
    auto est = effective_mass_from_slope(Rational(1, 9), mode);
    est.provenance = "quark: three-charge confinement slope e^2/(9 l^2)";
    return est;
}

bool order_of_magnitude_satisfied(const MassEstimate& est) {
    return est.exact_mass > 100 && est.exact_mass < 10000;
}

MassEstimate pion_single_fermion_estimate(E2Mode mode) {
    auto est = effective_mass_from_slope(Rational(1), mode);
    est.provenance = "single fermion just outside the Compton wavelength";
    return est;
}

MassEstimate pion_mass_estimate(E2Mode mode) {
    auto est = pion_single_fermion_estimate(mode);
    est.exact_mass *= 2;
    est.mass = mass(to_double(est.exact_mass));
    est.provenance = "pion: two fermions at the single-fermion mass";
    return est;
}

Quantity mass_from_confinement_slope(const Quantity& slope, const Quantity& l) {
    if (slope.dim() != 2) throw Error(ErrorCode::DimensionError, "slope must have mass dimension 2");
    if (l.dim() != -1) throw Error(ErrorCode::DimensionError, "l must be a length");
    if (!(slope.value() > 0.0) || !(l.value() > 0.0))
        throw Error(ErrorCode::DomainError, "slope and l must be positive");
    const Quantity m_e = mass(1.0);
    // slope = (1/m) m_e / l^2
    return m_e / (slope * l * l);
}

std::string_view to_string(Regime r) noexcept {
    switch (r) {
        case Regime::Electron: return "Electron";
        case Regime::Pion: return "Pion";
        case Regime::Quark: return "Quark";
    }
    return "Electron";
}

Regime classify_regime(double scale_over_compton, double delta) {
    if (!std::isfinite(scale_over_compton) || !(scale_over_compton > 0.0))
        throw Error(ErrorCode::DomainError, "scale must be positive");
    if (!(delta > 0.0 && delta < 1.0))
        throw Error(ErrorCode::DomainError, "regime band delta must lie in (0, 1)");
    if (scale_over_compton <= 1.0 - delta) return Regime::Quark;
    if (scale_over_compton >= 1.0 + delta) return Regime::Electron;
    return Regime::Pion;
}

}  // namespace comptonqcd::estimator
