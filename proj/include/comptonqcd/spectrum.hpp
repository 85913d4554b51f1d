#pragma once

// Radial Schroedinger bound states for the Cornell potential.
//
// The equation u'' = 2 mu (V_eff - E) u is solved on a uniform grid in
// x = ln r. Writing u = sqrt(r) w removes the first-derivative term:
//
//   w'' = [2 mu r^2 (V(r) - E) + (l + 1/2)^2] w
//
// which is integrated with Numerov's scheme. Eigenvalues are located by
// bisection on the node count and refined by matching an outward and an
// inward solution at the outermost turning point.

#include "comptonqcd/natunits.hpp"
#include "comptonqcd/potential.hpp"

#include <optional>
#include <vector>

namespace comptonqcd::spectrum {

struct RadialProblem {
    potential::CornellPotential potential;
    Quantity reduced_mass = mass(1.0);
    int angular_momentum = 0;
    Quantity r_min = length(1e-6);
    Quantity r_max = length(40.0);
    int grid_points = 20000;
};

/// Throws DomainError when 0 < r_min < r_max, grid_points >= 1000 or
/// mu > 0 does not hold.
void validate(const RadialProblem& p);

/// r_min = 1e-6 l, r_max = 40 l, 20000 points.
RadialProblem default_problem(const potential::CornellPotential& v,
                              const Quantity& reduced_mass, const Quantity& scale,
                              int angular_momentum = 0);

/// Smallest of the Bohr radius 1/(mu alpha) and the linear scale
/// (2 mu sigma)^(-1/3), ignoring whichever coupling is zero.
Quantity characteristic_length(const potential::CornellPotential& v,
                               const Quantity& reduced_mass);

/// Grid sized for level n: r_min = 1e-6 s, r_max = 40 s n with s the
/// characteristic length.
RadialProblem auto_problem(const potential::CornellPotential& v,
                           const Quantity& reduced_mass, int level,
                           int angular_momentum = 0);

struct NumerovSolution {
    std::vector<double> r;
    std::vector<double> u;  // arbitrary normalization
    int node_count = 0;
};

/// Outward integration at fixed energy, started from the regular small-r
/// behaviour u ~ r^(l+1) at the first two grid points. The tail is
/// rescaled whenever it threatens to overflow.
NumerovSolution numerov_integrate(const RadialProblem& p, const Quantity& energy);

struct Tolerances {
    double bisection_relative = 1e-10;
    double refinement_relative = 1e-14;
};

struct BoundState {
    int level = 0;
    Quantity energy = Quantity(0.0, 1);
    int nodes = 0;
    std::vector<double> r;
    std::vector<double> u;
    Quantity rms_radius = length(0.0);
    double log_step = 0.0;  // spacing of the ln r grid
    int grid_points = 0;
    Tolerances tolerances;
    double matching_radius = 0.0;
};

/// n-th level (n >= 1) for the problem's angular momentum. NoBoundState for
/// the trivial potential; GridTooSmall when the grid holds fewer than n
/// states below V_eff(r_max).
BoundState solve_bound_state(const RadialProblem& p, int level,
                             const Tolerances& tol = {});

/// \int u^2 dr, \int r^k u^2 dr style quadrature over the log grid.
double norm(const BoundState& s);
double expectation_r_power(const BoundState& s, double power);

/// sqrt(\int r^2 u^2 dr)
Quantity rms_radius(const BoundState& s);

/// |2<T> - <r dV/dr>| / |E| with <T> = E - <V>. The state must be normalized
/// (DomainError otherwise).
double virial_check(const BoundState& s, const RadialProblem& p);

struct ConfinementOptions {
    E2Mode e2_mode = E2Mode::Paper;
    std::optional<Quantity> mass_override;
    std::optional<Quantity> sigma_override;
    int level = 1;
};

struct ConfinementResult {
    Quantity quark_mass = mass(0.0);
    Quantity compton_wavelength = length(0.0);
    Quantity reduced_mass = mass(0.0);
    Quantity sigma = Quantity(0.0, 2);
    Quantity energy = Quantity(0.0, 1);
    Quantity rms_radius = length(0.0);
    double ratio = 0.0;
    int nodes = 0;
};

/// Paper chain end to end: quark mass -> Cornell potential -> mu = m/2 ->
/// ground state on the default grid scaled by the quark Compton wavelength.
ConfinementResult confinement_analysis(const ConfinementOptions& opts = {});

/// rms radius of the ground state over the quark Compton wavelength.
double confinement_ratio(E2Mode mode = E2Mode::Paper);

}  // namespace comptonqcd::spectrum
