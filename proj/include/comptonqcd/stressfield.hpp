#pragma once

// Spherically symmetric energy-density sources and the two radial kernel
// integrals
//
//   inverse(r) = \int eps(x') / |x - x'| d^3x'
//   linear(r)  = \int eps(x') |x - x'| d^3x'
//
// from which the near-field potential and the far-field coupling are built.

#include "comptonqcd/natunits.hpp"
#include "comptonqcd/rational.hpp"

#include <filesystem>
#include <istream>
#include <span>
#include <vector>

namespace comptonqcd::stressfield {

struct DensitySample {
    double r;
    double eps;
};

struct QuadratureOptions {
    /// Composite Simpson intervals spread over [0, R].
    int intervals = 4096;
};

class SourceDensity {
public:
    enum class Kind { UniformBall, RadialTable };

    /// Constant density inside radius R carrying total energy E_tot.
    static SourceDensity uniform_ball(const Quantity& radius,
                                      const Quantity& total_energy);

    /// Piecewise-linear density through the samples. r must be strictly
    /// increasing and the last sample must have eps = 0 (it fixes R). The
    /// density is rescaled so that 4 pi \int r^2 eps dr = E_tot.
    static SourceDensity radial_table(std::span<const DensitySample> samples,
                                      const Quantity& total_energy);

    /// The source used throughout: R = 1/m, E_tot = m.
    static SourceDensity default_for_mass(const Quantity& m);

    Kind kind() const noexcept { return kind_; }
    Quantity support_radius() const { return length(radius_); }
    Quantity total_energy() const { return energy(total_energy_); }

    /// eps(r); zero outside the support.
    double density(double r) const;

    /// Radii where eps has a kink (table nodes), ending with R.
    const std::vector<double>& breakpoints() const noexcept { return nodes_; }

    /// 4 pi \int r^2 eps dr evaluated exactly from the piecewise profile.
    double normalization_integral() const;

private:
    SourceDensity() = default;

    Kind kind_ = Kind::UniformBall;
    double radius_ = 0.0;
    double total_energy_ = 0.0;
    // Table nodes and values after renormalization. A uniform ball is the
    // two-node table {(0, eps0), (R, eps0)} with a jump to zero past R.
    std::vector<double> nodes_;
    std::vector<double> values_;
};

/// Reads a two-column CSV with header "r,eps".
SourceDensity load_radial_table_csv(std::istream& in, const Quantity& total_energy);
SourceDensity load_radial_table_csv(const std::filesystem::path& path,
                                    const Quantity& total_energy);

/// \int eps/|x-x'| d^3x'. Mass dimension 2; equals E_tot/r outside the
/// support. r = 0 gives the exact limit 4 pi \int r' eps dr'.
Quantity radial_reduce_inverse(const SourceDensity& src, const Quantity& r,
                               const QuadratureOptions& opts = {});

/// \int eps |x-x'| d^3x'. Dimensionless; for a uniform ball with r >= R it
/// equals E_tot (r + R^2/(5r)). r = 0 gives 4 pi \int r'^3 eps dr'.
Quantity radial_reduce_linear(const SourceDensity& src, const Quantity& r,
                              const QuadratureOptions& opts = {});

/// 4m * inverse(r) + 2m * m^2 * linear(r). The second time derivative of the
/// source is replaced by m^2 (two applications of d/dtau -> m), and
/// position-independent terms are dropped. Mass dimension 3.
Quantity near_field_potential(const SourceDensity& src, const Quantity& m,
                              const Quantity& r, const QuadratureOptions& opts = {});

/// Far-field coupling (d/3) * kappa * 2m * E_tot / r with kappa = e^2/(2 m^2),
/// so that the default source (E_tot = m) in d = 3 gives exactly e^2/r.
/// Only valid outside the Compton wavelength (RegimeError otherwise).
Quantity far_field_coupling(const SourceDensity& src, const Quantity& m, int d,
                            const Quantity& r, E2Mode mode = E2Mode::Paper);

/// The exact factor d/3 multiplying the d = 3 coupling.
Rational far_field_charge_factor(int d);

}  // namespace comptonqcd::stressfield
