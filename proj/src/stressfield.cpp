#include "comptonqcd/stressfield.hpp"

#include "comptonqcd/error.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <numbers>
#include <string>

namespace comptonqcd::stressfield {

namespace {

constexpr double kFourPi = 4.0 * std::numbers::pi;

void require_positive_length(const Quantity& r, const char* what) {
    if (r.dim() != -1)
        throw Error(ErrorCode::DimensionError, std::string(what) + " must be a length");
    if (!(r.value() > 0.0))
        throw Error(ErrorCode::DomainError, std::string(what) + " must be positive");
}

void require_positive_energy(const Quantity& e) {
    if (e.dim() != 1)
        throw Error(ErrorCode::DimensionError, "total energy must have mass dimension 1");
    if (!(e.value() > 0.0))
        throw Error(ErrorCode::InvalidSource, "total energy must be positive");
}

// Composite Simpson over [a, b] with an even number of panels.
template <class F>
double simpson(F&& f, double a, double b, int panels) {
    const double h = (b - a) / panels;
    double sum = f(a) + f(b);
    for (int i = 1; i < panels; ++i) sum += f(a + i * h) * ((i % 2 == 1) ? 4.0 : 2.0);
    return sum * h / 3.0;
}

// \int_0^R r' eps(r') kernel(r') dr', split at every kink of the integrand.
template <class Kernel>
double integrate_profile(const SourceDensity& src, double r, const QuadratureOptions& opts,
                         Kernel&& kernel) {
    const auto& nodes = src.breakpoints();
    const double R = nodes.back();
    std::vector<double> cuts;
    cuts.reserve(nodes.size() + 2);
    cuts.push_back(0.0);
    for (double n : nodes)
        if (n > 0.0) cuts.push_back(n);
    if (r > 0.0 && r < R) cuts.push_back(r);
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

    const int total = std::max(opts.intervals, 2);
    double sum = 0.0;
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
        const double a = cuts[i];
        const double b = cuts[i + 1];
        int panels = static_cast<int>(std::ceil(total * (b - a) / R / 2.0)) * 2;
        panels = std::max(panels, 2);
        // Evaluate the density inside the open segment so that a jump at b
        // (the uniform ball edge) is seen from the left.
        const auto seg_eps = [&](double x) {
            if (x >= b) return src.density(std::nextafter(b, a));
            if (x <= a) return src.density(std::nextafter(a, b));
            return src.density(x);
        };
        sum += simpson([&](double x) { return x * seg_eps(x) * kernel(x); }, a, b, panels);
    }
    return sum;
}

double parse_double(std::string_view s, std::size_t line) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
        s.remove_suffix(1);
    if (!s.empty() && s.front() == '+') s.remove_prefix(1);
    double v = 0.0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size())
        throw Error(ErrorCode::ParseError,
                    "line " + std::to_string(line) + ": not a number: '" + std::string(s) + "'");
    return v;
}

}  // namespace

SourceDensity SourceDensity::uniform_ball(const Quantity& radius, const Quantity& total_energy) {
    require_positive_length(radius, "support radius");
    require_positive_energy(total_energy);
    SourceDensity s;
    s.kind_ = Kind::UniformBall;
    s.radius_ = radius.value();
    s.total_energy_ = total_energy.value();
    const double R = s.radius_;
    const double eps0 = s.total_energy_ / (kFourPi * R * R * R / 3.0);
    s.nodes_ = {0.0, R};
    s.values_ = {eps0, eps0};
    return s;
}

SourceDensity SourceDensity::radial_table(std::span<const DensitySample> samples,
                                          const Quantity& total_energy) {
    require_positive_energy(total_energy);
    if (samples.size() < 2)
        throw Error(ErrorCode::InvalidSource, "radial table needs at least two rows");
    for (std::size_t i = 0; i < samples.size(); ++i) {
        const auto& smp = samples[i];
        if (!std::isfinite(smp.r) || !std::isfinite(smp.eps))
            throw Error(ErrorCode::InvalidSource, "radial table values must be finite");
        if (smp.r < 0.0) throw Error(ErrorCode::InvalidSource, "radii must be non-negative");
        if (smp.eps < 0.0) throw Error(ErrorCode::InvalidSource, "density must be non-negative");
        if (i > 0 && !(smp.r > samples[i - 1].r))
            throw Error(ErrorCode::InvalidSource, "radii must be strictly increasing");
    }
    if (samples.back().eps != 0.0)
        throw Error(ErrorCode::InvalidSource, "last row of a radial table must have eps = 0");

    SourceDensity s;
    s.kind_ = Kind::RadialTable;
    s.total_energy_ = total_energy.value();
    s.radius_ = samples.back().r;
    if (samples.front().r > 0.0) {
        s.nodes_.push_back(0.0);
        s.values_.push_back(samples.front().eps);
    }
    for (const auto& smp : samples) {
        s.nodes_.push_back(smp.r);
        s.values_.push_back(smp.eps);
    }
    const double raw = s.normalization_integral();
    if (!(raw > 0.0))
        throw Error(ErrorCode::InvalidSource, "radial table carries no energy");
    const double scale = s.total_energy_ / raw;
    for (double& v : s.values_) v *= scale;
    return s;
}

SourceDensity SourceDensity::default_for_mass(const Quantity& m) {
    return uniform_ball(compton_wavelength(m), energy(m.value()));
}

double SourceDensity::density(double r) const {
    if (r < 0.0 || r > radius_) return 0.0;
    auto it = std::upper_bound(nodes_.begin(), nodes_.end(), r);
    if (it == nodes_.end()) return values_.back();
    const auto j = static_cast<std::size_t>(it - nodes_.begin());
    if (j == 0) return values_.front();
    const double a = nodes_[j - 1];
    const double b = nodes_[j];
    const double t = (r - a) / (b - a);
    return values_[j - 1] + t * (values_[j] - values_[j - 1]);
}

double SourceDensity::normalization_integral() const {
    double sum = 0.0;
    for (std::size_t i = 0; i + 1 < nodes_.size(); ++i) {
        const double a = nodes_[i];
        const double b = nodes_[i + 1];
        const double slope = (values_[i + 1] - values_[i]) / (b - a);
        const double c0 = values_[i] - slope * a;
        sum += c0 * (b * b * b - a * a * a) / 3.0 + slope * (b * b * b * b - a * a * a * a) / 4.0;
    }
    return kFourPi * sum;
}

SourceDensity load_radial_table_csv(std::istream& in, const Quantity& total_energy) {
    std::string line;
    std::size_t line_no = 0;
    bool header_seen = false;
    std::vector<DensitySample> rows;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        if (!header_seen) {
            std::string compact;
            for (char c : line)
                if (c != ' ' && c != '\t') compact.push_back(c);
            if (compact != "r,eps")
                throw Error(ErrorCode::ParseError, "expected header 'r,eps', got '" + line + "'");
            header_seen = true;
            continue;
        }
        const auto comma = line.find(',');
        if (comma == std::string::npos || line.find(',', comma + 1) != std::string::npos)
            throw Error(ErrorCode::ParseError,
                        "line " + std::to_string(line_no) + ": expected two columns");
        const std::string_view view(line);
        rows.push_back({parse_double(view.substr(0, comma), line_no),
                        parse_double(view.substr(comma + 1), line_no)});
    }
    if (!header_seen) throw Error(ErrorCode::ParseError, "empty radial table");
    return SourceDensity::radial_table(rows, total_energy);
}

SourceDensity load_radial_table_csv(const std::filesystem::path& path,
                                    const Quantity& total_energy) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::IoError, "cannot open " + path.string());
    return load_radial_table_csv(in, total_energy);
}

Quantity radial_reduce_inverse(const SourceDensity& src, const Quantity& r,
                               const QuadratureOptions& opts) {
    if (r.dim() != -1) throw Error(ErrorCode::DimensionError, "radius must be a length");
    if (r.value() < 0.0) throw Error(ErrorCode::DomainError, "radius must be non-negative");
    const double rv = r.value();
    // (r + r') - |r - r'| = 2 min(r, r'), divided by r.
    const double integral = integrate_profile(src, rv, opts, [rv](double x) {
        return (rv == 0.0 || x >= rv) ? 1.0 : x / rv;
    });
    return Quantity(kFourPi * integral, 2);
}

Quantity radial_reduce_linear(const SourceDensity& src, const Quantity& r,
                              const QuadratureOptions& opts) {
    if (r.dim() != -1) throw Error(ErrorCode::DimensionError, "radius must be a length");
    if (r.value() < 0.0) throw Error(ErrorCode::DomainError, "radius must be non-negative");
    const double rv = r.value();
    // [(r + r')^3 - |r - r'|^3] / (2r), expanded to avoid cancellation.
    const double integral = integrate_profile(src, rv, opts, [rv](double x) {
        if (rv == 0.0 || x >= rv) return 3.0 * x * x + rv * rv;
        return (3.0 * rv * rv * x + x * x * x) / rv;
    });
    return Quantity(kFourPi / 3.0 * integral, 0);
}

Quantity near_field_potential(const SourceDensity& src, const Quantity& m, const Quantity& r,
                              const QuadratureOptions& opts) {
    if (m.dim() != 1) throw Error(ErrorCode::DimensionError, "m must be a mass");
    if (!(m.value() > 0.0)) throw Error(ErrorCode::InvalidMass, "mass must be positive");
    const Quantity inverse = radial_reduce_inverse(src, r, opts);
    const Quantity linear = radial_reduce_linear(src, r, opts);
    return 4.0 * m * inverse + 2.0 * m * (m * m) * linear;
}

Rational far_field_charge_factor(int d) {
    if (d < 1 || d > 3)
        throw Error(ErrorCode::InvalidDimension,
                    "spatial dimension must be 1, 2 or 3, got " + std::to_string(d));
    return Rational(d, 3);
}

Quantity far_field_coupling(const SourceDensity& src, const Quantity& m, int d,
                            const Quantity& r, E2Mode mode) {
    const Rational factor = far_field_charge_factor(d);
    if (m.dim() != 1) throw Error(ErrorCode::DimensionError, "m must be a mass");
    if (r.dim() != -1) throw Error(ErrorCode::DimensionError, "radius must be a length");
    const Quantity l = compton_wavelength(m);
    if (!(r.value() > l.value()))
        throw Error(ErrorCode::RegimeError,
                    "far-field coupling only applies outside the Compton wavelength");
    // (d/3) kappa 2m E_tot / r with kappa = e^2 / (2 m^2)
    //   = (d/3) e^2 (E_tot / m) / r
    const double coupling = to_double(factor * fine_structure_exact(mode));
    const double energy_ratio = src.total_energy().value() / m.value();
    return Quantity(coupling * energy_ratio / r.value(), 1);
}

}  // namespace comptonqcd::stressfield
