#include "comptonqcd/potential.hpp"

#include "comptonqcd/error.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <cmath>
#include <numeric>

namespace comptonqcd::potential {

namespace {

void require_positive_length(const Quantity& l, const char* what) {
    if (l.dim() != -1)
        throw Error(ErrorCode::DimensionError, std::string(what) + " must be a length");
    if (!(l.value() > 0.0))
        throw Error(ErrorCode::DomainError, std::string(what) + " must be positive");
}

struct Point {
    double x;
    double y;
};

double pair_sum(const std::vector<Rational>& charges, const std::vector<Point>& pts,
                double l, const Rational& e2) {
    double sum = 0.0;
    for (std::size_t i = 0; i < charges.size(); ++i) {
        for (std::size_t j = i + 1; j < charges.size(); ++j) {
            const double dist = std::hypot(pts[i].x - pts[j].x, pts[i].y - pts[j].y) * l;
            if (dist == 0.0)
                throw Error(ErrorCode::SingularConfiguration, "two charges coincide");
            sum += to_double(charges[i] * charges[j] * e2) / dist;
        }
    }
    return sum;
}

std::vector<Point> on_line(const std::vector<double>& positions) {
    std::vector<Point> pts;
    pts.reserve(positions.size());
    for (double p : positions) pts.push_back({p, 0.0});
    return pts;
}

// Index of the middle charge in position order, plus its two neighbours.
struct Middle {
    std::size_t index;
    double lower;
    double upper;
};

Middle middle_charge(const QuarkConfiguration& cfg) {
    const auto n = cfg.positions.size();
    if (n < 3 || n % 2 == 0)
        throw Error(ErrorCode::DomainError,
                    "central displacement needs an odd number (>= 3) of charges");
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return cfg.positions[a] < cfg.positions[b]; });
    const auto mid = n / 2;
    return {order[mid], cfg.positions[order[mid - 1]], cfg.positions[order[mid + 1]]};
}

// Richardson-extrapolated central differences, O(h^4).
template <class F>
double first_derivative(F&& f, double h) {
    const auto d = [&](double s) { return (f(s) - f(-s)) / (2.0 * s); };
    return (4.0 * d(h / 2.0) - d(h)) / 3.0;
}

template <class F>
double second_derivative(F&& f, double h) {
    const double f0 = f(0.0);
    const auto d = [&](double s) { return (f(s) - 2.0 * f0 + f(-s)) / (s * s); };
    return (4.0 * d(h / 2.0) - d(h)) / 3.0;
}

}  // namespace

CornellPotential::CornellPotential(const Quantity& alpha, const Quantity& sigma)
    : alpha_(alpha), sigma_(sigma) {
    if (alpha.dim() != 0) throw Error(ErrorCode::DimensionError, "alpha must be dimensionless");
    if (sigma.dim() != 2)
        throw Error(ErrorCode::DimensionError, "sigma must have mass dimension 2");
    if (alpha.value() < 0.0 || sigma.value() < 0.0)
        throw Error(ErrorCode::DomainError, "Cornell coefficients must be non-negative");
}

CornellPotential cornell_from_paper(const Quantity& m_quark, std::optional<Quantity> l) {
    if (m_quark.dim() != 1) throw Error(ErrorCode::DimensionError, "quark mass must be a mass");
    if (!(m_quark.value() > 0.0)) throw Error(ErrorCode::InvalidMass, "quark mass must be positive");
    const Quantity sep = l ? *l : compton_wavelength(m_quark);
    require_positive_length(sep, "separation");
    // beta = 1/m, with the electron mass as the unit of mass.
    const Quantity beta = dimensionless(1.0) / m_quark;
    const Quantity m_e = mass(1.0);
    Quantity sigma = beta * m_e / (sep * sep);
    // sep = 1/m makes this exactly m; avoid the round trip through 1/m.
    if (!l) sigma = Quantity(m_quark.value(), 2);
    return CornellPotential(dimensionless(1.0), sigma);
}

Quantity evaluate_cornell(const CornellPotential& v, const Quantity& r) {
    if (r.dim() != -1) throw Error(ErrorCode::DimensionError, "radius must be a length");
    if (!(r.value() > 0.0)) throw Error(ErrorCode::DomainError, "radius must be positive");
    return Quantity(-v.alpha().value() / r.value() + v.sigma().value() * r.value(), 1);
}

Quantity cornell_crossover(const CornellPotential& v) {
    if (!(v.alpha().value() > 0.0) || !(v.sigma().value() > 0.0))
        throw Error(ErrorCode::DomainError, "crossover needs alpha > 0 and sigma > 0");
    return length(std::sqrt(v.alpha().value() / v.sigma().value()));
}

Rational charge_fraction(int d) {
    if (d < 1 || d > 3)
        throw Error(ErrorCode::InvalidDimension,
                    "spatial dimension must be 1, 2 or 3, got " + std::to_string(d));
    // Each of the d diagonal stress components carries a third of the
    // energy density.
    return Rational(d, 3);
}

Rational QuarkConfiguration::total_charge() const {
    return std::accumulate(charges.begin(), charges.end(), Rational(0));
}

void validate(const QuarkConfiguration& cfg) {
    if (cfg.charges.size() != cfg.positions.size())
        throw Error(ErrorCode::DomainError, "charges and positions differ in length");
    if (cfg.charges.size() < 2)
        throw Error(ErrorCode::DomainError, "a configuration needs at least two charges");
    require_positive_length(cfg.separation, "separation l");
    for (double p : cfg.positions)
        if (!std::isfinite(p)) throw Error(ErrorCode::DomainError, "positions must be finite");
    for (std::size_t i = 0; i < cfg.positions.size(); ++i)
        for (std::size_t j = i + 1; j < cfg.positions.size(); ++j)
            if (cfg.positions[i] == cfg.positions[j])
                throw Error(ErrorCode::SingularConfiguration, "two charges coincide");
}

QuarkConfiguration proton_configuration(const Quantity& l) {
    require_positive_length(l, "separation l");
    return {{Rational(2, 3), Rational(-1, 3), Rational(2, 3)}, {-1.0, 0.0, 1.0}, l};
}

Quantity configuration_energy(const QuarkConfiguration& cfg, E2Mode mode) {
    validate(cfg);
    return energy(pair_sum(cfg.charges, on_line(cfg.positions), cfg.separation.value(),
                           fine_structure_exact(mode)));
}

Quantity central_displacement_energy(const QuarkConfiguration& cfg, double disp,
                                     DisplacementAxis axis, E2Mode mode) {
    validate(cfg);
    if (!std::isfinite(disp)) throw Error(ErrorCode::DomainError, "displacement must be finite");
    const Middle mid = middle_charge(cfg);
    auto pts = on_line(cfg.positions);
    if (axis == DisplacementAxis::Axial) {
        const double moved = cfg.positions[mid.index] + disp;
        if (!(moved > mid.lower && moved < mid.upper))
            throw Error(ErrorCode::SingularConfiguration,
                        "axial displacement reaches a neighbouring charge");
        pts[mid.index].x = moved;
    } else {
        pts[mid.index].y = disp;
    }
    return energy(pair_sum(cfg.charges, pts, cfg.separation.value(), fine_structure_exact(mode)));
}

Quantity paper_confinement_slope(const Quantity& l, E2Mode mode) {
    require_positive_length(l, "separation l");
    return Quantity(to_double(fine_structure_exact(mode) / 9) / (l.value() * l.value()), 2);
}

LinearizationReport linearize_proton(const Quantity& l, E2Mode mode) {
    const QuarkConfiguration cfg = proton_configuration(l);
    const double lv = l.value();
    const double e2 = fine_structure_constant(mode).value();
    // Displacements are in units of l; convert derivatives to physical ones.
    const auto axial = [&](double s) {
        return central_displacement_energy(cfg, s, DisplacementAxis::Axial, mode).value();
    };
    const auto transverse = [&](double s) {
        return central_displacement_energy(cfg, s, DisplacementAxis::Transverse, mode).value();
    };
    // Central charge against one outer charge only.
    const QuarkConfiguration pair{{Rational(-1, 3), Rational(2, 3)}, {0.0, 1.0}, l};
    const auto pair_energy = [&](double s) {
        QuarkConfiguration moved = pair;
        moved.positions[0] = s;
        return configuration_energy(moved, mode).value();
    };

    constexpr double h = 1e-2;
    LinearizationReport rep{};
    rep.separation = lv;
    rep.axial_first_derivative = first_derivative(axial, h) / lv;
    rep.axial_second_derivative = second_derivative(axial, h) / (lv * lv);
    rep.axial_second_derivative_exact = -8.0 / 9.0 * e2 / (lv * lv * lv);
    rep.transverse_second_derivative = second_derivative(transverse, h) / (lv * lv);
    rep.transverse_second_derivative_exact = 4.0 / 9.0 * e2 / (lv * lv * lv);
    rep.single_pair_slope = std::abs(first_derivative(pair_energy, h) / lv);
    rep.single_pair_slope_exact = 2.0 / 9.0 * e2 / (lv * lv);
    rep.declared_slope = paper_confinement_slope(l, mode).value();
    return rep;
}

std::string to_json(const QuarkConfiguration& cfg) {
    nlohmann::ordered_json j;
    auto charges = nlohmann::ordered_json::array();
    for (const auto& q : cfg.charges) charges.push_back(to_string(q));
    j["charges"] = std::move(charges);
    j["positions"] = cfg.positions;
    j["l"] = cfg.separation.value();
    return j.dump();
}

QuarkConfiguration configuration_from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw Error(ErrorCode::ParseError, e.what());
    }
    if (!j.is_object()) throw Error(ErrorCode::ParseError, "configuration must be a JSON object");
    for (const auto& [key, _] : j.items())
        if (key != "charges" && key != "positions" && key != "l")
            throw Error(ErrorCode::ParseError, "unknown configuration key '" + key + "'");
    if (!j.contains("charges") || !j["charges"].is_array() || !j.contains("positions") ||
        !j["positions"].is_array() || !j.contains("l") || !j["l"].is_number())
        throw Error(ErrorCode::ParseError,
                    "configuration needs 'charges', 'positions' arrays and a numeric 'l'");

    QuarkConfiguration cfg;
    for (const auto& c : j["charges"]) {
        if (!c.is_string()) throw Error(ErrorCode::ParseError, "charges must be rational strings");
        cfg.charges.push_back(parse_rational(c.get<std::string>()));
    }
    for (const auto& p : j["positions"]) {
        if (!p.is_number()) throw Error(ErrorCode::ParseError, "positions must be numbers");
        cfg.positions.push_back(p.get<double>());
    }
    cfg.separation = length(j["l"].get<double>());
    validate(cfg);
    return cfg;
}

}  // namespace comptonqcd::potential
