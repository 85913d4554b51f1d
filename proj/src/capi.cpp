#include "comptonqcd/comptonqcd.h"

#include "comptonqcd/error.hpp"
#include "comptonqcd/estimator.hpp"
#include "comptonqcd/natunits.hpp"
#include "comptonqcd/potential.hpp"
#include "comptonqcd/report.hpp"
#include "comptonqcd/spectrum.hpp"
#include "comptonqcd/stressfield.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <exception>
#include <new>
#include <optional>
#include <string>

using namespace comptonqcd;

struct cqcd_source {
    stressfield::SourceDensity density;
};

struct cqcd_configuration {
    potential::QuarkConfiguration cfg;
};

struct cqcd_bound_state {
    spectrum::BoundState state;
};

struct cqcd_table {
    report::Table table;
};

namespace {

thread_local std::string g_last_error;

template <class F>
cqcd_status guarded(F&& body) noexcept {
    try {
        body();
        g_last_error.clear();
        return CQCD_OK;
    } catch (const Error& e) {
        g_last_error = e.what();
        return static_cast<cqcd_status>(static_cast<int>(e.code()));
    } catch (const std::bad_alloc&) {
        g_last_error = "out of memory";
        return CQCD_ERR_INTERNAL;
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return CQCD_ERR_INTERNAL;
    } catch (...) {
        g_last_error = "unknown error";
        return CQCD_ERR_INTERNAL;
    }
}

E2Mode to_mode(cqcd_e2_mode m) {
    switch (m) {
        case CQCD_E2_PAPER: return E2Mode::Paper;
        case CQCD_E2_PRECISE: return E2Mode::Precise;
        case CQCD_E2_UNIT: return E2Mode::Unit;
    }
    throw Error(ErrorCode::DomainError, "unknown e2 mode");
}

report::Format to_format(cqcd_format f) {
    switch (f) {
        case CQCD_FORMAT_CSV: return report::Format::Csv;
        case CQCD_FORMAT_JSON: return report::Format::Json;
        case CQCD_FORMAT_TABLE: return report::Format::Table;
    }
    throw Error(ErrorCode::DomainError, "unknown output format");
}

spectrum::RadialProblem to_problem(const cqcd_radial_problem& p) {
    return {potential::CornellPotential(dimensionless(p.alpha), Quantity(p.sigma, 2)),
            mass(p.reduced_mass),
            p.angular_momentum,
            length(p.r_min),
            length(p.r_max),
            p.grid_points};
}

void from_problem(const spectrum::RadialProblem& p, cqcd_radial_problem* out) {
    out->alpha = p.potential.alpha().value();
    out->sigma = p.potential.sigma().value();
    out->reduced_mass = p.reduced_mass.value();
    out->angular_momentum = p.angular_momentum;
    out->r_min = p.r_min.value();
    out->r_max = p.r_max.value();
    out->grid_points = p.grid_points;
}

// Returns CQCD_ERR_BUFFER_TOO_SMALL without throwing so that the message
// stays meaningful.
cqcd_status copy_out(const std::string& text, char* buf, size_t capacity, size_t* needed) {
    if (needed) *needed = text.size() + 1;
    if (buf == nullptr || capacity < text.size() + 1) {
        g_last_error = "buffer too small";
        return CQCD_ERR_BUFFER_TOO_SMALL;
    }
    std::memcpy(buf, text.c_str(), text.size() + 1);
    return CQCD_OK;
}

template <class Make>
cqcd_status text_result(Make&& make, char* buf, size_t capacity, size_t* needed) noexcept {
    std::string text;
    const cqcd_status st = guarded([&] { text = make(); });
    if (st != CQCD_OK) return st;
    return copy_out(text, buf, capacity, needed);
}

}  // namespace

extern "C" {

const char* cqcd_status_string(cqcd_status status) {
    switch (status) {
        case CQCD_OK: return "ok";
        case CQCD_ERR_NULL_ARGUMENT: return "NullArgument";
        case CQCD_ERR_BUFFER_TOO_SMALL: return "BufferTooSmall";
        case CQCD_ERR_INTERNAL: return "InternalError";
        default:
            if (status >= CQCD_ERR_INVALID_QUANTITY && status <= CQCD_ERR_IO)
                return to_string(static_cast<ErrorCode>(status));
            return "Unknown";
    }
}

const char* cqcd_last_error(void) { return g_last_error.c_str(); }

const char* cqcd_version(void) { return "1.0.0"; }

cqcd_status cqcd_parse_e2_mode(const char* text, cqcd_e2_mode* out) {
    if (!text || !out) return CQCD_ERR_NULL_ARGUMENT;
    return guarded([&] {
        switch (parse_e2_mode(text)) {
            case E2Mode::Paper: *out = CQCD_E2_PAPER; break;
            case E2Mode::Precise: *out = CQCD_E2_PRECISE; break;
            case E2Mode::Unit: *out = CQCD_E2_UNIT; break;
        }
    });
}

cqcd_status cqcd_fine_structure(cqcd_e2_mode mode, double* out) {
    if (!out) return CQCD_ERR_NULL_ARGUMENT;
    return guarded([&] { *out = fine_structure_constant(to_mode(mode)).value(); });
}

cqcd_status cqcd_fine_structure_exact(cqcd_e2_mode mode, int64_t* num, int64_t* den) {
    if (!num || !den) return CQCD_ERR_NULL_ARGUMENT;
    return guarded([&] {
        const Rational q = fine_structure_exact(to_mode(mode));
        *num = q.numerator();
        *den = q.denominator();
    });
}

cqcd_status cqcd_compton_wavelength(double m, double* out) {
    if (!out) return CQCD_ERR_NULL_ARGUMENT;
    return guarded([&] { *out = compton_wavelength(mass(m)).value(); });
}

cqcd_status cqcd_charge_fraction(int d, int64_t* num, int64_t* den) {
    if (!num || !den) return CQCD_ERR_NULL_ARGUMENT;
    return guarded([&] {
        const Rational q = potential::charge_fraction(d);
        *num = q.numerator();
        *den = q.denominator();
    });
}

cqcd_status cqcd_cornell_from_paper(double m_quark, double separation, double* alpha,
                                    double* sigma) {
    if (!alpha || !sigma) return CQCD_ERR_NULL_ARGUMENT;
    return guarded([&] {
        std::optional<Quantity> l;
        if (separation > 0.0) l = length(separation);
        const auto v = potential::cornell_from_paper(mass(m_quark), l);
        *alpha = v.alpha().value();
        *sigma = v.sigma().value();
    });
}

cqcd_status cqcd_cornell_evaluate(double alpha, double sigma, double r, double* out) {
    if (!out) return CQCD_ERR_NULL_ARGUMENT;
    return guarded([&] {
        const potential::CornellPotential v(dimensionless(alpha), Quantity(sigma, 2));
        *out = potential::evaluate_cornell(v, length(r)).value();
    });
}

cqcd_status cqcd_paper_confinement_slope(double l, cqcd_e2_mode mode, double* out) {
    if (!out) return CQCD_ERR_NULL_ARGUMENT;
    return guarded(
        [&] { *out = potential::paper_confinement_slope(length(l), to_mode(mode)).value(); });
}

cqcd_status cqcd_effective_mass_from_slope(int64_t k_num, int64_t k_den, cqcd_e2_mode mode,
                                           double* out) {
    if (!out) return CQCD_ERR_NULL_ARGUMENT;
    return guarded([&] {
        if (k_den == 0) throw Error(ErrorCode::DomainError, "zero denominator");
        *out = estimator::effective_mass_from_slope(Rational(k_num, k_den), to_mode(mode))
                   .mass.value();
    });
}

cqcd_status cqcd_quark_mass(cqcd_e2_mode mode, double* out, int* order_satisfied) {
    if (!out) return CQCD_ERR_NULL_ARGUMENT;
    return guarded([&] {
        const auto est = estimator::quark_mass_estimate(to_mode(mode));
        *out = est.mass.value();
        if (order_satisfied) *order_satisfied = estimator::order_of_magnitude_satisfied(est) ? 1 : 0;
    });
}

cqcd_status cqcd_pion_mass(cqcd_e2_mode mode, double* single_fermion, double* pion) {
    return guarded([&] {
        if (single_fermion)
            *single_fermion =
                estimator::pion_single_fermion_estimate(to_mode(mode)).mass.value();
        if (pion) *pion = estimator::pion_mass_estimate(to_mode(mode)).mass.value();
    });
}

cqcd_status cqcd_classify_regime(double scale_over_compton, double delta, cqcd_regime* out) {
    if (!out) return CQCD_ERR_NULL_ARGUMENT;
    return guarded([&] {
        switch (estimator::classify_regime(scale_over_compton, delta)) {
            case estimator::Regime::Electron: *out = CQCD_REGIME_ELECTRON; break;
            case estimator::Regime::Pion: *out = CQCD_REGIME_PION; break;
            case estimator::Regime::Quark: *out = CQCD_REGIME_QUARK; break;
        }
    });
}

const char* cqcd_regime_name(cqcd_regime regime) {
    switch (regime) {
        case CQCD_REGIME_ELECTRON: return "Electron";
        case CQCD_REGIME_PION: return "Pion";
        case CQCD_REGIME_QUARK: return "Quark";
    }
    return "Unknown";
}

cqcd_status cqcd_source_uniform_ball(double radius, double total_energy, cqcd_source** out) {
    if (!out) return CQCD_ERR_NULL_ARGUMENT;
    return guarded([&] {
        *out = new cqcd_source{
            stressfield::SourceDensity::uniform_ball(length(radius), energy(total_energy))};
    });
}

cqcd_status cqcd_source_default(double m, cqcd_source** out) {
    if (!out) return CQCD_ERR_NULL_ARGUMENT;
    return guarded(
        [&] { *out = new cqcd_source{stressfield::SourceDensity::default_for_mass(mass(m))}; });
}

cqcd_status cqcd_source_from_csv(const char* path, double total_energy, cqcd_source** out) {
    if (!path || !out) return CQCD_ERR_NULL_ARGUMENT;
    return guarded([&] {
        *out = new cqcd_source{
            stressfield::load_radial_table_csv(std::filesystem::path(path), energy(total_energy))};
    });
}

void cqcd_source_destroy(cqcd_source* src) { delete src; }

cqcd_status cqcd_source_support_radius(const cqcd_source* src, double* out) {
    if (!src || !out) return CQCD_ERR_NULL_ARGUMENT;
    *out = src->density.support_radius().value();
    return CQCD_OK;
}

cqcd_status cqcd_source_total_energy(const cqcd_source* src, double* out) {
    if (!src || !out) return CQCD_ERR_NULL_ARGUMENT;
    *out = src->density.total_energy().value();
    return CQCD_OK;
}

cqcd_status cqcd_kernel_inverse(const cqcd_source* src, double r, double* out) {
    if (!src || !out) return CQCD_ERR_NULL_ARGUMENT;
    return guarded(
        [&] { *out = stressfield::radial_reduce_inverse(src->density, length(r)).value(); });
}

cqcd_status cqcd_kernel_linear(const cqcd_source* src, double r, double* out) {
    if (!src || !out) return CQCD_ERR_NULL_ARGUMENT;
    return guarded(
        [&] { *out = stressfield::radial_reduce_linear(src->density, length(r)).value(); });
}

cqcd_status cqcd_near_field(const cqcd_source* src, double m, double r, double* out) {
    if (!src || !out) return CQCD_ERR_NULL_ARGUMENT;
    return guarded([&] {
        *out = stressfield::near_field_potential(src->density, mass(m), length(r)).value();
    });
}

cqcd_status cqcd_far_field(const cqcd_source* src, double m, int d, double r, cqcd_e2_mode mode,
                           double* out) {
    if (!src || !out) return CQCD_ERR_NULL_ARGUMENT;
    return guarded([&] {
        *out = stressfield::far_field_coupling(src->density, mass(m), d, length(r), to_mode(mode))
                   .value();
    });
}

cqcd_status cqcd_configuration_proton(double l, cqcd_configuration** out) {
    if (!out) return CQCD_ERR_NULL_ARGUMENT;
    return guarded(
        [&] { *out = new cqcd_configuration{potential::proton_configuration(length(l))}; });
}

cqcd_status cqcd_configuration_from_json(const char* json, cqcd_configuration** out) {
    if (!json || !out) return CQCD_ERR_NULL_ARGUMENT;
    return guarded(
        [&] { *out = new cqcd_configuration{potential::configuration_from_json(json)}; });
}

cqcd_status cqcd_configuration_to_json(const cqcd_configuration* cfg, char* buf, size_t capacity,
                                       size_t* needed) {
    if (!cfg) return CQCD_ERR_NULL_ARGUMENT;
    return text_result([&] { return potential::to_json(cfg->cfg); }, buf, capacity, needed);
}

void cqcd_configuration_destroy(cqcd_configuration* cfg) { delete cfg; }

cqcd_status cqcd_configuration_energy(const cqcd_configuration* cfg, cqcd_e2_mode mode,
                                      double* out) {
    if (!cfg || !out) return CQCD_ERR_NULL_ARGUMENT;
    return guarded(
        [&] { *out = potential::configuration_energy(cfg->cfg, to_mode(mode)).value(); });
}

cqcd_status cqcd_configuration_displaced_energy(const cqcd_configuration* cfg, double disp,
                                                cqcd_axis axis, cqcd_e2_mode mode, double* out) {
    if (!cfg || !out) return CQCD_ERR_NULL_ARGUMENT;
    return guarded([&] {
        const auto ax = axis == CQCD_AXIS_TRANSVERSE ? potential::DisplacementAxis::Transverse
                                                     : potential::DisplacementAxis::Axial;
        *out = potential::central_displacement_energy(cfg->cfg, disp, ax, to_mode(mode)).value();
    });
}

cqcd_status cqcd_radial_problem_default(double alpha, double sigma, double reduced_mass,
                                        int angular_momentum, double length_scale,
                                        cqcd_radial_problem* out) {
    if (!out) return CQCD_ERR_NULL_ARGUMENT;
    return guarded([&] {
        const potential::CornellPotential v(dimensionless(alpha), Quantity(sigma, 2));
        from_problem(spectrum::default_problem(v, mass(reduced_mass), length(length_scale),
                                               angular_momentum),
                     out);
    });
}

cqcd_status cqcd_radial_problem_auto(double alpha, double sigma, double reduced_mass,
                                     int angular_momentum, int level, cqcd_radial_problem* out) {
    if (!out) return CQCD_ERR_NULL_ARGUMENT;
    return guarded([&] {
        const potential::CornellPotential v(dimensionless(alpha), Quantity(sigma, 2));
        from_problem(spectrum::auto_problem(v, mass(reduced_mass), level, angular_momentum), out);
    });
}

cqcd_status cqcd_solve_bound_state(const cqcd_radial_problem* problem, int level,
                                   cqcd_bound_state** out) {
    if (!problem || !out) return CQCD_ERR_NULL_ARGUMENT;
    return guarded([&] {
        *out = new cqcd_bound_state{spectrum::solve_bound_state(to_problem(*problem), level)};
    });
}

void cqcd_bound_state_destroy(cqcd_bound_state* state) { delete state; }

cqcd_status cqcd_bound_state_energy(const cqcd_bound_state* state, double* out) {
    if (!state || !out) return CQCD_ERR_NULL_ARGUMENT;
    *out = state->state.energy.value();
    return CQCD_OK;
}

cqcd_status cqcd_bound_state_nodes(const cqcd_bound_state* state, int* out) {
    if (!state || !out) return CQCD_ERR_NULL_ARGUMENT;
    *out = state->state.nodes;
    return CQCD_OK;
}

cqcd_status cqcd_bound_state_rms_radius(const cqcd_bound_state* state, double* out) {
    if (!state || !out) return CQCD_ERR_NULL_ARGUMENT;
    *out = state->state.rms_radius.value();
    return CQCD_OK;
}

cqcd_status cqcd_bound_state_size(const cqcd_bound_state* state, size_t* out) {
    if (!state || !out) return CQCD_ERR_NULL_ARGUMENT;
    *out = state->state.r.size();
    return CQCD_OK;
}

cqcd_status cqcd_bound_state_samples(const cqcd_bound_state* state, double* r, double* u,
                                     size_t count) {
    if (!state) return CQCD_ERR_NULL_ARGUMENT;
    const size_t n = std::min(count, state->state.r.size());
    for (size_t i = 0; i < n; ++i) {
        if (r) r[i] = state->state.r[i];
        if (u) u[i] = state->state.u[i];
    }
    return CQCD_OK;
}

cqcd_status cqcd_virial_residual(const cqcd_bound_state* state, const cqcd_radial_problem* problem,
                                 double* out) {
    if (!state || !problem || !out) return CQCD_ERR_NULL_ARGUMENT;
    return guarded([&] { *out = spectrum::virial_check(state->state, to_problem(*problem)); });
}

cqcd_status cqcd_bound_state_sidecar_json(const cqcd_bound_state* state, char* buf,
                                          size_t capacity, size_t* needed) {
    if (!state) return CQCD_ERR_NULL_ARGUMENT;
    return text_result([&] { return report::bound_state_sidecar(state->state); }, buf, capacity,
                       needed);
}

cqcd_status cqcd_confinement_analysis(cqcd_e2_mode mode, double quark_mass, int sigma_override,
                                      double sigma, cqcd_confinement* out) {
    if (!out) return CQCD_ERR_NULL_ARGUMENT;
    return guarded([&] {
        spectrum::ConfinementOptions opts;
        opts.e2_mode = to_mode(mode);
        if (quark_mass > 0.0) opts.mass_override = mass(quark_mass);
        if (sigma_override) opts.sigma_override = Quantity(sigma, 2);
        const auto res = spectrum::confinement_analysis(opts);
        *out = {res.quark_mass.value(), res.compton_wavelength.value(), res.reduced_mass.value(),
                res.sigma.value(),      res.energy.value(),             res.rms_radius.value(),
                res.ratio,              res.nodes};
    });
}

cqcd_status cqcd_table_create(const char* title, const char* const* columns, size_t column_count,
                              cqcd_table** out) {
    if (!title || !out || (column_count > 0 && !columns)) return CQCD_ERR_NULL_ARGUMENT;
    return guarded([&] {
        std::vector<std::string> cols;
        for (size_t i = 0; i < column_count; ++i) {
            if (!columns[i]) throw Error(ErrorCode::DomainError, "null column name");
            cols.emplace_back(columns[i]);
        }
        *out = new cqcd_table{report::Table(title, std::move(cols))};
    });
}

void cqcd_table_destroy(cqcd_table* table) { delete table; }

cqcd_status cqcd_table_begin_row(cqcd_table* table) {
    if (!table) return CQCD_ERR_NULL_ARGUMENT;
    return guarded([&] { table->table.begin_row(); });
}

cqcd_status cqcd_table_push_real(cqcd_table* table, double value) {
    if (!table) return CQCD_ERR_NULL_ARGUMENT;
    return guarded([&] {
        if (std::isfinite(value))
            table->table.push(value);
        else
            table->table.push(std::monostate{});
    });
}

cqcd_status cqcd_table_push_integer(cqcd_table* table, int64_t value) {
    if (!table) return CQCD_ERR_NULL_ARGUMENT;
    return guarded([&] { table->table.push(std::int64_t{value}); });
}

cqcd_status cqcd_table_push_rational(cqcd_table* table, int64_t num, int64_t den) {
    if (!table) return CQCD_ERR_NULL_ARGUMENT;
    return guarded([&] {
        if (den == 0) throw Error(ErrorCode::DomainError, "zero denominator");
        table->table.push(Rational(num, den));
    });
}

cqcd_status cqcd_table_push_text(cqcd_table* table, const char* text) {
    if (!table || !text) return CQCD_ERR_NULL_ARGUMENT;
    return guarded([&] { table->table.push(std::string(text)); });
}

cqcd_status cqcd_table_push_empty(cqcd_table* table) {
    if (!table) return CQCD_ERR_NULL_ARGUMENT;
    return guarded([&] { table->table.push(std::monostate{}); });
}

cqcd_status cqcd_table_meta_real(cqcd_table* table, const char* key, double value) {
    if (!table || !key) return CQCD_ERR_NULL_ARGUMENT;
    return guarded([&] { table->table.set_meta(key, value); });
}

cqcd_status cqcd_table_meta_integer(cqcd_table* table, const char* key, int64_t value) {
    if (!table || !key) return CQCD_ERR_NULL_ARGUMENT;
    return guarded([&] { table->table.set_meta(key, std::int64_t{value}); });
}

cqcd_status cqcd_table_meta_text(cqcd_table* table, const char* key, const char* value) {
    if (!table || !key || !value) return CQCD_ERR_NULL_ARGUMENT;
    return guarded([&] { table->table.set_meta(key, std::string(value)); });
}

cqcd_status cqcd_table_render(const cqcd_table* table, cqcd_format format, char* buf,
                              size_t capacity, size_t* needed) {
    if (!table) return CQCD_ERR_NULL_ARGUMENT;
    return text_result([&] { return table->table.render(to_format(format)); }, buf, capacity,
                       needed);
}

cqcd_status cqcd_derive_table(cqcd_e2_mode mode, double delta, cqcd_table** out) {
    if (!out) return CQCD_ERR_NULL_ARGUMENT;
    return guarded(
        [&] { *out = new cqcd_table{report::derivation_report(to_mode(mode), delta)}; });
}

cqcd_status cqcd_linearize_table(double l, cqcd_e2_mode mode, cqcd_table** out) {
    if (!out) return CQCD_ERR_NULL_ARGUMENT;
    return guarded(
        [&] { *out = new cqcd_table{report::linearization_table(length(l), to_mode(mode))}; });
}

cqcd_status cqcd_bound_state_table(const cqcd_bound_state* state, cqcd_table** out) {
    if (!state || !out) return CQCD_ERR_NULL_ARGUMENT;
    return guarded([&] { *out = new cqcd_table{report::bound_state_table(state->state)}; });
}

}  // extern "C"
