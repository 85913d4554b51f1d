#include "cli.hpp"

#include "comptonqcd/comptonqcd.h"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <future>
#include <memory>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace comptonqcd::cli {

namespace {

// A failed library call; maps to exit code 1.
struct ComputationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void check(cqcd_status st) {
    if (st != CQCD_OK)
        throw ComputationError(std::string(cqcd_status_string(st)) + ": " + cqcd_last_error());
}

template <class T, void (*Destroy)(T*)>
struct Deleter {
    void operator()(T* p) const { Destroy(p); }
};

using TablePtr = std::unique_ptr<cqcd_table, Deleter<cqcd_table, cqcd_table_destroy>>;
using SourcePtr = std::unique_ptr<cqcd_source, Deleter<cqcd_source, cqcd_source_destroy>>;
using StatePtr =
    std::unique_ptr<cqcd_bound_state, Deleter<cqcd_bound_state, cqcd_bound_state_destroy>>;

TablePtr make_table(const std::string& title, const std::vector<std::string>& columns) {
    std::vector<const char*> names;
    for (const auto& c : columns) names.push_back(c.c_str());
    cqcd_table* t = nullptr;
    check(cqcd_table_create(title.c_str(), names.data(), names.size(), &t));
    return TablePtr(t);
}

template <class Fn>
std::string fetch_text(Fn&& fn) {
    size_t needed = 0;
    const cqcd_status first = fn(nullptr, 0, &needed);
    if (first != CQCD_ERR_BUFFER_TOO_SMALL) check(first);
    std::string buf(needed, '\0');
    check(fn(buf.data(), buf.size(), &needed));
    buf.resize(needed - 1);
    return buf;
}

std::string render(const cqcd_table* t, cqcd_format f) {
    return fetch_text([&](char* b, size_t c, size_t* n) { return cqcd_table_render(t, f, b, c, n); });
}

struct Row {
    cqcd_table* t;
    explicit Row(cqcd_table* table) : t(table) { check(cqcd_table_begin_row(t)); }
    Row& real(double v) { check(cqcd_table_push_real(t, v)); return *this; }
    Row& integer(int64_t v) { check(cqcd_table_push_integer(t, v)); return *this; }
    Row& text(const std::string& s) { check(cqcd_table_push_text(t, s.c_str())); return *this; }
    Row& empty() { check(cqcd_table_push_empty(t)); return *this; }
};

// Flat JSON object whose keys match the long flag names. Keys that are not
// global options are routed to the selected subcommand.
class JsonConfig : public CLI::Config {
public:
    explicit JsonConfig(CLI::App* app) : app_(app) {}

    std::string to_config(const CLI::App*, bool, bool, std::string) const override { return {}; }

    std::vector<CLI::ConfigItem> from_config(std::istream& in) const override {
        nlohmann::json j;
        try {
            j = nlohmann::json::parse(in);
        } catch (const nlohmann::json::parse_error& e) {
            throw CLI::ConfigError(std::string("config is not valid JSON: ") + e.what());
        }
        if (!j.is_object()) throw CLI::ConfigError("config must be a JSON object");
        std::vector<CLI::ConfigItem> items;
        for (const auto& [key, value] : j.items()) {
            CLI::ConfigItem item;
            item.name = key;
            if (app_->get_option_no_throw("--" + key) == nullptr) {
                for (const CLI::App* sub : app_->get_subcommands()) {
                    if (sub->get_option_no_throw("--" + key) != nullptr) {
                        item.parents = {sub->get_name()};
                        break;
                    }
                }
                if (item.parents.empty())
                    throw CLI::ConfigError("unknown config key '" + key + "'");
            }
            if (value.is_array()) {
                for (const auto& v : value) item.inputs.push_back(scalar(v));
            } else {
                item.inputs.push_back(scalar(value));
            }
            items.push_back(std::move(item));
        }
        return items;
    }

private:
    static std::string scalar(const nlohmann::json& v) {
        if (v.is_string()) return v.get<std::string>();
        if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
        if (v.is_number()) return v.dump();
        throw CLI::ConfigError("unsupported config value " + v.dump());
    }

    CLI::App* app_;
};

struct Settings {
    std::string e2_mode = "paper";
    std::string format = "table";
    std::string output;
    std::optional<double> l;
    std::optional<double> m_quark;
    std::optional<int> grid_points;
    std::optional<double> r_min;
    std::optional<double> r_max;
    double delta = 0.5;

    cqcd_e2_mode mode() const {
        cqcd_e2_mode m{};
        check(cqcd_parse_e2_mode(e2_mode.c_str(), &m));
        return m;
    }

    cqcd_format fmt() const {
        if (format == "csv") return CQCD_FORMAT_CSV;
        if (format == "json") return CQCD_FORMAT_JSON;
        return CQCD_FORMAT_TABLE;
    }

    double quark_mass() const {
        if (m_quark) {
            if (!(*m_quark > 0.0)) throw ComputationError("InvalidMass: --m-quark must be positive");
            return *m_quark;
        }
        double m = 0.0;
        check(cqcd_quark_mass(mode(), &m, nullptr));
        return m;
    }

    double separation() const {
        if (l) return *l;
        double lv = 0.0;
        check(cqcd_compton_wavelength(quark_mass(), &lv));
        return lv;
    }
};

struct RangeArgs {
    std::optional<double> from;
    std::optional<double> to;
    int count = 100;
    bool log = false;

    std::vector<double> points(double default_from, double default_to) const {
        const double a = from.value_or(default_from);
        const double b = to.value_or(default_to);
        if (!(a > 0.0) || !(b > a) || count < 2)
            throw ComputationError("range needs 0 < from < to and count >= 2");
        std::vector<double> pts(count);
        for (int i = 0; i < count; ++i) {
            const double t = static_cast<double>(i) / (count - 1);
            pts[i] = log ? a * std::pow(b / a, t) : a + (b - a) * t;
        }
        pts.back() = b;
        return pts;
    }
};

void add_range(CLI::App* sub, RangeArgs& range) {
    sub->add_option("--from", range.from, "Smallest radius (1/m_e)");
    sub->add_option("--to", range.to, "Largest radius (1/m_e)");
    sub->add_option("--count", range.count, "Number of radii")->capture_default_str();
    sub->add_flag("--log", range.log, "Space radii logarithmically");
}

void emit(const Settings& s, const std::string& text, std::ostream& out) {
    if (s.output.empty()) {
        out << text;
        return;
    }
    std::ofstream file(s.output, std::ios::binary);
    if (!file) throw ComputationError("cannot write " + s.output);
    file << text;
}

std::string cmd_derive(const Settings& s) {
    cqcd_table* t = nullptr;
    check(cqcd_derive_table(s.mode(), s.delta, &t));
    return render(TablePtr(t).get(), s.fmt());
}

std::string cmd_charge(const Settings& s, std::optional<int> d) {
    std::vector<int> dims = d ? std::vector<int>{*d} : std::vector<int>{1, 2, 3};
    auto t = make_table("charge", {"d", "fraction"});
    std::string bare;
    for (int dim : dims) {
        int64_t num = 0;
        int64_t den = 1;
        check(cqcd_charge_fraction(dim, &num, &den));
        check(cqcd_table_begin_row(t.get()));
        check(cqcd_table_push_integer(t.get(), dim));
        check(cqcd_table_push_rational(t.get(), num, den));
        bare = den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den);
    }
    if (d && s.fmt() == CQCD_FORMAT_TABLE) return bare + "\n";
    return render(t.get(), s.fmt());
}

struct PotentialArgs {
    std::optional<double> alpha;
    std::optional<double> sigma;
    RangeArgs range;
};

std::string cmd_potential(const Settings& s, const PotentialArgs& a) {
    const double m = s.quark_mass();
    double alpha = 0.0;
    double sigma = 0.0;
    check(cqcd_cornell_from_paper(m, s.l.value_or(0.0), &alpha, &sigma));
    alpha = a.alpha.value_or(alpha);
    sigma = a.sigma.value_or(sigma);
    const double l = s.separation();

    auto t = make_table("potential", {"r", "V"});
    check(cqcd_table_meta_real(t.get(), "alpha", alpha));
    check(cqcd_table_meta_real(t.get(), "sigma", sigma));
    for (double r : a.range.points(0.1 * l, 10.0 * l)) {
        double v = 0.0;
        check(cqcd_cornell_evaluate(alpha, sigma, r, &v));
        Row(t.get()).real(r).real(v);
    }
    return render(t.get(), s.fmt());
}

struct FieldArgs {
    double m = 1.0;
    std::optional<double> radius;
    std::optional<double> energy;
    std::string source_csv;
    RangeArgs range;
};

std::string cmd_field(const Settings& s, const FieldArgs& a) {
    double l = 0.0;
    check(cqcd_compton_wavelength(a.m, &l));
    const double e_tot = a.energy.value_or(a.m);
    cqcd_source* raw = nullptr;
    if (!a.source_csv.empty())
        check(cqcd_source_from_csv(a.source_csv.c_str(), e_tot, &raw));
    else
        check(cqcd_source_uniform_ball(a.radius.value_or(l), e_tot, &raw));
    const SourcePtr src(raw);
    double radius = 0.0;
    check(cqcd_source_support_radius(src.get(), &radius));

    auto t = make_table("field", {"r", "inverse_kernel", "linear_kernel", "near_field", "far_d1",
                                  "far_d2", "far_d3"});
    check(cqcd_table_meta_real(t.get(), "m", a.m));
    check(cqcd_table_meta_real(t.get(), "support_radius", radius));
    check(cqcd_table_meta_real(t.get(), "total_energy", e_tot));
    check(cqcd_table_meta_text(t.get(), "e2_mode", s.e2_mode.c_str()));
    for (double r : a.range.points(0.1 * radius, 10.0 * radius)) {
        double inv = 0.0;
        double lin = 0.0;
        double near = 0.0;
        check(cqcd_kernel_inverse(src.get(), r, &inv));
        check(cqcd_kernel_linear(src.get(), r, &lin));
        check(cqcd_near_field(src.get(), a.m, r, &near));
        Row row(t.get());
        row.real(r).real(inv).real(lin).real(near);
        for (int d = 1; d <= 3; ++d) {
            if (r > l) {
                double far = 0.0;
                check(cqcd_far_field(src.get(), a.m, d, r, s.mode(), &far));
                row.real(far);
            } else {
                row.empty();
            }
        }
    }
    return render(t.get(), s.fmt());
}

std::string cmd_linearize(const Settings& s) {
    cqcd_table* t = nullptr;
    check(cqcd_linearize_table(s.separation(), s.mode(), &t));
    return render(TablePtr(t).get(), s.fmt());
}

struct SpectrumArgs {
    double alpha = 1.0;
    std::optional<double> sigma;
    std::optional<double> mu;
    int ell = 0;
    int n = 1;
    std::optional<double> length_scale;
    std::vector<int> sweep;
};

struct Solved {
    cqcd_radial_problem problem{};
    StatePtr state;
    double virial = 0.0;
};

Solved solve(const Settings& s, const SpectrumArgs& a, int level) {
    const double sigma = a.sigma ? *a.sigma : s.quark_mass();
    const double mu = a.mu ? *a.mu : 0.5 * s.quark_mass();
    Solved out;
    if (a.length_scale)
        check(cqcd_radial_problem_default(a.alpha, sigma, mu, a.ell, *a.length_scale, &out.problem));
    else
        check(cqcd_radial_problem_auto(a.alpha, sigma, mu, a.ell, level, &out.problem));
    if (s.r_min) out.problem.r_min = *s.r_min;
    if (s.r_max) out.problem.r_max = *s.r_max;
    if (s.grid_points) out.problem.grid_points = *s.grid_points;
    cqcd_bound_state* st = nullptr;
    check(cqcd_solve_bound_state(&out.problem, level, &st));
    out.state.reset(st);
    check(cqcd_virial_residual(st, &out.problem, &out.virial));
    return out;
}

void summary_row(cqcd_table* t, int level, const Solved& sol) {
    double e = 0.0;
    double rms = 0.0;
    int nodes = 0;
    check(cqcd_bound_state_energy(sol.state.get(), &e));
    check(cqcd_bound_state_rms_radius(sol.state.get(), &rms));
    check(cqcd_bound_state_nodes(sol.state.get(), &nodes));
    Row(t).integer(level).real(e).integer(nodes).real(rms).real(sol.virial);
}

std::string sidecar_path(const std::string& output) {
    const auto dot = output.rfind('.');
    const auto slash = output.find_last_of('/');
    if (dot != std::string::npos && (slash == std::string::npos || dot > slash))
        return output.substr(0, dot) + ".json";
    return output + ".json";
}

std::string cmd_spectrum(const Settings& s, const SpectrumArgs& a) {
    const std::vector<std::string> summary_cols{"n", "E", "nodes", "rms_radius", "virial_residual"};
    if (!a.sweep.empty()) {
        // Levels are independent problems; results are reported in input order.
        std::vector<std::future<Solved>> jobs;
        for (int level : a.sweep)
            jobs.push_back(std::async(std::launch::async, [&s, &a, level] { return solve(s, a, level); }));
        auto t = make_table("spectrum", summary_cols);
        for (std::size_t i = 0; i < jobs.size(); ++i) summary_row(t.get(), a.sweep[i], jobs[i].get());
        return render(t.get(), s.fmt());
    }

    const Solved sol = solve(s, a, a.n);
    if (s.fmt() == CQCD_FORMAT_TABLE) {
        auto t = make_table("spectrum", summary_cols);
        summary_row(t.get(), a.n, sol);
        return render(t.get(), s.fmt());
    }
    cqcd_table* raw = nullptr;
    check(cqcd_bound_state_table(sol.state.get(), &raw));
    const TablePtr t(raw);
    const std::string sidecar = fetch_text([&](char* b, size_t c, size_t* n) {
        return cqcd_bound_state_sidecar_json(sol.state.get(), b, c, n);
    });
    if (s.fmt() == CQCD_FORMAT_JSON) {
        const auto meta = nlohmann::ordered_json::parse(sidecar);
        for (const auto& [key, value] : meta.items()) {
            if (value.is_number_integer())
                check(cqcd_table_meta_integer(t.get(), key.c_str(), value.get<int64_t>()));
            else if (value.is_number())
                check(cqcd_table_meta_real(t.get(), key.c_str(), value.get<double>()));
        }
        check(cqcd_table_meta_real(t.get(), "virial_residual", sol.virial));
    } else if (!s.output.empty()) {
        std::ofstream side(sidecar_path(s.output), std::ios::binary);
        if (!side) throw ComputationError("cannot write " + sidecar_path(s.output));
        side << sidecar;
    }
    return render(t.get(), s.fmt());
}

struct ConfinementArgs {
    std::optional<double> sigma;
};

std::string cmd_confinement(const Settings& s, const ConfinementArgs& a) {
    cqcd_confinement res{};
    check(cqcd_confinement_analysis(s.mode(), s.quark_mass(), a.sigma ? 1 : 0,
                                    a.sigma.value_or(0.0), &res));
    auto t = make_table("confinement", {"quantity", "value", "units"});
    check(cqcd_table_meta_text(t.get(), "e2_mode", s.e2_mode.c_str()));
    Row(t.get()).text("quark_mass").real(res.quark_mass).text("m_e");
    Row(t.get()).text("compton_wavelength").real(res.compton_wavelength).text("1/m_e");
    Row(t.get()).text("reduced_mass").real(res.reduced_mass).text("m_e");
    Row(t.get()).text("sigma").real(res.sigma).text("m_e^2");
    Row(t.get()).text("ground_state_energy").real(res.energy).text("m_e");
    Row(t.get()).text("rms_radius").real(res.rms_radius).text("1/m_e");
    Row(t.get()).text("confinement_ratio").real(res.ratio).text("1");
    Row(t.get())
        .text("ratio_within_0.1_to_10")
        .text(res.ratio >= 0.1 && res.ratio <= 10.0 ? "yes" : "no")
        .text("-");
    return render(t.get(), s.fmt());
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Natural-units toolkit for Compton-scale confinement estimates", "comptonqcd"};
    app.require_subcommand(1, 1);
    app.fallthrough();

    Settings s;
    app.add_option("--e2-mode", s.e2_mode, "Coupling: paper (e^2 = 1/137) or precise")
        ->check(CLI::IsMember({"paper", "paper-137", "precise"}))
        ->envname("COMPTONQCD_E2")
        ->capture_default_str();
    app.add_option("--format", s.format, "Output format")
        ->check(CLI::IsMember({"csv", "json", "table"}))
        ->capture_default_str();
    app.add_option("--output", s.output, "Write to this file instead of standard output");
    app.add_option("--l", s.l, "Quark separation l (default: quark Compton wavelength)");
    app.add_option("--m-quark", s.m_quark, "Quark mass in m_e (default: derived estimate)");
    app.add_option("--grid-points", s.grid_points, "Radial grid points for spectrum");
    app.add_option("--r-min", s.r_min, "Inner grid radius for spectrum");
    app.add_option("--r-max", s.r_max, "Outer grid radius for spectrum");
    app.add_option("--delta", s.delta, "Half-width of the pion regime band")->capture_default_str();
    app.set_config("--config", "", "JSON file with the same keys as the flags (flags win)");
    app.config_formatter(std::make_shared<JsonConfig>(&app));
    app.allow_config_extras(CLI::config_extras_mode::error);

    auto* derive = app.add_subcommand("derive", "Mass-derivation chain report");

    std::optional<int> charge_d;
    auto* charge = app.add_subcommand("charge", "Charge fraction d/3 per spatial dimension");
    charge->add_option("--d", charge_d, "Spatial dimension (1, 2 or 3)");

    PotentialArgs pot;
    auto* potential = app.add_subcommand("potential", "Tabulate the Cornell potential V(r)");
    potential->add_option("--alpha", pot.alpha, "Coulomb strength");
    potential->add_option("--sigma", pot.sigma, "String tension (m_e^2)");
    add_range(potential, pot.range);

    FieldArgs field;
    auto* fieldcmd = app.add_subcommand("field", "Near- and far-field curves of a source");
    fieldcmd->add_option("--m", field.m, "Particle mass (m_e)")->capture_default_str();
    fieldcmd->add_option("--radius", field.radius, "Uniform-ball radius (default 1/m)");
    fieldcmd->add_option("--energy", field.energy, "Total source energy (default m)");
    fieldcmd->add_option("--source-csv", field.source_csv, "Radial table with header r,eps");
    add_range(fieldcmd, field.range);

    auto* linearize = app.add_subcommand("linearize", "Displaced-quark expansion vs stated slope");

    SpectrumArgs spec;
    auto* spectrum = app.add_subcommand("spectrum", "Cornell bound states");
    spectrum->add_option("--alpha", spec.alpha, "Coulomb strength")->capture_default_str();
    spectrum->add_option("--sigma", spec.sigma, "String tension (default: quark mass)");
    spectrum->add_option("--mu", spec.mu, "Reduced mass (default: half the quark mass)");
    spectrum->add_option("--ell", spec.ell, "Angular momentum")->capture_default_str();
    spectrum->add_option("--n", spec.n, "Level, n >= 1")->capture_default_str();
    spectrum->add_option("--length-scale", spec.length_scale,
                         "Grid scale l: r_min = 1e-6 l, r_max = 40 l");
    spectrum->add_option("--sweep", spec.sweep, "Comma-separated levels solved in parallel")
        ->delimiter(',');

    ConfinementArgs conf;
    auto* confinement = app.add_subcommand("confinement", "Ground-state size vs Compton wavelength");
    confinement->add_option("--sigma", conf.sigma, "Override the string tension");

    std::vector<std::string> reversed(args.size() > 1 ? args.begin() + 1 : args.end(), args.end());
    std::reverse(reversed.begin(), reversed.end());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e, out, err);
        err << "error: " << e.what() << "\n\n" << app.help();
        return 2;
    }

    try {
        std::string text;
        if (derive->parsed()) text = cmd_derive(s);
        else if (charge->parsed()) text = cmd_charge(s, charge_d);
        else if (potential->parsed()) text = cmd_potential(s, pot);
        else if (fieldcmd->parsed()) text = cmd_field(s, field);
        else if (linearize->parsed()) text = cmd_linearize(s);
        else if (spectrum->parsed()) text = cmd_spectrum(s, spec);
        else if (confinement->parsed()) text = cmd_confinement(s, conf);
        emit(s, text, out);
    } catch (const ComputationError& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}

}  // namespace comptonqcd::cli
