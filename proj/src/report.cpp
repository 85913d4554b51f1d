#include "comptonqcd/report.hpp"

#include "comptonqcd/error.hpp"
#include "comptonqcd/estimator.hpp"
#include "comptonqcd/potential.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <sstream>

namespace comptonqcd::report {

namespace {

bool is_numeric(const Cell& c) {
    return std::holds_alternative<double>(c) || std::holds_alternative<Rational>(c) ||
           std::holds_alternative<std::int64_t>(c);
}

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char ch : s) {
        if (ch == '"') out += '"';
        out += ch;
    }
    return out + "\"";
}

nlohmann::ordered_json to_json(const Cell& c) {
    if (std::holds_alternative<std::monostate>(c)) return nullptr;
    if (const auto* d = std::get_if<double>(&c)) {
        // Round to the printed precision so JSON and text agree.
        return std::strtod(format_real(*d).c_str(), nullptr);
    }
    if (const auto* i = std::get_if<std::int64_t>(&c)) return *i;
    return format_cell(c);
}

}  // namespace

Format parse_format(const std::string& text) {
    if (text == "csv") return Format::Csv;
    if (text == "json") return Format::Json;
    if (text == "table") return Format::Table;
    throw Error(ErrorCode::ParseError, "unknown output format '" + text + "'");
}

std::string format_real(double v) {
    if (v == 0.0) v = 0.0;  // drop the sign of negative zero
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.10g", v);
    return buf;
}

std::string format_cell(const Cell& c) {
    return std::visit(
        [](const auto& x) -> std::string {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, std::monostate>) return "";
            else if constexpr (std::is_same_v<T, double>) return format_real(x);
            else if constexpr (std::is_same_v<T, Rational>) return to_string(x);
            else if constexpr (std::is_same_v<T, std::int64_t>) return std::to_string(x);
            else return x;
        },
        c);
}

Table::Table(std::string title, std::vector<std::string> columns)
    : title_(std::move(title)), columns_(std::move(columns)) {
    if (columns_.empty()) throw Error(ErrorCode::DomainError, "a table needs columns");
}

void Table::add_row(std::vector<Cell> row) {
    if (row.size() != columns_.size())
        throw Error(ErrorCode::DomainError, "row width does not match the column count");
    rows_.push_back(std::move(row));
}

void Table::begin_row() {
    if (!rows_.empty() && rows_.back().size() != columns_.size())
        throw Error(ErrorCode::DomainError, "previous row is incomplete");
    rows_.emplace_back();
}

void Table::push(Cell c) {
    if (rows_.empty() || rows_.back().size() >= columns_.size())
        throw Error(ErrorCode::DomainError, "no open row to push into");
    rows_.back().push_back(std::move(c));
}

void Table::set_meta(const std::string& key, Cell value) {
    for (auto& [k, v] : meta_) {
        if (k == key) {
            v = std::move(value);
            return;
        }
    }
    meta_.emplace_back(key, std::move(value));
}

std::string Table::render(Format f) const {
    if (!rows_.empty() && rows_.back().size() != columns_.size())
        throw Error(ErrorCode::DomainError, "last row is incomplete");
    std::ostringstream out;
    switch (f) {
        case Format::Csv: {
            for (std::size_t i = 0; i < columns_.size(); ++i)
                out << (i ? "," : "") << csv_escape(columns_[i]);
            out << '\n';
            for (const auto& row : rows_) {
                for (std::size_t i = 0; i < row.size(); ++i)
                    out << (i ? "," : "") << csv_escape(format_cell(row[i]));
                out << '\n';
            }
            break;
        }
        case Format::Json: {
            nlohmann::ordered_json j;
            j["command"] = title_;
            auto meta = nlohmann::ordered_json::object();
            for (const auto& [k, v] : meta_) meta[k] = to_json(v);
            j["meta"] = std::move(meta);
            j["columns"] = columns_;
            auto rows = nlohmann::ordered_json::array();
            for (const auto& row : rows_) {
                auto r = nlohmann::ordered_json::array();
                for (const auto& c : row) r.push_back(to_json(c));
                rows.push_back(std::move(r));
            }
            j["rows"] = std::move(rows);
            out << j.dump(2) << '\n';
            break;
        }
        case Format::Table: {
            for (const auto& [k, v] : meta_) out << "# " << k << ": " << format_cell(v) << '\n';
            std::vector<std::size_t> width(columns_.size());
            for (std::size_t i = 0; i < columns_.size(); ++i) width[i] = columns_[i].size();
            for (const auto& row : rows_)
                for (std::size_t i = 0; i < row.size(); ++i)
                    width[i] = std::max(width[i], format_cell(row[i]).size());
            const auto emit = [&](const std::vector<std::string>& cells,
                                  const std::vector<bool>& right) {
                std::string line;
                for (std::size_t i = 0; i < cells.size(); ++i) {
                    if (i) line += "  ";
                    const std::string pad(width[i] - cells[i].size(), ' ');
                    line += right[i] ? pad + cells[i] : cells[i] + pad;
                }
                while (!line.empty() && line.back() == ' ') line.pop_back();
                out << line << '\n';
            };
            emit(columns_, std::vector<bool>(columns_.size(), false));
            std::vector<std::string> rule;
            for (auto w : width) rule.emplace_back(w, '-');
            emit(rule, std::vector<bool>(columns_.size(), false));
            for (const auto& row : rows_) {
                std::vector<std::string> cells;
                std::vector<bool> right;
                for (const auto& c : row) {
                    cells.push_back(format_cell(c));
                    right.push_back(is_numeric(c));
                }
                emit(cells, right);
            }
            break;
        }
    }
    return out.str();
}

Table derivation_report(E2Mode mode, double delta) {
    using namespace estimator;
    Table t("derive", {"step", "quantity", "value", "units", "paper_eq"});
    t.set_meta("e2_mode", std::string(to_string(mode)));
    t.set_meta("regime_delta", delta);

    std::int64_t step = 0;
    const auto row = [&](std::string quantity, Cell value, std::string units, std::string tag) {
        t.add_row({++step, std::move(quantity), std::move(value), std::move(units), std::move(tag)});
    };

    const Rational e2 = fine_structure_exact(mode);
    row("e_squared", e2, "1", "coupling");
    for (int d = 1; d <= 3; ++d)
        row("charge_fraction_d" + std::to_string(d), potential::charge_fraction(d), "e",
            "charge-trace");
    const auto proton = potential::proton_configuration(length(1.0));
    row("proton_total_charge", proton.total_charge(), "e", "proton");

    const auto quark = quark_mass_estimate(mode);
    row("confinement_slope_coefficient", quark.slope_coefficient, "e^2/l^2", "confinement-slope");
    row("quark_mass", quark.exact_mass, "m_e", "mass-comparison");
    row("quark_mass_order_1e3",
        std::string(order_of_magnitude_satisfied(quark) ? "satisfied" : "violated"), "-",
        "mass-comparison");
    row("quark_compton_wavelength", compton_wavelength(quark.mass).value(), "1/m_e", "compton");

    const auto cornell = potential::cornell_from_paper(quark.mass);
    row("cornell_alpha", cornell.alpha().value(), "1", "cornell");
    row("cornell_sigma", cornell.sigma().value(), "m_e^2", "cornell");

    row("pion_single_fermion_mass", pion_single_fermion_estimate(mode).exact_mass, "m_e", "pion");
    row("pion_mass", pion_mass_estimate(mode).exact_mass, "m_e", "pion");

    for (double scale : {10.0, 1.0, 0.1})
        row("regime_at_" + format_real(scale) + "_compton",
            std::string(to_string(classify_regime(scale, delta))), "-", "regime");
    return t;
}

Table linearization_table(const Quantity& l, E2Mode mode) {
    const auto rep = potential::linearize_proton(l, mode);
    Table t("linearize", {"quantity", "value", "units"});
    t.set_meta("e2_mode", std::string(to_string(mode)));
    t.set_meta("l", rep.separation);
    t.add_row({std::string("axial_first_derivative"), rep.axial_first_derivative, std::string("m_e^2")});
    t.add_row({std::string("axial_second_derivative"), rep.axial_second_derivative, std::string("m_e^3")});
    t.add_row({std::string("axial_second_derivative_exact"), rep.axial_second_derivative_exact,
               std::string("m_e^3")});
    t.add_row({std::string("transverse_second_derivative"), rep.transverse_second_derivative,
               std::string("m_e^3")});
    t.add_row({std::string("transverse_second_derivative_exact"),
               rep.transverse_second_derivative_exact, std::string("m_e^3")});
    t.add_row({std::string("single_pair_slope"), rep.single_pair_slope, std::string("m_e^2")});
    t.add_row({std::string("single_pair_slope_exact"), rep.single_pair_slope_exact,
               std::string("m_e^2")});
    t.add_row({std::string("declared_slope"), rep.declared_slope, std::string("m_e^2")});
    t.add_row({std::string("pair_to_declared_ratio"), rep.single_pair_slope / rep.declared_slope,
               std::string("1")});
    return t;
}

Table bound_state_table(const spectrum::BoundState& s) {
    Table t("spectrum", {"r", "u"});
    for (std::size_t i = 0; i < s.r.size(); ++i) t.add_row({s.r[i], s.u[i]});
    return t;
}

std::string bound_state_sidecar(const spectrum::BoundState& s) {
    const auto rounded = [](double v) { return std::strtod(format_real(v).c_str(), nullptr); };
    nlohmann::ordered_json j;
    j["n"] = s.level;
    j["E"] = rounded(s.energy.value());
    j["nodes"] = s.nodes;
    j["rms_radius"] = rounded(s.rms_radius.value());
    j["grid_points"] = s.grid_points;
    j["tolerances"] = {{"bisection_relative", s.tolerances.bisection_relative},
                       {"refinement_relative", s.tolerances.refinement_relative}};
    return j.dump(2) + "\n";
}

}  // namespace comptonqcd::report
