#pragma once

// Tabular output shared by the reports and the command-line tool. Reals are
// printed with 10 significant digits, rationals exactly.

#include "comptonqcd/natunits.hpp"
#include "comptonqcd/rational.hpp"
#include "comptonqcd/spectrum.hpp"

#include <cstdint>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace comptonqcd::report {

enum class Format { Csv, Json, Table };

Format parse_format(const std::string& text);

using Cell = std::variant<std::monostate, double, Rational, std::string, std::int64_t>;

std::string format_real(double v);
std::string format_cell(const Cell& c);

class Table {
public:
    Table(std::string title, std::vector<std::string> columns);

    void add_row(std::vector<Cell> row);
    void begin_row();
    void push(Cell c);
    void set_meta(const std::string& key, Cell value);

    const std::string& title() const noexcept { return title_; }
    const std::vector<std::string>& columns() const noexcept { return columns_; }
    const std::vector<std::vector<Cell>>& rows() const noexcept { return rows_; }
    const std::vector<std::pair<std::string, Cell>>& meta() const noexcept {
        return meta_;
    }

    /// CSV: header then rows. JSON: {"command", "meta", "columns", "rows"}.
    /// Table: "# key: value" meta lines then aligned columns.
    std::string render(Format f) const;

private:
    std::string title_;
    std::vector<std::string> columns_;
    std::vector<std::vector<Cell>> rows_;
    std::vector<std::pair<std::string, Cell>> meta_;
};

/// The mass-derivation chain: coupling, charge fractions, proton charge,
/// slope coefficient, quark mass and its order check, the Cornell parameters,
/// the pion masses and the regime classification at three sample scales.
/// Columns: step, quantity, value, units, paper_eq.
Table derivation_report(E2Mode mode = E2Mode::Paper, double delta = 0.5);

/// Columns: quantity, value, units.
Table linearization_table(const Quantity& l, E2Mode mode = E2Mode::Paper);

/// Columns r, u.
Table bound_state_table(const spectrum::BoundState& s);

/// {"n", "E", "nodes", "rms_radius", "grid_points", "tolerances"} in that
/// order, reals rounded to 10 significant digits.
std::string bound_state_sidecar(const spectrum::BoundState& s);

}  // namespace comptonqcd::report
