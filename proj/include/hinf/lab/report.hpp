#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "hinf/lab/config.hpp"

namespace hinf::lab {

using Cell = std::variant<std::int64_t, double, std::string, bool>;

/// lhs `relation` rhs, both sides kept as numbers.
struct Assertion {
    std::string name;
    double lhs = 0.0;
    std::string relation;  ///< "<=", ">=", "<", ">", "=="
    double rhs = 0.0;
    bool pass = false;
};

Assertion check(std::string name, double lhs, const std::string& relation, double rhs);

struct Report {
    std::string command;
    LabConfig config;
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;
    std::vector<Assertion> assertions;

    bool all_pass() const;
    void add_row(std::vector<Cell> row);
};

enum class Format { json, csv };

/// Doubles use "%.17g"; non-finite doubles become null (json) or inf/nan (csv).
std::string format_number(double v);

/// json: {"command", "config", "rows", "assertions"} in that order, rows as
/// objects keyed by column name. csv: header line, then one line per row.
std::string emit_report(const Report& r, Format format);

}  // namespace hinf::lab
