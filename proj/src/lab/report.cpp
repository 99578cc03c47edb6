#include "hinf/lab/report.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace hinf::lab {

Assertion check(std::string name, double lhs, const std::string& relation, double rhs) {
    bool pass = false;
    if (relation == "<=") {
        pass = lhs <= rhs;
    } else if (relation == ">=") {
        pass = lhs >= rhs;
    } else if (relation == "<") {
        pass = lhs < rhs;
    } else if (relation == ">") {
        pass = lhs > rhs;
    } else if (relation == "==") {
        pass = lhs == rhs;
    } else {
        throw std::invalid_argument("check: unknown relation " + relation);
    }
    return {std::move(name), lhs, relation, rhs, pass};
}

bool Report::all_pass() const {
    for (const auto& a : assertions) {
        if (!a.pass) return false;
    }
    return true;
}

void Report::add_row(std::vector<Cell> row) {
    if (row.size() != columns.size()) {
        throw std::logic_error("Report::add_row: " + std::to_string(row.size()) +
                               " cells for " + std::to_string(columns.size()) + " columns");
    }
    rows.push_back(std::move(row));
}

std::string format_number(double v) {
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

namespace {

std::string quote(const std::string& s) { return nlohmann::json(s).dump(); }

std::string json_number(double v) { return std::isfinite(v) ? format_number(v) : "null"; }

std::string json_cell(const Cell& c) {
    return std::visit(
        [](const auto& v) -> std::string {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, std::int64_t>) {
                return std::to_string(v);
            } else if constexpr (std::is_same_v<T, double>) {
                return json_number(v);
            } else if constexpr (std::is_same_v<T, bool>) {
                return v ? "true" : "false";
            } else {
                return quote(v);
            }
        },
        c);
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char ch : s) {
        if (ch == '"') out += '"';
        out += ch;
    }
    return out + "\"";
}

std::string csv_cell(const Cell& c) {
    return std::visit(
        [](const auto& v) -> std::string {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, std::int64_t>) {
                return std::to_string(v);
            } else if constexpr (std::is_same_v<T, double>) {
                return format_number(v);
            } else if constexpr (std::is_same_v<T, bool>) {
                return v ? "true" : "false";
            } else {
                return csv_field(v);
            }
        },
        c);
}

std::string config_json(const LabConfig& c) {
    std::ostringstream os;
    os << "{\"dimension\": " << c.dimension << ", \"truncation\": " << c.truncation
       << ", \"working_radius\": " << json_number(c.working_radius)
       << ", \"circle_grid\": " << c.circle_grid << ", \"sphere_grid\": " << c.sphere_grid
       << ", \"tol_boundary\": " << json_number(c.tol_boundary)
       << ", \"tol_quadrature\": " << json_number(c.tol_quadrature)
       << ", \"cluster_epsilon\": " << json_number(c.cluster_epsilon) << ", \"seed\": " << c.seed
       << "}";
    return os.str();
}

}  // namespace

std::string emit_report(const Report& r, Format format) {
    std::ostringstream os;
    if (format == Format::csv) {
        for (std::size_t i = 0; i < r.columns.size(); ++i) {
            os << (i ? "," : "") << csv_field(r.columns[i]);
        }
        os << "\n";
        for (const auto& row : r.rows) {
            for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << csv_cell(row[i]);
            os << "\n";
        }
        return os.str();
    }
    os << "{\n  \"command\": " << quote(r.command) << ",\n  \"config\": " << config_json(r.config)
       << ",\n  \"rows\": [";
    for (std::size_t k = 0; k < r.rows.size(); ++k) {
        os << (k ? ",\n    {" : "\n    {");
        for (std::size_t i = 0; i < r.columns.size(); ++i) {
            os << (i ? ", " : "") << quote(r.columns[i]) << ": " << json_cell(r.rows[k][i]);
        }
        os << "}";
    }
    os << (r.rows.empty() ? "],\n" : "\n  ],\n") << "  \"assertions\": [";
    for (std::size_t k = 0; k < r.assertions.size(); ++k) {
        const Assertion& a = r.assertions[k];
        os << (k ? ",\n    " : "\n    ") << "{\"name\": " << quote(a.name)
           << ", \"lhs\": " << json_number(a.lhs) << ", \"relation\": " << quote(a.relation)
           << ", \"rhs\": " << json_number(a.rhs) << ", \"pass\": " << (a.pass ? "true" : "false")
           << "}";
    }
    os << (r.assertions.empty() ? "]\n}\n" : "\n  ]\n}\n");
    return os.str();
}

}  // namespace hinf::lab
