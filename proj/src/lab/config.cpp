#include "hinf/lab/config.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace hinf::lab {

namespace {

using nlohmann::json;

template <typename T>
void read_int(const json& v, const std::string& key, T& out) {
    if (!v.is_number_integer()) throw ConfigError(key, "expected an integer");
    if constexpr (std::is_unsigned_v<T>) {
        if (v.is_number_unsigned()) {
            out = v.get<T>();
        } else {
            const auto s = v.get<std::int64_t>();
            if (s < 0) throw ConfigError(key, "must be nonnegative");
            out = static_cast<T>(s);
        }
    } else {
        const auto s = v.get<std::int64_t>();
        if (s < std::numeric_limits<T>::min() || s > std::numeric_limits<T>::max()) {
            throw ConfigError(key, "integer out of range");
        }
        out = static_cast<T>(s);
    }
}

void read_real(const json& v, const std::string& key, double& out) {
    if (!v.is_number()) throw ConfigError(key, "expected a number");
    out = v.get<double>();
}

}  // namespace

void validate(const LabConfig& c) {
    if (c.dimension < 1 || c.dimension > 16) throw ConfigError("dimension", "must lie in [1, 16]");
    if (c.truncation < 1 || c.truncation > 52) throw ConfigError("truncation", "must lie in [1, 52]");
    if (!(c.working_radius > 0.0 && c.working_radius <= 0.99)) {
        throw ConfigError("working_radius", "must lie in (0, 0.99]");
    }
    if (c.circle_grid < 256 || c.circle_grid > (1 << 22)) {
        throw ConfigError("circle_grid", "must lie in [256, 4194304]");
    }
    if (c.sphere_grid < 64 || c.sphere_grid > (1 << 22)) {
        throw ConfigError("sphere_grid", "must lie in [64, 4194304]");
    }
    auto tolerance = [](double v, const char* key) {
        if (!(v > 0.0 && v < 1.0)) throw ConfigError(key, "must lie in (0, 1)");
    };
    tolerance(c.tol_boundary, "tol_boundary");
    tolerance(c.tol_quadrature, "tol_quadrature");
    tolerance(c.cluster_epsilon, "cluster_epsilon");
}

LabConfig parse_config_text(const std::string& text, LabConfig cfg) {
    if (text.find_first_not_of(" \t\r\n") == std::string::npos) {
        validate(cfg);
        return cfg;
    }
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ConfigError("config", std::string("malformed JSON: ") + e.what());
    }
    if (!doc.is_object()) throw ConfigError("config", "top level must be a JSON object");
    for (const auto& [key, value] : doc.items()) {
        if (key == "dimension") {
            read_int(value, key, cfg.dimension);
        } else if (key == "truncation") {
            read_int(value, key, cfg.truncation);
        } else if (key == "working_radius") {
            read_real(value, key, cfg.working_radius);
        } else if (key == "circle_grid") {
            read_int(value, key, cfg.circle_grid);
        } else if (key == "sphere_grid") {
            read_int(value, key, cfg.sphere_grid);
        } else if (key == "tol_boundary") {
            read_real(value, key, cfg.tol_boundary);
        } else if (key == "tol_quadrature") {
            read_real(value, key, cfg.tol_quadrature);
        } else if (key == "cluster_epsilon") {
            read_real(value, key, cfg.cluster_epsilon);
        } else if (key == "seed") {
            read_int(value, key, cfg.seed);
        } else {
            throw ConfigError(key, "unknown configuration key");
        }
    }
    validate(cfg);
    return cfg;
}

LabConfig parse_config_file(const std::string& path, LabConfig base) {
    std::ifstream in(path);
    if (!in) throw ConfigError("config", "cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_config_text(ss.str(), base);
}

}  // namespace hinf::lab
