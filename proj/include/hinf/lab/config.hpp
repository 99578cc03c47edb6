#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace hinf::lab {

struct LabConfig {
    int dimension = 2;
    int truncation = 48;
    double working_radius = 0.9;
    int circle_grid = 4096;
    int sphere_grid = 16384;
    double tol_boundary = 1e-9;
    double tol_quadrature = 1e-6;
    double cluster_epsilon = 1e-3;
    std::uint64_t seed = 42;
};

/// Configuration problem tied to one key ("dimension", "working_radius", ...).
class ConfigError : public std::runtime_error {
public:
    ConfigError(std::string key, const std::string& message)
        : std::runtime_error(key + ": " + message), key_(std::move(key)) {}
    const std::string& key() const { return key_; }

private:
    std::string key_;
};

/// Throws ConfigError naming the first out-of-range key.
void validate(const LabConfig& cfg);

/// Reads a JSON object whose keys are the LabConfig field names. Blank text
/// gives the defaults. Unknown keys, wrong types and out-of-range values are
/// ConfigErrors naming the key.
LabConfig parse_config_text(const std::string& text, LabConfig base = {});

LabConfig parse_config_file(const std::string& path, LabConfig base = {});

}  // namespace hinf::lab
