#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "hinf/lab/config.hpp"
#include "hinf/lab/report.hpp"

namespace hinf::lab {

/// Unknown command name.
class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Module failure while running a command; the message starts with the command name.
class CommandError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

const std::vector<std::string>& command_names();

Report run_command(const std::string& name, const LabConfig& cfg);

}  // namespace hinf::lab
