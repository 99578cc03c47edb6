// One PASS/FAIL line per acceptance criterion. Exit status 0 only if all pass.

#include <array>
#include <chrono>
#include <cstdio>
#include <iostream>
#include <string>
#include <sys/wait.h>

#include "hinf/lab/acceptance.hpp"
#include "hinf/lab/config.hpp"

namespace {

struct Run {
    int exit_code = -1;
    std::string output;
};

Run run_lab(const std::string& args) {
    Run r;
    const std::string cmd = std::string("\"") + LAB_BINARY + "\" " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return r;
    std::array<char, 4096> buf{};
    std::size_t got = 0;
    while ((got = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) r.output.append(buf.data(), got);
    const int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

void line(bool pass, int id, const std::string& name, const std::string& detail) {
    std::cout << (pass ? "PASS" : "FAIL") << "  criterion " << id << " (" << name << "): " << detail
              << std::endl;
}

}  // namespace

int main() {
    using namespace hinf::lab;
    using Clock = std::chrono::steady_clock;
    const LabConfig cfg;
    int failures = 0;

    for (int id = 1; id <= kInProcessCriteria; ++id) {
        const auto t0 = Clock::now();
        CriterionResult c;
        std::string error;
        try {
            c = run_criterion(id, cfg);
        } catch (const std::exception& e) {
            c.id = id;
            error = e.what();
        }
        const double secs = std::chrono::duration<double>(Clock::now() - t0).count();
        bool pass = error.empty() && c.pass();
        std::string detail = error.empty() ? c.detail : "exception: " + error;
        for (const Assertion& a : c.checks) {
            if (!a.pass) {
                detail += " | failed: " + a.name + " (" + format_number(a.lhs) + " " + a.relation + " " +
                          format_number(a.rhs) + ")";
            }
        }
        const double limit = id == 1 ? 5.0 : id == 7 ? 30.0 : 0.0;
        char timing[64];
        std::snprintf(timing, sizeof timing, " [%.2f s", secs);
        detail += timing;
        if (limit > 0.0) {
            std::snprintf(timing, sizeof timing, ", limit %.0f s", limit);
            detail += timing;
            if (secs >= limit) pass = false;
        }
        detail += "]";
        line(pass, id, c.name.empty() ? "error" : c.name, detail);
        if (!pass) ++failures;
    }

    const Run a = run_lab("verify --format json");
    const Run b = run_lab("verify --format json");
    const bool identical = !a.output.empty() && a.output == b.output;
    const bool exits_zero = a.exit_code == 0 && b.exit_code == 0;
    line(identical && exits_zero, 11, "determinism and interface",
         "exit codes " + std::to_string(a.exit_code) + ", " + std::to_string(b.exit_code) + "; reports " +
             (identical ? "byte-identical" : "differ") + " (" + std::to_string(a.output.size()) + " bytes)");
    if (!(identical && exits_zero)) ++failures;

    std::cout << (failures == 0 ? "all criteria pass" : std::to_string(failures) + " criteria fail")
              << std::endl;
    return failures == 0 ? 0 : 1;
}
