// lab <command> [--config FILE] [--n INT] [--trunc INT] [--radius FLOAT]
//     [--grid INT] [--seed INT] [--format json|csv] [--out FILE]
// Exit codes: 0 all assertions pass, 1 an assertion failed, 2 usage error.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "hinf/lab/commands.hpp"
#include "hinf/lab/config.hpp"
#include "hinf/lab/report.hpp"

int main(int argc, char** argv) {
    using namespace hinf::lab;

    CLI::App app{"Numerical laboratory for bounded holomorphic functions on the ball"};
    std::string command;
    std::string config_path;
    std::optional<int> n, trunc, grid;
    std::optional<double> radius;
    std::optional<std::uint64_t> seed;
    std::string format = "json";
    std::string out_path;

    app.add_option("command", command, "orbit | product | cluster | harnack | outer | verify")
        ->required()
        ->check(CLI::IsMember(command_names()));
    app.add_option("--config", config_path, "JSON configuration file");
    app.add_option("--n", n, "dimension");
    app.add_option("--trunc", trunc, "product truncation N");
    app.add_option("--radius", radius, "working radius");
    app.add_option("--grid", grid, "circle and sphere grid size");
    app.add_option("--seed", seed, "random seed");
    app.add_option("--format", format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
    app.add_option("--out", out_path, "write the report here instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    LabConfig cfg;
    try {
        if (!config_path.empty()) cfg = parse_config_file(config_path);
        if (n) cfg.dimension = *n;
        if (trunc) cfg.truncation = *trunc;
        if (radius) cfg.working_radius = *radius;
        if (grid) cfg.circle_grid = cfg.sphere_grid = *grid;
        if (seed) cfg.seed = *seed;
        validate(cfg);
    } catch (const ConfigError& e) {
        std::cerr << "lab: configuration error: " << e.what() << "\n";
        return 2;
    }

    Report report;
    try {
        report = run_command(command, cfg);
    } catch (const UsageError& e) {
        std::cerr << "lab: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "lab: " << e.what() << "\n";
        return 1;
    }

    const std::string bytes = emit_report(report, format == "csv" ? Format::csv : Format::json);
    if (out_path.empty()) {
        std::cout << bytes;
    } else {
        std::ofstream out(out_path, std::ios::binary);
        if (!(out << bytes)) {
            std::cerr << "lab: cannot write " << out_path << "\n";
            return 2;
        }
    }
    for (const auto& a : report.assertions) {
        if (!a.pass) {
            std::cerr << "lab: assertion failed: " << a.name << " (" << format_number(a.lhs) << " "
                      << a.relation << " " << format_number(a.rhs) << ")\n";
        }
    }
    return report.all_pass() ? 0 : 1;
}
