#pragma once

// Command-line driver: solve, sweep, field and baseline subcommands that
// write flat CSV/JSON files into an output directory.

#include <filesystem>
#include <stdexcept>
#include <string>
#include <vector>

namespace csdd::cli {

enum class Command { solve, sweep, field, baseline };
enum class Format { csv, json };

struct RunConfig {
    Command command = Command::solve;
    double nu = 0.3;
    double p = 10.0;  // a / l
    double sigma0 = 1.0;
    double a = 1.0;
    double mu = 1.0;
    int n = 128;
    std::string output_path = ".";
    Format format = Format::csv;

    int profile_samples = 201;
    int tip_samples = 121;

    // sweep
    double p_min = 0.1;
    double p_max = 200.0;
    int p_steps = 12;
    bool log_spaced = false;
    std::vector<double> nu_list;

    // field
    double ell = 1.0;
    double burgers = 1.0;
    double frank = 0.0;
    double x_min = -2.0, x_max = 2.0;
    int x_steps = 21;
    double y_min = 0.0, y_max = 2.0;
    int y_steps = 11;

    // Throws ConfigError.
    void validate() const;
};

class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Each returns the files it wrote.
std::vector<std::filesystem::path> cmd_solve(const RunConfig& cfg);
std::vector<std::filesystem::path> cmd_sweep(const RunConfig& cfg);
std::vector<std::filesystem::path> cmd_field(const RunConfig& cfg);
std::vector<std::filesystem::path> cmd_baseline(const RunConfig& cfg);

// Parses argv and dispatches. Exit codes: 0 success, 1 configuration
// error, 2 numerical failure. Errors go to stderr as one JSON line.
int run(int argc, char** argv);

}  // namespace csdd::cli
