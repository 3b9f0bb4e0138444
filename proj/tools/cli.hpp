#pragma once

// Command-line front end. Everything runs in-process through run() so the
// behaviour is testable without spawning the executable.

#include "orthofam/recurrence.hpp"

#include <json.hpp>

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace orthofam::cli {

enum class Command { Eval, Spectrum, QTable, Certify };
enum class Format { Csv, Json };
enum class PrecisionMode { Float, Extended, Exact };

namespace exit_code {
inline constexpr int ok = 0;
inline constexpr int io = 1;
inline constexpr int validation = 2;
inline constexpr int eigensolver = 3;
inline constexpr int radius = 4;
inline constexpr int certify_failed = 5;
} // namespace exit_code

struct RunConfig {
    Command command = Command::Eval;
    FamilyTag family = FamilyTag::H;
    double mu = 0.0;
    double nu = 0.0;
    double alpha = 1.0;
    double theta = 1.5707963267948966;
    double sigma = 1.0;
    int n = 5;
    int N = 40;
    std::vector<double> z_grid{0.0};
    double radius = 1.0;
    int kmax = 60;
    int nmax = 2000;
    PrecisionMode precision = PrecisionMode::Float;
    Format format = Format::Csv;
    std::string out; ///< empty: stdout
    double tol = 1e-8;
    bool monic = false;
    bool full_table = false;
    std::vector<std::string> checks; ///< empty: all
    double perturb_asq = 0.0;

    friend bool operator==(const RunConfig&, const RunConfig&) = default;
};

nlohmann::json to_json(const RunConfig& c);
/// Missing keys keep their defaults; unknown enum spellings throw InvalidParameter.
RunConfig config_from_json(const nlohmann::json& j);

/// Grid syntax: "lo:hi:count" or a comma-separated list.
std::vector<double> parse_grid(const std::string& text);

/// Throws InvalidParameter / PreconditionError naming the failed invariant.
void validate(const RunConfig& c);

struct Outcome {
    int exit_code = exit_code::ok;
    std::string data;        ///< stdout or file payload
    std::string diagnostics; ///< stderr text
};

/// Runs the configured command and maps library errors to exit codes. Does
/// not write the output file.
Outcome run(const RunConfig& c);

/// Full command line: parsing, run(), then output to stdout or --out.
int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace orthofam::cli
