#pragma once
// JSON report layer shared by the command-line driver and its tests: run
// configuration, the per-command check bundles, and the stable envelope
// every command emits.

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "artin/numberfield.hpp"

namespace artin {

// Rejected configuration input; the driver maps this to exit code 2.
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct RunConfig {
    uint64_t bound = 1000;
    double s_re = 2.0;
    double s_im = 0.0;
    unsigned precision = 64;
    std::string character = "natural";
    std::vector<std::string> subfields = {"E", "EA"};
    std::string json_path;   // empty: stdout only
    std::string cache_path;  // tower snapshot location
    uint64_t seed = 0;
};

// Throws ConfigError when a setting is out of range or unknown for the
// command ("group verify", "rep verify", "field frobenius",
// "lfunction check", "lfunction eval").
void validate_config(const RunConfig& cfg, const std::string& command);

inline constexpr const char* kReportVersion = "artinkit-1";

struct CommandResult {
    nlohmann::json results;
    bool pass = false;
};

// Orders and order histograms of the three groups, the low-index subgroup
// scan with its generation oracle, and the fixed-point-free action check.
CommandResult group_checks();

// Character table shape and orthogonality, and for each four-dimensional
// row: matrix model, indicator, exterior-square decomposition, induced
// complement, restriction irreducibility, similitude pairing; plus the
// eigenvalue ambiguity scan.
CommandResult rep_checks();

// Loads the versioned tower snapshot at cache_path, rebuilding and saving
// it when the file is missing or stale. An empty path disables caching.
std::vector<NumberField> load_or_build_tower(const std::string& cache_path);

// One JSON line per prime <= bound onto lines (when non-null), then the
// histogram summary with the skipped-prime list.
CommandResult frobenius_checks(const RunConfig& cfg, const std::vector<NumberField>& fields,
                               std::ostream* lines);

// Exact local-factor identities: per four-dimensional row the matrix
// determinant oracle, the exterior-square direct sum, and the linear twist
// rule; the sixteen subgroup inductivity checks; the regular-character
// factorization.
CommandResult lfunction_checks();

// True when the selected character needs splitting data from the tower.
bool eval_needs_tower(const std::string& character);

// Partial Euler product of the selected character; fields may be null when
// eval_needs_tower(cfg.character) is false.
CommandResult lfunction_eval(const RunConfig& cfg, const std::vector<NumberField>* fields);

nlohmann::json config_json(const RunConfig& cfg);
nlohmann::json assemble(const std::string& command, const RunConfig& cfg, CommandResult res,
                        double timing_ms);

// Prints the report to out and mirrors it to path when non-empty; returns
// 0 when the report passed, 1 otherwise.
int emit(const nlohmann::json& report, const std::string& path, std::ostream& out);

}  // namespace artin
