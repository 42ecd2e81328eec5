#pragma once

#include <json.hpp>

#include <cstdint>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>

namespace blockalg {

/// Malformed or semantically invalid job configuration (exit status 2).
class ConfigError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

enum class JobKind { axioms, affinize, blockcheck, classify, singular, crosscheck, closure, modcheck };

std::string to_string(JobKind kind);

/// Validated job. `resolved` is the input with every default filled in; it is
/// echoed verbatim in the report.
struct JobConfig {
    JobKind kind = JobKind::axioms;
    nlohmann::json resolved;
    std::optional<std::string> output;
};

JobConfig parse_config(const nlohmann::json& document);
/// Throws ConfigError with line/column or field diagnostics.
JobConfig load_config(const std::filesystem::path& path);

struct RunOptions {
    unsigned threads = 1;
    std::optional<std::uint64_t> seed;  // overrides the config's "seed"
};

struct Report {
    nlohmann::json body;
    bool positive = true;

    int exit_status() const { return positive ? 0 : 1; }
};

Report run_job(const JobConfig& config, const RunOptions& options = {});

enum class ReportFormat { text, machine };

/// Machine: sorted-key JSON, rationals as strings. Text: one "path: value"
/// line per leaf. Both end with a newline.
std::string emit_report(const Report& report, ReportFormat format);

}  // namespace blockalg
