#pragma once

#include <json.hpp>

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace flagkernel::cli {

inline constexpr const char* kReportSchema = "flagkernel.report/1";

enum class ExitCode : int {
    Ok = 0,
    VerificationFailed = 1,
    InvalidInput = 2,
    InternalError = 3,
};

enum class Format { Table, Json };

struct RunReport {
    std::string command;
    nlohmann::ordered_json inputs = nlohmann::ordered_json::object();
    nlohmann::ordered_json results = nlohmann::ordered_json::object();
    bool pass = true;
    std::string summary;
    std::string tool_version;
    /// Not part of the emitted payload, which must be byte-identical across runs.
    double wall_seconds = 0.0;
    /// Human-readable rendering used for the table format.
    std::string table;
};

/// Stable, versioned payload (no timing information).
nlohmann::ordered_json to_json(const RunReport& r);

/// Writes the report to `destination` if given (nothing on `out`), else to `out`.
/// Throws InputError when the destination cannot be written.
void emit_report(const RunReport& r, Format format, const std::optional<std::string>& destination, std::ostream& out);

struct DispatchResult {
    std::optional<RunReport> report;
    ExitCode exit_code = ExitCode::Ok;
};

/// Runs one subcommand. `args` excludes the program name. Payload goes to `out`, diagnostics
/// and usage text to `err`.
DispatchResult dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace flagkernel::cli
