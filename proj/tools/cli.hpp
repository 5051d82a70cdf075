#pragma once

#include "json.hpp"

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace erlab::cli {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

enum class ExitCode : int { ok = 0, verification_failed = 1, input_error = 2 };

enum class FieldType { integer, number, rational, text, pattern, path, flag };

struct FieldSpec {
    std::string name;
    FieldType type;
    /// Null means the field is required.
    Json default_value;
    std::string help;
};

/// Validated operation parameters: every field of the operation is present
/// (defaults filled in), in declaration order.
class ConstructionParams {
public:
    ConstructionParams() = default;
    explicit ConstructionParams(Json values) : values_(std::move(values)) {}

    std::int64_t integer(const std::string& name) const;
    int small(const std::string& name) const;
    double number(const std::string& name) const;
    std::string text(const std::string& name) const;
    bool flag(const std::string& name) const;
    bool has(const std::string& name) const;

    const Json& json() const noexcept { return values_; }

private:
    Json values_ = Json::object();
};

/// A fully validated request, whether it came from flags or a manifest.
struct Request {
    /// "group name", e.g. "solve f-exact", or just "rho".
    std::string command;
    ConstructionParams params;
    std::vector<std::uint64_t> seeds;
    int jobs = 1;
    std::optional<std::string> output;
    std::optional<std::string> report;
};

struct Diagnostic {
    /// Line in the manifest, 0 when not applicable.
    int line = 0;
    std::string field;
    std::string message;
};

/// Input rejected before execution; carries one diagnostic per problem.
class InputError : public std::exception {
public:
    explicit InputError(std::vector<Diagnostic> diagnostics);
    const char* what() const noexcept override { return summary_.c_str(); }
    const std::vector<Diagnostic>& diagnostics() const noexcept { return diagnostics_; }

private:
    std::vector<Diagnostic> diagnostics_;
    std::string summary_;
};

/// Command names in registration order ("construct unital", ..., "rho").
std::vector<std::string> command_names();
const std::vector<FieldSpec>& command_fields(const std::string& command);

/// Validates a manifest document (schema 1). `source` is the raw text, used
/// to attach line numbers to field diagnostics. Throws InputError.
Request parse_manifest(const std::string& source);

/// Runs a validated request and returns the report. The verdict is in
/// report["verification"]["passed"].
Json execute(const Request& request);

/// Report serialization used for files and stdout (two-space indent,
/// trailing newline).
std::string dump_report(const Json& report);

/// Full command-line entry point. args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace erlab::cli
