#pragma once

#include <optional>
#include <string>
#include <vector>

#include "spnet/cli/table.hpp"
#include "spnet/numerics/big_float.hpp"

namespace spnet::cli {

enum class Mode { exact, float_ };
enum class Format { csv, json, text };

/// Exit statuses of the spnet executable.
inline constexpr int kExitOk = 0;
inline constexpr int kExitVerificationFailure = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitBudget = 3;

struct RunConfig {
    std::string command;
    /// Unset means the per-command default (see resolve_defaults).
    std::optional<unsigned> max_n;
    Mode mode = Mode::exact;
    Format format = Format::csv;
    std::string out; // empty = stdout
    mpfr_prec_t precision = kDefaultPrecision;
    std::vector<double> k = {-2, -1, 0.5, 1, 2, 3};
    std::string suite = "all";
    std::optional<unsigned> budget_override;
    std::size_t root_order = 600;

    /// One-line JSON rendering, printed to stderr by every run.
    std::string describe() const;
};

/// Command names accepted by run_command.
const std::vector<std::string>& command_names();

/// Fills max_n with the command's default when unset.
RunConfig resolve_defaults(RunConfig config);

struct CommandResult {
    Table table;
    int exit_code = kExitOk;
    /// Diagnostics for stderr; never part of the data.
    std::vector<std::string> notes;
};

/// Runs one command. Throws PreconditionError for unusable arguments and
/// BudgetExceeded when a size limit is hit.
CommandResult run_command(const RunConfig& config);

std::string render(const Table& table, Format format);

/// Writes to `path` through a sibling temporary file and a rename.
void write_atomically(const std::string& path, const std::string& content);

} // namespace spnet::cli
