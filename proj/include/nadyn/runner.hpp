#pragma once

// Batch subcommands over JSON input. Output is CSV or JSON text and depends
// only on the input and the configuration.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace nadyn {

struct RunConfig {
    std::string subcommand;
    std::uint64_t seed = 0;
    std::size_t budget_bits = 4096;
    /// Override the input's horizon / sample size when set.
    std::optional<std::size_t> horizon;
    std::optional<std::size_t> sample;
};

enum class ExitCode : int { Ok = 0, Domain = 1, Schema = 2, Budget = 3 };

struct RunResult {
    ExitCode code = ExitCode::Ok;
    std::string output;
    /// Error name and message when code != Ok.
    std::string error;
    std::string message;
};

const std::vector<std::string>& subcommands();

/// Runs one subcommand on the JSON text; never throws.
RunResult run(const RunConfig& config, const std::string& input);

}  // namespace nadyn
