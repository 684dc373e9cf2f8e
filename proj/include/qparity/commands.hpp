#ifndef QPARITY_COMMANDS_HPP
#define QPARITY_COMMANDS_HPP

#include <cstdint>
#include <filesystem>
#include <string>

#include "qparity/config.hpp"

namespace qparity {

struct CommandContext {
  RunConfig config;
  std::filesystem::path out_dir = ".";
  std::filesystem::path data_dir = ".";  // base for relative input paths
  std::uint64_t seed = 1;
  std::string device_id;  // --device override
};

/// Exit codes: 0 success, 2 validation error, 3 fit non-convergence.
inline constexpr int kExitOk = 0;
inline constexpr int kExitValidation = 2;
inline constexpr int kExitNonConvergence = 3;

void cmd_spectrum(const CommandContext& ctx);
void cmd_simulate_rts(const CommandContext& ctx);
void cmd_fit_tp(const CommandContext& ctx);
void cmd_thermal_fit(const CommandContext& ctx);
void cmd_antenna(const CommandContext& ctx);
void cmd_jumps(const CommandContext& ctx);
void cmd_coherence_fit(const CommandContext& ctx);

/// Dispatch by subcommand name; maps exceptions onto exit codes and prints
/// them to stderr.
int run_command(const std::string& name, const CommandContext& ctx);

} // namespace qparity

#endif
