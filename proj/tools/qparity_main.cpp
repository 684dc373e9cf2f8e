#include <CLI11.hpp>
#include <cstdlib>
#include <iostream>
#include <string>

#include "qparity/commands.hpp"
#include "qparity/constants.hpp"
#include "qparity/errors.hpp"

int main(int argc, char** argv) {
  CLI::App app{"qparity - charge-parity switching analysis for "
               "superconducting qubits"};
  app.set_version_flag("--version", std::string("qparity ") + qparity::kToolVersion);
  app.require_subcommand(1);

  std::string config_path, out_dir = ".", device;
  std::uint64_t seed = 1;
  app.add_option("--config", config_path, "configuration file (key = value)");
  app.add_option("--seed", seed, "random seed")->capture_default_str();
  app.add_option("--out", out_dir, "output directory")->capture_default_str();
  app.add_option("--device", device, "device id, e.g. S1-Q1");

  const char* names[] = {"spectrum",    "fit-tp", "simulate-rts", "thermal-fit",
                         "antenna",     "jumps",  "coherence-fit"};
  const char* descriptions[] = {
      "transition frequencies vs offset charge for a device",
      "PSD + Lorentzian + autocorrelation analysis of a trace ensemble",
      "generate a seeded random-telegraph trace ensemble",
      "temperature fit of parity rates with shared junction gap",
      "equivalent-circuit impedance, coupling efficiency, rate prediction",
      "offset-charge jump detection and rates",
      "T1/echo decay fits and thermal-photon dephasing",
  };
  for (std::size_t i = 0; i < std::size(names); ++i)
    app.add_subcommand(names[i], descriptions[i]);

  CLI11_PARSE(app, argc, argv);

  qparity::CommandContext ctx;
  try {
    if (!config_path.empty()) ctx.config = qparity::RunConfig::load(config_path);
  } catch (const qparity::validation_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return qparity::kExitValidation;
  }
  ctx.out_dir = out_dir;
  ctx.seed = seed;
  ctx.device_id = device;
  if (const char* env = std::getenv("QPARITY_DATA_DIR"))
    ctx.data_dir = env;

  return qparity::run_command(app.get_subcommands().front()->get_name(), ctx);
}
