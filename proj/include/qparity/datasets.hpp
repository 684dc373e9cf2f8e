#ifndef QPARITY_DATASETS_HPP
#define QPARITY_DATASETS_HPP

#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "qparity/coherence.hpp"
#include "qparity/telegraph.hpp"
#include "qparity/thermal.hpp"

namespace qparity {

/// Trace file: header `time_s  value`, uniform sampling.
void write_trace(const std::filesystem::path& path, const TelegraphTrace& trace,
                 const std::vector<std::string>& header_comments);
TelegraphTrace read_trace(const std::filesystem::path& path);

/// Ensemble directory convention: one trace file per repetition, sorted by
/// filename for deterministic processing order.
std::vector<std::filesystem::path> list_ensemble(const std::filesystem::path& dir);

/// Thermal series file: qubit_id, chip_id, temperature_mk, gamma_p_hz,
/// sigma_hz. Spectral inputs are attached by the caller.
struct ThermalSeriesFile {
  std::vector<ThermalSeries> series;  // qubit field left empty
};
ThermalSeriesFile read_thermal_series(const std::filesystem::path& path);
void write_thermal_series(const std::filesystem::path& path,
                          const std::vector<ThermalSeries>& series,
                          const std::vector<std::string>& header_comments);

/// Decay curve file: `# kind: relaxation|echo` comment plus time_s, population.
DecayCurve read_decay_curve(const std::filesystem::path& path);
void write_decay_curve(const std::filesystem::path& path, const DecayCurve& curve,
                       const std::vector<std::string>& header_comments);

/// Offset-charge trajectories keyed by qubit: time_s, ng_e, qubit_id.
struct OffsetTrajectory {
  std::vector<double> time_s;
  std::vector<double> ng_e;
};
std::map<std::string, OffsetTrajectory> read_offset_trajectories(
    const std::filesystem::path& path);
void write_offset_trajectories(
    const std::filesystem::path& path,
    const std::map<std::string, OffsetTrajectory>& trajectories,
    const std::vector<std::string>& header_comments);

} // namespace qparity

#endif
