#ifndef QPARITY_DEVICE_TABLES_HPP
#define QPARITY_DEVICE_TABLES_HPP

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace qparity {

/// One device row, merged from the two bundled tables. Values are SI (Hz,
/// seconds); geometry stays in micrometers. Blanks in the tables map to
/// empty optionals and are never defaulted.
struct DeviceRecord {
  std::string device_id;
  std::string chip_id;
  std::optional<double> length_um, width_um, gap_um;
  std::optional<double> ej_hz, ec_hz;
  std::optional<double> omega_max_hz, omega_min_hz;
  std::optional<double> g_hz, fr_hz;
  std::optional<double> t1_s, tphi_s, tp_s;
  // fitted parameters (second table)
  std::optional<double> eps0_hz, c0sq, gp0_hz, delta_hz, xqp;
  // setup metadata, verbatim
  std::string holder, cap, cr110, figures;
};

/// Bundled datasets (tab-separated, one header row).
const std::string& builtin_table1_tsv();
const std::string& builtin_table2_tsv();

std::vector<DeviceRecord> load_device_tables();  // builtin
std::vector<DeviceRecord> load_device_tables(const std::filesystem::path& table1,
                                             const std::filesystem::path& table2);

const DeviceRecord& find_device(const std::vector<DeviceRecord>& records,
                                const std::string& device_id);

} // namespace qparity

#endif
