#ifndef QPARITY_REPORT_HPP
#define QPARITY_REPORT_HPP

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

namespace qparity {

/// Ordered key = value report with the standard provenance header
/// (tool version, config hash, seed). Deterministic byte output.
class Report {
 public:
  void add(const std::string& key, const std::string& value);
  void add(const std::string& key, double value);
  void add_count(const std::string& key, std::int64_t value);
  void add_flag(const std::string& key, bool value);
  void blank_line();

  std::string render(std::uint64_t config_hash, std::uint64_t seed) const;
  void write(const std::filesystem::path& path, std::uint64_t config_hash,
             std::uint64_t seed) const;

 private:
  std::vector<std::pair<std::string, std::string>> lines_;
};

/// Header comment lines shared by every emitted file.
std::vector<std::string> provenance_header(std::uint64_t config_hash,
                                           std::uint64_t seed);

} // namespace qparity

#endif
