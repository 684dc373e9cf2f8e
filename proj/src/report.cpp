#include "qparity/report.hpp"

#include <fstream>
#include <sstream>

#include "qparity/constants.hpp"
#include "qparity/errors.hpp"
#include "qparity/tsv.hpp"

namespace qparity {

void Report::add(const std::string& key, const std::string& value) {
  lines_.emplace_back(key, value);
}

void Report::add(const std::string& key, double value) {
  lines_.emplace_back(key, format_double(value));
}

void Report::add_count(const std::string& key, std::int64_t value) {
  lines_.emplace_back(key, std::to_string(value));
}

void Report::add_flag(const std::string& key, bool value) {
  lines_.emplace_back(key, value ? "true" : "false");
}

void Report::blank_line() { lines_.emplace_back("", ""); }

std::string Report::render(std::uint64_t config_hash, std::uint64_t seed) const {
  std::ostringstream out;
  for (const auto& line : provenance_header(config_hash, seed))
    out << "# " << line << "\n";
  for (const auto& [key, value] : lines_) {
    if (key.empty())
      out << "\n";
    else
      out << key << " = " << value << "\n";
  }
  return out.str();
}

void Report::write(const std::filesystem::path& path, std::uint64_t config_hash,
                   std::uint64_t seed) const {
  std::ofstream out(path);
  if (!out) throw validation_error("cannot write " + path.string());
  out << render(config_hash, seed);
  if (!out) throw validation_error("write failed: " + path.string());
}

std::vector<std::string> provenance_header(std::uint64_t config_hash,
                                           std::uint64_t seed) {
  std::ostringstream hash_hex;
  hash_hex << std::hex << config_hash;
  return {
      std::string("tool: qparity ") + kToolVersion,
      "config_hash: " + hash_hex.str(),
      "seed: " + std::to_string(seed),
  };
}

} // namespace qparity
