#ifndef QPARITY_CONFIG_HPP
#define QPARITY_CONFIG_HPP

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace qparity {

/// key = value configuration with '#' comments. Lookups are typed; commands
/// validate the key set so typos fail loudly.
class RunConfig {
 public:
  RunConfig() = default;
  static RunConfig parse(const std::string& content, const std::string& source);
  static RunConfig load(const std::filesystem::path& path);

  void set(const std::string& key, const std::string& value);
  bool has(const std::string& key) const;

  std::string get_string(const std::string& key) const;
  std::string get_string(const std::string& key, const std::string& fallback) const;
  double get_number(const std::string& key) const;
  double get_number(const std::string& key, double fallback) const;
  std::int64_t get_int(const std::string& key) const;
  std::int64_t get_int(const std::string& key, std::int64_t fallback) const;
  bool get_flag(const std::string& key, bool fallback) const;

  /// Rejects keys outside the allowed set.
  void restrict_keys(const std::vector<std::string>& allowed) const;

  /// FNV-1a over the canonical sorted "key=value" rendering.
  std::uint64_t hash() const;

  const std::map<std::string, std::string>& entries() const { return values_; }

 private:
  std::map<std::string, std::string> values_;
  std::string source_ = "<config>";
};

std::uint64_t fnv1a(std::string_view bytes);

} // namespace qparity

#endif
