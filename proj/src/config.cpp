#include "qparity/config.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "qparity/errors.hpp"
#include "qparity/tsv.hpp"

namespace qparity {
namespace {

std::string trim(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t\r");
  std::size_t e = s.find_last_not_of(" \t\r");
  if (b == std::string::npos) return "";
  return s.substr(b, e - b + 1);
}

} // namespace

std::uint64_t fnv1a(std::string_view bytes) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

RunConfig RunConfig::parse(const std::string& content, const std::string& source) {
  RunConfig cfg;
  cfg.source_ = source;
  std::istringstream in(content);
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    const std::size_t eq = t.find('=');
    if (eq == std::string::npos) {
      std::ostringstream msg;
      msg << source << ":" << line_no << ": expected key = value";
      throw validation_error(msg.str());
    }
    const std::string key = trim(t.substr(0, eq));
    const std::string value = trim(t.substr(eq + 1));
    if (key.empty()) {
      std::ostringstream msg;
      msg << source << ":" << line_no << ": empty key";
      throw validation_error(msg.str());
    }
    if (cfg.values_.count(key)) {
      std::ostringstream msg;
      msg << source << ":" << line_no << ": duplicate key '" << key << "'";
      throw validation_error(msg.str());
    }
    cfg.values_[key] = value;
  }
  return cfg;
}

RunConfig RunConfig::load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw validation_error("cannot open config " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse(buf.str(), path.string());
}

void RunConfig::set(const std::string& key, const std::string& value) {
  values_[key] = value;
}

bool RunConfig::has(const std::string& key) const { return values_.count(key) > 0; }

std::string RunConfig::get_string(const std::string& key) const {
  const auto it = values_.find(key);
  if (it == values_.end())
    throw validation_error(source_ + ": missing required key '" + key + "'");
  return it->second;
}

std::string RunConfig::get_string(const std::string& key,
                                  const std::string& fallback) const {
  const auto it = values_.find(key);
  return it == values_.end() ? fallback : it->second;
}

double RunConfig::get_number(const std::string& key) const {
  return parse_double(get_string(key), source_ + ": key '" + key + "'");
}

double RunConfig::get_number(const std::string& key, double fallback) const {
  if (!has(key)) return fallback;
  return get_number(key);
}

std::int64_t RunConfig::get_int(const std::string& key) const {
  const double v = get_number(key);
  const auto i = static_cast<std::int64_t>(v);
  if (static_cast<double>(i) != v)
    throw validation_error(source_ + ": key '" + key + "' must be an integer");
  return i;
}

std::int64_t RunConfig::get_int(const std::string& key, std::int64_t fallback) const {
  if (!has(key)) return fallback;
  return get_int(key);
}

bool RunConfig::get_flag(const std::string& key, bool fallback) const {
  if (!has(key)) return fallback;
  const std::string v = get_string(key);
  if (v == "true" || v == "1" || v == "yes" || v == "on") return true;
  if (v == "false" || v == "0" || v == "no" || v == "off") return false;
  throw validation_error(source_ + ": key '" + key + "' must be a boolean");
}

void RunConfig::restrict_keys(const std::vector<std::string>& allowed) const {
  for (const auto& [key, value] : values_) {
    if (std::find(allowed.begin(), allowed.end(), key) == allowed.end())
      throw validation_error(source_ + ": unknown key '" + key + "'");
  }
}

std::uint64_t RunConfig::hash() const {
  std::ostringstream canon;
  for (const auto& [key, value] : values_) canon << key << "=" << value << "\n";
  return fnv1a(canon.str());
}

} // namespace qparity
