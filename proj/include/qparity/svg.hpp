#ifndef QPARITY_SVG_HPP
#define QPARITY_SVG_HPP

#include <filesystem>
#include <span>
#include <string>
#include <vector>

namespace qparity {

/// Minimal standalone SVG line/scatter chart. No external dependencies;
/// output is deterministic byte-for-byte.
class SvgChart {
 public:
  SvgChart(std::string title, std::string x_label, std::string y_label);

  void set_log_x(bool on) { log_x_ = on; }
  void set_log_y(bool on) { log_y_ = on; }

  void add_line(std::span<const double> x, std::span<const double> y,
                const std::string& color, const std::string& label = "",
                bool dashed = false);
  void add_points(std::span<const double> x, std::span<const double> y,
                  const std::string& color, const std::string& label = "");
  void add_vline(double x, const std::string& color,
                 const std::string& label = "");

  std::string render() const;
  void write(const std::filesystem::path& path,
             const std::vector<std::string>& header_comments) const;

 private:
  struct Series {
    std::vector<double> x, y;
    std::string color, label;
    bool dashed = false;
    bool points = false;
  };
  struct VLine {
    double x;
    std::string color, label;
  };

  std::string title_, x_label_, y_label_;
  bool log_x_ = false, log_y_ = false;
  std::vector<Series> series_;
  std::vector<VLine> vlines_;
};

} // namespace qparity

#endif
