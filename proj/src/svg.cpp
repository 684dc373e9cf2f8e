#include "qparity/svg.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>

#include "qparity/errors.hpp"

namespace qparity {
namespace {

constexpr double kWidth = 640, kHeight = 440;
constexpr double kLeft = 72, kRight = 24, kTop = 40, kBottom = 56;

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.6g", v);
  return buf;
}

// round-number ticks for a linear axis
std::vector<double> linear_ticks(double lo, double hi) {
  const double span = hi - lo;
  if (!(span > 0)) return {lo};
  const double raw = span / 5.0;
  const double mag = std::pow(10.0, std::floor(std::log10(raw)));
  double step = mag;
  for (double m : {1.0, 2.0, 5.0, 10.0}) {
    if (raw <= m * mag) {
      step = m * mag;
      break;
    }
  }
  std::vector<double> ticks;
  for (double t = std::ceil(lo / step) * step; t <= hi + 1e-9 * span; t += step)
    ticks.push_back(std::fabs(t) < 1e-12 * span ? 0.0 : t);
  return ticks;
}

std::vector<double> log_ticks(double lo, double hi) {
  std::vector<double> ticks;
  for (int d = static_cast<int>(std::floor(std::log10(lo)));
       d <= static_cast<int>(std::ceil(std::log10(hi))); ++d) {
    const double t = std::pow(10.0, d);
    if (t >= lo / 1.001 && t <= hi * 1.001) ticks.push_back(t);
  }
  if (ticks.empty()) ticks = {lo, hi};
  return ticks;
}

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      default: out += c;
    }
  }
  return out;
}

} // namespace

SvgChart::SvgChart(std::string title, std::string x_label, std::string y_label)
    : title_(std::move(title)),
      x_label_(std::move(x_label)),
      y_label_(std::move(y_label)) {}

void SvgChart::add_line(std::span<const double> x, std::span<const double> y,
                        const std::string& color, const std::string& label,
                        bool dashed) {
  if (x.size() != y.size()) throw validation_error("svg: x/y size mismatch");
  Series s;
  s.x.assign(x.begin(), x.end());
  s.y.assign(y.begin(), y.end());
  s.color = color;
  s.label = label;
  s.dashed = dashed;
  series_.push_back(std::move(s));
}

void SvgChart::add_points(std::span<const double> x, std::span<const double> y,
                          const std::string& color, const std::string& label) {
  add_line(x, y, color, label, false);
  series_.back().points = true;
}

void SvgChart::add_vline(double x, const std::string& color,
                         const std::string& label) {
  vlines_.push_back({x, color, label});
}

std::string SvgChart::render() const {
  double xmin = std::numeric_limits<double>::max(), xmax = -xmin;
  double ymin = xmin, ymax = -xmin;
  const auto usable = [&](double v, bool log_axis) {
    return std::isfinite(v) && (!log_axis || v > 0.0);
  };
  for (const auto& s : series_) {
    for (std::size_t i = 0; i < s.x.size(); ++i) {
      if (!usable(s.x[i], log_x_) || !usable(s.y[i], log_y_)) continue;
      xmin = std::min(xmin, s.x[i]);
      xmax = std::max(xmax, s.x[i]);
      ymin = std::min(ymin, s.y[i]);
      ymax = std::max(ymax, s.y[i]);
    }
  }
  for (const auto& v : vlines_) {
    if (!usable(v.x, log_x_)) continue;
    xmin = std::min(xmin, v.x);
    xmax = std::max(xmax, v.x);
  }
  if (!(xmin <= xmax)) { xmin = 0; xmax = 1; }
  if (!(ymin <= ymax)) { ymin = 0; ymax = 1; }
  if (xmin == xmax) { xmin -= 0.5; xmax += 0.5; }
  if (ymin == ymax) { ymin -= 0.5; ymax += 0.5; }
  if (!log_y_) {
    const double pad = 0.05 * (ymax - ymin);
    ymin -= pad;
    ymax += pad;
  } else {
    ymin /= 1.5;
    ymax *= 1.5;
  }

  const auto tx = [&](double v) {
    const double a = log_x_ ? std::log10(v) : v;
    const double lo = log_x_ ? std::log10(xmin) : xmin;
    const double hi = log_x_ ? std::log10(xmax) : xmax;
    return kLeft + (a - lo) / (hi - lo) * (kWidth - kLeft - kRight);
  };
  const auto ty = [&](double v) {
    const double a = log_y_ ? std::log10(v) : v;
    const double lo = log_y_ ? std::log10(ymin) : ymin;
    const double hi = log_y_ ? std::log10(ymax) : ymax;
    return kHeight - kBottom - (a - lo) / (hi - lo) * (kHeight - kTop - kBottom);
  };

  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth
      << "\" height=\"" << kHeight << "\" viewBox=\"0 0 " << kWidth << " "
      << kHeight << "\">\n";
  out << "<rect width=\"" << kWidth << "\" height=\"" << kHeight
      << "\" fill=\"white\"/>\n";
  out << "<text x=\"" << kWidth / 2 << "\" y=\"22\" text-anchor=\"middle\" "
         "font-family=\"sans-serif\" font-size=\"14\">"
      << escape(title_) << "</text>\n";

  // axes box
  out << "<rect x=\"" << kLeft << "\" y=\"" << kTop << "\" width=\""
      << kWidth - kLeft - kRight << "\" height=\"" << kHeight - kTop - kBottom
      << "\" fill=\"none\" stroke=\"black\"/>\n";

  const auto xticks = log_x_ ? log_ticks(xmin, xmax) : linear_ticks(xmin, xmax);
  for (double t : xticks) {
    const double px = tx(t);
    out << "<line x1=\"" << fmt(px) << "\" y1=\"" << kHeight - kBottom
        << "\" x2=\"" << fmt(px) << "\" y2=\"" << kHeight - kBottom + 5
        << "\" stroke=\"black\"/>\n";
    out << "<text x=\"" << fmt(px) << "\" y=\"" << kHeight - kBottom + 18
        << "\" text-anchor=\"middle\" font-family=\"sans-serif\" "
           "font-size=\"11\">"
        << fmt(t) << "</text>\n";
  }
  const auto yticks = log_y_ ? log_ticks(ymin, ymax) : linear_ticks(ymin, ymax);
  for (double t : yticks) {
    const double py = ty(t);
    out << "<line x1=\"" << kLeft - 5 << "\" y1=\"" << fmt(py) << "\" x2=\""
        << kLeft << "\" y2=\"" << fmt(py) << "\" stroke=\"black\"/>\n";
    out << "<text x=\"" << kLeft - 8 << "\" y=\"" << fmt(py + 4)
        << "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"11\">"
        << fmt(t) << "</text>\n";
  }
  out << "<text x=\"" << (kLeft + kWidth - kRight) / 2 << "\" y=\""
      << kHeight - 16
      << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"12\">"
      << escape(x_label_) << "</text>\n";
  out << "<text x=\"18\" y=\"" << (kTop + kHeight - kBottom) / 2
      << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"12\" "
         "transform=\"rotate(-90 18 "
      << (kTop + kHeight - kBottom) / 2 << ")\">" << escape(y_label_)
      << "</text>\n";

  for (const auto& v : vlines_) {
    if (!usable(v.x, log_x_)) continue;
    const double px = tx(v.x);
    out << "<line x1=\"" << fmt(px) << "\" y1=\"" << kTop << "\" x2=\""
        << fmt(px) << "\" y2=\"" << kHeight - kBottom << "\" stroke=\""
        << v.color << "\" stroke-dasharray=\"4 3\"/>\n";
    if (!v.label.empty())
      out << "<text x=\"" << fmt(px + 4) << "\" y=\"" << kTop + 14
          << "\" font-family=\"sans-serif\" font-size=\"11\" fill=\"" << v.color
          << "\">" << escape(v.label) << "</text>\n";
  }

  double legend_y = kTop + 16;
  for (const auto& s : series_) {
    std::ostringstream pts;
    bool open = false;
    if (s.points) {
      for (std::size_t i = 0; i < s.x.size(); ++i) {
        if (!usable(s.x[i], log_x_) || !usable(s.y[i], log_y_)) continue;
        out << "<circle cx=\"" << fmt(tx(s.x[i])) << "\" cy=\""
            << fmt(ty(s.y[i])) << "\" r=\"2.5\" fill=\"" << s.color << "\"/>\n";
      }
    } else {
      for (std::size_t i = 0; i < s.x.size(); ++i) {
        if (!usable(s.x[i], log_x_) || !usable(s.y[i], log_y_)) {
          if (open) {
            out << "<polyline points=\"" << pts.str()
                << "\" fill=\"none\" stroke=\"" << s.color << "\""
                << (s.dashed ? " stroke-dasharray=\"6 4\"" : "") << "/>\n";
            pts.str("");
            open = false;
          }
          continue;
        }
        pts << fmt(tx(s.x[i])) << "," << fmt(ty(s.y[i])) << " ";
        open = true;
      }
      if (open)
        out << "<polyline points=\"" << pts.str() << "\" fill=\"none\" stroke=\""
            << s.color << "\"" << (s.dashed ? " stroke-dasharray=\"6 4\"" : "")
            << "/>\n";
    }
    if (!s.label.empty()) {
      out << "<line x1=\"" << kWidth - kRight - 130 << "\" y1=\""
          << fmt(legend_y - 4) << "\" x2=\"" << kWidth - kRight - 110
          << "\" y2=\"" << fmt(legend_y - 4) << "\" stroke=\"" << s.color
          << "\"" << (s.dashed ? " stroke-dasharray=\"6 4\"" : "") << "/>\n";
      out << "<text x=\"" << kWidth - kRight - 105 << "\" y=\"" << fmt(legend_y)
          << "\" font-family=\"sans-serif\" font-size=\"11\">"
          << escape(s.label) << "</text>\n";
      legend_y += 16;
    }
  }
  out << "</svg>\n";
  return out.str();
}

void SvgChart::write(const std::filesystem::path& path,
                     const std::vector<std::string>& header_comments) const {
  std::ofstream out(path);
  if (!out) throw validation_error("cannot write " + path.string());
  out << "<!--\n";
  for (const auto& c : header_comments) out << "  " << c << "\n";
  out << "-->\n";
  out << render();
  if (!out) throw validation_error("write failed: " + path.string());
}

} // namespace qparity
