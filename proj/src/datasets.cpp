#include "qparity/datasets.hpp"

#include <algorithm>
#include <cmath>

#include "qparity/errors.hpp"
#include "qparity/tsv.hpp"

namespace qparity {

void write_trace(const std::filesystem::path& path, const TelegraphTrace& trace,
                 const std::vector<std::string>& header_comments) {
  std::vector<std::vector<std::string>> rows;
  rows.reserve(trace.samples.size());
  for (std::size_t i = 0; i < trace.samples.size(); ++i)
    rows.push_back({format_double(static_cast<double>(i) * trace.dt_s),
                    format_double(trace.samples[i])});
  write_tsv(path, header_comments, {"time_s", "value"}, rows);
}

TelegraphTrace read_trace(const std::filesystem::path& path) {
  const TsvTable t = read_tsv(path);
  const auto tc = static_cast<std::size_t>(t.require_column("time_s"));
  const auto vc = static_cast<std::size_t>(t.require_column("value"));
  if (t.rows.size() < 2)
    throw validation_error(path.string() + ": trace needs >= 2 samples");
  TelegraphTrace trace;
  trace.origin = TraceOrigin::measured;
  const double t0 = t.number(0, tc);
  const double t1 = t.number(1, tc);
  trace.dt_s = t1 - t0;
  if (!(trace.dt_s > 0.0))
    throw validation_error(path.string() + ": non-increasing time axis");
  for (std::size_t r = 0; r < t.rows.size(); ++r) {
    const double expected = t0 + static_cast<double>(r) * trace.dt_s;
    const double actual = t.number(r, tc);
    if (std::fabs(actual - expected) > 1e-6 * trace.dt_s * (1.0 + static_cast<double>(r)))
      throw validation_error(path.string() + ": non-uniform sampling near row " +
                             std::to_string(r + 1));
    trace.samples.push_back(t.number(r, vc));
  }
  return trace;
}

std::vector<std::filesystem::path> list_ensemble(const std::filesystem::path& dir) {
  if (!std::filesystem::is_directory(dir))
    throw validation_error(dir.string() + " is not a directory");
  std::vector<std::filesystem::path> files;
  for (const auto& entry : std::filesystem::directory_iterator(dir))
    if (entry.is_regular_file()) files.push_back(entry.path());
  std::sort(files.begin(), files.end());
  if (files.empty())
    throw validation_error(dir.string() + ": empty ensemble directory");
  return files;
}

ThermalSeriesFile read_thermal_series(const std::filesystem::path& path) {
  const TsvTable t = read_tsv(path);
  const auto qc = static_cast<std::size_t>(t.require_column("qubit_id"));
  const auto cc = static_cast<std::size_t>(t.require_column("chip_id"));
  const auto tc = static_cast<std::size_t>(t.require_column("temperature_mk"));
  const auto gc = static_cast<std::size_t>(t.require_column("gamma_p_hz"));
  const auto sc = static_cast<std::size_t>(t.require_column("sigma_hz"));

  ThermalSeriesFile out;
  std::map<std::string, std::size_t> index;
  for (std::size_t r = 0; r < t.rows.size(); ++r) {
    const std::string qubit = t.cell(r, qc);
    auto it = index.find(qubit);
    if (it == index.end()) {
      ThermalSeries s;
      s.qubit_id = qubit;
      s.chip_id = t.cell(r, cc);
      it = index.emplace(qubit, out.series.size()).first;
      out.series.push_back(std::move(s));
    }
    ThermalPoint pt;
    pt.temperature_k = t.number(r, tc) * 1e-3;
    pt.gamma_p_hz = t.number(r, gc);
    pt.sigma_hz = t.missing(r, sc) ? 0.0 : t.number(r, sc);
    out.series[it->second].points.push_back(pt);
  }
  return out;
}

void write_thermal_series(const std::filesystem::path& path,
                          const std::vector<ThermalSeries>& series,
                          const std::vector<std::string>& header_comments) {
  std::vector<std::vector<std::string>> rows;
  for (const auto& s : series)
    for (const auto& pt : s.points)
      rows.push_back({s.qubit_id, s.chip_id,
                      format_double(pt.temperature_k * 1e3),
                      format_double(pt.gamma_p_hz), format_double(pt.sigma_hz)});
  write_tsv(path, header_comments,
            {"qubit_id", "chip_id", "temperature_mk", "gamma_p_hz", "sigma_hz"},
            rows);
}

DecayCurve read_decay_curve(const std::filesystem::path& path) {
  const TsvTable t = read_tsv(path);
  DecayCurve curve;
  bool kind_found = false;
  for (const auto& c : t.comments) {
    const auto pos = c.find("kind:");
    if (pos == std::string::npos) continue;
    std::string kind = c.substr(pos + 5);
    kind.erase(0, kind.find_first_not_of(' '));
    if (kind == "relaxation")
      curve.kind = DecayKind::relaxation;
    else if (kind == "echo")
      curve.kind = DecayKind::echo;
    else
      throw validation_error(path.string() + ": unknown kind '" + kind + "'");
    kind_found = true;
  }
  if (!kind_found)
    throw validation_error(path.string() +
                           ": missing '# kind: relaxation|echo' header");
  const auto tc = static_cast<std::size_t>(t.require_column("time_s"));
  const auto pc = static_cast<std::size_t>(t.require_column("population"));
  for (std::size_t r = 0; r < t.rows.size(); ++r) {
    curve.times_s.push_back(t.number(r, tc));
    curve.populations.push_back(t.number(r, pc));
  }
  return curve;
}

void write_decay_curve(const std::filesystem::path& path, const DecayCurve& curve,
                       const std::vector<std::string>& header_comments) {
  std::vector<std::string> comments = header_comments;
  comments.push_back(std::string("kind: ") +
                     (curve.kind == DecayKind::echo ? "echo" : "relaxation"));
  std::vector<std::vector<std::string>> rows;
  for (std::size_t i = 0; i < curve.times_s.size(); ++i)
    rows.push_back({format_double(curve.times_s[i]),
                    format_double(curve.populations[i])});
  write_tsv(path, comments, {"time_s", "population"}, rows);
}

std::map<std::string, OffsetTrajectory> read_offset_trajectories(
    const std::filesystem::path& path) {
  const TsvTable t = read_tsv(path);
  const auto tc = static_cast<std::size_t>(t.require_column("time_s"));
  const auto nc = static_cast<std::size_t>(t.require_column("ng_e"));
  const auto qc = static_cast<std::size_t>(t.require_column("qubit_id"));
  std::map<std::string, OffsetTrajectory> out;
  for (std::size_t r = 0; r < t.rows.size(); ++r) {
    auto& traj = out[t.cell(r, qc)];
    traj.time_s.push_back(t.number(r, tc));
    traj.ng_e.push_back(t.number(r, nc));
  }
  return out;
}

void write_offset_trajectories(
    const std::filesystem::path& path,
    const std::map<std::string, OffsetTrajectory>& trajectories,
    const std::vector<std::string>& header_comments) {
  std::vector<std::vector<std::string>> rows;
  for (const auto& [qubit, traj] : trajectories)
    for (std::size_t i = 0; i < traj.time_s.size(); ++i)
      rows.push_back({format_double(traj.time_s[i]),
                      format_double(traj.ng_e[i]), qubit});
  write_tsv(path, header_comments, {"time_s", "ng_e", "qubit_id"}, rows);
}

} // namespace qparity
