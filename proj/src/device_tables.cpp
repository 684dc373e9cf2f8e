#include "qparity/device_tables.hpp"

#include <map>

#include "qparity/errors.hpp"
#include "qparity/tsv.hpp"

namespace qparity {
namespace {

std::string chip_of(const std::string& device_id) {
  const auto dash = device_id.find('-');
  return dash == std::string::npos ? device_id : device_id.substr(0, dash);
}

std::optional<double> scaled(const TsvTable& t, std::size_t row, int col,
                             double factor) {
  if (col < 0) return std::nullopt;
  const auto v = t.opt_number(row, static_cast<std::size_t>(col));
  if (!v) return std::nullopt;
  return *v * factor;
}

std::string text_cell(const TsvTable& t, std::size_t row, int col) {
  if (col < 0) return "";
  const std::string& c = t.cell(row, static_cast<std::size_t>(col));
  return c == "--" || c == "-" ? "" : c;
}

std::vector<DeviceRecord> parse_table1(const TsvTable& t) {
  const int id = t.require_column("device_id");
  const int l = t.require_column("L_um"), w = t.require_column("W_um"),
            d = t.require_column("d_um");
  const int ej = t.require_column("ej_ghz"), ec = t.require_column("ec_ghz");
  const int wmax = t.require_column("omega_max_ghz"),
            wmin = t.require_column("omega_min_ghz");
  const int g = t.require_column("g_mhz"), fr = t.require_column("fr_ghz");
  const int t1 = t.require_column("t1_us"), tphi = t.require_column("tphi_us"),
            tp = t.require_column("tp_s");
  const int holder = t.column_index("holder"), cap = t.column_index("cap_um"),
            cr110 = t.column_index("cr110"), figs = t.column_index("figures");

  std::vector<DeviceRecord> out;
  for (std::size_t r = 0; r < t.rows.size(); ++r) {
    DeviceRecord rec;
    rec.device_id = t.cell(r, static_cast<std::size_t>(id));
    rec.chip_id = chip_of(rec.device_id);
    rec.length_um = t.opt_number(r, static_cast<std::size_t>(l));
    rec.width_um = t.opt_number(r, static_cast<std::size_t>(w));
    rec.gap_um = t.opt_number(r, static_cast<std::size_t>(d));
    rec.ej_hz = scaled(t, r, ej, 1e9);
    rec.ec_hz = scaled(t, r, ec, 1e9);
    rec.omega_max_hz = scaled(t, r, wmax, 1e9);
    rec.omega_min_hz = scaled(t, r, wmin, 1e9);
    rec.g_hz = scaled(t, r, g, 1e6);
    rec.fr_hz = scaled(t, r, fr, 1e9);
    rec.t1_s = scaled(t, r, t1, 1e-6);
    rec.tphi_s = scaled(t, r, tphi, 1e-6);
    rec.tp_s = t.opt_number(r, static_cast<std::size_t>(tp));
    rec.holder = text_cell(t, r, holder);
    rec.cap = text_cell(t, r, cap);
    rec.cr110 = text_cell(t, r, cr110);
    rec.figures = text_cell(t, r, figs);
    out.push_back(std::move(rec));
  }
  return out;
}

void merge_table2(std::vector<DeviceRecord>& records, const TsvTable& t) {
  std::map<std::string, std::size_t> by_id;
  for (std::size_t i = 0; i < records.size(); ++i) {
    if (by_id.count(records[i].device_id))
      throw validation_error("device tables: duplicate id " +
                             records[i].device_id);
    by_id[records[i].device_id] = i;
  }
  const int id = t.require_column("device_id");
  const int ej = t.require_column("ej_ghz"), ec = t.require_column("ec_ghz");
  const int eps0 = t.require_column("eps0_ghz"), c0 = t.require_column("c0sq");
  const int gp0 = t.require_column("gp0_hz"), dl = t.require_column("delta_ghz");
  const int xq = t.require_column("xqp_1e7");

  for (std::size_t r = 0; r < t.rows.size(); ++r) {
    const std::string device = t.cell(r, static_cast<std::size_t>(id));
    auto it = by_id.find(device);
    if (it == by_id.end()) {
      DeviceRecord fresh;
      fresh.device_id = device;
      fresh.chip_id = chip_of(device);
      it = by_id.emplace(device, records.size()).first;
      records.push_back(std::move(fresh));
    }
    DeviceRecord& rec = records[it->second];
    if (!rec.ej_hz) rec.ej_hz = scaled(t, r, ej, 1e9);
    if (!rec.ec_hz) rec.ec_hz = scaled(t, r, ec, 1e9);
    rec.eps0_hz = scaled(t, r, eps0, 1e9);
    rec.c0sq = t.opt_number(r, static_cast<std::size_t>(c0));
    rec.gp0_hz = t.opt_number(r, static_cast<std::size_t>(gp0));
    rec.delta_hz = scaled(t, r, dl, 1e9);
    rec.xqp = scaled(t, r, xq, 1e-7);
  }
}

} // namespace

std::vector<DeviceRecord> load_device_tables() {
  auto records = parse_table1(parse_tsv(builtin_table1_tsv(), "<builtin table 1>"));
  merge_table2(records, parse_tsv(builtin_table2_tsv(), "<builtin table 2>"));
  return records;
}

std::vector<DeviceRecord> load_device_tables(const std::filesystem::path& table1,
                                             const std::filesystem::path& table2) {
  auto records = parse_table1(read_tsv(table1));
  merge_table2(records, read_tsv(table2));
  return records;
}

const DeviceRecord& find_device(const std::vector<DeviceRecord>& records,
                                const std::string& device_id) {
  for (const auto& r : records)
    if (r.device_id == device_id) return r;
  throw validation_error("unknown device id '" + device_id + "'");
}

} // namespace qparity
