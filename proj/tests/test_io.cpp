#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <fstream>

#include "qparity/config.hpp"
#include "qparity/datasets.hpp"
#include "qparity/device_tables.hpp"
#include "qparity/errors.hpp"
#include "qparity/rng.hpp"
#include "qparity/tsv.hpp"

using namespace qparity;
namespace fs = std::filesystem;

namespace {
double rel(double a, double b) {
  return std::fabs(a - b) / std::max({std::fabs(a), std::fabs(b), 1e-300});
}
fs::path temp_dir() {
  const fs::path dir = fs::temp_directory_path() / "qparity_test_io";
  fs::create_directories(dir);
  return dir;
}
} // namespace

TEST_CASE("bundled table transcription checksums") {
  CHECK(fnv1a(builtin_table1_tsv()) == 0x23a1796a9f09282eULL);
  CHECK(fnv1a(builtin_table2_tsv()) == 0xcaa8c22298a73ef8ULL);
}

TEST_CASE("device tables load and merge") {
  const auto records = load_device_tables();
  CHECK(records.size() == 55);

  const auto& q1 = find_device(records, "S1-Q1");
  CHECK(rel(*q1.ej_hz, 4.67e9) < 1e-12);
  CHECK(rel(*q1.ec_hz, 1.40e9) < 1e-12);
  CHECK(rel(*q1.tp_s, 1.918) < 1e-12);
  CHECK(rel(*q1.t1_s, 24.4e-6) < 1e-12);
  CHECK(rel(*q1.eps0_hz, 0.238e9) < 1e-12);
  CHECK(rel(*q1.gp0_hz, 0.48) < 1e-12);
  CHECK(q1.chip_id == "S1");

  const auto& s5q2 = find_device(records, "S5-Q2");
  CHECK(rel(*s5q2.eps0_hz, 0.027e9) < 1e-12);
  CHECK(rel(*s5q2.c0sq, 0.850) < 1e-12);
  CHECK(rel(*s5q2.delta_hz, 49.50e9) < 1e-12);
  CHECK(rel(*s5q2.xqp, 3.90e-7) < 1e-12);

  // blanks stay missing
  const auto& s2q1 = find_device(records, "S2-Q1");
  CHECK(!s2q1.ej_hz.has_value());
  CHECK(!s2q1.t1_s.has_value());
  CHECK(s2q1.fr_hz.has_value());
  CHECK(rel(*s2q1.tp_s, 0.691) < 1e-12);

  // metadata carried verbatim
  const auto& s8q5 = find_device(records, "S8-Q5");
  CHECK(s8q5.holder == "Al");
  CHECK(s8q5.cap == "300");
  CHECK(s8q5.cr110 == "yes");

  CHECK_THROWS_AS(find_device(records, "S1-Q9"), validation_error);
}

TEST_CASE("tsv schema errors carry position diagnostics") {
  const fs::path dir = temp_dir();
  const fs::path empty = dir / "empty.tsv";
  std::ofstream(empty).close();
  CHECK_THROWS_AS(read_tsv(empty), validation_error);

  const fs::path ragged = dir / "ragged.tsv";
  {
    std::ofstream out(ragged);
    out << "a\tb\n1\t2\n3\n";
  }
  try {
    read_tsv(ragged);
    CHECK(false);
  } catch (const validation_error& e) {
    CHECK(std::string(e.what()).find(":3") != std::string::npos);
  }
}

TEST_CASE("shortest round-trip double formatting") {
  RngStream rng(3);
  for (int i = 0; i < 200; ++i) {
    const double v = (rng.uniform01() - 0.5) *
                     std::pow(10.0, 300.0 * (rng.uniform01() - 0.5));
    CHECK(parse_double(format_double(v), "test") == v);
  }
  for (double v : {0.0, 1.0, -1.0, 0.1, 1e-308, 1.918, 6.833e9})
    CHECK(parse_double(format_double(v), "test") == v);
}

TEST_CASE("emitted tables re-ingest losslessly") {
  const fs::path file = temp_dir() / "roundtrip.tsv";
  RngStream rng(5);
  std::vector<std::vector<std::string>> rows;
  std::vector<double> values;
  for (int i = 0; i < 50; ++i) {
    const double a = rng.normal() * std::pow(10.0, 8.0 * (rng.uniform01() - 0.5));
    const double b = rng.uniform01();
    values.push_back(a);
    values.push_back(b);
    rows.push_back({format_double(a), format_double(b)});
  }
  write_tsv(file, {"roundtrip check"}, {"a", "b"}, rows);
  const TsvTable t = read_tsv(file);
  REQUIRE(t.rows.size() == 50);
  for (std::size_t r = 0; r < 50; ++r) {
    CHECK(t.number(r, 0) == values[2 * r]);
    CHECK(t.number(r, 1) == values[2 * r + 1]);
  }
}

TEST_CASE("config parsing and key policing") {
  const auto cfg = RunConfig::parse("a = 1\n# comment\nflag = true\npath=x.tsv\n",
                                    "<test>");
  CHECK(cfg.get_number("a") == 1.0);
  CHECK(cfg.get_flag("flag", false));
  CHECK(cfg.get_string("path") == "x.tsv");
  CHECK(cfg.get_number("missing", 7.0) == 7.0);
  CHECK_THROWS_AS(cfg.get_number("missing"), validation_error);
  CHECK_THROWS_AS(cfg.restrict_keys({"a", "flag"}), validation_error);
  cfg.restrict_keys({"a", "flag", "path"});

  CHECK_THROWS_AS(RunConfig::parse("a = 1\na = 2\n", "<dup>"), validation_error);
  CHECK_THROWS_AS(RunConfig::parse("nonsense line\n", "<bad>"), validation_error);

  // hash is order independent and value sensitive
  const auto cfg2 = RunConfig::parse("path=x.tsv\nflag = true\na = 1\n", "<t2>");
  CHECK(cfg.hash() == cfg2.hash());
  const auto cfg3 = RunConfig::parse("path=y.tsv\nflag = true\na = 1\n", "<t3>");
  CHECK(cfg.hash() != cfg3.hash());
}

TEST_CASE("trace files round trip") {
  const fs::path file = temp_dir() / "trace.tsv";
  RngStream rng(7);
  const auto trace = simulate_rts(1.0, 5.0, 1e-3, rng);
  write_trace(file, trace, {"test trace"});
  const auto back = read_trace(file);
  CHECK(back.dt_s == trace.dt_s);
  CHECK(back.samples == trace.samples);

  const fs::path bad = temp_dir() / "nonuniform.tsv";
  {
    std::ofstream out(bad);
    out << "time_s\tvalue\n0\t1\n0.001\t1\n0.005\t-1\n";
  }
  CHECK_THROWS_AS(read_trace(bad), validation_error);
}

TEST_CASE("thermal series files round trip") {
  const fs::path file = temp_dir() / "series.tsv";
  ThermalSeries s;
  s.qubit_id = "S4-Q1";
  s.chip_id = "S4";
  for (int i = 0; i < 5; ++i)
    s.points.push_back({0.01 + 0.01 * i, 0.5 + 0.1 * i, 0.01});
  write_thermal_series(file, {s}, {});
  const auto back = read_thermal_series(file);
  REQUIRE(back.series.size() == 1);
  CHECK(back.series[0].qubit_id == "S4-Q1");
  CHECK(back.series[0].chip_id == "S4");
  REQUIRE(back.series[0].points.size() == 5);
  CHECK(rel(back.series[0].points[4].temperature_k, 0.05) < 1e-12);
  CHECK(rel(back.series[0].points[4].gamma_p_hz, 0.9) < 1e-12);
}

TEST_CASE("decay curve files round trip with the kind tag") {
  const fs::path file = temp_dir() / "decay.tsv";
  DecayCurve c;
  c.kind = DecayKind::echo;
  for (int i = 0; i < 6; ++i) {
    c.times_s.push_back((i + 1) * 1e-6);
    c.populations.push_back(1.0 - 0.1 * i);
  }
  write_decay_curve(file, c, {});
  const auto back = read_decay_curve(file);
  CHECK(back.kind == DecayKind::echo);
  CHECK(back.times_s == c.times_s);
  CHECK(back.populations == c.populations);

  const fs::path untagged = temp_dir() / "untagged.tsv";
  {
    std::ofstream out(untagged);
    out << "time_s\tpopulation\n1e-6\t0.9\n";
  }
  CHECK_THROWS_AS(read_decay_curve(untagged), validation_error);
}

TEST_CASE("offset trajectory files round trip") {
  const fs::path file = temp_dir() / "offsets.tsv";
  std::map<std::string, OffsetTrajectory> traj;
  traj["S1-Q1"].time_s = {0.0, 24.0, 48.0};
  traj["S1-Q1"].ng_e = {0.0, 0.05, 0.31};
  traj["S1-Q2"].time_s = {0.0, 24.0};
  traj["S1-Q2"].ng_e = {0.1, 0.12};
  write_offset_trajectories(file, traj, {});
  const auto back = read_offset_trajectories(file);
  REQUIRE(back.size() == 2);
  CHECK(back.at("S1-Q1").ng_e == traj["S1-Q1"].ng_e);
  CHECK(back.at("S1-Q2").time_s == traj["S1-Q2"].time_s);
}
