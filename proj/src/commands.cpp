#include "qparity/commands.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <iostream>
#include <map>
#include <memory>

#include "qparity/antenna.hpp"
#include "qparity/coherence.hpp"
#include "qparity/constants.hpp"
#include "qparity/datasets.hpp"
#include "qparity/device_tables.hpp"
#include "qparity/errors.hpp"
#include "qparity/report.hpp"
#include "qparity/spectrum.hpp"
#include "qparity/svg.hpp"
#include "qparity/telegraph.hpp"
#include "qparity/thermal.hpp"
#include "qparity/tsv.hpp"

namespace qparity {
namespace cs = constants;
namespace fs = std::filesystem;

namespace {

fs::path resolve_input(const CommandContext& ctx, const std::string& p) {
  const fs::path path(p);
  return path.is_absolute() ? path : ctx.data_dir / path;
}

fs::path out_file(const CommandContext& ctx, const std::string& name) {
  fs::create_directories(ctx.out_dir);
  return ctx.out_dir / name;
}

std::vector<DeviceRecord> load_tables(const CommandContext& ctx) {
  if (ctx.config.has("table1") || ctx.config.has("table2")) {
    if (!(ctx.config.has("table1") && ctx.config.has("table2")))
      throw validation_error("table1 and table2 must be overridden together");
    return load_device_tables(resolve_input(ctx, ctx.config.get_string("table1")),
                              resolve_input(ctx, ctx.config.get_string("table2")));
  }
  return load_device_tables();
}

std::string device_or_throw(const CommandContext& ctx) {
  if (!ctx.device_id.empty()) return ctx.device_id;
  if (ctx.config.has("device")) return ctx.config.get_string("device");
  throw validation_error("no device selected (use --device or 'device = ...')");
}

QubitParams qubit_from_record(const DeviceRecord& rec) {
  if (!rec.ej_hz || !rec.ec_hz)
    throw validation_error("device " + rec.device_id +
                           " has no E_J/E_C in the tables");
  QubitParams q;
  q.ej_hz = *rec.ej_hz;
  q.ec_hz = *rec.ec_hz;
  return q;
}

SpectralInputs spectral_inputs(const QubitParams& q) {
  SpectralInputs s;
  s.ej_hz = q.ej_hz;
  s.eps0_hz = epsilon0(q);
  const double c0 = cos_half_phi_element(q);
  s.c0sq = c0 * c0;
  return s;
}

std::string trace_name(int index) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "trace_%04d.tsv", index);
  return buf;
}

} // namespace

void cmd_spectrum(const CommandContext& ctx) {
  ctx.config.restrict_keys({"device", "table1", "table2", "ng_points"});
  const auto records = load_tables(ctx);
  const DeviceRecord& rec = find_device(records, device_or_throw(ctx));
  const QubitParams qubit = qubit_from_record(rec);

  const auto n = static_cast<std::size_t>(ctx.config.get_int("ng_points", 201));
  if (n < 1) throw validation_error("ng_points must be >= 1");
  std::vector<double> grid(n);
  for (std::size_t i = 0; i < n; ++i)
    grid[i] = n == 1 ? 0.0
                     : -1.0 + 2.0 * static_cast<double>(i) /
                                  static_cast<double>(n - 1);

  const Parity parities[] = {Parity::even, Parity::odd};
  const LevelPair pair[] = {{0, 1}};
  const auto rows = spectrum_vs_ng(qubit, grid, parities, pair);

  const auto header = provenance_header(ctx.config.hash(), ctx.seed);
  std::vector<std::vector<std::string>> cells;
  std::vector<double> ng, fe, fo;
  for (const auto& row : rows) {
    ng.push_back(row.ng);
    fe.push_back(row.even_hz[0] / 1e9);
    fo.push_back(row.odd_hz[0] / 1e9);
    cells.push_back({format_double(row.ng), format_double(row.even_hz[0]),
                     format_double(row.odd_hz[0])});
  }
  write_tsv(out_file(ctx, "spectrum.tsv"), header,
            {"ng", "f_ge_even_hz", "f_ge_odd_hz"}, cells);

  SvgChart chart("g-e transition vs offset charge (" + rec.device_id + ")",
                 "ng (2e)", "frequency (GHz)");
  chart.add_line(ng, fe, "#1f77b4", "even");
  chart.add_line(ng, fo, "#d62728", "odd");
  chart.write(out_file(ctx, "spectrum.svg"), header);

  QubitParams at_zero = qubit;
  at_zero.ng = 0.0;
  const double f_even = transition_frequency(at_zero, Parity::even);
  const double f_odd = transition_frequency(at_zero, Parity::odd);
  Report rep;
  rep.add("device", rec.device_id);
  rep.add("ej_hz", qubit.ej_hz);
  rep.add("ec_hz", qubit.ec_hz);
  rep.add("f_ge_even_ng0_hz", f_even);
  rep.add("f_ge_odd_ng0_hz", f_odd);
  rep.add("f_ge_max_hz", std::max(f_even, f_odd));
  rep.add("f_ge_min_hz", std::min(f_even, f_odd));
  if (rec.omega_max_hz) rep.add("table_omega_max_hz", *rec.omega_max_hz);
  if (rec.omega_min_hz) rep.add("table_omega_min_hz", *rec.omega_min_hz);
  rep.write(out_file(ctx, "spectrum_report.txt"), ctx.config.hash(), ctx.seed);
}

void cmd_simulate_rts(const CommandContext& ctx) {
  ctx.config.restrict_keys({"gamma_p_hz", "duration_s", "dt_s", "n_traces",
                            "noise_sigma", "excitation_prob", "outlier_level",
                            "traces_subdir"});
  const double gamma = ctx.config.get_number("gamma_p_hz", 0.37);
  const double duration = ctx.config.get_number("duration_s", 18.0);
  const double dt = ctx.config.get_number("dt_s", 3e-4);
  const auto n_traces = static_cast<std::size_t>(ctx.config.get_int("n_traces", 10));
  const double sigma = ctx.config.get_number("noise_sigma", 0.0);
  const double exc = ctx.config.get_number("excitation_prob", 0.0);
  const double outlier = ctx.config.get_number("outlier_level", 3.0);
  if (n_traces < 1) throw validation_error("n_traces must be >= 1");

  const auto header = provenance_header(ctx.config.hash(), ctx.seed);
  const fs::path dir =
      out_file(ctx, ctx.config.get_string("traces_subdir", "traces"));
  fs::create_directories(dir);

  auto streams = RngStream::streams(ctx.seed, n_traces);
  for (std::size_t i = 0; i < n_traces; ++i) {
    TelegraphTrace trace = simulate_rts(gamma, duration, dt, streams[i]);
    if (sigma > 0.0 || exc > 0.0)
      trace = inject_readout_noise(trace, sigma, exc, streams[i], outlier);
    write_trace(dir / trace_name(static_cast<int>(i)), trace, header);
  }

  Report rep;
  rep.add("gamma_p_hz", gamma);
  rep.add("duration_s", duration);
  rep.add("dt_s", dt);
  rep.add_count("n_traces", static_cast<std::int64_t>(n_traces));
  rep.add("noise_sigma", sigma);
  rep.add("excitation_prob", exc);
  rep.add("traces_dir", dir.filename().string());
  rep.write(out_file(ctx, "simulate_report.txt"), ctx.config.hash(), ctx.seed);
}

void cmd_fit_tp(const CommandContext& ctx) {
  ctx.config.restrict_keys({"traces_dir", "max_lag_s", "hann", "concatenate",
                            "median_window"});
  const fs::path dir = resolve_input(ctx, ctx.config.get_string("traces_dir"));
  const double max_lag = ctx.config.get_number("max_lag_s", 5.0);
  const bool hann = ctx.config.get_flag("hann", false);
  const bool concatenate = ctx.config.get_flag("concatenate", false);
  const int median_window =
      static_cast<int>(ctx.config.get_int("median_window", 10));

  const auto files = list_ensemble(dir);
  PsdAccumulator psd_acc(hann);
  AcfAccumulator acf_acc(max_lag);
  double switch_events = 0.0, switch_time = 0.0;
  std::vector<TelegraphTrace> joined;  // only kept when concatenating
  for (const auto& file : files) {
    TelegraphTrace trace = read_trace(file);
    if (!trace.is_classified()) {
      trace = moving_median(trace, median_window);
      trace = classify_parity(trace).trace;
    }
    psd_acc.add(trace);
    acf_acc.add(trace);
    for (std::size_t i = 1; i < trace.samples.size(); ++i)
      if (trace.samples[i] != trace.samples[i - 1]) switch_events += 1.0;
    switch_time += (static_cast<double>(trace.samples.size()) - 1.0) * trace.dt_s;
    if (concatenate) joined.push_back(std::move(trace));
  }

  const PsdEstimate psd =
      concatenate ? psd_estimate(joined, true, hann) : psd_acc.estimate();
  const RtsFit fit = fit_lorentzian(psd);
  const Autocorrelation acf = acf_acc.estimate();
  const double gamma_acf = fit_exponential_rate(acf);
  const double gamma_counts = switch_events / switch_time;

  const double acf_dev =
      std::fabs(gamma_acf - fit.gamma_p_hz) / fit.gamma_p_hz;
  const double counts_dev =
      std::fabs(gamma_counts - fit.gamma_p_hz) / fit.gamma_p_hz;

  const auto header = provenance_header(ctx.config.hash(), ctx.seed);
  {
    std::vector<std::vector<std::string>> cells;
    for (std::size_t i = 0; i < psd.frequencies.size(); ++i) {
      const double w = 2.0 * cs::kPi * psd.frequencies[i];
      const double model = fit.amplitude * 4.0 * fit.gamma_p_hz /
                               (4.0 * fit.gamma_p_hz * fit.gamma_p_hz + w * w) +
                           fit.offset;
      cells.push_back({format_double(psd.frequencies[i]),
                       format_double(psd.power[i]), format_double(model)});
    }
    write_tsv(out_file(ctx, "psd.tsv"), header,
              {"frequency_hz", "power", "lorentzian_fit"}, cells);
  }
  {
    std::vector<std::vector<std::string>> cells;
    for (std::size_t i = 0; i < acf.lags_s.size(); ++i)
      cells.push_back({format_double(acf.lags_s[i]),
                       format_double(acf.values[i]),
                       format_double(std::exp(-2.0 * gamma_acf * acf.lags_s[i]))});
    write_tsv(out_file(ctx, "acf.tsv"), header,
              {"lag_s", "acf", "exponential_fit"}, cells);
  }
  {
    SvgChart chart("charge-parity power spectrum", "frequency (Hz)", "PSD (1/Hz)");
    chart.set_log_x(true);
    chart.set_log_y(true);
    std::vector<double> model(psd.frequencies.size());
    for (std::size_t i = 0; i < psd.frequencies.size(); ++i) {
      const double w = 2.0 * cs::kPi * psd.frequencies[i];
      model[i] = fit.amplitude * 4.0 * fit.gamma_p_hz /
                     (4.0 * fit.gamma_p_hz * fit.gamma_p_hz + w * w) +
                 fit.offset;
    }
    chart.add_line(psd.frequencies, psd.power, "#1f77b4", "measured");
    chart.add_line(psd.frequencies, model, "#000000", "Lorentzian + B", true);
    chart.write(out_file(ctx, "psd.svg"), header);
  }

  Report rep;
  rep.add_count("n_traces", static_cast<std::int64_t>(files.size()));
  rep.add_count("psd_averages", psd.n_averages);
  rep.add("gamma_lorentzian_hz", fit.gamma_p_hz);
  rep.add("gamma_lorentzian_err_hz", fit.gamma_err);
  rep.add("tp_s", fit.tp_s());
  rep.add("lorentzian_amplitude", fit.amplitude);
  rep.add("white_noise_offset", fit.offset);
  rep.add_flag("knee_outside_band", fit.knee_outside_band);
  rep.add("gamma_acf_hz", gamma_acf);
  rep.add("gamma_switch_count_hz", gamma_counts);
  rep.add("acf_vs_lorentzian_rel", acf_dev);
  rep.add("counts_vs_lorentzian_rel", counts_dev);
  rep.add_flag("crosscheck_disagreement", acf_dev > 0.15);
  rep.add_flag("short_trace_warning", acf.short_trace_warning);
  rep.write(out_file(ctx, "fit_report.txt"), ctx.config.hash(), ctx.seed);
}

void cmd_thermal_fit(const CommandContext& ctx) {
  ctx.config.restrict_keys({"series_file", "table1", "table2", "synthetic_chip",
                            "synthetic_noise_rel", "synthetic_n_temps",
                            "t_min_mk", "t_max_mk", "delta0_uev",
                            "delta_init_uev", "volume_um3", "recomb_per_s",
                            "trap_per_s"});
  const auto records = load_tables(ctx);

  ThermalFitOptions options;
  options.delta0_uev = ctx.config.get_number("delta0_uev", 180.0);
  options.delta_init_uev = ctx.config.get_number("delta_init_uev", 210.0);

  std::vector<ThermalSeries> series;
  if (ctx.config.has("series_file")) {
    auto file =
        read_thermal_series(resolve_input(ctx, ctx.config.get_string("series_file")));
    series = std::move(file.series);
    for (auto& s : series) {
      const DeviceRecord& rec = find_device(records, s.qubit_id);
      s.qubit = spectral_inputs(qubit_from_record(rec));
    }
  } else if (ctx.config.has("synthetic_chip")) {
    // Synthetic rate-vs-temperature data generated from the bundled fitted
    // parameters of one chip, with multiplicative noise.
    const std::string chip = ctx.config.get_string("synthetic_chip");
    const double noise = ctx.config.get_number("synthetic_noise_rel", 0.02);
    const auto n_temps =
        static_cast<std::size_t>(ctx.config.get_int("synthetic_n_temps", 15));
    const double t_min = ctx.config.get_number("t_min_mk", 10.0) * 1e-3;
    const double t_max = ctx.config.get_number("t_max_mk", 150.0) * 1e-3;
    if (!(t_max > t_min) || n_temps < 3)
      throw validation_error("bad synthetic temperature grid");
    RngStream rng(ctx.seed);
    for (const auto& rec : records) {
      if (rec.chip_id != chip || !rec.gp0_hz || !rec.xqp || !rec.delta_hz)
        continue;
      ThermalSeries s;
      s.qubit_id = rec.device_id;
      s.chip_id = rec.chip_id;
      s.qubit = spectral_inputs(qubit_from_record(rec));
      ThermalModelParams m;
      m.gp0_hz = *rec.gp0_hz;
      m.xqp = *rec.xqp;
      m.gaps.delta_junction_uev = hz_to_uev(*rec.delta_hz);
      m.gaps.delta_pad_uev = options.delta0_uev;
      m.qubit = s.qubit;
      for (std::size_t i = 0; i < n_temps; ++i) {
        ThermalPoint pt;
        pt.temperature_k =
            t_min + (t_max - t_min) * static_cast<double>(i) /
                        static_cast<double>(n_temps - 1);
        const double clean = gamma_p_of_temperature(pt.temperature_k, m);
        pt.gamma_p_hz = clean * (1.0 + noise * rng.normal());
        pt.sigma_hz = noise * clean;
        s.points.push_back(pt);
      }
      series.push_back(std::move(s));
    }
    if (series.empty())
      throw validation_error("no fitted rows for chip '" + chip + "'");
  } else {
    throw validation_error("need series_file or synthetic_chip");
  }

  const ThermalFitResult result = fit_thermal_series(series, options);

  const double volume = ctx.config.get_number("volume_um3", 4.0);
  const double recomb = ctx.config.get_number("recomb_per_s", 1.0 / 120e-9);
  const double trap = ctx.config.get_number("trap_per_s", 0.0);

  const auto header = provenance_header(ctx.config.hash(), ctx.seed);
  std::vector<std::vector<std::string>> cells;
  std::map<std::string, double> delta_by_chip;
  for (const auto& chip : result.chips) delta_by_chip[chip.chip_id] = chip.delta_uev;
  std::vector<double> scatter_gp0, scatter_xqp;
  for (const auto& q : result.qubits) {
    QpBalance balance;
    balance.gen_rate = generation_rate(q.gp0_hz, options.delta0_uev, volume);
    balance.recomb_rate = recomb;
    balance.trap_background = trap;
    const double x_pred = steady_state_density(balance);
    cells.push_back({q.qubit_id, q.chip_id, format_double(q.gp0_hz),
                     format_double(q.gp0_err), format_double(q.xqp),
                     format_double(q.xqp_err),
                     format_double(uev_to_hz(delta_by_chip[q.chip_id])),
                     format_double(x_pred)});
    scatter_gp0.push_back(q.gp0_hz);
    scatter_xqp.push_back(q.xqp);
  }
  write_tsv(out_file(ctx, "thermal_fit.tsv"), header,
            {"qubit_id", "chip_id", "gp0_hz", "gp0_err_hz", "xqp", "xqp_err",
             "delta_hz", "xqp_balance_sqrt_g_over_r"},
            cells);

  {
    SvgChart chart("parity switching rate vs temperature", "T (mK)",
                   "Gamma_P (Hz)");
    chart.set_log_y(true);
    const char* colors[] = {"#1f77b4", "#d62728", "#2ca02c",
                            "#9467bd", "#ff7f0e", "#8c564b"};
    for (std::size_t i = 0; i < series.size(); ++i) {
      const auto& s = series[i];
      std::vector<double> t_mk, data;
      for (const auto& pt : s.points) {
        t_mk.push_back(pt.temperature_k * 1e3);
        data.push_back(pt.gamma_p_hz);
      }
      const std::string color = colors[i % 6];
      chart.add_points(t_mk, data, color, s.qubit_id);
      ThermalModelParams m;
      m.gp0_hz = result.qubits[i].gp0_hz;
      m.xqp = result.qubits[i].xqp;
      m.gaps.delta_junction_uev = delta_by_chip[s.chip_id];
      m.gaps.delta_pad_uev = options.delta0_uev;
      m.qubit = s.qubit;
      std::vector<double> t_fine, model;
      for (int k = 0; k <= 100; ++k) {
        const double t =
            s.points.front().temperature_k +
            (s.points.back().temperature_k - s.points.front().temperature_k) *
                k / 100.0;
        t_fine.push_back(t * 1e3);
        model.push_back(gamma_p_of_temperature(t, m));
      }
      chart.add_line(t_fine, model, color);
    }
    chart.write(out_file(ctx, "thermal_curves.svg"), header);
  }
  {
    SvgChart chart("quasiparticle density vs base rate", "Gamma_P(0) (Hz)",
                   "x_qp");
    chart.set_log_x(true);
    chart.set_log_y(true);
    chart.add_points(scatter_gp0, scatter_xqp, "#d62728", "fitted");
    // sqrt(g/r) trend for the configured volume, with the factor-3 band
    std::vector<double> gp_line, x_mid, x_lo, x_hi;
    const double gp_min = *std::min_element(scatter_gp0.begin(), scatter_gp0.end());
    const double gp_max = *std::max_element(scatter_gp0.begin(), scatter_gp0.end());
    for (int k = 0; k <= 60; ++k) {
      const double gp = gp_min * std::pow(gp_max / gp_min, k / 60.0);
      QpBalance balance;
      balance.gen_rate = generation_rate(gp, options.delta0_uev, volume);
      balance.recomb_rate = recomb;
      balance.trap_background = trap;
      const double x = steady_state_density(balance);
      gp_line.push_back(gp);
      x_mid.push_back(x);
      x_lo.push_back(x / 3.0);
      x_hi.push_back(x * 3.0);
    }
    chart.add_line(gp_line, x_mid, "#000000", "sqrt(g/r)");
    chart.add_line(gp_line, x_lo, "#777777", "/3", true);
    chart.add_line(gp_line, x_hi, "#777777", "x3", true);
    chart.write(out_file(ctx, "xqp_scatter.svg"), header);
  }

  Report rep;
  rep.add_count("n_series", static_cast<std::int64_t>(series.size()));
  for (const auto& chip : result.chips) {
    rep.add("delta_uev:" + chip.chip_id, chip.delta_uev);
    rep.add("delta_hz:" + chip.chip_id, uev_to_hz(chip.delta_uev));
    rep.add("delta_err_uev:" + chip.chip_id, chip.delta_err);
  }
  rep.add("delta0_uev", options.delta0_uev);
  rep.add("final_cost", result.final_cost);
  rep.add_count("iterations", result.iterations);
  rep.write(out_file(ctx, "thermal_report.txt"), ctx.config.hash(), ctx.seed);
}

void cmd_antenna(const CommandContext& ctx) {
  ctx.config.restrict_keys({"f_min_ghz", "f_max_ghz", "n_points", "rn_ohm",
                            "cj_ff", "c0_ff", "r1_ohm", "l1_ph", "c1_ff",
                            "r2_ohm", "l2_ph", "c2_ff", "delta_uev",
                            "delta0_uev", "gamma_conv", "impedance_table",
                            "integrate", "t_rad_k"});
  EquivCircuit circuit = default_equivalent_circuit();
  circuit.c0_f = ctx.config.get_number("c0_ff", circuit.c0_f * 1e15) * 1e-15;
  circuit.mode1.r_ohm = ctx.config.get_number("r1_ohm", circuit.mode1.r_ohm);
  circuit.mode1.l_h = ctx.config.get_number("l1_ph", circuit.mode1.l_h * 1e12) * 1e-12;
  circuit.mode1.c_f = ctx.config.get_number("c1_ff", circuit.mode1.c_f * 1e15) * 1e-15;
  circuit.mode2.r_ohm = ctx.config.get_number("r2_ohm", circuit.mode2.r_ohm);
  circuit.mode2.l_h = ctx.config.get_number("l2_ph", circuit.mode2.l_h * 1e12) * 1e-12;
  circuit.mode2.c_f = ctx.config.get_number("c2_ff", circuit.mode2.c_f * 1e15) * 1e-15;

  JunctionParams junction = default_junction();
  junction.rn_ohm = ctx.config.get_number("rn_ohm", junction.rn_ohm);
  junction.cj_f = ctx.config.get_number("cj_ff", junction.cj_f * 1e15) * 1e-15;

  GapFrequencies gaps;
  gaps.delta_junction_uev = ctx.config.get_number("delta_uev", 217.0);
  gaps.delta_pad_uev = ctx.config.get_number("delta0_uev", 180.0);
  const double gamma_conv = ctx.config.get_number("gamma_conv", 3e5);

  const double f_min = ctx.config.get_number("f_min_ghz", 10.0) * 1e9;
  const double f_max = ctx.config.get_number("f_max_ghz", 400.0) * 1e9;
  const auto n = static_cast<std::size_t>(ctx.config.get_int("n_points", 400));
  if (!(f_max > f_min) || !(f_min > 0.0) || n < 2)
    throw validation_error("bad frequency grid");

  std::unique_ptr<ImpedanceTable> table;
  if (ctx.config.has("impedance_table"))
    table = std::make_unique<ImpedanceTable>(ImpedanceTable::load(
        resolve_input(ctx, ctx.config.get_string("impedance_table"))));

  const auto zrad_at = [&](double f) {
    return table ? table->interpolate(f) : z_rad(circuit, f);
  };

  const double f_star = pair_breaking_frequency(gaps);

  const auto header = provenance_header(ctx.config.hash(), ctx.seed);
  std::vector<std::vector<std::string>> cells;
  std::vector<double> fghz, ecs, rez, imz;
  for (std::size_t i = 0; i < n; ++i) {
    const double f =
        f_min * std::pow(f_max / f_min,
                         static_cast<double>(i) / static_cast<double>(n - 1));
    const auto zr = zrad_at(f);
    const auto zj = z_junction(junction, f);
    const double ec = coupling_efficiency(zr, zj);
    fghz.push_back(f / 1e9);
    ecs.push_back(ec);
    rez.push_back(zr.real());
    imz.push_back(zr.imag());
    cells.push_back({format_double(f), format_double(zr.real()),
                     format_double(zr.imag()), format_double(zj.real()),
                     format_double(zj.imag()), format_double(ec)});
  }
  write_tsv(out_file(ctx, "antenna.tsv"), header,
            {"frequency_hz", "re_zrad_ohm", "im_zrad_ohm", "re_zj_ohm",
             "im_zj_ohm", "coupling_efficiency"},
            cells);

  double ec_star;
  if (table && (f_star < table->frequencies().front() ||
                f_star > table->frequencies().back()))
    throw validation_error("impedance table does not cover f*");
  ec_star = coupling_efficiency(zrad_at(f_star), z_junction(junction, f_star));
  const double rate = predict_parity_rate(ec_star, gamma_conv);

  {
    SvgChart chart("photon coupling efficiency", "frequency (GHz)", "e_c");
    chart.set_log_x(true);
    chart.set_log_y(true);
    chart.add_line(fghz, ecs, "#1f77b4", "e_c(f)");
    chart.add_vline(f_star / 1e9, "#d62728", "f*");
    chart.write(out_file(ctx, "antenna.svg"), header);
  }

  Report rep;
  rep.add("f_star_hz", f_star);
  rep.add("f_pad_hz", pad_gap_frequency(gaps));
  rep.add("ec_at_f_star", ec_star);
  rep.add("gamma_conv_per_s", gamma_conv);
  rep.add("predicted_gamma_p_hz", rate);
  rep.add("rn_ohm", junction.rn_ohm);
  rep.add("cj_f", junction.cj_f);
  rep.add_flag("impedance_from_table", table != nullptr);
  if (ctx.config.get_flag("integrate", false)) {
    const double t_rad = ctx.config.get_number("t_rad_k");
    if (table)
      throw validation_error("integrated efficiency needs the circuit model");
    const double ec_int =
        integrated_efficiency(circuit, junction, f_star, f_max, t_rad);
    rep.add("t_rad_k", t_rad);
    rep.add("ec_integrated", ec_int);
    rep.add("predicted_gamma_p_integrated_hz",
            predict_parity_rate(ec_int, gamma_conv));
  }
  rep.write(out_file(ctx, "antenna_report.txt"), ctx.config.hash(), ctx.seed);
}

void cmd_jumps(const CommandContext& ctx) {
  ctx.config.restrict_keys({"trajectories", "threshold_e"});
  const auto trajectories = read_offset_trajectories(
      resolve_input(ctx, ctx.config.get_string("trajectories")));
  const double threshold = ctx.config.get_number("threshold_e", 0.1);

  const auto header = provenance_header(ctx.config.hash(), ctx.seed);
  std::vector<std::vector<std::string>> cells;
  Report rep;
  rep.add("threshold_e", threshold);
  std::size_t total = 0;
  for (const auto& [qubit, traj] : trajectories) {
    const JumpScan scan = detect_charge_jumps(traj.time_s, traj.ng_e, threshold);
    for (const auto& ev : scan.events)
      cells.push_back({qubit, format_double(ev.time_s),
                       format_double(ev.amplitude_e)});
    rep.add_count("count:" + qubit, static_cast<std::int64_t>(scan.events.size()));
    rep.add("rate_mhz:" + qubit, scan.rate_hz * 1e3);
    rep.add("span_hours:" + qubit, scan.span_s / 3600.0);
    total += scan.events.size();
  }
  rep.add_count("total_events", static_cast<std::int64_t>(total));
  write_tsv(out_file(ctx, "jumps.tsv"), header,
            {"qubit_id", "time_s", "amplitude_e"}, cells);
  rep.write(out_file(ctx, "jumps_report.txt"), ctx.config.hash(), ctx.seed);
}

void cmd_coherence_fit(const CommandContext& ctx) {
  ctx.config.restrict_keys({"decay_file", "echo_file", "t1_us", "kappa_mhz",
                            "chi_mhz", "fr_ghz", "t_min_mk", "t_max_mk"});
  Report rep;
  double t1_s = 0.0;
  if (ctx.config.has("decay_file")) {
    const DecayCurve curve =
        read_decay_curve(resolve_input(ctx, ctx.config.get_string("decay_file")));
    const T1Fit fit = fit_t1(curve);
    t1_s = fit.t1_s;
    rep.add("t1_s", fit.t1_s);
    rep.add("t1_err_s", fit.t1_err);
    rep.add("t1_amplitude", fit.amplitude);
    rep.add("t1_offset", fit.offset);
    rep.add_flag("negative_decay_warning", fit.negative_decay_warning);
  }
  if (ctx.config.has("t1_us")) t1_s = ctx.config.get_number("t1_us") * 1e-6;
  if (ctx.config.has("echo_file")) {
    if (!(t1_s > 0.0))
      throw validation_error("echo fit needs decay_file or t1_us");
    const DecayCurve curve =
        read_decay_curve(resolve_input(ctx, ctx.config.get_string("echo_file")));
    const EchoFit fit = fit_echo(curve, t1_s);
    rep.add("echo_t1_fixed_s", t1_s);
    rep.add("tphi_s", fit.tphi_s);
    rep.add("tphi_err_s", fit.tphi_err);
    rep.add("echo_amplitude", fit.amplitude);
    rep.add("echo_offset", fit.offset);
  }
  if (ctx.config.has("kappa_mhz")) {
    ResonatorParams res;
    res.kappa_hz = ctx.config.get_number("kappa_mhz") * 1e6;
    res.chi_hz = ctx.config.get_number("chi_mhz") * 1e6;
    res.fr_hz = ctx.config.get_number("fr_ghz") * 1e9;
    const double t_min = ctx.config.get_number("t_min_mk", 10.0) * 1e-3;
    const double t_max = ctx.config.get_number("t_max_mk", 150.0) * 1e-3;
    if (!(t_max > t_min)) throw validation_error("bad temperature range");
    const auto header = provenance_header(ctx.config.hash(), ctx.seed);
    std::vector<std::vector<std::string>> cells;
    std::vector<double> t_mk, rate;
    for (int i = 0; i <= 100; ++i) {
      const double t = t_min + (t_max - t_min) * i / 100.0;
      const double gphi = thermal_photon_dephasing(res, t);
      t_mk.push_back(t * 1e3);
      rate.push_back(gphi);
      cells.push_back({format_double(t), format_double(gphi),
                       format_double(bose_einstein(res.fr_hz, t))});
    }
    write_tsv(out_file(ctx, "thermal_dephasing.tsv"), header,
              {"temperature_k", "gamma_phi_hz", "nbar"}, cells);
    SvgChart chart("thermal-photon dephasing", "T (mK)", "Gamma_phi (1/s)");
    chart.set_log_y(true);
    chart.add_line(t_mk, rate, "#1f77b4", "model");
    chart.write(out_file(ctx, "thermal_dephasing.svg"), header);
    rep.add("kappa_hz", res.kappa_hz);
    rep.add("chi_hz", res.chi_hz);
    rep.add("fr_hz", res.fr_hz);
    const double k2 = res.kappa_hz * res.kappa_hz;
    const double chi2 = res.chi_hz * res.chi_hz;
    rep.add("dephasing_prefactor_hz",
            k2 / (k2 + 4.0 * chi2) * (4.0 * chi2 / res.kappa_hz));
  }
  if (!ctx.config.has("decay_file") && !ctx.config.has("echo_file") &&
      !ctx.config.has("kappa_mhz"))
    throw validation_error("nothing to do: give decay_file, echo_file or "
                           "resonator parameters");
  rep.write(out_file(ctx, "coherence_report.txt"), ctx.config.hash(), ctx.seed);
}

int run_command(const std::string& name, const CommandContext& ctx) {
  try {
    if (name == "spectrum")
      cmd_spectrum(ctx);
    else if (name == "simulate-rts")
      cmd_simulate_rts(ctx);
    else if (name == "fit-tp")
      cmd_fit_tp(ctx);
    else if (name == "thermal-fit")
      cmd_thermal_fit(ctx);
    else if (name == "antenna")
      cmd_antenna(ctx);
    else if (name == "jumps")
      cmd_jumps(ctx);
    else if (name == "coherence-fit")
      cmd_coherence_fit(ctx);
    else
      throw validation_error("unknown command '" + name + "'");
  } catch (const convergence_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitNonConvergence;
  } catch (const validation_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitValidation;
  }
  return kExitOk;
}

} // namespace qparity
