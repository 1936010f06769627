#include "aimtk/cli.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <optional>
#include <sstream>

#include "aimtk/analytic.hpp"
#include "aimtk/csvio.hpp"
#include "aimtk/errors.hpp"
#include "aimtk/optical4f.hpp"
#include "aimtk/svg.hpp"
#include "aimtk/systolic.hpp"
#include "aimtk/workload.hpp"

namespace aimtk::cli {

namespace {

namespace fs = std::filesystem;

struct Common {
  std::string data_dir;
  std::string out_dir = "aimtk-out";
  std::string network_path;
  std::string nodes_csv;
  std::string presets_csv;  // comma list for analytic, single for simulate
  int bits = 8;
  bool eq8 = false;
  bool eq9 = false;
  bool table_v = false;
  bool dac4 = false;
  bool double_reg = false;
  bool acc16 = false;
  double scale = 1.0;
};

std::string resolve_data_dir(const std::string& flag) {
  if (!flag.empty()) return flag;
  if (const char* env = std::getenv("AIMTK_DATA")) return env;
  return AIMTK_DEFAULT_DATA_DIR;
}

std::vector<double> parse_nodes(const std::string& s,
                                const NodeScalingTable& table) {
  std::vector<double> nodes;
  if (s.empty()) {
    for (auto it = table.rows().rbegin(); it != table.rows().rend(); ++it)
      nodes.push_back(it->node_nm);
    return nodes;
  }
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    try {
      nodes.push_back(std::stod(tok));
    } catch (...) {
      throw ConfigError("bad node value '" + tok + "' in --nodes");
    }
  }
  if (nodes.empty()) throw ConfigError("--nodes list is empty");
  return nodes;
}

std::string join_args(const std::vector<std::string>& args) {
  std::string s = "aimtk";
  for (const auto& a : args) s += " " + a;
  return s;
}

std::string nodes_param(const std::vector<double>& nodes) {
  std::string s;
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    if (i) s += ",";
    s += io::fmt_fixed(nodes[i], 0);
  }
  return s;
}

std::optional<IntensityKind> flag_kind(const Common& c) {
  if (c.eq8 && c.eq9) throw ConfigError("--eq8 and --eq9 are exclusive");
  if (c.eq8) return IntensityKind::kIm2col;
  if (c.eq9) return IntensityKind::kNative;
  return std::nullopt;
}

const ProcessorSpec& find_preset(
    const std::map<std::string, ProcessorSpec>& presets,
    const std::string& name) {
  auto it = presets.find(name);
  if (it == presets.end()) {
    std::string known;
    for (const auto& [k, v] : presets) {
      if (!known.empty()) known += ", ";
      known += k;
    }
    throw ConfigError("unknown preset '" + name + "' (available: " + known +
                      ")");
  }
  return it->second;
}

ConvLayerSpec scale_layer(ConvLayerSpec l, double factor) {
  if (factor == 1.0) return l;
  double n = std::llround(static_cast<double>(l.n) * factor);
  l.n = static_cast<std::uint64_t>(std::max(n, static_cast<double>(l.k)));
  return l;
}

// --- intensity -------------------------------------------------------------

int cmd_intensity(const Common& c, const std::string& command) {
  NetworkSpec net = NetworkSpec::load_csv(c.network_path);
  if (c.scale != 1.0)
    for (auto& l : net.layers) l = scale_layer(l, c.scale);
  WorkloadStats ws = workload_stats(net);

  io::RunManifest man;
  man.command = command;
  man.add_input(c.network_path);
  man.add_param("network", net.name);
  man.add_param("scale", io::fmt_fixed(c.scale, 4));

  std::string csv = man.render();
  csv +=
      "name,n,k,c_in,c_out,stride,m_out,l_prime,n_prime,m_prime,n_op,"
      "weights,input_size,n_m_im2col,n_m_native,a_im2col,a_native,"
      "l_4f,n_4f_inf,m_4f_inf\n";
  auto row = [&](const LayerStats& s) {
    csv += s.name + "," + io::fmt_u64(s.n) + "," + io::fmt_u64(s.k) + "," +
           io::fmt_u64(s.c_in) + "," + io::fmt_u64(s.c_out) + "," +
           io::fmt_u64(s.stride) + "," + io::fmt_u64(s.m_out) + "," +
           io::fmt_u64(s.l_prime) + "," + io::fmt_u64(s.n_prime) + "," +
           io::fmt_u64(s.m_prime) + "," + io::fmt_u64(s.n_op) + "," +
           io::fmt_u64(s.weights) + "," + io::fmt_u64(s.input_size) + "," +
           io::fmt_fixed(s.n_m_im2col, 1) + "," +
           io::fmt_fixed(s.n_m_native, 1) + "," +
           io::fmt_fixed(s.a_im2col, 4) + "," + io::fmt_fixed(s.a_native, 4) +
           "," + io::fmt_fixed(s.l_4f, 1) + "," +
           io::fmt_fixed(s.n_4f_inf, 1) + "," + io::fmt_fixed(s.m_4f_inf, 1) +
           "\n";
  };
  for (const auto& s : ws.per_layer) row(s);
  LayerStats med = ws.median, mn = ws.min, mx = ws.max;
  med.name = "__median__";
  mn.name = "__min__";
  mx.name = "__max__";
  row(mn);
  row(mx);
  row(med);
  csv += "__mean__," + io::fmt_fixed(ws.mean.n, 4) + "," +
         io::fmt_fixed(ws.mean.k, 4) + "," + io::fmt_fixed(ws.mean.c_in, 4) +
         "," + io::fmt_fixed(ws.mean.c_out, 4) + ",," +
         io::fmt_fixed(ws.mean.m_out, 4) + ",,,,,,,,," +
         io::fmt_fixed(ws.mean.a_im2col, 4) + "," +
         io::fmt_fixed(ws.mean.a_native, 4) + ",,,\n";

  fs::create_directories(c.out_dir);
  io::write_text_file(c.out_dir + "/intensity_" + net.name + ".csv", csv);
  std::cout << "wrote " << c.out_dir << "/intensity_" << net.name << ".csv\n";
  return kOk;
}

// --- analytic --------------------------------------------------------------

IntensityKind default_kind(const ProcessorSpec& spec) {
  // The Fourier-plane processor implements convolution natively; matmul
  // machines pay the im2col duplication.
  return std::holds_alternative<Optical4FAnalyticSpec>(spec)
             ? IntensityKind::kNative
             : IntensityKind::kIm2col;
}

int cmd_analytic(const Common& c, const std::string& command) {
  std::string data = resolve_data_dir(c.data_dir);
  NodeScalingTable table = NodeScalingTable::load(data + "/node_scaling.csv");
  auto presets = load_presets(data + "/presets.csv");
  std::vector<double> nodes = parse_nodes(c.nodes_csv, table);
  GammaConstants g;

  if (c.table_v == !c.network_path.empty())
    throw ConfigError("analytic needs exactly one of --network or --tableV");

  std::vector<std::string> names;
  {
    std::stringstream ss(c.presets_csv);
    std::string tok;
    while (std::getline(ss, tok, ',')) names.push_back(tok);
  }
  if (names.empty()) throw ConfigError("--preset required");

  std::optional<NetworkSpec> net;
  double med_a8 = 0, med_a9 = 0;
  if (!c.network_path.empty()) {
    net = NetworkSpec::load_csv(c.network_path);
    WorkloadStats ws = workload_stats(*net);
    med_a8 = ws.median.a_im2col;
    med_a9 = ws.median.a_native;
  }

  io::RunManifest man;
  man.command = command;
  man.add_input(data + "/node_scaling.csv");
  man.add_input(data + "/presets.csv");
  if (net) man.add_input(c.network_path);
  man.add_param("nodes", nodes_param(nodes));
  man.add_param("bits", std::to_string(c.bits));
  man.add_param("workload", net ? net->name : "tableV");

  std::string csv = man.render();
  csv +=
      "preset,arch,node_nm,energy_scale,a_mode,a,eta_ops_per_j,tops_w,"
      "e_total_pj,e_mem_pj,e_dac_in_pj,e_dac_w_pj,e_adc_pj,e_mac_pj,"
      "e_load_pj,e_laser_pj\n";

  std::vector<svg::Series> curves;
  for (const std::string& name : names) {
    const ProcessorSpec& spec = find_preset(presets, name);
    IntensityKind kind = flag_kind(c).value_or(default_kind(spec));
    svg::Series series{name, {}};
    for (double node : nodes) {
      TechProcess proc = table.process_at(node);
      EfficiencyPoint p;
      std::string a_mode;
      double a_used = 0;
      if (net) {
        p = evaluate_network(spec, *net, kind, proc, g, c.bits);
        a_mode = kind == IntensityKind::kIm2col ? "im2col" : "native";
        a_used = kind == IntensityKind::kIm2col ? med_a8 : med_a9;
      } else {
        AnalyticWorkload w = reference_workload();
        a_used = w.a;
        p = evaluate_processor(spec, w, proc, g, c.bits);
        a_mode = "tableV";
      }
      double tops = tops_per_watt(p.eta);
      series.y.push_back(tops);
      auto pj = [](double j) { return io::fmt_fixed(j * 1e12, 9); };
      csv += name + "," + processor_kind(spec) + "," +
             io::fmt_fixed(node, 0) + "," +
             io::fmt_fixed(proc.energy_scale, 6) + "," + a_mode + "," +
             io::fmt_fixed(a_used, 4) + "," + io::fmt_fixed(p.eta, 3) + "," +
             io::fmt_fixed(tops, 6) + "," + pj(p.parts.total()) + "," +
             pj(p.parts.memory) + "," + pj(p.parts.dac_input) + "," +
             pj(p.parts.dac_weight) + "," + pj(p.parts.adc) + "," +
             pj(p.parts.mac) + "," + pj(p.parts.load) + "," +
             pj(p.parts.laser) + "\n";
    }
    curves.push_back(series);
  }

  fs::create_directories(c.out_dir);
  io::write_text_file(c.out_dir + "/analytic.csv", csv);
  io::write_text_file(
      c.out_dir + "/analytic.svg",
      svg::line_chart("Efficiency vs technology node", "node (nm)", "TOPS/W",
                      nodes, curves, true, true));
  std::cout << "wrote " << c.out_dir << "/analytic.csv and analytic.svg\n";
  return kOk;
}

// --- simulate --------------------------------------------------------------

int sim_systolic(const Common& c, const NodeScalingTable& table,
                 const std::map<std::string, ProcessorSpec>& presets,
                 const std::vector<double>& nodes, const NetworkSpec& net,
                 io::RunManifest man) {
  const ProcessorSpec& spec = find_preset(presets, c.presets_csv);
  const auto* dim = std::get_if<DigitalImSpec>(&spec);
  if (!dim)
    throw ConfigError("preset '" + c.presets_csv +
                      "' is not a digital_im preset (needed for systolic)");
  SystolicConfig cfg;
  cfg.rows = dim->array_rows;
  cfg.cols = dim->array_cols;
  cfg.sram_total_bytes = dim->sram_total_bytes;
  cfg.sram_banks = dim->sram_banks;
  cfg.bits_act = c.bits;
  cfg.double_reg = c.double_reg;
  GammaConstants g;

  IntensityKind kind = flag_kind(c).value_or(IntensityKind::kIm2col);
  WorkloadStats ws = workload_stats(net);
  double a_med =
      kind == IntensityKind::kIm2col ? ws.median.a_im2col : ws.median.a_native;
  man.add_param("analytic_a_median", io::fmt_fixed(a_med, 4));

  std::string summary = man.render();
  summary +=
      "node_nm,energy_scale,macs,n_op,E_total_J,tops_w,analytic_tops_w,"
      "pj_per_mac_sram,pj_per_mac_dram,pj_per_mac_mac,pj_per_mac_load,"
      "pj_per_mac_reg\n";

  std::vector<svg::Series> overlay{{"cycle-accurate", {}}, {"analytic", {}}};
  std::vector<std::string> cats;
  std::vector<svg::Series> parts{
      {"sram", {}}, {"dram", {}}, {"mac", {}}, {"load", {}}, {"reg", {}}};

  fs::create_directories(c.out_dir);
  for (double node : nodes) {
    TechProcess proc = table.process_at(node);
    SystolicNetworkResult r = simulate_network(cfg, net, proc, g);

    EnergyRates rates = EnergyRates::for_process(proc, g, c.bits,
                                                 cfg.bank_bytes());
    double analytic_tops =
        tops_per_watt(digital_im_efficiency(rates, a_med).eta);

    std::string trace = man.render();
    trace +=
        "layer,macs,sram_rd_B,sram_wr_B,dram_B,hops,E_sram_pJ,E_mac_pJ,"
        "E_load_pJ,E_reg_pJ,E_total_pJ\n";
    for (const auto& t : r.layers) {
      trace += t.name + "," + io::fmt_u64(t.macs) + "," +
               io::fmt_u64(t.sram_read_bytes) + "," +
               io::fmt_u64(t.sram_write_bytes) + "," +
               io::fmt_u64(t.dram_weight_bytes) + "," +
               io::fmt_u64(t.tile_hops) + "," +
               io::fmt_fixed(t.energy.sram * 1e12, 3) + "," +
               io::fmt_fixed(t.energy.mac * 1e12, 3) + "," +
               io::fmt_fixed(t.energy.load * 1e12, 3) + "," +
               io::fmt_fixed(t.energy.reg * 1e12, 3) + "," +
               io::fmt_fixed(t.energy.total() * 1e12, 3) + "\n";
    }
    io::write_text_file(c.out_dir + "/systolic_trace_" +
                            io::fmt_fixed(node, 0) + "nm.csv",
                        trace);

    double macs = static_cast<double>(r.total.ops) / 2.0;
    auto pj_mac = [&](double j) { return io::fmt_fixed(j / macs * 1e12, 6); };
    summary += io::fmt_fixed(node, 0) + "," +
               io::fmt_fixed(proc.energy_scale, 6) + "," +
               io::fmt_u64(r.total.ops / 2) + "," + io::fmt_u64(r.total.ops) +
               "," + io::fmt_fixed(r.total.total(), 9) + "," +
               io::fmt_fixed(r.tops_w, 6) + "," +
               io::fmt_fixed(analytic_tops, 6) + "," + pj_mac(r.total.sram) +
               "," + pj_mac(r.total.dram) + "," + pj_mac(r.total.mac) + "," +
               pj_mac(r.total.load) + "," + pj_mac(r.total.reg) + "\n";

    overlay[0].y.push_back(r.tops_w);
    overlay[1].y.push_back(analytic_tops);
    cats.push_back(io::fmt_fixed(node, 0));
    parts[0].y.push_back(r.total.sram / macs * 1e12);
    parts[1].y.push_back(r.total.dram / macs * 1e12);
    parts[2].y.push_back(r.total.mac / macs * 1e12);
    parts[3].y.push_back(r.total.load / macs * 1e12);
    parts[4].y.push_back(r.total.reg / macs * 1e12);
  }

  io::write_text_file(c.out_dir + "/systolic_summary.csv", summary);
  io::write_text_file(
      c.out_dir + "/systolic_overlay.svg",
      svg::line_chart("Systolic array: cycle-accurate vs analytic (" +
                          net.name + ")",
                      "node (nm)", "TOPS/W", nodes, overlay, true, true));
  io::write_text_file(
      c.out_dir + "/systolic_breakdown.svg",
      svg::stacked_bars("Energy per MAC by source (" + net.name + ")",
                        "pJ/MAC", cats, parts));
  std::cout << "wrote " << c.out_dir << "/systolic_summary.csv\n";
  return kOk;
}

int sim_optical4f(const Common& c, const NodeScalingTable& table,
                  const std::map<std::string, ProcessorSpec>& presets,
                  const std::vector<double>& nodes, const NetworkSpec& net,
                  io::RunManifest man) {
  const ProcessorSpec& spec = find_preset(presets, c.presets_csv);
  const auto* o = std::get_if<Optical4FAnalyticSpec>(&spec);
  if (!o)
    throw ConfigError("preset '" + c.presets_csv +
                      "' is not an optical4f preset");
  Optical4FConfig cfg;
  cfg.slm_pixels = o->slm_pixels;
  cfg.slm_pitch_um = o->pitch_um;
  cfg.wavelength_m = o->wavelength_m;
  cfg.optical_efficiency = o->optical_efficiency;
  cfg.sram_total_bytes = o->sram_total_bytes;
  cfg.sram_banks = o->sram_banks;
  cfg.bits = c.bits;
  if (c.dac4) cfg.dac_events_fft_per_pixel = 4;
  if (c.acc16) cfg.acc_bytes = 2;
  GammaConstants g;
  IntensityKind kind = flag_kind(c).value_or(IntensityKind::kNative);

  std::string summary = man.render();
  summary +=
      "node_nm,energy_scale,macs,n_op,E_total_J,tops_w,analytic_tops_w,"
      "pj_per_mac_dac,pj_per_mac_adc,pj_per_mac_sram,pj_per_mac_laser\n";

  std::vector<svg::Series> overlay{{"cycle-accurate", {}}, {"analytic", {}}};
  std::vector<std::string> cats;
  std::vector<svg::Series> parts{
      {"dac", {}}, {"adc", {}}, {"sram", {}}, {"laser", {}}};

  fs::create_directories(c.out_dir);
  for (double node : nodes) {
    TechProcess proc = table.process_at(node);
    Optical4FNetworkResult r = simulate_network(cfg, net, proc, g);
    double analytic_tops = tops_per_watt(
        evaluate_network(spec, net, kind, proc, g, c.bits).eta);

    std::string trace = man.render();
    trace +=
        "layer,flashes,dac_ev,adc_ev,sram_B,E_dac_pJ,E_adc_pJ,E_sram_pJ,"
        "E_laser_pJ,pJ_per_MAC\n";
    for (const auto& t : r.layers) {
      double lmacs = static_cast<double>(t.energy.ops) / 2.0;
      trace += t.name + "," + io::fmt_u64(t.flash_count) + "," +
               io::fmt_u64(t.dac_events) + "," + io::fmt_u64(t.adc_events) +
               "," + io::fmt_u64(t.sram_read_bytes + t.sram_write_bytes) +
               "," + io::fmt_fixed(t.energy.dac * 1e12, 3) + "," +
               io::fmt_fixed(t.energy.adc * 1e12, 3) + "," +
               io::fmt_fixed(t.energy.sram * 1e12, 3) + "," +
               io::fmt_fixed(t.energy.laser * 1e12, 3) + "," +
               io::fmt_fixed(t.energy.total() / lmacs * 1e12, 6) + "\n";
    }
    io::write_text_file(c.out_dir + "/optical4f_trace_" +
                            io::fmt_fixed(node, 0) + "nm.csv",
                        trace);

    summary += io::fmt_fixed(node, 0) + "," +
               io::fmt_fixed(proc.energy_scale, 6) + "," +
               io::fmt_u64(r.total.ops / 2) + "," + io::fmt_u64(r.total.ops) +
               "," + io::fmt_fixed(r.total.total(), 9) + "," +
               io::fmt_fixed(r.tops_w, 6) + "," +
               io::fmt_fixed(analytic_tops, 6) + "," +
               io::fmt_fixed(r.pj_per_mac_dac, 6) + "," +
               io::fmt_fixed(r.pj_per_mac_adc, 6) + "," +
               io::fmt_fixed(r.pj_per_mac_sram, 6) + "," +
               io::fmt_fixed(r.pj_per_mac_laser, 6) + "\n";

    overlay[0].y.push_back(r.tops_w);
    overlay[1].y.push_back(analytic_tops);
    cats.push_back(io::fmt_fixed(node, 0));
    parts[0].y.push_back(r.pj_per_mac_dac);
    parts[1].y.push_back(r.pj_per_mac_adc);
    parts[2].y.push_back(r.pj_per_mac_sram);
    parts[3].y.push_back(r.pj_per_mac_laser);
  }

  io::write_text_file(c.out_dir + "/optical4f_summary.csv", summary);
  io::write_text_file(
      c.out_dir + "/optical4f_overlay.svg",
      svg::line_chart("Optical 4F: cycle-accurate vs analytic (" + net.name +
                          ")",
                      "node (nm)", "TOPS/W", nodes, overlay, true, true));
  io::write_text_file(
      c.out_dir + "/optical4f_breakdown.svg",
      svg::stacked_bars("Energy per MAC by source (" + net.name + ")",
                        "pJ/MAC", cats, parts));
  std::cout << "wrote " << c.out_dir << "/optical4f_summary.csv\n";
  return kOk;
}

int cmd_simulate(const Common& c, const std::string& arch,
                 const std::string& command) {
  std::string data = resolve_data_dir(c.data_dir);
  NodeScalingTable table = NodeScalingTable::load(data + "/node_scaling.csv");
  auto presets = load_presets(data + "/presets.csv");
  std::vector<double> nodes = parse_nodes(c.nodes_csv, table);
  NetworkSpec net = NetworkSpec::load_csv(c.network_path);

  io::RunManifest man;
  man.command = command;
  man.add_input(data + "/node_scaling.csv");
  man.add_input(data + "/presets.csv");
  man.add_input(c.network_path);
  man.add_param("arch", arch);
  man.add_param("preset", c.presets_csv);
  man.add_param("nodes", nodes_param(nodes));
  man.add_param("bits", std::to_string(c.bits));

  if (arch == "systolic")
    return sim_systolic(c, table, presets, nodes, net, man);
  if (arch == "optical4f")
    return sim_optical4f(c, table, presets, nodes, net, man);
  throw ConfigError("unknown arch '" + arch + "' (systolic, optical4f)");
}

}  // namespace

int run(const std::vector<std::string>& args) {
  CLI::App app{"CNN inference energy modeling across scalar, in-memory, "
               "analog and optical processor architectures"};
  app.require_subcommand(1);

  Common c;
  std::string arch;
  app.add_option("--data", c.data_dir, "data directory override");

  auto add_common = [&](CLI::App* sub, bool needs_network) {
    sub->add_option("--out", c.out_dir, "output directory");
    auto* n = sub->add_option("--network", c.network_path, "network CSV file");
    if (needs_network) n->required();
    return sub;
  };

  CLI::App* intensity = add_common(
      app.add_subcommand("intensity", "per-layer workload statistics"), true);
  intensity->add_option("--scale", c.scale,
                        "spatial scale factor applied to every layer's n");
  double mpx = 0.0;
  intensity->add_option(
      "--mpx", mpx,
      "input megapixels; scales n by sqrt(mpx) treating the file as 1 Mpx");

  CLI::App* analytic = add_common(
      app.add_subcommand("analytic", "closed-form efficiency curves"), false);
  analytic->add_option("--preset", c.presets_csv, "preset name(s), comma list")
      ->required();
  analytic->add_option("--nodes", c.nodes_csv, "technology nodes, nm");
  analytic->add_option("--bits", c.bits, "operand precision");
  analytic->add_flag("--tableV", c.table_v,
                     "use the reference 512x512x3x128x128 layer");
  analytic->add_flag("--eq8", c.eq8, "force im2col arithmetic intensity");
  analytic->add_flag("--eq9", c.eq9, "force native arithmetic intensity");

  CLI::App* simulate = add_common(
      app.add_subcommand("simulate", "cycle-accurate event-count simulation"),
      true);
  simulate->add_option("--arch", arch, "systolic | optical4f")->required();
  simulate->add_option("--preset", c.presets_csv, "preset name")->required();
  simulate->add_option("--nodes", c.nodes_csv, "technology nodes, nm");
  simulate->add_option("--bits", c.bits, "operand precision");
  simulate->add_flag("--dac4", c.dac4,
                     "charge 4 DAC events per pixel in the Fourier load");
  simulate->add_flag("--double-reg", c.double_reg,
                     "charge store and propagate register events per MAC");
  simulate->add_flag("--acc16", c.acc16, "16-bit output accumulation in SRAM");
  simulate->add_flag("--eq8", c.eq8, "force im2col arithmetic intensity");
  simulate->add_flag("--eq9", c.eq9, "force native arithmetic intensity");

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kParseError;
  }

  const std::string command = join_args(args);
  try {
    if (mpx != 0.0) {
      if (mpx < 0) throw ConfigError("--mpx must be positive");
      c.scale = std::sqrt(mpx);
    }
    if (intensity->parsed()) return cmd_intensity(c, command);
    if (analytic->parsed()) return cmd_analytic(c, command);
    if (simulate->parsed()) return cmd_simulate(c, arch, command);
    return kFailure;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kParseError;
  } catch (const ConfigError& e) {
    std::cerr << "configuration error: " << e.what() << "\n";
    return kConfigError;
  } catch (const UnsupportedWorkloadError& e) {
    std::cerr << "unsupported workload: " << e.what() << "\n";
    return kUnsupportedWorkload;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFailure;
  }
}

}  // namespace aimtk::cli
