#include "aimtk/analytic.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "aimtk/csvio.hpp"
#include "aimtk/errors.hpp"

namespace aimtk {

namespace {

EfficiencyPoint finish(double node_nm, EnergyParts parts) {
  EfficiencyPoint p;
  p.node_nm = node_nm;
  p.parts = parts;
  p.eta = 1.0 / parts.total();
  return p;
}

double bank_rate(std::uint64_t bank_bytes, const TechProcess& proc) {
  return sram_energy_per_byte(sram_anchor_e_m0(), bank_bytes) *
         proc.energy_scale;
}

}  // namespace

std::string processor_kind(const ProcessorSpec& spec) {
  if (std::holds_alternative<CpuSpec>(spec)) return "cpu";
  if (std::holds_alternative<DigitalImSpec>(spec)) return "digital_im";
  if (std::holds_alternative<AnalogPlanarSpec>(spec)) return "analog_planar";
  if (std::holds_alternative<ReramSpec>(spec)) return "reram";
  return "optical4f";
}

EfficiencyPoint cpu_efficiency(const EnergyRates& rates) {
  EnergyParts parts;
  parts.memory = 2.0 * rates.e_m;
  parts.mac = rates.e_mac;
  return finish(constants::kBaselineNodeNm, parts);
}

EfficiencyPoint digital_im_efficiency(const EnergyRates& rates, double a) {
  if (a <= 0) throw std::invalid_argument("arithmetic intensity must be > 0");
  EnergyParts parts;
  parts.memory = rates.e_m / a;
  parts.mac = rates.e_mac;
  return finish(constants::kBaselineNodeNm, parts);
}

double analog_vm_energy_per_op(double e_dac1, double e_dac2, double e_adc,
                               std::uint64_t n_dim, std::uint64_t m,
                               bool signed_overhead) {
  if (n_dim < 1 || m < 1) throw std::invalid_argument("dims must be >= 1");
  double f = signed_overhead ? 2.0 : 1.0;
  return f * (e_dac1 / static_cast<double>(m) + e_dac2 +
              e_adc / static_cast<double>(n_dim));
}

double analog_mm_energy_per_op(double e_dac1, double e_dac2, double e_adc,
                               std::uint64_t l, std::uint64_t n_dim,
                               std::uint64_t m, std::uint64_t hat_n,
                               std::uint64_t hat_m, bool signed_overhead) {
  if (l < 1 || n_dim < 1 || m < 1 || hat_n < 1 || hat_m < 1)
    throw std::invalid_argument("dims must be >= 1");
  double M = static_cast<double>(std::min(hat_m, m));
  double N = static_cast<double>(std::min(hat_n, n_dim));
  double f = signed_overhead ? 2.0 : 1.0;
  return f * (e_dac1 / M + e_dac2 / static_cast<double>(l) + e_adc / N);
}

namespace {

EfficiencyPoint eval_cpu(const CpuSpec& s, const TechProcess& proc,
                         const GammaConstants& g, int bits) {
  EnergyParts parts;
  parts.memory = 2.0 * bank_rate(s.sram_bank_bytes, proc);
  parts.mac = mac_energy(proc, g, bits);
  return finish(proc.node_nm, parts);
}

EfficiencyPoint eval_digital_im(const DigitalImSpec& s, double a,
                                const TechProcess& proc,
                                const GammaConstants& g, int bits) {
  if (a <= 0) throw std::invalid_argument("arithmetic intensity must be > 0");
  EnergyParts parts;
  parts.memory = bank_rate(s.bank_bytes(), proc) / a;
  parts.mac = mac_energy(proc, g, bits);
  return finish(proc.node_nm, parts);
}

// Shared matmul-mapped evaluation for the planar analog families. The
// converter cores and memory scale with the process; line loads and laser
// do not.
EfficiencyPoint eval_planar(const AnalogPlanarSpec* photonic,
                            const ReramSpec* reram,
                            const AnalyticWorkload& work,
                            const TechProcess& proc, const GammaConstants& g,
                            int bits) {
  MatmulDims d = to_matmul_dims(work.layer);
  std::uint64_t hat_n = photonic ? photonic->rows : reram->rows;
  std::uint64_t hat_m = photonic ? photonic->cols : reram->cols;
  double pitch = photonic ? photonic->pitch_um : reram->pitch_um;
  bool sgn = photonic ? photonic->signed_overhead : reram->signed_overhead;
  bool line_on_reconfig =
      photonic ? photonic->reconfig_line_load : reram->reconfig_line_load;
  std::uint64_t bank = photonic ? photonic->bank_bytes() : reram->bank_bytes();

  double M = static_cast<double>(std::min(hat_m, d.m));
  double N = static_cast<double>(std::min(hat_n, d.n_dim));
  double L = static_cast<double>(d.l);
  double f = sgn ? 2.0 : 1.0;

  double dac_core = dac_core_energy(proc, g, bits);
  // each analog input drives a word line crossing every output column
  std::uint64_t line_elems = photonic ? photonic->cols : reram->cols;
  double line = load_energy(constants::kTraceCapFaradPerUm,
                            pitch * static_cast<double>(line_elems),
                            constants::kBaselineSupplyV);

  EnergyParts parts;
  parts.memory = bank_rate(bank, proc) / work.a;
  parts.dac_input = f * dac_core / M;
  parts.adc = f * adc_energy(proc, g, bits) / N;
  parts.load = f * line / M + (line_on_reconfig ? f * line / L : 0.0);
  if (photonic) {
    // weight reconfiguration cost is the electro-optic modulator
    parts.dac_weight = f * photonic->e_dac2 * proc.energy_scale / L;
    if (photonic->include_optical) {
      double e_opt = optical_energy_per_pixel(1.55e-6, 0.8, bits);
      parts.laser = f * e_opt / M;
    }
  } else {
    parts.dac_weight = f * dac_core / L;
    double e_rr = reram_mac_energy(reram_mean_conductance(bits), reram->v_rms,
                                   reram->sample_period_s);
    parts.mac = f * e_rr * proc.energy_scale;
  }
  return finish(proc.node_nm, parts);
}

}  // namespace

EfficiencyPoint optical4f_efficiency(const Optical4FAnalyticSpec& spec,
                                     const AnalyticWorkload& work,
                                     const TechProcess& proc,
                                     const GammaConstants& g, int bits) {
  const ConvLayerSpec& layer = work.layer;
  std::uint64_t n2 = layer.n * layer.n;
  std::uint64_t c_prime = spec.slm_pixels / n2;
  if (c_prime < 1)
    throw UnsupportedWorkloadError(
        "layer " + layer.name + ": image plane of " + std::to_string(n2) +
        " px exceeds the " + std::to_string(spec.slm_pixels) + " px SLM");
  // A group can never hold more channels than the layer has.
  c_prime = std::min<std::uint64_t>(c_prime, layer.c_in);

  double k2 = static_cast<double>(layer.k * layer.k);
  double co = static_cast<double>(layer.c_out);
  double cp = static_cast<double>(c_prime);
  double L = static_cast<double>(n2);
  double N = k2 * cp * co / (cp + co);
  double M = k2 * co / 2.0;

  double dac_core = dac_core_energy(proc, g, bits);
  double pix_load = load_energy(constants::kTraceCapFaradPerUm,
                                spec.pitch_um *
                                    std::sqrt(static_cast<double>(
                                        spec.slm_pixels)),
                                constants::kBaselineSupplyV) /
                    std::sqrt(static_cast<double>(spec.slm_pixels));
  double e_opt =
      optical_energy_per_pixel(spec.wavelength_m, spec.optical_efficiency,
                               bits);

  EnergyParts parts;
  parts.memory = bank_rate(spec.bank_bytes(), proc) / work.a;
  parts.dac_input = dac_core / M;
  parts.dac_weight = dac_core / L;
  parts.load = pix_load / M + pix_load / L;
  parts.laser = e_opt / M + e_opt / L;
  parts.adc = adc_energy(proc, g, bits) / N;
  return finish(proc.node_nm, parts);
}

EfficiencyPoint evaluate_processor(const ProcessorSpec& spec,
                                   const AnalyticWorkload& work,
                                   const TechProcess& proc,
                                   const GammaConstants& g, int bits) {
  if (work.a <= 0 && !std::holds_alternative<CpuSpec>(spec))
    throw std::invalid_argument("arithmetic intensity must be > 0");
  if (const auto* s = std::get_if<CpuSpec>(&spec))
    return eval_cpu(*s, proc, g, bits);
  if (const auto* s = std::get_if<DigitalImSpec>(&spec))
    return eval_digital_im(*s, work.a, proc, g, bits);
  if (const auto* s = std::get_if<AnalogPlanarSpec>(&spec))
    return eval_planar(s, nullptr, work, proc, g, bits);
  if (const auto* s = std::get_if<ReramSpec>(&spec))
    return eval_planar(nullptr, s, work, proc, g, bits);
  return optical4f_efficiency(std::get<Optical4FAnalyticSpec>(spec), work,
                              proc, g, bits);
}

std::vector<EfficiencyPoint> efficiency_sweep(
    const ProcessorSpec& spec, const AnalyticWorkload& work,
    const NodeScalingTable& table, const std::vector<double>& nodes,
    const GammaConstants& g, int bits) {
  if (nodes.empty()) throw ConfigError("node list is empty");
  std::vector<EfficiencyPoint> out;
  out.reserve(nodes.size());
  for (double node : nodes)
    out.push_back(
        evaluate_processor(spec, work, table.process_at(node), g, bits));
  return out;
}

EfficiencyPoint evaluate_network(const ProcessorSpec& spec,
                                 const NetworkSpec& net, IntensityKind kind,
                                 const TechProcess& proc,
                                 const GammaConstants& g, int bits) {
  if (net.layers.empty()) throw std::invalid_argument("empty network");
  EnergyParts acc;
  double total_ops = 0.0;
  for (const auto& layer : net.layers) {
    AnalyticWorkload w{layer, conv_intensity(layer, kind)};
    EfficiencyPoint p = evaluate_processor(spec, w, proc, g, bits);
    double ops = static_cast<double>(layer.ops());
    acc.memory += ops * p.parts.memory;
    acc.dac_input += ops * p.parts.dac_input;
    acc.dac_weight += ops * p.parts.dac_weight;
    acc.adc += ops * p.parts.adc;
    acc.mac += ops * p.parts.mac;
    acc.load += ops * p.parts.load;
    acc.laser += ops * p.parts.laser;
    total_ops += ops;
  }
  EnergyParts per_op;
  per_op.memory = acc.memory / total_ops;
  per_op.dac_input = acc.dac_input / total_ops;
  per_op.dac_weight = acc.dac_weight / total_ops;
  per_op.adc = acc.adc / total_ops;
  per_op.mac = acc.mac / total_ops;
  per_op.load = acc.load / total_ops;
  per_op.laser = acc.laser / total_ops;
  EfficiencyPoint p;
  p.node_nm = proc.node_nm;
  p.parts = per_op;
  p.eta = 1.0 / per_op.total();
  return p;
}

AnalyticWorkload reference_workload() {
  ConvLayerSpec layer;
  layer.name = "reference";
  layer.n = 512;
  layer.k = 3;
  layer.c_in = 128;
  layer.c_out = 128;
  layer.stride = 1;
  return AnalyticWorkload{layer, conv_intensity_im2col(layer)};
}

// --- preset file -----------------------------------------------------------

std::map<std::string, ProcessorSpec> load_presets(const std::string& path) {
  io::CsvFile f = io::read_csv(path);
  if (f.header != std::vector<std::string>{"preset", "key", "value"})
    throw ParseError(path, 1, "expected header preset,key,value");

  // gather key/value maps per preset, in file order
  std::vector<std::string> order;
  std::map<std::string, std::map<std::string, std::string>> kv;
  for (const auto& r : f.rows) {
    if (r.fields.size() != 3)
      throw ParseError(path, r.line, "expected 3 fields");
    const std::string& name = r.fields[0];
    if (!kv.count(name)) order.push_back(name);
    kv[name][r.fields[1]] = r.fields[2];
  }

  auto check_banks = [](const std::string& name, std::uint64_t total,
                        std::uint64_t banks) {
    if (banks < 1 || total % banks != 0)
      throw ConfigError("preset " + name + ": sram_total_bytes (" +
                        std::to_string(total) +
                        ") must split evenly across sram_banks (" +
                        std::to_string(banks) + ")");
  };

  std::map<std::string, ProcessorSpec> out;
  for (const std::string& name : order) {
    auto& m = kv[name];
    auto get = [&](const std::string& key, double dflt) {
      auto it = m.find(key);
      if (it == m.end()) return dflt;
      try {
        return std::stod(it->second);
      } catch (...) {
        throw ConfigError("preset " + name + ": bad numeric value for " + key);
      }
    };
    auto arch_it = m.find("arch");
    if (arch_it == m.end())
      throw ConfigError("preset " + name + " missing arch key");
    const std::string& arch = arch_it->second;
    if (arch == "cpu") {
      CpuSpec s;
      s.sram_bank_bytes = static_cast<std::uint64_t>(
          get("sram_bank_bytes", static_cast<double>(s.sram_bank_bytes)));
      out.emplace(name, s);
    } else if (arch == "digital_im") {
      DigitalImSpec s;
      s.array_rows = static_cast<std::uint64_t>(get("rows", 256));
      s.array_cols = static_cast<std::uint64_t>(get("cols", 256));
      s.sram_total_bytes = static_cast<std::uint64_t>(
          get("sram_total_bytes", static_cast<double>(s.sram_total_bytes)));
      s.sram_banks = static_cast<std::uint64_t>(get("sram_banks", 256));
      check_banks(name, s.sram_total_bytes, s.sram_banks);
      out.emplace(name, s);
    } else if (arch == "analog_planar") {
      AnalogPlanarSpec s;
      s.rows = static_cast<std::uint64_t>(get("rows", 40));
      s.cols = static_cast<std::uint64_t>(get("cols", 40));
      s.pitch_um = get("pitch_um", 250.0);
      s.e_dac2 = get("e_dac2_pj", 0.5) * 1e-12;
      s.include_optical = get("include_optical", 1) != 0;
      s.signed_overhead = get("signed_overhead", 1) != 0;
      s.reconfig_line_load = get("reconfig_line_load", 0) != 0;
      s.sram_total_bytes = static_cast<std::uint64_t>(
          get("sram_total_bytes", static_cast<double>(s.sram_total_bytes)));
      s.sram_banks = static_cast<std::uint64_t>(get("sram_banks", 40));
      check_banks(name, s.sram_total_bytes, s.sram_banks);
      out.emplace(name, s);
    } else if (arch == "reram") {
      ReramSpec s;
      s.rows = static_cast<std::uint64_t>(get("rows", 256));
      s.cols = static_cast<std::uint64_t>(get("cols", 256));
      s.pitch_um = get("pitch_um", 4.0);
      s.v_rms = get("v_rms", 0.07);
      s.sample_period_s = get("sample_period_s", 1e-9);
      s.signed_overhead = get("signed_overhead", 1) != 0;
      s.reconfig_line_load = get("reconfig_line_load", 1) != 0;
      s.sram_total_bytes = static_cast<std::uint64_t>(
          get("sram_total_bytes", static_cast<double>(s.sram_total_bytes)));
      s.sram_banks = static_cast<std::uint64_t>(get("sram_banks", 256));
      check_banks(name, s.sram_total_bytes, s.sram_banks);
      out.emplace(name, s);
    } else if (arch == "optical4f") {
      Optical4FAnalyticSpec s;
      s.slm_pixels = static_cast<std::uint64_t>(get("slm_pixels", 4194304));
      s.pitch_um = get("pitch_um", 2.5);
      s.wavelength_m = get("wavelength_nm", 1550.0) * 1e-9;
      s.optical_efficiency = get("optical_efficiency", 0.8);
      s.sram_total_bytes = static_cast<std::uint64_t>(
          get("sram_total_bytes", static_cast<double>(s.sram_total_bytes)));
      s.sram_banks = static_cast<std::uint64_t>(get("sram_banks", 2048));
      check_banks(name, s.sram_total_bytes, s.sram_banks);
      out.emplace(name, s);
    } else {
      throw ConfigError("preset " + name + ": unknown arch '" + arch + "'");
    }
  }
  return out;
}

}  // namespace aimtk
