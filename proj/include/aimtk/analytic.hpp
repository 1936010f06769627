// Closed-form efficiency models for the five processor families and the
// technology-node sweep that produces efficiency curves and per-source
// energy breakdowns.
#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <variant>
#include <vector>

#include "aimtk/energy.hpp"
#include "aimtk/tally.hpp"
#include "aimtk/tech.hpp"
#include "aimtk/workload.hpp"

namespace aimtk {

// --- processor configurations ---------------------------------------------

struct CpuSpec {
  std::uint64_t sram_bank_bytes = 98304;
};

struct DigitalImSpec {
  std::uint64_t array_rows = 256;
  std::uint64_t array_cols = 256;
  std::uint64_t sram_total_bytes = 25165824;  // 24 MiB
  std::uint64_t sram_banks = 256;
  std::uint64_t bank_bytes() const { return sram_total_bytes / sram_banks; }
};

struct AnalogPlanarSpec {
  std::uint64_t rows = 40;  // N-hat, analog inputs
  std::uint64_t cols = 40;  // M-hat, analog outputs
  double pitch_um = 250.0;  // modulator pitch; input lines span pitch*rows
  double e_dac2 = 0.5e-12;  // weight reconfiguration (modulator) energy, J
  bool include_optical = true;    // add shot-noise laser term on inputs
  bool signed_overhead = true;    // run twice for +/- values: 2x every term
  bool reconfig_line_load = false;  // charge the array line on reconfig too
  std::uint64_t sram_total_bytes = 24576000;
  std::uint64_t sram_banks = 40;
  std::uint64_t bank_bytes() const { return sram_total_bytes / sram_banks; }
};

struct ReramSpec {
  std::uint64_t rows = 256;
  std::uint64_t cols = 256;
  double pitch_um = 4.0;
  double v_rms = 0.07;
  double sample_period_s = 1e-9;
  bool signed_overhead = true;
  bool reconfig_line_load = true;
  std::uint64_t sram_total_bytes = 25165824;
  std::uint64_t sram_banks = 256;
  std::uint64_t bank_bytes() const { return sram_total_bytes / sram_banks; }
};

struct Optical4FAnalyticSpec {
  std::uint64_t slm_pixels = 4194304;  // N-hat
  double pitch_um = 2.5;
  double wavelength_m = 1.55e-6;
  double optical_efficiency = 0.8;
  std::uint64_t sram_total_bytes = 25165824;
  std::uint64_t sram_banks = 2048;
  std::uint64_t bank_bytes() const { return sram_total_bytes / sram_banks; }
};

using ProcessorSpec = std::variant<CpuSpec, DigitalImSpec, AnalogPlanarSpec,
                                   ReramSpec, Optical4FAnalyticSpec>;

std::string processor_kind(const ProcessorSpec& spec);

// Named preset file: `preset,key,value` CSV rows.
std::map<std::string, ProcessorSpec> load_presets(const std::string& path);

// --- efficiency evaluation -------------------------------------------------

// Per-operation energy split by source, joules. memory/dac/adc/mac parts
// carry the node's energy scale; load and laser do not.
struct EnergyParts {
  double memory = 0.0;
  double dac_input = 0.0;
  double dac_weight = 0.0;
  double adc = 0.0;
  double mac = 0.0;
  double load = 0.0;
  double laser = 0.0;
  double total() const {
    return memory + dac_input + dac_weight + adc + mac + load + laser;
  }
};

struct EfficiencyPoint {
  double node_nm = constants::kBaselineNodeNm;
  double eta = 0.0;  // operations per joule = 1 / parts.total()
  EnergyParts parts;
};

// eta = 1 / (2 e_m + e_mac): a scalar machine re-reads every operand.
EfficiencyPoint cpu_efficiency(const EnergyRates& rates);

// eta = 1 / (e_m / a + e_mac): in-memory compute amortizes accesses by the
// arithmetic intensity. Throws std::invalid_argument for a <= 0.
EfficiencyPoint digital_im_efficiency(const EnergyRates& rates, double a);

// Vector-matrix product on an analog array: per-op energy
//   e_dac1/M + e_dac2 + e_adc/N,
// doubled per term when signed_overhead (positive and negative passes).
double analog_vm_energy_per_op(double e_dac1, double e_dac2, double e_adc,
                               std::uint64_t n_dim, std::uint64_t m,
                               bool signed_overhead = false);

// Matrix-matrix product: reconfiguration is amortized over the l input
// rows, and the amortization factors saturate at the physical array:
//   e_dac1/min(m_hat,m) + e_dac2/l + e_adc/min(n_hat,n_dim)
double analog_mm_energy_per_op(double e_dac1, double e_dac2, double e_adc,
                               std::uint64_t l, std::uint64_t n_dim,
                               std::uint64_t m, std::uint64_t hat_n,
                               std::uint64_t hat_m,
                               bool signed_overhead = false);

// One analytic evaluation of any processor on one conv layer with a given
// arithmetic intensity, at one process point.
struct AnalyticWorkload {
  ConvLayerSpec layer;
  double a = 0.0;  // arithmetic intensity used for the memory term
};

EfficiencyPoint evaluate_processor(const ProcessorSpec& spec,
                                   const AnalyticWorkload& work,
                                   const TechProcess& proc,
                                   const GammaConstants& g, int bits);

// Fourier-plane (4F) convolution processor. C' = floor(slm_pixels / n^2)
// input channels fit per aperture (capped at c_in; a layer whose single
// channel exceeds the aperture is unsupported). Amortization dims:
//   L = n^2, N = k^2 C' Co / (C' + Co), M = k^2 Co / 2.
EfficiencyPoint optical4f_efficiency(const Optical4FAnalyticSpec& spec,
                                     const AnalyticWorkload& work,
                                     const TechProcess& proc,
                                     const GammaConstants& g, int bits);

// One point per node; throws ConfigError for nodes outside the table.
std::vector<EfficiencyPoint> efficiency_sweep(
    const ProcessorSpec& spec, const AnalyticWorkload& work,
    const NodeScalingTable& table, const std::vector<double>& nodes,
    const GammaConstants& g, int bits);

// N_op-weighted aggregate of per-layer analytic points: the efficiency a
// processor shows over a whole network when every layer is charged its own
// per-op energy.
EfficiencyPoint evaluate_network(const ProcessorSpec& spec,
                                 const NetworkSpec& net, IntensityKind kind,
                                 const TechProcess& proc,
                                 const GammaConstants& g, int bits);

// The reference single-layer workload used for cross-architecture curves:
// n=512, k=3, Ci=Co=128, with the im2col intensity (~230).
AnalyticWorkload reference_workload();

}  // namespace aimtk
