#include "aimtk/systolic.hpp"

#include <cmath>
#include <stdexcept>

namespace aimtk {

double SystolicConfig::default_tile_pitch_um() {
  // 256x256 tiles over 24% of a 331 mm^2 die.
  constexpr double die_um2 = 331.0 * 1e6;
  return std::sqrt(0.24 * die_um2) / 256.0;
}

double SystolicConfig::tile_reg_per_byte() const {
  if (e_tile_reg_per_byte > 0) return e_tile_reg_per_byte;
  // 8 KiB SRAM anchor scaled down to the 5-byte in-tile store.
  double store_bytes =
      static_cast<double>((bits_act + bits_acc + 7) / 8);
  return sram_energy_per_byte(sram_anchor_e_m0(), 1) * std::sqrt(store_bytes);
}

double SystolicConfig::tile_load_per_bit() const {
  if (e_tile_load_per_bit > 0) return e_tile_load_per_bit;
  return load_energy(constants::kTraceCapFaradPerUm, tile_pitch_um,
                     constants::kBaselineSupplyV);
}

LayerTrace simulate_layer(const SystolicConfig& cfg, const ConvLayerSpec& layer,
                          const TechProcess& proc, const GammaConstants& g) {
  layer.validate();
  if (cfg.rows < 1 || cfg.cols < 1)
    throw std::invalid_argument("array dimensions must be >= 1");
  if (cfg.sram_banks < 1 || cfg.sram_total_bytes % cfg.sram_banks != 0)
    throw std::invalid_argument(
        "sram_total_bytes must split evenly across sram_banks");

  MatmulDims d = to_matmul_dims(layer);
  const std::uint64_t L = d.l, N = d.n_dim, M = d.m;
  const std::uint64_t row_bands = (N + cfg.rows - 1) / cfg.rows;
  const std::uint64_t acc_bytes = static_cast<std::uint64_t>(cfg.bits_acc / 8);
  const std::uint64_t act_bytes = static_cast<std::uint64_t>(cfg.bits_act / 8);

  LayerTrace t;
  t.name = layer.name;
  std::uint64_t act_read_bytes = 0;
  std::uint64_t psum_read_bytes = 0;
  std::uint64_t psum_write_bytes = 0;
  std::uint64_t out_write_bytes = 0;

  for (std::uint64_t c0 = 0; c0 < M; c0 += cfg.cols) {
    const std::uint64_t cols_used = std::min(cfg.cols, M - c0);
    // every weight byte of this column band crosses from DRAM once
    t.dram_weight_bytes += N * cols_used;
    // the whole Toeplitz (duplication included) streams in per column band
    act_read_bytes += L * N * act_bytes;
    t.macs += L * N * cols_used;
    if (row_bands > 1) {
      psum_read_bytes += (row_bands - 1) * L * cols_used * acc_bytes;
      psum_write_bytes += (row_bands - 1) * L * cols_used * acc_bytes;
    }
    out_write_bytes += L * cols_used * act_bytes;
  }

  t.sram_read_bytes = act_read_bytes + psum_read_bytes;
  t.sram_write_bytes = psum_write_bytes + out_write_bytes;
  t.partial_sum_spill_bytes = psum_read_bytes + psum_write_bytes;
  t.tile_hops = t.macs;

  const std::uint64_t hop_bits =
      static_cast<std::uint64_t>(cfg.bits_act + cfg.bits_acc);
  const std::uint64_t reg_bytes_per_mac =
      ((hop_bits + 7) / 8) * (cfg.double_reg ? 2 : 1);

  const double s = proc.energy_scale;
  const double e_bank =
      sram_energy_per_byte(sram_anchor_e_m0(), cfg.bank_bytes()) * s;
  const double e_wfetch = (cfg.e_weight_fetch_per_byte > 0
                               ? cfg.e_weight_fetch_per_byte
                               : sram_energy_per_byte(sram_anchor_e_m0(),
                                                      cfg.bank_bytes())) *
                          s;

  EnergyTally& e = t.energy;
  e.sram = static_cast<double>(t.sram_read_bytes + t.sram_write_bytes) * e_bank;
  e.dram = static_cast<double>(t.dram_weight_bytes) * e_wfetch;
  e.mac = static_cast<double>(t.macs) * mac_energy(proc, g, cfg.bits_act);
  e.load = static_cast<double>(t.tile_hops) * static_cast<double>(hop_bits) *
           cfg.tile_load_per_bit();  // wire load: node-independent
  e.reg = static_cast<double>(t.macs * reg_bytes_per_mac) *
          cfg.tile_reg_per_byte() * s;
  e.ops = 2 * t.macs;
  return t;
}

SystolicNetworkResult simulate_network(const SystolicConfig& cfg,
                                       const NetworkSpec& net,
                                       const TechProcess& proc,
                                       const GammaConstants& g) {
  if (net.layers.empty()) throw std::invalid_argument("empty network");
  SystolicNetworkResult r;
  r.layers.reserve(net.layers.size());
  for (const auto& layer : net.layers) {
    r.layers.push_back(simulate_layer(cfg, layer, proc, g));
    r.total += r.layers.back().energy;
  }
  r.tops_w = tops_per_watt(r.total.efficiency());
  return r;
}

}  // namespace aimtk
