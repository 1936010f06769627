// Event-count model of a weight-stationary systolic array executing conv
// layers via im2col lowering. Counts are exact for the tiling contract and
// node-independent; energy is applied per process point.
#pragma once

#include <cstdint>
#include <vector>

#include "aimtk/energy.hpp"
#include "aimtk/tally.hpp"
#include "aimtk/tech.hpp"
#include "aimtk/workload.hpp"

namespace aimtk {

struct SystolicConfig {
  std::uint64_t rows = 256;
  std::uint64_t cols = 256;
  std::uint64_t sram_total_bytes = 25165824;  // 24 MiB
  std::uint64_t sram_banks = 256;             // 96 KiB per port
  int bits_act = 8;
  int bits_acc = 32;

  // Inter-tile distance: the 256x256 array occupies 24% of a 331 mm^2 die.
  double tile_pitch_um = 34.816;
  // Register write inside a tile, per byte: the 8 KiB SRAM anchor scaled
  // down to a 5-byte store, ~31 fJ/byte.
  double e_tile_reg_per_byte = 0.0;  // 0 -> derived default
  // Per-bit hop cost between neighboring tiles, from the line-load formula
  // at the tile pitch (~2.82 fJ/bit). Node-independent.
  double e_tile_load_per_bit = 0.0;  // 0 -> derived default
  // Weights live off-chip; without a published DRAM figure they are charged
  // at the SRAM bank rate unless overridden.
  double e_weight_fetch_per_byte = 0.0;  // 0 -> SRAM bank rate
  bool double_reg = false;  // charge store and propagate separately

  std::uint64_t bank_bytes() const { return sram_total_bytes / sram_banks; }
  double tile_reg_per_byte() const;
  double tile_load_per_bit() const;

  static double default_tile_pitch_um();
};

struct LayerTrace {
  std::string name;
  std::uint64_t macs = 0;
  std::uint64_t sram_read_bytes = 0;
  std::uint64_t sram_write_bytes = 0;
  std::uint64_t dram_weight_bytes = 0;
  std::uint64_t tile_hops = 0;  // one (bits_act + bits_acc)-bit hop per MAC
  std::uint64_t partial_sum_spill_bytes = 0;
  EnergyTally energy;
};

struct SystolicNetworkResult {
  std::vector<LayerTrace> layers;
  EnergyTally total;
  double tops_w = 0.0;
};

// Deterministic event counts for one layer under the tiling contract: the
// N' x M' weight matrix is cut into ceil(N'/rows) x ceil(M'/cols) tiles;
// each weight tile is fetched once, activations are re-read per column
// band, and partial sums spill through SRAM at accumulator width whenever
// more than one row band is needed.
LayerTrace simulate_layer(const SystolicConfig& cfg, const ConvLayerSpec& layer,
                          const TechProcess& proc, const GammaConstants& g);

SystolicNetworkResult simulate_network(const SystolicConfig& cfg,
                                       const NetworkSpec& net,
                                       const TechProcess& proc,
                                       const GammaConstants& g);

}  // namespace aimtk
