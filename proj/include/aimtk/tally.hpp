#pragma once

#include <cstdint>

namespace aimtk {

// Additive energy breakdown by source, in joules, plus the operation count
// the energy is credited against (multiply and accumulate counted as two
// operations).
struct EnergyTally {
  double sram = 0.0;
  double dram = 0.0;
  double mac = 0.0;
  double dac = 0.0;
  double adc = 0.0;
  double load = 0.0;
  double reg = 0.0;
  double laser = 0.0;
  std::uint64_t ops = 0;

  double total() const {
    return sram + dram + mac + dac + adc + load + reg + laser;
  }

  // Operations per joule; 1e12 ops/J == 1 TOPS/W.
  double efficiency() const {
    double e = total();
    return e > 0.0 ? static_cast<double>(ops) / e : 0.0;
  }

  EnergyTally& operator+=(const EnergyTally& o) {
    sram += o.sram;
    dram += o.dram;
    mac += o.mac;
    dac += o.dac;
    adc += o.adc;
    load += o.load;
    reg += o.reg;
    laser += o.laser;
    ops += o.ops;
    return *this;
  }
};

inline double tops_per_watt(double ops_per_joule) {
  return ops_per_joule * 1e-12;
}

}  // namespace aimtk
