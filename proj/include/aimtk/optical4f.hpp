// Event-count model of a folded reflection-mode optical 4F convolution
// processor: a Fourier-load phase writes the transformed activations into
// the Fourier-plane SLM, then one compute flash per output channel reads
// out the convolution. Input channels pack C' = floor(N-hat / n^2) at a
// time onto the aperture.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "aimtk/energy.hpp"
#include "aimtk/tally.hpp"
#include "aimtk/tech.hpp"
#include "aimtk/workload.hpp"

namespace aimtk {

struct Optical4FConfig {
  std::uint64_t slm_pixels = 4194304;  // N-hat, 4 Mpx
  double slm_pitch_um = 2.5;
  double wavelength_m = 1.55e-6;
  double optical_efficiency = 0.8;
  std::uint64_t sram_total_bytes = 25165824;  // 24 MiB
  std::uint64_t sram_banks = 2048;            // 12 KiB per row
  int bits = 8;
  // Load phase, per input pixel: one SLM write plus the complex-field
  // recovery chain (2 ADC reads and 2 more DAC writes). An aggregate
  // 4-DAC accounting is selectable to match the lumped form.
  int dac_events_fft_per_pixel = 3;
  int adc_events_fft_per_pixel = 2;
  // Kernel writes and output reads handle complex/signed values: 2 events
  // per element.
  int complex_factor = 2;
  // Output accumulation width in SRAM (bytes per element).
  int acc_bytes = 1;
  // Laser energy is charged for the whole aperture per flash; active-pixel
  // charging is available for sensitivity studies.
  bool laser_full_aperture = true;

  std::uint64_t bank_bytes() const { return sram_total_bytes / sram_banks; }
};

struct Optical4FPlan {
  std::uint64_t c_prime = 0;  // channels per aperture for this layer
  std::uint64_t groups = 0;
  std::vector<std::uint64_t> group_channels;
  std::uint64_t flashes = 0;  // groups * (1 + c_out)
};

struct Optical4FTrace {
  std::string name;
  std::uint64_t flash_count = 0;
  std::uint64_t dac_events = 0;
  std::uint64_t adc_events = 0;
  std::uint64_t sram_read_bytes = 0;
  std::uint64_t sram_write_bytes = 0;
  std::uint64_t partial_sum_bytes = 0;
  std::uint64_t laser_pixel_events = 0;
  EnergyTally energy;
};

struct Optical4FNetworkResult {
  std::vector<Optical4FTrace> layers;
  EnergyTally total;
  double tops_w = 0.0;
  // Per-source pJ per MAC, the energy-distribution view.
  double pj_per_mac_dac = 0.0;
  double pj_per_mac_adc = 0.0;
  double pj_per_mac_sram = 0.0;
  double pj_per_mac_laser = 0.0;
};

// Channel grouping for one layer. Throws UnsupportedWorkloadError naming
// the layer and the required aperture when a single channel does not fit.
Optical4FPlan plan_layer(const Optical4FConfig& cfg, const ConvLayerSpec& layer);

// Event counts and energy for one layer. ADC and SRAM energies scale with
// the process; DAC (converter core plus line load) and laser do not.
Optical4FTrace simulate_layer(const Optical4FConfig& cfg,
                              const ConvLayerSpec& layer,
                              const TechProcess& proc,
                              const GammaConstants& g);

Optical4FNetworkResult simulate_network(const Optical4FConfig& cfg,
                                        const NetworkSpec& net,
                                        const TechProcess& proc,
                                        const GammaConstants& g);

// Per-pixel share of driving one SLM row line: the line spans
// pitch * sqrt(N-hat) and is charged once per row update.
double slm_pixel_load_energy(const Optical4FConfig& cfg);

}  // namespace aimtk
