#include "aimtk/optical4f.hpp"

#include <cmath>
#include <stdexcept>

#include "aimtk/errors.hpp"

namespace aimtk {

double slm_pixel_load_energy(const Optical4FConfig& cfg) {
  double side = std::sqrt(static_cast<double>(cfg.slm_pixels));
  double line = load_energy(constants::kTraceCapFaradPerUm,
                            cfg.slm_pitch_um * side,
                            constants::kBaselineSupplyV);
  return line / side;
}

Optical4FPlan plan_layer(const Optical4FConfig& cfg,
                         const ConvLayerSpec& layer) {
  layer.validate();
  if (cfg.slm_pixels < 1)
    throw std::invalid_argument("slm_pixels must be >= 1");
  if (cfg.sram_banks < 1 || cfg.sram_total_bytes % cfg.sram_banks != 0)
    throw std::invalid_argument(
        "sram_total_bytes must split evenly across sram_banks");
  const std::uint64_t n2 = layer.n * layer.n;
  if (n2 > cfg.slm_pixels)
    throw UnsupportedWorkloadError(
        "layer " + layer.name + ": image plane needs " + std::to_string(n2) +
        " px but the SLM has " + std::to_string(cfg.slm_pixels) +
        " px; sub-image tiling is not modeled");
  Optical4FPlan plan;
  plan.c_prime = cfg.slm_pixels / n2;
  plan.groups = (layer.c_in + plan.c_prime - 1) / plan.c_prime;
  std::uint64_t remaining = layer.c_in;
  for (std::uint64_t i = 0; i < plan.groups; ++i) {
    std::uint64_t take = std::min(plan.c_prime, remaining);
    plan.group_channels.push_back(take);
    remaining -= take;
  }
  plan.flashes = plan.groups * (1 + layer.c_out);
  return plan;
}

Optical4FTrace simulate_layer(const Optical4FConfig& cfg,
                              const ConvLayerSpec& layer,
                              const TechProcess& proc,
                              const GammaConstants& g) {
  Optical4FPlan plan = plan_layer(cfg, layer);

  const std::uint64_t n2 = layer.n * layer.n;
  const std::uint64_t m = layer.output_side();
  const std::uint64_t m2 = m * m;
  const std::uint64_t k2 = layer.k * layer.k;
  const std::uint64_t co = layer.c_out;
  const std::uint64_t acc = static_cast<std::uint64_t>(cfg.acc_bytes);
  const std::uint64_t cx = static_cast<std::uint64_t>(cfg.complex_factor);

  Optical4FTrace t;
  t.name = layer.name;
  std::uint64_t active_pixel_events = 0;

  for (std::uint64_t gi = 0; gi < plan.groups; ++gi) {
    const std::uint64_t ch = plan.group_channels[gi];
    // Fourier-load flash: write activations, recover the complex field.
    t.flash_count += 1;
    t.dac_events +=
        n2 * ch * static_cast<std::uint64_t>(cfg.dac_events_fft_per_pixel);
    t.adc_events +=
        n2 * ch * static_cast<std::uint64_t>(cfg.adc_events_fft_per_pixel);
    t.sram_read_bytes += n2 * ch;  // activations feeding the input SLM
    active_pixel_events += n2 * ch;

    // One compute flash per output channel: kernel pattern in, outputs out.
    t.flash_count += co;
    t.dac_events += co * k2 * ch * cx;
    t.adc_events += co * m2 * cx;
    t.sram_read_bytes += co * k2 * ch;  // kernel weights
    t.sram_write_bytes += m2 * co * acc;
    active_pixel_events += co * k2 * ch;

    if (gi > 0) {
      // accumulate with the previous groups' outputs
      t.sram_read_bytes += m2 * co * acc;
      t.partial_sum_bytes += 2 * m2 * co * acc;
    }
  }
  t.laser_pixel_events = cfg.laser_full_aperture
                             ? t.flash_count * cfg.slm_pixels
                             : active_pixel_events;

  // DAC events (converter core plus row-line share) and the laser do not
  // scale with the process; ADC and SRAM do.
  const double s = proc.energy_scale;
  TechProcess base = proc;
  base.energy_scale = 1.0;
  const double e_dac_event =
      dac_core_energy(base, g, cfg.bits) + slm_pixel_load_energy(cfg);
  const double e_bank =
      sram_energy_per_byte(sram_anchor_e_m0(), cfg.bank_bytes());
  const double e_opt = optical_energy_per_pixel(
      cfg.wavelength_m, cfg.optical_efficiency, cfg.bits);

  EnergyTally& e = t.energy;
  e.dac = static_cast<double>(t.dac_events) * e_dac_event;
  e.adc = static_cast<double>(t.adc_events) * adc_energy(base, g, cfg.bits) * s;
  e.sram = static_cast<double>(t.sram_read_bytes + t.sram_write_bytes) *
           e_bank * s;
  e.laser = static_cast<double>(t.laser_pixel_events) * e_opt;
  e.ops = layer.ops();
  return t;
}

Optical4FNetworkResult simulate_network(const Optical4FConfig& cfg,
                                        const NetworkSpec& net,
                                        const TechProcess& proc,
                                        const GammaConstants& g) {
  if (net.layers.empty()) throw std::invalid_argument("empty network");
  Optical4FNetworkResult r;
  r.layers.reserve(net.layers.size());
  for (const auto& layer : net.layers) {
    r.layers.push_back(simulate_layer(cfg, layer, proc, g));
    r.total += r.layers.back().energy;
  }
  r.tops_w = tops_per_watt(r.total.efficiency());
  double macs = static_cast<double>(r.total.ops) / 2.0;
  r.pj_per_mac_dac = r.total.dac / macs * 1e12;
  r.pj_per_mac_adc = r.total.adc / macs * 1e12;
  r.pj_per_mac_sram = r.total.sram / macs * 1e12;
  r.pj_per_mac_laser = r.total.laser / macs * 1e12;
  return r;
}

}  // namespace aimtk
