#include "aimtk/energy.hpp"

#include <cmath>
#include <stdexcept>

namespace aimtk {

namespace {
constexpr double kTwoPi = 6.283185307179586476925286766559;

double pow2(int e) { return std::ldexp(1.0, e); }
}  // namespace

double mac_energy(const TechProcess& proc, const GammaConstants& g, int bits) {
  if (bits < 1) throw std::invalid_argument("mac_energy: bits must be >= 1");
  double b = bits;
  double gates = 6.0 * b * b + 9.0 * b;
  double e = g.gamma_mac * gates * constants::kBoltzmann * proc.temperature_k;
  return e * proc.energy_scale;
}

double sram_energy_per_byte(double e_m0, std::uint64_t bank_bytes) {
  if (e_m0 < 0) throw std::invalid_argument("sram energy prefactor negative");
  if (bank_bytes < 1)
    throw std::invalid_argument("sram bank size must be >= 1 byte");
  return e_m0 * std::sqrt(static_cast<double>(bank_bytes));
}

double sram_anchor_e_m0() {
  return constants::kSramAnchorEnergyPerByte /
         std::sqrt(constants::kSramAnchorBankBytes);
}

double adc_energy(const TechProcess& proc, const GammaConstants& g, int bits) {
  if (bits < 1) throw std::invalid_argument("adc_energy: bits must be >= 1");
  double e = g.gamma_adc * constants::kBoltzmann * proc.temperature_k *
             pow2(2 * bits);
  return e * proc.energy_scale;
}

double dac_core_energy(const TechProcess& proc, const GammaConstants& g,
                       int bits) {
  if (bits < 1) throw std::invalid_argument("dac_core_energy: bits must be >= 1");
  double e = g.gamma_dac * constants::kBoltzmann * proc.temperature_k *
             pow2(2 * bits);
  return e * proc.energy_scale;
}

double load_energy(double cap_per_um, double line_um, double volts) {
  if (cap_per_um < 0 || line_um < 0 || volts < 0)
    throw std::invalid_argument("load_energy: arguments must be >= 0");
  return 0.5 * cap_per_um * line_um * volts * volts;
}

double optical_energy_per_pixel(double wavelength_m, double optical_efficiency,
                                int bits) {
  if (optical_efficiency <= 0.0 || optical_efficiency > 1.0)
    throw std::invalid_argument("optical efficiency must be in (0, 1]");
  if (wavelength_m <= 0)
    throw std::invalid_argument("wavelength must be positive");
  if (bits < 0) throw std::invalid_argument("bits must be >= 0");
  double omega = kTwoPi * constants::kLightSpeed / wavelength_m;
  return constants::kHbar * omega / optical_efficiency * pow2(2 * bits);
}

double optical_gamma(double wavelength_m, double optical_efficiency,
                     double temperature_k) {
  double e1 = optical_energy_per_pixel(wavelength_m, optical_efficiency, 0);
  return e1 / (constants::kBoltzmann * temperature_k);
}

double reram_mac_energy(double mean_conductance_s, double v_rms,
                        double sample_period_s) {
  if (mean_conductance_s < constants::kQuantumConductance)
    throw std::domain_error(
        "memristor conductance only well behaved above the quantum "
        "conductance G0");
  if (sample_period_s <= 0)
    throw std::invalid_argument("sample period must be positive");
  if (v_rms < 0) throw std::invalid_argument("v_rms must be >= 0");
  return mean_conductance_s * v_rms * v_rms * sample_period_s;
}

double reram_mean_conductance(int bits) {
  if (bits < 1) throw std::invalid_argument("bits must be >= 1");
  return pow2(bits - 1) * constants::kQuantumConductance;
}

double reram_thermal_floor(int bits, double temperature_k) {
  if (bits < 1) throw std::invalid_argument("bits must be >= 1");
  return 3.0 * constants::kBoltzmann * temperature_k * pow2(3 * bits);
}

EnergyRates EnergyRates::for_process(const TechProcess& proc,
                                     const GammaConstants& g, int bits,
                                     std::uint64_t bank_bytes,
                                     double wavelength_m,
                                     double optical_efficiency,
                                     double reram_v_rms,
                                     double reram_period_s) {
  proc.validate();
  g.validate();
  EnergyRates r;
  r.bits = bits;
  r.bank_bytes = bank_bytes;
  r.e_m0 = sram_anchor_e_m0() * proc.energy_scale;
  r.e_m = sram_energy_per_byte(r.e_m0, bank_bytes);
  r.e_mac = mac_energy(proc, g, bits);
  r.e_adc = adc_energy(proc, g, bits);
  r.e_dac = dac_core_energy(proc, g, bits);
  r.e_load_per_um = load_energy(constants::kTraceCapFaradPerUm, 1.0,
                                constants::kBaselineSupplyV);
  r.e_opt = optical_energy_per_pixel(wavelength_m, optical_efficiency, bits);
  r.e_reram = reram_mac_energy(reram_mean_conductance(bits), reram_v_rms,
                               reram_period_s);
  return r;
}

}  // namespace aimtk
