// Per-operation energy primitives: digital MAC, SRAM access, data
// converters, line loads, shot-noise-limited optics and memristor arrays.
// All results are joules; callers pick display units.
#pragma once

#include <cstdint>

#include "aimtk/constants.hpp"
#include "aimtk/tech.hpp"

namespace aimtk {

// Digital multiply-accumulate. A serial-parallel multiplier uses ~6B^2
// gates plus 9B for the adder, each bounded below by the Landauer limit:
//   e_mac = gamma_mac * (6B^2 + 9B) * kT
// Scaled by the process energy factor. Throws std::invalid_argument for
// bits < 1.
double mac_energy(const TechProcess& proc, const GammaConstants& g, int bits);

// SRAM access energy per byte for a bank of `bank_bytes`:
//   e_m = e_m0 * sqrt(bank_bytes)
// (bit/word line charging grows with the side of the array). e_m0 is the
// unit-bank prefactor; the shipped default anchors 8 KiB at 1.25 pJ/byte.
double sram_energy_per_byte(double e_m0, std::uint64_t bank_bytes);

// e_m0 consistent with the 8 KiB / 1.25 pJ-per-byte anchor at 45 nm.
double sram_anchor_e_m0();

// Converter energies scale exponentially with precision because each extra
// bit requires 4x the signal-to-noise ratio:  e = gamma * kT * 2^(2B).
double adc_energy(const TechProcess& proc, const GammaConstants& g, int bits);
double dac_core_energy(const TechProcess& proc, const GammaConstants& g,
                       int bits);

// Energy to charge a line of `line_um` micrometers at `cap_per_um` F/um:
//   e_load = 1/2 * C * L * V^2
// Wire capacitance does not track the logic process, so no node scaling is
// applied to this quantity anywhere in the toolkit.
double load_energy(double cap_per_um, double line_um, double volts);

// Shot-noise-limited optical energy per pixel per measurement:
//   e_opt = hbar*omega / eta_opt * 2^(2B)
// bits = 0 is the single-photon floor. Throws std::invalid_argument unless
// 0 < optical_efficiency <= 1.
double optical_energy_per_pixel(double wavelength_m, double optical_efficiency,
                                int bits);

// The dimensionless equivalent gamma_opt = e_opt / (kT * 2^(2B)).
double optical_gamma(double wavelength_m, double optical_efficiency,
                     double temperature_k = constants::kDefaultTemperatureK);

// Memristor array energy per MAC under pulse-width-modulated drive:
//   e_ReRAM = <G> * V_rms^2 * dt
// Independent of the array dimensions, so it is a floor that scaling the
// array cannot amortize. Throws std::domain_error if the conductance is
// below the quantum conductance G0 (elements are only well behaved above
// it), std::invalid_argument for a non-positive sample period.
double reram_mac_energy(double mean_conductance_s, double v_rms,
                        double sample_period_s);

// Mean conductance of a uniformly programmed B-bit array: 2^(B-1) * G0.
double reram_mean_conductance(int bits);

// Thermal-noise floor of the array energy per MAC: 3 kT 2^(3B).
double reram_thermal_floor(int bits,
                           double temperature_k =
                               constants::kDefaultTemperatureK);

// Evaluated per-operation energies for one process/precision point.
// Process-dependent members carry the node's energy scale; e_load_per_um,
// e_opt and e_reram are quoted unscaled (see scale_to_node for the rule).
struct EnergyRates {
  double e_m0 = 0.0;          // J, SRAM scaling prefactor (scaled)
  double e_m = 0.0;           // J/byte at `bank_bytes` (scaled)
  double e_mac = 0.0;         // J per MAC (scaled)
  double e_adc = 0.0;         // J per conversion (scaled)
  double e_dac = 0.0;         // J per conversion (scaled)
  double e_load_per_um = 0.0; // J/um per event at the baseline supply
  double e_opt = 0.0;         // J per pixel per measurement
  double e_reram = 0.0;       // J per MAC, practical drive point
  int bits = 8;
  std::uint64_t bank_bytes = 0;

  static EnergyRates for_process(const TechProcess& proc,
                                 const GammaConstants& g, int bits,
                                 std::uint64_t bank_bytes,
                                 double wavelength_m = 1.55e-6,
                                 double optical_efficiency = 0.8,
                                 double reram_v_rms = 0.07,
                                 double reram_period_s = 1e-9);
};

}  // namespace aimtk
