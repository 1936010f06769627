// Physical constants (2019 SI exact values where applicable) and the
// 45 nm / 0.9 V reference point all process-dependent energies are
// anchored to.
#pragma once

namespace aimtk::constants {

inline constexpr double kBoltzmann = 1.380649e-23;        // J/K
inline constexpr double kPlanck = 6.62607015e-34;         // J*s
inline constexpr double kHbar = 1.054571817e-34;          // J*s
inline constexpr double kLightSpeed = 299792458.0;        // m/s
inline constexpr double kElectronCharge = 1.602176634e-19;  // C

// Quantum of conductance G0 = 2 e^2 / h, the smallest conductance at which
// a memristive element is still well behaved.
inline constexpr double kQuantumConductance =
    2.0 * kElectronCharge * kElectronCharge / kPlanck;  // S

// Reference CMOS operating point. Energy-per-operation constants below are
// quoted at this point (cf. Horowitz, ISSCC 2014) and rescaled elsewhere.
inline constexpr double kBaselineNodeNm = 45.0;
inline constexpr double kBaselineSupplyV = 0.9;
inline constexpr double kDefaultTemperatureK = 300.0;

// Typical capacitance per unit length of an on-chip copper trace.
inline constexpr double kTraceCapFaradPerUm = 0.2e-15;  // F/um

// SRAM access energy anchor: 1.25 pJ/byte for an 8 KiB bank at 45 nm.
// Larger banks scale as sqrt(bank size) with the bit/word line length.
inline constexpr double kSramAnchorEnergyPerByte = 1.25e-12;  // J/byte
inline constexpr double kSramAnchorBankBytes = 8192.0;

}  // namespace aimtk::constants
