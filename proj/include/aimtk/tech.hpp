// CMOS technology-node description and the node-to-node energy scaling
// table. Scaling factors are relative to the 45 nm / 0.9 V reference;
// wire-load and laser energies are exempt (they are not process-bound).
#pragma once

#include <cmath>
#include <string>
#include <vector>

#include "aimtk/constants.hpp"

namespace aimtk {

struct TechProcess {
  double node_nm = constants::kBaselineNodeNm;
  double supply_v = constants::kBaselineSupplyV;
  double temperature_k = constants::kDefaultTemperatureK;
  double energy_scale = 1.0;  // multiplier vs. the 45 nm baseline

  void validate() const;
};

// Dimensionless prefactors relating each operation's energy to its
// thermodynamic floor (kT per gate-ish). gamma_mac must exceed ln 2, the
// Landauer bound for irreversible logic.
struct GammaConstants {
  double gamma_m = 3.0e6;
  double gamma_mac = 1.225e5;
  double gamma_adc = 927.0;  // 45 nm state of the art; survey-table value 583
  double gamma_dac = 39.0;
  double gamma_opt = 39.0;   // 1550 nm light at 80% optical efficiency

  void validate() const;
};

// node_nm -> (nominal supply, energy scale) lookup with geometric
// interpolation between rows. Loaded from a node_nm,voltage_v,energy_scale
// CSV; the shipped table covers 180 nm down to 7 nm, is pinned to exactly
// 1.0 at 45 nm, and is strictly monotone in node size.
class NodeScalingTable {
 public:
  struct Row {
    double node_nm;
    double voltage_v;
    double energy_scale;
  };

  static NodeScalingTable load(const std::string& path);

  // Energy scale at `node_nm`; exact at table rows, geometric (log-log)
  // interpolation in between. Throws ConfigError outside the table range.
  double scale_at(double node_nm) const;

  // Full process description at a node (temperature defaulted to 300 K).
  TechProcess process_at(double node_nm,
                         double temperature_k =
                             constants::kDefaultTemperatureK) const;

  const std::vector<Row>& rows() const { return rows_; }
  double min_node() const { return rows_.front().node_nm; }
  double max_node() const { return rows_.back().node_nm; }

 private:
  std::vector<Row> rows_;  // ascending node_nm
  void validate(const std::string& path) const;
};

// Applies process scaling to an energy quoted at 45 nm. Wire-load and
// laser energies pass through unchanged.
double scale_to_node(double energy_45nm, const TechProcess& proc,
                     bool is_load_or_laser);

}  // namespace aimtk
