#include "aimtk/tech.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "aimtk/csvio.hpp"
#include "aimtk/errors.hpp"

namespace aimtk {

void TechProcess::validate() const {
  if (node_nm <= 0 || supply_v <= 0 || temperature_k <= 0 || energy_scale <= 0)
    throw std::invalid_argument("TechProcess fields must be positive");
}

void GammaConstants::validate() const {
  if (gamma_m <= 0 || gamma_mac <= 0 || gamma_adc <= 0 || gamma_dac <= 0 ||
      gamma_opt <= 0)
    throw std::invalid_argument("gamma constants must be positive");
  if (gamma_mac <= std::log(2.0))
    throw std::invalid_argument(
        "gamma_mac at or below the Landauer bound ln(2)");
}

NodeScalingTable NodeScalingTable::load(const std::string& path) {
  io::CsvFile f = io::read_csv(path);
  if (f.header != std::vector<std::string>{"node_nm", "voltage_v",
                                           "energy_scale"})
    throw ParseError(path, 1,
                     "expected header node_nm,voltage_v,energy_scale");
  NodeScalingTable t;
  for (const auto& r : f.rows) {
    if (r.fields.size() != 3)
      throw ParseError(path, r.line, "expected 3 fields");
    t.rows_.push_back({io::csv_double(f, r, 0), io::csv_double(f, r, 1),
                       io::csv_double(f, r, 2)});
  }
  std::sort(t.rows_.begin(), t.rows_.end(),
            [](const Row& a, const Row& b) { return a.node_nm < b.node_nm; });
  t.validate(path);
  return t;
}

void NodeScalingTable::validate(const std::string& path) const {
  if (rows_.size() < 2) throw ParseError(path, 0, "scaling table too short");
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    const Row& r = rows_[i];
    if (r.node_nm <= 0 || r.voltage_v <= 0 || r.energy_scale <= 0)
      throw ParseError(path, 0, "scaling table values must be positive");
    if (i > 0 && rows_[i - 1].energy_scale >= r.energy_scale)
      throw ParseError(path, 0,
                       "energy_scale must increase strictly with node size");
  }
  bool has_baseline = false;
  for (const Row& r : rows_)
    if (r.node_nm == constants::kBaselineNodeNm && r.energy_scale == 1.0)
      has_baseline = true;
  if (!has_baseline)
    throw ParseError(path, 0, "scaling table must pin 45 nm to scale 1.0");
}

double NodeScalingTable::scale_at(double node_nm) const {
  if (node_nm < min_node() || node_nm > max_node())
    throw ConfigError("node " + std::to_string(node_nm) +
                      " nm outside scaling table range [" +
                      std::to_string(min_node()) + ", " +
                      std::to_string(max_node()) + "]");
  for (const Row& r : rows_)
    if (r.node_nm == node_nm) return r.energy_scale;
  auto hi = std::upper_bound(
      rows_.begin(), rows_.end(), node_nm,
      [](double v, const Row& r) { return v < r.node_nm; });
  auto lo = hi - 1;
  // Geometric interpolation: linear in log(scale) vs log(node).
  double t = (std::log(node_nm) - std::log(lo->node_nm)) /
             (std::log(hi->node_nm) - std::log(lo->node_nm));
  return std::exp((1.0 - t) * std::log(lo->energy_scale) +
                  t * std::log(hi->energy_scale));
}

TechProcess NodeScalingTable::process_at(double node_nm,
                                         double temperature_k) const {
  double scale = scale_at(node_nm);
  double volts = constants::kBaselineSupplyV;
  for (const Row& r : rows_)
    if (r.node_nm == node_nm) volts = r.voltage_v;
  TechProcess p{node_nm, volts, temperature_k, scale};
  p.validate();
  return p;
}

double scale_to_node(double energy_45nm, const TechProcess& proc,
                     bool is_load_or_laser) {
  if (energy_45nm < 0)
    throw std::invalid_argument("energy must be non-negative");
  return is_load_or_laser ? energy_45nm : energy_45nm * proc.energy_scale;
}

}  // namespace aimtk
