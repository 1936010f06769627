#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "aimtk/errors.hpp"
#include "aimtk/optical4f.hpp"
#include "oracle_optical4f.hpp"

using namespace aimtk;
using doctest::Approx;

namespace {
const GammaConstants kG;
TechProcess p45;

ConvLayerSpec layer(std::uint64_t n, std::uint64_t k, std::uint64_t ci,
                    std::uint64_t co, std::uint64_t stride = 1) {
  return ConvLayerSpec{"l", n, k, ci, co, stride};
}

void check_against_oracle(const Optical4FConfig& cfg,
                          const ConvLayerSpec& l) {
  Optical4FTrace t = simulate_layer(cfg, l, p45, kG);
  oracle::Optical4FCounts o = oracle::optical4f_oracle(cfg, l);
  CHECK(t.flash_count == o.flashes);
  CHECK(t.dac_events == o.dac_events);
  CHECK(t.adc_events == o.adc_events);
  CHECK(t.sram_read_bytes == o.sram_read_bytes);
  CHECK(t.sram_write_bytes == o.sram_write_bytes);
  CHECK(t.partial_sum_bytes == o.partial_bytes);
  CHECK(t.laser_pixel_events == o.laser_pixels);
}
}  // namespace

TEST_CASE("channel packing plan") {
  Optical4FConfig cfg;  // 4 Mpx
  Optical4FPlan p = plan_layer(cfg, layer(512, 3, 128, 128));
  CHECK(p.c_prime == 16);
  CHECK(p.groups == 8);
  CHECK(p.flashes == 8 * 129);

  // everything fits: one group
  p = plan_layer(cfg, layer(62, 3, 256, 512));
  CHECK(p.groups == 1);
  CHECK(p.flashes == 1 + 512);

  // image exactly fills the aperture
  cfg.slm_pixels = 36;
  p = plan_layer(cfg, layer(6, 3, 5, 2));
  CHECK(p.c_prime == 1);
  CHECK(p.groups == 5);

  cfg.slm_pixels = 16;
  CHECK_THROWS_AS(plan_layer(cfg, layer(6, 3, 1, 1)),
                  UnsupportedWorkloadError);
  try {
    plan_layer(cfg, layer(6, 3, 1, 1));
  } catch (const UnsupportedWorkloadError& e) {
    CHECK(std::string(e.what()).find("l") != std::string::npos);
    CHECK(std::string(e.what()).find("36") != std::string::npos);
  }
}

TEST_CASE("flash count invariant") {
  std::mt19937 rng(19);
  std::uniform_int_distribution<std::uint64_t> nd(2, 6), kd(1, 3), cd(1, 9);
  for (int i = 0; i < 200; ++i) {
    Optical4FConfig cfg;
    cfg.slm_pixels = (i % 2) ? 36 : 144;
    std::uint64_t n = nd(rng), k = std::min(kd(rng), n);
    ConvLayerSpec l = layer(n, k, cd(rng), cd(rng));
    Optical4FPlan p = plan_layer(cfg, l);
    std::uint64_t groups = (l.c_in + p.c_prime - 1) / p.c_prime;
    CHECK(p.flashes == groups * (1 + l.c_out));
    Optical4FTrace t = simulate_layer(cfg, l, p45, kG);
    CHECK(t.flash_count == p.flashes);
    CHECK(t.laser_pixel_events == t.flash_count * cfg.slm_pixels);
  }
}

TEST_CASE("hand-enumerable two-flash schedule") {
  Optical4FConfig cfg;
  cfg.slm_pixels = 16;
  ConvLayerSpec l = layer(4, 2, 1, 1);
  Optical4FTrace t = simulate_layer(cfg, l, p45, kG);
  CHECK(t.flash_count == 2);  // one load, one compute
  // load: 16 px * (3 dac + 2 adc); compute: 4 kernel px * 2 dac, 9 out * 2 adc
  CHECK(t.dac_events == 16 * 3 + 4 * 2);
  CHECK(t.adc_events == 16 * 2 + 9 * 2);
  CHECK(t.sram_read_bytes == 16 + 4);
  CHECK(t.sram_write_bytes == 9);
  CHECK(t.partial_sum_bytes == 0);
  CHECK(t.laser_pixel_events == 2 * 16);
  CHECK(t.energy.ops == 2 * 9 * 4);
}

TEST_CASE("randomized oracle equivalence") {
  std::mt19937 rng(31);
  std::uniform_int_distribution<std::uint64_t> nd(2, 6), kd(1, 3), cd(1, 4),
      sd(1, 2);
  for (int i = 0; i < 400; ++i) {
    Optical4FConfig cfg;
    cfg.slm_pixels = (i % 2) ? 36 : 144;
    if (i % 3 == 0) cfg.dac_events_fft_per_pixel = 4;
    if (i % 5 == 0) cfg.acc_bytes = 2;
    if (i % 7 == 0) cfg.laser_full_aperture = false;
    std::uint64_t n = nd(rng), k = std::min(kd(rng), n);
    check_against_oracle(cfg, layer(n, k, cd(rng), cd(rng), sd(rng)));
  }
}

TEST_CASE("operations credited are grouping independent") {
  ConvLayerSpec l = layer(6, 3, 7, 5);
  for (std::uint64_t px : {36ull, 144ull, 1ull << 30}) {
    Optical4FConfig cfg;
    cfg.slm_pixels = px;
    Optical4FTrace t = simulate_layer(cfg, l, p45, kG);
    CHECK(t.energy.ops == l.ops());
  }
}

TEST_CASE("laser energy is linear in flashes and node independent") {
  Optical4FConfig cfg;
  cfg.slm_pixels = 144;
  ConvLayerSpec l = layer(6, 3, 2, 5);
  Optical4FTrace t = simulate_layer(cfg, l, p45, kG);
  double e_opt = optical_energy_per_pixel(cfg.wavelength_m,
                                          cfg.optical_efficiency, cfg.bits);
  CHECK(t.energy.laser ==
        Approx(static_cast<double>(t.flash_count) * 144.0 * e_opt));

  NodeScalingTable nt =
      NodeScalingTable::load(std::string(AIMTK_DATA_DIR) + "/node_scaling.csv");
  Optical4FTrace t7 = simulate_layer(cfg, l, nt.process_at(7), kG);
  CHECK(t7.energy.laser == Approx(t.energy.laser));
  CHECK(t7.energy.dac == Approx(t.energy.dac));  // converter + line load flat
  double s = nt.scale_at(7);
  CHECK(t7.energy.adc == Approx(t.energy.adc * s));
  CHECK(t7.energy.sram == Approx(t.energy.sram * s));
}

TEST_CASE("doubling the aperture") {
  // non-laser energy never increases; partial-sum traffic strictly drops
  // whenever the layer needed more than one group
  std::mt19937 rng(53);
  std::uniform_int_distribution<std::uint64_t> nd(2, 6), kd(1, 3), cd(1, 8);
  for (int i = 0; i < 200; ++i) {
    std::uint64_t n = nd(rng), k = std::min(kd(rng), n);
    ConvLayerSpec l = layer(n, k, cd(rng), cd(rng));
    Optical4FConfig small;
    small.slm_pixels = 36;
    Optical4FConfig big = small;
    big.slm_pixels = 72;
    Optical4FTrace a = simulate_layer(small, l, p45, kG);
    Optical4FTrace b = simulate_layer(big, l, p45, kG);
    double a_nonlaser = a.energy.total() - a.energy.laser;
    double b_nonlaser = b.energy.total() - b.energy.laser;
    CHECK(b_nonlaser <= a_nonlaser * (1.0 + 1e-12));
    if (plan_layer(small, l).groups > 1)
      CHECK(b.partial_sum_bytes < a.partial_sum_bytes);

    // with active-pixel laser accounting the full total is monotone
    small.laser_full_aperture = false;
    big.laser_full_aperture = false;
    Optical4FTrace a2 = simulate_layer(small, l, p45, kG);
    Optical4FTrace b2 = simulate_layer(big, l, p45, kG);
    CHECK(b2.energy.total() <= a2.energy.total() * (1.0 + 1e-12));
  }
}

TEST_CASE("single-group trace reproduces the closed-form converter energy") {
  // k = 1 keeps the output plane the size of the input, making the per-op
  // converter cost of the trace exactly the closed form (4-DAC variant).
  Optical4FConfig cfg;
  cfg.slm_pixels = 1ull << 32;
  cfg.dac_events_fft_per_pixel = 4;
  ConvLayerSpec l = layer(6, 1, 3, 5);
  Optical4FTrace t = simulate_layer(cfg, l, p45, kG);

  double n2 = 36, ci = 3, co = 5;
  double e_dacx = dac_core_energy(p45, kG, cfg.bits) +
                  slm_pixel_load_energy(cfg);
  double e_adc = adc_energy(p45, kG, cfg.bits);
  double n_op = 2.0 * n2 * ci * co;
  double direct =
      (n2 * ci * (2.0 * e_adc + 4.0 * e_dacx) +
       2.0 * ci * co * e_dacx + 2.0 * n2 * co * e_adc) /
      n_op;
  double model = (t.energy.dac + t.energy.adc) / static_cast<double>(t.energy.ops);
  CHECK(model == Approx(direct).epsilon(1e-12));
}

TEST_CASE("bank energy at the default partitioning") {
  Optical4FConfig cfg;
  CHECK(cfg.bank_bytes() == 12288);
  double e = sram_energy_per_byte(sram_anchor_e_m0(), cfg.bank_bytes());
  CHECK(e > 1.5e-12);
  CHECK(e < 1.56e-12);
}

TEST_CASE("network totals and per-source distribution") {
  NetworkSpec net;
  net.name = "two";
  net.layers = {layer(6, 3, 2, 4), layer(4, 1, 4, 3)};
  Optical4FConfig cfg;
  cfg.slm_pixels = 144;
  Optical4FNetworkResult r = simulate_network(cfg, net, p45, kG);
  EnergyTally manual;
  for (const auto& l : net.layers)
    manual += simulate_layer(cfg, l, p45, kG).energy;
  CHECK(r.total.total() == Approx(manual.total()));
  double macs = static_cast<double>(manual.ops) / 2.0;
  CHECK(r.pj_per_mac_laser == Approx(manual.laser / macs * 1e12));
  CHECK(r.pj_per_mac_dac + r.pj_per_mac_adc + r.pj_per_mac_sram +
            r.pj_per_mac_laser ==
        Approx(manual.total() / macs * 1e12));
}
