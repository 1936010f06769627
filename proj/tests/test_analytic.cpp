#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <random>

#include "aimtk/analytic.hpp"
#include "aimtk/errors.hpp"
#include "aimtk/optical4f.hpp"

using namespace aimtk;
using doctest::Approx;

namespace {
const std::string kDataDir = AIMTK_DATA_DIR;
const GammaConstants kG;

NodeScalingTable table() {
  return NodeScalingTable::load(kDataDir + "/node_scaling.csv");
}

EnergyRates rates45() {
  return EnergyRates::for_process(TechProcess{}, kG, 8, 98304);
}
}  // namespace

TEST_CASE("scalar machine efficiency") {
  EfficiencyPoint p = cpu_efficiency(rates45());
  CHECK(tops_per_watt(p.eta) == Approx(0.112).epsilon(0.01));
  CHECK(p.parts.memory == Approx(2.0 * rates45().e_m));
  CHECK(p.parts.mac == Approx(rates45().e_mac));

  // free-memory and free-compute limits
  EnergyRates r = rates45();
  r.e_m = 0.0;
  CHECK(cpu_efficiency(r).eta == Approx(1.0 / r.e_mac));
  r = rates45();
  r.e_mac = 0.0;
  CHECK(cpu_efficiency(r).eta == Approx(1.0 / (2.0 * r.e_m)));
}

TEST_CASE("in-memory compute efficiency") {
  EfficiencyPoint p = digital_im_efficiency(rates45(), 230.2983);
  CHECK(tops_per_watt(p.eta) == Approx(4.0).epsilon(0.02));

  // memory term vanishes at infinite intensity
  CHECK(digital_im_efficiency(rates45(), 1e18).eta ==
        Approx(1.0 / rates45().e_mac).epsilon(1e-6));

  // a = 1/2 reduces to the scalar-machine form
  CHECK(digital_im_efficiency(rates45(), 0.5).eta ==
        Approx(cpu_efficiency(rates45()).eta));

  CHECK_THROWS_AS(digital_im_efficiency(rates45(), 0.0),
                  std::invalid_argument);
}

TEST_CASE("vector-matrix per-op energy") {
  double e1 = 0.25e-12, e2 = 0.5e-12, ea = 0.25e-12;
  // reconfiguration floor survives as dims grow
  CHECK(analog_vm_energy_per_op(e1, e2, ea, 1u << 20, 1u << 20) ==
        Approx(e2).epsilon(1e-5));
  CHECK(analog_vm_energy_per_op(e1, e2, ea, 1, 1) == Approx(e1 + e2 + ea));

  // totals identity: N_op * e_op == 2N e1 + 2MN e2 + 2M ea
  std::mt19937 rng(17);
  std::uniform_int_distribution<std::uint64_t> dim(1, 500);
  for (int i = 0; i < 100; ++i) {
    std::uint64_t n = dim(rng), m = dim(rng);
    double n_op = 2.0 * static_cast<double>(n) * static_cast<double>(m);
    double total = n_op * analog_vm_energy_per_op(e1, e2, ea, n, m);
    double expect = 2.0 * static_cast<double>(n) * e1 +
                    2.0 * static_cast<double>(m) * static_cast<double>(n) * e2 +
                    2.0 * static_cast<double>(m) * ea;
    CHECK(total == Approx(expect).epsilon(1e-12));
  }

  // signedness doubles every term
  CHECK(analog_vm_energy_per_op(e1, e2, ea, 7, 9, true) ==
        Approx(2.0 * analog_vm_energy_per_op(e1, e2, ea, 7, 9, false)));
}

TEST_CASE("matrix-matrix per-op energy") {
  double e1 = 0.83e-12, e2 = 0.5e-12, ea = 0.25e-12;
  // processor larger than the problem: pure problem-size amortization
  CHECK(analog_mm_energy_per_op(e1, e2, ea, 100, 8, 4, 1024, 1024) ==
        Approx(e1 / 4 + e2 / 100 + ea / 8));
  // l = 1 reduces to the vector-matrix form
  CHECK(analog_mm_energy_per_op(e1, e2, ea, 1, 16, 8, 1024, 1024) ==
        Approx(analog_vm_energy_per_op(e1, e2, ea, 16, 8)));

  // non-increasing in every dimension
  std::mt19937 rng(23);
  std::uniform_int_distribution<std::uint64_t> dim(1, 64);
  for (int i = 0; i < 100; ++i) {
    std::uint64_t l = dim(rng), n = dim(rng), m = dim(rng), hn = dim(rng),
                  hm = dim(rng);
    double base = analog_mm_energy_per_op(e1, e2, ea, l, n, m, hn, hm);
    CHECK(analog_mm_energy_per_op(e1, e2, ea, l + 1, n, m, hn, hm) <=
          base + 1e-30);
    CHECK(analog_mm_energy_per_op(e1, e2, ea, l, n + 1, m, hn, hm) <=
          base + 1e-30);
    CHECK(analog_mm_energy_per_op(e1, e2, ea, l, n, m + 1, hn, hm) <=
          base + 1e-30);
    CHECK(analog_mm_energy_per_op(e1, e2, ea, l, n, m, hn + 1, hm) <=
          base + 1e-30);
    CHECK(analog_mm_energy_per_op(e1, e2, ea, l, n, m, hn, hm + 1) <=
          base + 1e-30);
  }
}

TEST_CASE("4F processor dimensions and packing") {
  Optical4FAnalyticSpec spec;
  AnalyticWorkload w = reference_workload();  // n=512, k=3, 128->128
  TechProcess p45;
  EfficiencyPoint p = optical4f_efficiency(spec, w, p45, kG, 8);

  // C' = floor(4194304 / 512^2) = 16 -> N = 9*16*128/144 = 128, M = 576
  double e_adc = adc_energy(p45, kG, 8);
  double e_dac = dac_core_energy(p45, kG, 8);
  CHECK(p.parts.adc == Approx(e_adc / 128.0).epsilon(1e-9));
  CHECK(p.parts.dac_input == Approx(e_dac / 576.0).epsilon(1e-9));
  CHECK(p.parts.dac_weight == Approx(e_dac / 262144.0).epsilon(1e-9));

  // a single channel larger than the aperture is unsupported
  Optical4FAnalyticSpec small = spec;
  small.slm_pixels = 1000;
  AnalyticWorkload big = w;
  big.layer.n = 512;
  CHECK_THROWS_AS(optical4f_efficiency(small, big, p45, kG, 8),
                  UnsupportedWorkloadError);
}

TEST_CASE("4F per-op energy equals the two-phase total") {
  // Independent route: load phase charges n^2 Ci (2 adc + 4 dac) and the
  // compute phase 2 K dac + 2 n^2 Co adc; dividing by N_op must reproduce
  // the closed form (packing unconstrained).
  Optical4FAnalyticSpec spec;
  spec.slm_pixels = 1ull << 40;
  ConvLayerSpec layer{"x", 62, 3, 16, 24, 1};
  AnalyticWorkload w{layer, conv_intensity_native(layer)};
  TechProcess p45;
  EfficiencyPoint p = optical4f_efficiency(spec, w, p45, kG, 8);

  double e_adc = adc_energy(p45, kG, 8);
  double e_dacx = dac_core_energy(p45, kG, 8) +
                  slm_pixel_load_energy(Optical4FConfig{
                      spec.slm_pixels, spec.pitch_um, spec.wavelength_m,
                      spec.optical_efficiency}) +
                  optical_energy_per_pixel(spec.wavelength_m,
                                           spec.optical_efficiency, 8);
  double n2 = 62.0 * 62.0, ci = 16.0, co = 24.0, k2 = 9.0;
  double e_fft = n2 * ci * (2.0 * e_adc + 4.0 * e_dacx);
  double e_conv = 2.0 * k2 * ci * co * e_dacx + 2.0 * n2 * co * e_adc;
  double n_op = 2.0 * n2 * k2 * ci * co;
  double per_op_direct = (e_fft + e_conv) / n_op;
  double per_op_model = p.parts.total() - p.parts.memory;
  CHECK(per_op_model == Approx(per_op_direct).epsilon(1e-12));
}

TEST_CASE("efficiency sweep") {
  NodeScalingTable t = table();
  auto presets = load_presets(kDataDir + "/presets.csv");
  AnalyticWorkload w = reference_workload();
  std::vector<double> nodes{180, 130, 90, 65, 45, 32, 28, 22, 14, 10, 7};

  for (const auto& [name, spec] : presets) {
    auto points = efficiency_sweep(spec, w, t, nodes, kG, 8);
    REQUIRE(points.size() == nodes.size());
    // every point: eta * sum(parts) == 1 within 1e-9
    for (const auto& p : points)
      CHECK(p.eta * p.parts.total() == Approx(1.0).epsilon(1e-9));
    // the 45 nm point equals the direct single evaluation
    EfficiencyPoint direct =
        evaluate_processor(spec, w, t.process_at(45.0), kG, 8);
    CHECK(points[4].eta == Approx(direct.eta));
    // monotone non-decreasing efficiency as the node shrinks
    for (std::size_t i = 1; i < points.size(); ++i)
      CHECK(points[i].eta >= points[i - 1].eta * (1.0 - 1e-12));
  }

  CHECK_THROWS_AS(efficiency_sweep(presets.at("cpu45"), w, t, {}, kG, 8),
                  ConfigError);
  CHECK_THROWS_AS(efficiency_sweep(presets.at("cpu45"), w, t, {3.0}, kG, 8),
                  ConfigError);
}

TEST_CASE("signedness overhead doubles analog terms only") {
  auto presets = load_presets(kDataDir + "/presets.csv");
  AnalogPlanarSpec on = std::get<AnalogPlanarSpec>(presets.at("photonic40"));
  AnalogPlanarSpec off = on;
  off.signed_overhead = false;
  AnalyticWorkload w = reference_workload();
  TechProcess p45;
  EfficiencyPoint a = evaluate_processor(on, w, p45, kG, 8);
  EfficiencyPoint b = evaluate_processor(off, w, p45, kG, 8);
  CHECK(a.parts.dac_input == Approx(2.0 * b.parts.dac_input));
  CHECK(a.parts.dac_weight == Approx(2.0 * b.parts.dac_weight));
  CHECK(a.parts.adc == Approx(2.0 * b.parts.adc));
  CHECK(a.parts.load == Approx(2.0 * b.parts.load));
  CHECK(a.parts.laser == Approx(2.0 * b.parts.laser));
  CHECK(a.parts.memory == Approx(b.parts.memory));  // digital side untouched
}

TEST_CASE("preset bank partitioning must divide evenly") {
  namespace fs = std::filesystem;
  fs::path dir = fs::temp_directory_path() / "aimtk_presets";
  fs::create_directories(dir);
  {
    std::ofstream f(dir / "bad.csv");
    f << "preset,key,value\nx,arch,digital_im\nx,sram_total_bytes,100\n"
         "x,sram_banks,7\n";
  }
  CHECK_THROWS_AS(load_presets((dir / "bad.csv").string()), ConfigError);
  fs::remove_all(dir);
}

TEST_CASE("preset file") {
  auto presets = load_presets(kDataDir + "/presets.csv");
  CHECK(presets.count("cpu45"));
  CHECK(presets.count("tpu-like"));
  CHECK(presets.count("photonic40"));
  CHECK(presets.count("photonic40-current"));
  CHECK(presets.count("reram256"));
  CHECK(presets.count("optical4f-4mpx"));
  CHECK(processor_kind(presets.at("tpu-like")) == "digital_im");
  CHECK(std::get<DigitalImSpec>(presets.at("tpu-like")).bank_bytes() == 98304);
  CHECK(std::get<Optical4FAnalyticSpec>(presets.at("optical4f-4mpx"))
            .bank_bytes() == 12288);
  // the current-technology modulator preset is heavier
  CHECK(std::get<AnalogPlanarSpec>(presets.at("photonic40-current")).e_dac2 >
        std::get<AnalogPlanarSpec>(presets.at("photonic40")).e_dac2);
}

TEST_CASE("network-aggregated analytic evaluation") {
  auto presets = load_presets(kDataDir + "/presets.csv");
  NetworkSpec net =
      NetworkSpec::load_csv(kDataDir + "/networks/yolov3.csv");
  TechProcess p45;
  EfficiencyPoint p = evaluate_network(presets.at("tpu-like"), net,
                                       IntensityKind::kIm2col, p45, kG, 8);
  CHECK(p.eta * p.parts.total() == Approx(1.0).epsilon(1e-9));
  // sits between the per-layer extremes
  double lo = 1e300, hi = 0;
  for (const auto& l : net.layers) {
    AnalyticWorkload w{l, conv_intensity_im2col(l)};
    double eta = evaluate_processor(presets.at("tpu-like"), w, p45, kG, 8).eta;
    lo = std::min(lo, eta);
    hi = std::max(hi, eta);
  }
  CHECK(p.eta >= lo);
  CHECK(p.eta <= hi);
}
