#include "aimtk/workload.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "aimtk/csvio.hpp"
#include "aimtk/errors.hpp"

namespace aimtk {

void ConvLayerSpec::validate() const {
  if (name.empty()) throw std::invalid_argument("layer name empty");
  if (k < 1 || k > n)
    throw std::invalid_argument("layer " + name + ": need 1 <= k <= n");
  if (c_in < 1 || c_out < 1)
    throw std::invalid_argument("layer " + name + ": channels must be >= 1");
  if (stride < 1)
    throw std::invalid_argument("layer " + name + ": stride must be >= 1");
}

NetworkSpec NetworkSpec::load_csv(const std::string& path) {
  io::CsvFile f = io::read_csv(path);
  const std::vector<std::string> expect{"name", "n", "k",
                                        "c_in", "c_out", "stride"};
  if (f.header != expect)
    throw ParseError(path, 1, "expected header name,n,k,c_in,c_out,stride");
  NetworkSpec net;
  // strip directory and extension for the network name
  std::size_t slash = path.find_last_of("/\\");
  std::string base = slash == std::string::npos ? path : path.substr(slash + 1);
  std::size_t dot = base.find_last_of('.');
  net.name = dot == std::string::npos ? base : base.substr(0, dot);
  for (const auto& r : f.rows) {
    if (r.fields.size() != 6)
      throw ParseError(path, r.line, "expected 6 fields");
    ConvLayerSpec layer;
    layer.name = r.fields[0];
    layer.n = io::csv_u64(f, r, 1);
    layer.k = io::csv_u64(f, r, 2);
    layer.c_in = io::csv_u64(f, r, 3);
    layer.c_out = io::csv_u64(f, r, 4);
    layer.stride = io::csv_u64(f, r, 5);
    try {
      layer.validate();
    } catch (const std::invalid_argument& e) {
      throw ParseError(path, r.line, e.what());
    }
    net.layers.push_back(layer);
  }
  if (net.layers.empty()) throw ParseError(path, 0, "network file has no layers");
  return net;
}

double matmul_intensity(std::uint64_t l, std::uint64_t n_dim,
                        std::uint64_t m) {
  if (l < 1 || n_dim < 1 || m < 1)
    throw std::invalid_argument("matmul dims must be >= 1");
  double L = static_cast<double>(l), N = static_cast<double>(n_dim),
         M = static_cast<double>(m);
  return 2.0 * N * M * L / (L * N + N * M + L * M);
}

namespace {
// Output-pixel count standing in for n^2: the formulas assume stride 1
// (output the same size as input); strided layers substitute m_out^2.
double spatial_term(const ConvLayerSpec& layer) {
  if (layer.stride == 1) return static_cast<double>(layer.n * layer.n);
  std::uint64_t m = layer.output_side();
  return static_cast<double>(m * m);
}
}  // namespace

double conv_intensity_im2col(const ConvLayerSpec& layer) {
  layer.validate();
  double n2 = spatial_term(layer);
  double k2 = static_cast<double>(layer.k * layer.k);
  double ci = static_cast<double>(layer.c_in);
  double co = static_cast<double>(layer.c_out);
  double ops = 2.0 * n2 * k2 * ci * co;
  double accesses = n2 * k2 * ci + k2 * ci * co + n2 * co;
  return ops / accesses;
}

double conv_intensity_native(const ConvLayerSpec& layer) {
  layer.validate();
  double n2 = spatial_term(layer);
  double k2 = static_cast<double>(layer.k * layer.k);
  double ci = static_cast<double>(layer.c_in);
  double co = static_cast<double>(layer.c_out);
  double ops = 2.0 * n2 * k2 * ci * co;
  double accesses = n2 * (ci + co) + k2 * ci * co;
  return ops / accesses;
}

double conv_intensity(const ConvLayerSpec& layer, IntensityKind kind) {
  return kind == IntensityKind::kIm2col ? conv_intensity_im2col(layer)
                                        : conv_intensity_native(layer);
}

MatmulDims to_matmul_dims(const ConvLayerSpec& layer) {
  layer.validate();
  std::uint64_t m_out = layer.output_side();
  return MatmulDims{m_out * m_out, layer.k * layer.k * layer.c_in,
                    layer.c_out};
}

namespace {
LayerStats layer_stats(const ConvLayerSpec& layer) {
  LayerStats s;
  s.name = layer.name;
  s.n = layer.n;
  s.k = layer.k;
  s.c_in = layer.c_in;
  s.c_out = layer.c_out;
  s.stride = layer.stride;
  s.m_out = layer.output_side();
  MatmulDims d = to_matmul_dims(layer);
  s.l_prime = d.l;
  s.n_prime = d.n_dim;
  s.m_prime = d.m;
  s.n_op = layer.ops();
  s.weights = layer.k * layer.k * layer.c_in * layer.c_out;
  s.input_size = layer.n * layer.n * layer.c_in;
  double n2 = spatial_term(layer);
  double k2 = static_cast<double>(layer.k * layer.k);
  double ci = static_cast<double>(layer.c_in);
  double co = static_cast<double>(layer.c_out);
  s.n_m_im2col = n2 * k2 * ci + k2 * ci * co + n2 * co;
  s.n_m_native = n2 * (ci + co) + k2 * ci * co;
  s.a_im2col = conv_intensity_im2col(layer);
  s.a_native = conv_intensity_native(layer);
  s.l_4f = static_cast<double>(layer.n * layer.n);
  s.n_4f_inf = k2 * co;
  s.m_4f_inf = k2 * co / 2.0;
  return s;
}

template <typename T, typename F>
T column_median(const std::vector<LayerStats>& v, F get) {
  std::vector<T> col;
  col.reserve(v.size());
  for (const auto& s : v) col.push_back(get(s));
  std::sort(col.begin(), col.end());
  return col[(col.size() - 1) / 2];  // lower median
}
}  // namespace

WorkloadStats workload_stats(const NetworkSpec& net) {
  if (net.layers.empty()) throw std::invalid_argument("empty network");
  WorkloadStats ws;
  ws.per_layer.reserve(net.layers.size());
  for (const auto& l : net.layers) ws.per_layer.push_back(layer_stats(l));

  auto med_u = [&](auto get) {
    return column_median<std::uint64_t>(ws.per_layer, get);
  };
  auto med_d = [&](auto get) {
    return column_median<double>(ws.per_layer, get);
  };

  LayerStats& m = ws.median;
  m.name = "median";
  m.n = med_u([](const LayerStats& s) { return s.n; });
  m.k = med_u([](const LayerStats& s) { return s.k; });
  m.c_in = med_u([](const LayerStats& s) { return s.c_in; });
  m.c_out = med_u([](const LayerStats& s) { return s.c_out; });
  m.stride = med_u([](const LayerStats& s) { return s.stride; });
  m.m_out = med_u([](const LayerStats& s) { return s.m_out; });
  m.l_prime = med_u([](const LayerStats& s) { return s.l_prime; });
  m.n_prime = med_u([](const LayerStats& s) { return s.n_prime; });
  m.m_prime = med_u([](const LayerStats& s) { return s.m_prime; });
  m.n_op = med_u([](const LayerStats& s) { return s.n_op; });
  m.weights = med_u([](const LayerStats& s) { return s.weights; });
  m.input_size = med_u([](const LayerStats& s) { return s.input_size; });
  m.n_m_im2col = med_d([](const LayerStats& s) { return s.n_m_im2col; });
  m.n_m_native = med_d([](const LayerStats& s) { return s.n_m_native; });
  m.a_im2col = med_d([](const LayerStats& s) { return s.a_im2col; });
  m.a_native = med_d([](const LayerStats& s) { return s.a_native; });
  m.l_4f = med_d([](const LayerStats& s) { return s.l_4f; });
  m.n_4f_inf = med_d([](const LayerStats& s) { return s.n_4f_inf; });
  m.m_4f_inf = med_d([](const LayerStats& s) { return s.m_4f_inf; });

  ws.min = ws.per_layer.front();
  ws.max = ws.per_layer.front();
  ws.min.name = "min";
  ws.max.name = "max";
  double sum_n = 0, sum_k = 0, sum_ci = 0, sum_co = 0, sum_m = 0, sum_a8 = 0,
         sum_a9 = 0;
  for (const auto& s : ws.per_layer) {
    auto low = [](auto& dst, auto v) { if (v < dst) dst = v; };
    auto high = [](auto& dst, auto v) { if (v > dst) dst = v; };
    low(ws.min.n, s.n); high(ws.max.n, s.n);
    low(ws.min.k, s.k); high(ws.max.k, s.k);
    low(ws.min.c_in, s.c_in); high(ws.max.c_in, s.c_in);
    low(ws.min.c_out, s.c_out); high(ws.max.c_out, s.c_out);
    low(ws.min.stride, s.stride); high(ws.max.stride, s.stride);
    low(ws.min.m_out, s.m_out); high(ws.max.m_out, s.m_out);
    low(ws.min.l_prime, s.l_prime); high(ws.max.l_prime, s.l_prime);
    low(ws.min.n_prime, s.n_prime); high(ws.max.n_prime, s.n_prime);
    low(ws.min.m_prime, s.m_prime); high(ws.max.m_prime, s.m_prime);
    low(ws.min.n_op, s.n_op); high(ws.max.n_op, s.n_op);
    low(ws.min.weights, s.weights); high(ws.max.weights, s.weights);
    low(ws.min.input_size, s.input_size); high(ws.max.input_size, s.input_size);
    low(ws.min.n_m_im2col, s.n_m_im2col); high(ws.max.n_m_im2col, s.n_m_im2col);
    low(ws.min.n_m_native, s.n_m_native); high(ws.max.n_m_native, s.n_m_native);
    low(ws.min.a_im2col, s.a_im2col); high(ws.max.a_im2col, s.a_im2col);
    low(ws.min.a_native, s.a_native); high(ws.max.a_native, s.a_native);
    low(ws.min.l_4f, s.l_4f); high(ws.max.l_4f, s.l_4f);
    low(ws.min.n_4f_inf, s.n_4f_inf); high(ws.max.n_4f_inf, s.n_4f_inf);
    low(ws.min.m_4f_inf, s.m_4f_inf); high(ws.max.m_4f_inf, s.m_4f_inf);
    sum_n += static_cast<double>(s.n);
    sum_k += static_cast<double>(s.k);
    sum_ci += static_cast<double>(s.c_in);
    sum_co += static_cast<double>(s.c_out);
    sum_m += static_cast<double>(s.m_out);
    sum_a8 += s.a_im2col;
    sum_a9 += s.a_native;
  }
  double cnt = static_cast<double>(ws.per_layer.size());
  ws.mean = {sum_n / cnt, sum_k / cnt, sum_ci / cnt, sum_co / cnt,
             sum_m / cnt, sum_a8 / cnt, sum_a9 / cnt};
  return ws;
}

}  // namespace aimtk
