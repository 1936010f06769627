// CNN layer descriptions, file ingestion, operation/access counts and the
// convolution-as-matmul dimension mapping used by all downstream models.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace aimtk {

struct ConvLayerSpec {
  std::string name;
  std::uint64_t n = 1;      // input spatial side (pixels)
  std::uint64_t k = 1;      // kernel side
  std::uint64_t c_in = 1;   // input channels
  std::uint64_t c_out = 1;  // output channels
  std::uint64_t stride = 1;

  // Valid-convolution output side: floor((n - k) / stride) + 1.
  std::uint64_t output_side() const { return (n - k) / stride + 1; }
  std::uint64_t macs() const {
    std::uint64_t m = output_side();
    return m * m * k * k * c_in * c_out;
  }
  std::uint64_t ops() const { return 2 * macs(); }

  void validate() const;  // throws std::invalid_argument
};

// Matrix dimensions of the lowered convolution: an l x n_dim activation
// matrix times an n_dim x m weight matrix (weight-stationary mapping).
struct MatmulDims {
  std::uint64_t l = 1;      // output pixels m_out^2
  std::uint64_t n_dim = 1;  // k^2 * c_in
  std::uint64_t m = 1;      // c_out
};

struct NetworkSpec {
  std::string name;
  std::vector<ConvLayerSpec> layers;

  // Reads a `name,n,k,c_in,c_out,stride` CSV ('#' comments allowed).
  // Throws ParseError on malformed rows or an empty file.
  static NetworkSpec load_csv(const std::string& path);
};

enum class IntensityKind { kIm2col, kNative };

// Arithmetic intensity of an L x N times N x M matrix multiplication:
//   a = 2 N M L / (L N + N M + L M)
double matmul_intensity(std::uint64_t l, std::uint64_t n_dim, std::uint64_t m);

// Intensity when the convolution is lowered to matmul via a Toeplitz
// (im2col) rearrangement, which replicates activations k^2 times:
//   a = 2 n^2 k^2 Ci Co / (n^2 k^2 Ci + k^2 Ci Co + n^2 Co)
// For strided layers the output pixel count m_out^2 replaces n^2.
double conv_intensity_im2col(const ConvLayerSpec& layer);

// Intensity of a processor that reads only the unduplicated activations:
//   a = 2 n^2 k^2 Ci Co / (n^2 (Ci + Co) + k^2 Ci Co)
double conv_intensity_native(const ConvLayerSpec& layer);

double conv_intensity(const ConvLayerSpec& layer, IntensityKind kind);

// (m_out^2, k^2 c_in, c_out), exact in the output size.
MatmulDims to_matmul_dims(const ConvLayerSpec& layer);

// Per-layer derived quantities reported by the stats command.
struct LayerStats {
  std::string name;
  std::uint64_t n, k, c_in, c_out, stride;
  std::uint64_t m_out;
  std::uint64_t l_prime, n_prime, m_prime;  // matmul mapping
  std::uint64_t n_op;                       // 2 * macs
  std::uint64_t weights;                    // K = k^2 Ci Co
  std::uint64_t input_size;                 // N_i = n^2 Ci
  double n_m_im2col, n_m_native;            // access counts behind each a
  double a_im2col, a_native;
  // Fourier-plane processor dimensions in the unbounded-aperture limit:
  // L = n^2, N = k^2 Co, M = k^2 Co / 2.
  double l_4f, n_4f_inf, m_4f_inf;
};

struct WorkloadStats {
  std::vector<LayerStats> per_layer;
  LayerStats median;  // per-column lower median (even counts take the
                      // smaller middle value, so medians are realized)
  LayerStats min, max;
  struct Mean {  // means are fractional, kept separately
    double n, k, c_in, c_out, m_out, a_im2col, a_native;
  } mean;
};

// Throws std::invalid_argument on an empty network.
WorkloadStats workload_stats(const NetworkSpec& net);

}  // namespace aimtk
