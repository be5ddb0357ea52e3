// Benchmark harness: synthetic phantoms with ground truth, additive
// Gaussian noise at percentage levels, permutation-optimal label alignment,
// segmentation accuracy, and method-comparison sweeps.
#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "fuzzyseg/isfcm.hpp"

namespace fuzzyseg {

struct InvalidLayoutError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct TooManyClustersError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DimensionMismatchError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class PhantomLayout { kHalves, kStripes, kDisks };

/// Accepts "halves", "stripes", "disks"; throws InvalidLayoutError otherwise.
PhantomLayout parse_layout(std::string_view name);

/// Piecewise-constant test image with exact ground-truth labels.
struct Phantom {
  GrayImage image;
  LabelMap truth;
  std::vector<std::uint8_t> region_intensities;
};

/// halves: left/right vertical split (exactly 2 intensities).
/// stripes: equal vertical bands, one per intensity.
/// disks: intensities[0] background with one disk per remaining intensity.
Phantom make_phantom(int width, int height, PhantomLayout layout,
                     const std::vector<int>& intensities);

struct NoiseSpec {
  double percent = 0.0;  // sigma = percent / 100 * 255 intensity units
  std::uint64_t seed = 0;
};

/// out = clamp(round(in + e), 0, 255) with e i.i.d. zero-mean Gaussian.
/// Bit-reproducible for a given seed.
GrayImage add_gaussian_noise(const GrayImage& img, const NoiseSpec& spec);

/// Relabels pred by the cluster permutation maximizing agreement with truth
/// (exhaustive search, so clusters <= 8). Ties pick the lexicographically
/// smallest permutation.
LabelMap align_labels(const LabelMap& pred, const LabelMap& truth, int clusters);

/// Percentage of pixels whose labels match, in [0, 100].
double segmentation_accuracy(const LabelMap& pred, const LabelMap& truth);

enum class Method { kFcm, kIsfcm };

std::string_view method_name(Method method);
Method parse_method(std::string_view name);

struct SweepRow {
  Method method = Method::kFcm;
  double noise_percent = 0.0;
  std::uint64_t seed = 0;
  double accuracy = 0.0;  // NaN when the row failed
  int iterations = 0;
  std::int64_t wall_ms = 0;
  std::string error;  // empty on success
};

struct SweepReport {
  std::vector<SweepRow> rows;
};

/// One row per (method, level, seed), in input order: add noise, segment,
/// align labels, score. Engine failures are recorded in the row instead of
/// aborting the sweep. cfg.base.clusters is set to the phantom's region
/// count. Rows may be computed on `threads` workers; results are identical
/// to the sequential order apart from wall-clock timings.
SweepReport run_sweep(const Phantom& phantom, const std::vector<Method>& methods,
                      const std::vector<double>& noise_levels,
                      const std::vector<std::uint64_t>& seeds, IsfcmConfig cfg,
                      int threads = 1);

}  // namespace fuzzyseg
