// Core domain types for grayscale fuzzy clustering: images, histograms,
// fuzzy partitions, hard label maps, and neighborhood iteration.
#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace fuzzyseg {

inline constexpr int kGrayLevels = 256;

/// Thrown when a cluster loses all support during a center update.
struct DegenerateClusterError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// 8-bit grayscale image, pixels stored row-major.
struct GrayImage {
  int width = 0;
  int height = 0;
  std::vector<std::uint8_t> pixels;

  GrayImage() = default;
  GrayImage(int w, int h, std::uint8_t fill = 0);
  GrayImage(int w, int h, std::vector<std::uint8_t> data);

  std::size_t size() const { return pixels.size(); }

  std::uint8_t operator()(int x, int y) const {
    return pixels[static_cast<std::size_t>(y) * static_cast<std::size_t>(width) +
                  static_cast<std::size_t>(x)];
  }
  std::uint8_t& operator()(int x, int y) {
    return pixels[static_cast<std::size_t>(y) * static_cast<std::size_t>(width) +
                  static_cast<std::size_t>(x)];
  }
};

/// Gray-level counts of an image; sum(counts) == total.
struct Histogram {
  std::array<std::uint64_t, kGrayLevels> counts{};
  std::uint64_t total = 0;
};

/// Fuzzy partition, clusters x points, stored row-major by cluster.
/// Every column sums to 1 and all entries lie in [0, 1].
struct MembershipMatrix {
  std::size_t clusters = 0;
  std::size_t points = 0;
  std::vector<double> values;

  MembershipMatrix() = default;
  MembershipMatrix(std::size_t v, std::size_t n)
      : clusters(v), points(n), values(v * n, 0.0) {}

  double operator()(std::size_t i, std::size_t k) const { return values[i * points + k]; }
  double& operator()(std::size_t i, std::size_t k) { return values[i * points + k]; }
};

/// Cluster centroids in intensity space [0, 255].
using Centers = std::vector<double>;

/// Hard per-pixel cluster assignment, row-major.
struct LabelMap {
  int width = 0;
  int height = 0;
  std::vector<std::uint8_t> labels;

  LabelMap() = default;
  LabelMap(int w, int h);

  std::size_t size() const { return labels.size(); }
};

/// Square window centered on a pixel. The window is clipped at image
/// borders, so the neighbor count varies (8 interior / 5 edge / 3 corner
/// for the default 3x3 window with the center excluded).
struct NeighborhoodSpec {
  int window = 3;
  bool include_center = false;
};

/// Throws std::invalid_argument unless window is odd and >= 3.
void validate(const NeighborhoodSpec& spec);

Histogram compute_histogram(const GrayImage& img);

/// Number of gray levels with a nonzero count.
int nonzero_levels(const Histogram& hist);

/// Visits the index of every neighbor of pixel k inside the clipped window.
template <typename Fn>
void for_each_neighbor(int width, int height, std::size_t k, const NeighborhoodSpec& spec,
                       Fn&& fn) {
  const int x = static_cast<int>(k % static_cast<std::size_t>(width));
  const int y = static_cast<int>(k / static_cast<std::size_t>(width));
  const int half = spec.window / 2;
  const int x0 = std::max(x - half, 0);
  const int x1 = std::min(x + half, width - 1);
  const int y0 = std::max(y - half, 0);
  const int y1 = std::min(y + half, height - 1);
  for (int ny = y0; ny <= y1; ++ny) {
    for (int nx = x0; nx <= x1; ++nx) {
      if (!spec.include_center && nx == x && ny == y) continue;
      fn(static_cast<std::size_t>(ny) * static_cast<std::size_t>(width) +
         static_cast<std::size_t>(nx));
    }
  }
}

/// Neighbor pixel indices of k inside the clipped window.
std::vector<std::size_t> neighbors(int width, int height, std::size_t k,
                                   const NeighborhoodSpec& spec);

/// Hard labels by per-column argmax; ties go to the lowest cluster index.
LabelMap defuzzify(const MembershipMatrix& u, int width, int height);

}  // namespace fuzzyseg
