// Histogram-domain fuzzy c-means: clusters the 256 gray levels weighted by
// their counts instead of every pixel. Equivalent to pixel-domain FCM for
// scalar intensities and far cheaper, so it doubles as a fast initializer.
#pragma once

#include <optional>
#include <vector>

#include "fuzzyseg/core.hpp"
#include "fuzzyseg/fcm.hpp"

namespace fuzzyseg {

struct HistFcmResult {
  Centers centers;
  MembershipMatrix level_memberships;  // clusters x 256, one column per gray level
  int iterations = 0;
  std::vector<double> objective_trace;
  std::vector<Centers> center_trace;
};

/// Sum over levels and clusters of u^m H(l) times squared distance.
double hist_fcm_objective(const Histogram& hist, const MembershipMatrix& u, const Centers& c,
                          double fuzzifier);

/// Count-weighted center update over gray levels:
/// c_i = sum_l u_il^m H(l) l / sum_l u_il^m H(l).
/// Levels with H(l) == 0 still receive memberships but contribute no weight.
Centers update_level_centers(const Histogram& hist, const MembershipMatrix& u, double fuzzifier);

/// Same alternating scheme, stopping rule, and singularity handling as
/// run_fcm, iterating over gray levels instead of pixels.
HistFcmResult run_hist_fcm(const Histogram& hist, const FcmConfig& cfg,
                           std::optional<Centers> init = std::nullopt,
                           const IterationObserver& observer = {});

/// Per-pixel memberships by gray-level lookup: column k is the level column
/// of pixel k's intensity.
MembershipMatrix expand_to_pixels(const GrayImage& img, const HistFcmResult& res);

}  // namespace fuzzyseg
