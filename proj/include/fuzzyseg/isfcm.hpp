// Spatially regularized fuzzy c-means (ISFCM). Each pixel's membership
// blends three factors: its own inverse-distance (FCM) membership, the
// average FCM membership of its neighbors, and a majority-vote prior from
// the neighborhood's hard labels. Initialized from histogram-domain FCM.
#pragma once

#include <vector>

#include "fuzzyseg/core.hpp"
#include "fuzzyseg/fcm.hpp"
#include "fuzzyseg/hist_fcm.hpp"

namespace fuzzyseg {

struct IsfcmConfig {
  FcmConfig base;
  NeighborhoodSpec neighborhood;
  bool renormalize = true;  // rescale each column to sum to 1
};

struct IsfcmResult {
  Centers centers;
  MembershipMatrix memberships;
  LabelMap labels;
  int iterations = 0;  // spatial iterations, not counting the histogram init
  std::vector<double> objective_trace;  // recorded, not guaranteed monotone
};

/// Fraction of k's neighbors hard-labeled with the given cluster.
/// Sums to 1 over clusters since the labels partition the neighborhood.
double prior_probability(const LabelMap& labels, std::size_t k, std::size_t cluster,
                         const NeighborhoodSpec& spec);

/// One Jacobi-style membership pass: every pixel reads the same snapshot of
/// centers and labels. Raw value r_ik = P_ik * f_ik * g_ik with f the FCM
/// membership of the pixel and g the neighborhood average of f. Columns are
/// renormalized when cfg.renormalize is set; a column whose raw values all
/// vanish (or a pixel with no neighbors) falls back to plain f.
MembershipMatrix spatial_membership(const GrayImage& img, const Centers& c,
                                    const LabelMap& labels, const IsfcmConfig& cfg);

/// Center update consuming spatial memberships; same weighted-mean formula
/// and degeneracy behavior as update_centers.
Centers spatial_centers(const GrayImage& img, const MembershipMatrix& u, double fuzzifier);

/// Full pipeline: histogram FCM init, expansion to pixels, defuzzification,
/// then spatial membership / defuzzify / center iterations until the max
/// center movement drops below epsilon, the labels stop changing, or
/// max_iter is reached.
IsfcmResult run_isfcm(const GrayImage& img, const IsfcmConfig& cfg,
                      const IterationObserver& observer = {});

}  // namespace fuzzyseg
