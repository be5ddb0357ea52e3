// Conventional fuzzy c-means over pixel intensities: alternating
// minimization of the membership-weighted squared-distance objective.
#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "fuzzyseg/core.hpp"

namespace fuzzyseg {

struct FcmConfig {
  int clusters = 2;
  double fuzzifier = 2.0;  // m > 1; larger means softer partitions
  double epsilon = 1e-3;   // stop when the max center movement drops below this
  int max_iter = 100;
  std::uint64_t seed = 0;
};

/// Throws std::invalid_argument on out-of-range parameters.
void validate(const FcmConfig& cfg);

struct FcmResult {
  Centers centers;
  MembershipMatrix memberships;
  int iterations = 0;
  std::vector<double> objective_trace;  // one value per iteration, non-increasing
  std::vector<Centers> center_trace;    // centers after each iteration
};

/// Called after each iteration with the fresh memberships and centers.
using IterationObserver =
    std::function<void(int iteration, const MembershipMatrix& u, const Centers& c)>;

/// Evenly spaced initial centers: c_i = (i + 0.5) * 255 / clusters.
Centers auto_centers(int clusters);

/// Sum over points and clusters of u^m times squared distance to the center.
double fcm_objective(const GrayImage& img, const MembershipMatrix& u, const Centers& c,
                     double fuzzifier);

/// Membership column for a single scalar value. out must hold centers.size()
/// entries. Zero-distance values get their mass split evenly over the
/// coincident centers; otherwise u_i is the normalized inverse squared
/// distance raised to 1/(m-1).
void fcm_membership(double x, const Centers& c, double fuzzifier, double* out);

/// Exact minimizer of the objective for fixed centers.
MembershipMatrix update_memberships(const GrayImage& img, const Centers& c, double fuzzifier);

/// Exact minimizer of the objective for fixed memberships:
/// c_i = sum_k u_ik^m x_k / sum_k u_ik^m.
/// Throws DegenerateClusterError when a cluster has zero total weight.
Centers update_centers(const GrayImage& img, const MembershipMatrix& u, double fuzzifier);

/// Alternates membership and center updates until the max center movement
/// falls below cfg.epsilon or cfg.max_iter is reached. A nullopt init places
/// centers evenly over the intensity range.
FcmResult run_fcm(const GrayImage& img, const FcmConfig& cfg,
                  std::optional<Centers> init = std::nullopt,
                  const IterationObserver& observer = {});

}  // namespace fuzzyseg
