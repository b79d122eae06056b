/*
 * Copyright 2026 nnoma-sim contributors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */
#pragma once

#include <cmath>
#include <cstddef>
#include <span>
#include <vector>

#include "nnoma/config.hpp"
#include "nnoma/pointprocess.hpp"
#include "nnoma/random.hpp"

namespace nnoma {

/// Distances below this are clamped before applying r^alpha.
inline constexpr double kMinDistance = 0.1;  // m

/// Unbounded path loss r^alpha evaluated at max(r, kMinDistance).
double path_loss(double r, double alpha);

/// Same as path_loss(sqrt(r2), alpha), without the square root when alpha = 4.
inline double path_loss_sq(double r2, double alpha) {
  constexpr double min2 = kMinDistance * kMinDistance;
  r2 = r2 < min2 ? min2 : r2;
  return alpha == 4.0 ? r2 * r2 : std::pow(r2, 0.5 * alpha);
}

/// Fading power over path loss, |h|^2 / L(r).
struct CompositeGain {
  double value = 0.0;
  double distance = 0.0;
};

CompositeGain composite_gain(double h2, double r, double alpha);

/// Index of the largest composite gain; the lowest index wins exact ties.
/// Throws std::invalid_argument on empty input.
std::size_t select_noma_user(std::span<const CompositeGain> gains);

/// Squared fading magnitudes (unit-mean exponential under Rayleigh fading).
struct ClusterFading {
  std::vector<double> intra;  // |h_{BS_i, U_{i,k}}|^2, k = 0..K-1
  double comp = 0.0;          // |h_{BS_i, U_0}|^2
};

/**
 * Every fading power one realization's decoding chain touches. Intra-cluster
 * and CoMP-link gains exist for all clusters; cross gains only for the
 * requested decoder base stations: `cross[d][j]` is the gain from cluster
 * j's selected user to the base station of cluster `decoders[d]`
 * (zero on the diagonal).
 */
struct FadingMatrix {
  std::vector<ClusterFading> clusters;
  std::vector<std::size_t> decoders;
  std::vector<std::vector<double>> cross;
};

/// Draws fading for `geometry`. Cluster gains come from per-cluster streams
/// and cross gains from per-decoder streams, all split off `rng`.
FadingMatrix draw_fading(const SystemConfig& cfg, const NetworkGeometry& geometry,
                         std::span<const std::size_t> decoders, const RandomStream& rng);

/// The user each base station schedules, with its absolute position.
struct SelectedUser {
  std::size_t index = 0;
  Point2D position;
  double gain = 0.0;  // composite gain z_{k*, i}
};

std::vector<SelectedUser> select_users(const SystemConfig& cfg, const NetworkGeometry& geometry,
                                       const FadingMatrix& fading);

}  // namespace nnoma
