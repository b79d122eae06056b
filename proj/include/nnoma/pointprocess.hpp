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
#include <cstdint>
#include <iosfwd>
#include <vector>

#include "nnoma/config.hpp"
#include "nnoma/random.hpp"

namespace nnoma {

struct Point2D {
  double x = 0.0;
  double y = 0.0;

  double norm2() const { return x * x + y * y; }
  double norm() const { return std::hypot(x, y); }
  friend Point2D operator+(Point2D a, Point2D b) { return {a.x + b.x, a.y + b.y}; }
  friend Point2D operator-(Point2D a, Point2D b) { return {a.x - b.x, a.y - b.y}; }
  bool operator==(const Point2D&) const = default;
};

/// One parent (base station) and its K candidate users. Offsets are relative
/// to the base station. `key` identifies the cluster's random streams and is
/// stable under enlargement of the sampling window.
struct ClusterDraw {
  Point2D bs_position;
  std::vector<Point2D> user_offsets;
  std::uint64_t key = 0;
};

/// One Poisson-cluster-process draw around the CoMP user at the origin.
/// Clusters are ordered by sampling ring, innermost first.
struct NetworkGeometry {
  std::vector<ClusterDraw> clusters;
};

/// Width of the concentric rings the window is sampled in. Each ring draws
/// its own Poisson count from its own sub-stream, so enlarging the window
/// leaves every complete inner ring unchanged.
inline constexpr double kRingWidth = 250.0;

/// Homogeneous PPP of density `lambda` in the disk of radius `radius`.
std::vector<Point2D> sample_hppp(double lambda, double radius, RandomStream& rng);

/// Homogeneous PPP restricted to the annulus inner <= |p| < outer.
std::vector<Point2D> sample_hppp_annulus(double lambda, double inner, double outer,
                                         RandomStream& rng);

/// `count` points uniform in the disk, by radial inversion r = R sqrt(u).
std::vector<Point2D> sample_uniform_disk(double radius, std::size_t count, RandomStream& rng);

/// Full PCP draw over the disk of radius `cfg.effective_sim_radius()`.
NetworkGeometry sample_geometry(const SystemConfig& cfg, const RandomStream& rng);

/// A cluster whose base station is placed at `bs`, with offsets drawn from
/// the stream identified by `key`.
ClusterDraw sample_cluster_at(const SystemConfig& cfg, Point2D bs, std::uint64_t key,
                              const RandomStream& rng);

/// Debug dump: `cluster_id,role,x,y` rows, role in {bs, user, comp_user}.
void write_geometry_csv(std::ostream& out, const NetworkGeometry& geometry);

}  // namespace nnoma
