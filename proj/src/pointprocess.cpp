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
#include "nnoma/pointprocess.hpp"

#include <algorithm>
#include <bit>
#include <numbers>
#include <ostream>
#include <stdexcept>

namespace nnoma {

namespace {

constexpr std::uint64_t kTagRing = 0x52494e47;     // "RING"
constexpr std::uint64_t kTagOffsets = 0x4f464653;  // "OFFS"

Point2D polar(double r, double angle) { return {r * std::cos(angle), r * std::sin(angle)}; }

}  // namespace

std::vector<Point2D> sample_hppp_annulus(double lambda, double inner, double outer,
                                         RandomStream& rng) {
  if (!(lambda >= 0.0) || !(inner >= 0.0) || !(outer > inner)) {
    throw std::invalid_argument("sample_hppp_annulus: need lambda >= 0, 0 <= inner < outer");
  }
  const double inner2 = inner * inner;
  const double span2 = outer * outer - inner2;
  const auto count = rng.poisson(lambda * std::numbers::pi * span2);
  std::vector<Point2D> points;
  points.reserve(count);
  for (std::uint64_t i = 0; i < count; ++i) {
    const double r = std::sqrt(inner2 + rng.uniform() * span2);
    points.push_back(polar(r, 2.0 * std::numbers::pi * rng.uniform()));
  }
  return points;
}

std::vector<Point2D> sample_hppp(double lambda, double radius, RandomStream& rng) {
  return sample_hppp_annulus(lambda, 0.0, radius, rng);
}

std::vector<Point2D> sample_uniform_disk(double radius, std::size_t count, RandomStream& rng) {
  if (!(radius > 0.0)) throw std::invalid_argument("sample_uniform_disk: radius must be > 0");
  std::vector<Point2D> points;
  points.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    const double r = radius * std::sqrt(rng.uniform());
    points.push_back(polar(r, 2.0 * std::numbers::pi * rng.uniform()));
  }
  return points;
}

ClusterDraw sample_cluster_at(const SystemConfig& cfg, Point2D bs, std::uint64_t key,
                              const RandomStream& rng) {
  auto stream = rng.split(kTagOffsets).split(key);
  return ClusterDraw{bs,
                     sample_uniform_disk(cfg.radius_cluster,
                                         static_cast<std::size_t>(cfg.k_users), stream),
                     key};
}

NetworkGeometry sample_geometry(const SystemConfig& cfg, const RandomStream& rng) {
  validate(cfg);
  const double window = cfg.effective_sim_radius();
  NetworkGeometry geometry;
  if (cfg.lambda_c == 0.0) return geometry;
  const auto rings = static_cast<std::uint64_t>(std::ceil(window / kRingWidth));
  for (std::uint64_t ring = 0; ring < rings; ++ring) {
    const double inner = static_cast<double>(ring) * kRingWidth;
    const double outer = std::min(window, inner + kRingWidth);
    auto ring_rng = rng.split(kTagRing).split(ring);
    // A partial outer ring gets a distinct stream from the complete ring of
    // the same index in a larger window.
    if (outer < inner + kRingWidth) ring_rng = ring_rng.split(std::bit_cast<std::uint64_t>(outer));
    const auto parents = sample_hppp_annulus(cfg.lambda_c, inner, outer, ring_rng);
    for (std::size_t i = 0; i < parents.size(); ++i) {
      const std::uint64_t key = ((ring + 1) << 32) | static_cast<std::uint64_t>(i);
      geometry.clusters.push_back(sample_cluster_at(cfg, parents[i], key, rng));
    }
  }
  return geometry;
}

void write_geometry_csv(std::ostream& out, const NetworkGeometry& geometry) {
  constexpr const char* kEol = "\r\n";  // RFC 4180
  out << "cluster_id,role,x,y" << kEol;
  out.precision(17);
  out << "-1,comp_user,0,0" << kEol;
  for (std::size_t i = 0; i < geometry.clusters.size(); ++i) {
    const auto& c = geometry.clusters[i];
    out << i << ",bs," << c.bs_position.x << ',' << c.bs_position.y << kEol;
    for (const auto& off : c.user_offsets) {
      const Point2D p = c.bs_position + off;
      out << i << ",user," << p.x << ',' << p.y << kEol;
    }
  }
}

}  // namespace nnoma
