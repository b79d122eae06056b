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
#include "nnoma/channel.hpp"

#include <stdexcept>

namespace nnoma {

namespace {

constexpr std::uint64_t kTagCluster = 0x434c5553;  // "CLUS"
constexpr std::uint64_t kTagCross = 0x43524f53;    // "CROS"

}  // namespace

double path_loss(double r, double alpha) { return path_loss_sq(r * r, alpha); }

CompositeGain composite_gain(double h2, double r, double alpha) {
  return {h2 / path_loss(r, alpha), r};
}

std::size_t select_noma_user(std::span<const CompositeGain> gains) {
  if (gains.empty()) throw std::invalid_argument("select_noma_user: no candidate users");
  std::size_t best = 0;
  for (std::size_t k = 1; k < gains.size(); ++k) {
    if (gains[k].value > gains[best].value) best = k;
  }
  return best;
}

FadingMatrix draw_fading(const SystemConfig& cfg, const NetworkGeometry& geometry,
                         std::span<const std::size_t> decoders, const RandomStream& rng) {
  FadingMatrix fading;
  const auto n = geometry.clusters.size();
  fading.clusters.resize(n);
  const auto cluster_root = rng.split(kTagCluster);
  for (std::size_t j = 0; j < n; ++j) {
    auto stream = cluster_root.split(geometry.clusters[j].key);
    auto& f = fading.clusters[j];
    f.intra.resize(static_cast<std::size_t>(cfg.k_users));
    for (auto& g : f.intra) g = stream.exponential();
    f.comp = stream.exponential();
  }
  fading.decoders.assign(decoders.begin(), decoders.end());
  fading.cross.resize(decoders.size());
  const auto cross_root = rng.split(kTagCross);
  for (std::size_t d = 0; d < decoders.size(); ++d) {
    if (decoders[d] >= n) throw std::out_of_range("draw_fading: decoder index out of range");
    auto stream = cross_root.split(geometry.clusters[decoders[d]].key);
    auto& row = fading.cross[d];
    row.resize(n);
    for (std::size_t j = 0; j < n; ++j) row[j] = j == decoders[d] ? 0.0 : stream.exponential();
  }
  return fading;
}

std::vector<SelectedUser> select_users(const SystemConfig& cfg, const NetworkGeometry& geometry,
                                       const FadingMatrix& fading) {
  std::vector<SelectedUser> selected(geometry.clusters.size());
  std::vector<CompositeGain> gains(static_cast<std::size_t>(cfg.k_users));
  for (std::size_t j = 0; j < geometry.clusters.size(); ++j) {
    const auto& cluster = geometry.clusters[j];
    for (std::size_t k = 0; k < gains.size(); ++k) {
      const double r2 = cluster.user_offsets[k].norm2();
      gains[k] = {fading.clusters[j].intra[k] / path_loss_sq(r2, cfg.alpha), 0.0};
    }
    const auto best = select_noma_user(gains);
    selected[j] = {best, cluster.bs_position + cluster.user_offsets[best], gains[best].value};
  }
  return selected;
}

}  // namespace nnoma
