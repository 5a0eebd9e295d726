#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace kandae::net {

// Parameter checkpoint: one ASCII descriptor line, then `count` float64
// values, little-endian, in canonical parameter order.
// Descriptor: kandae-params v1 kind=<kan|mlp> system=<name> form=<n>
//             diff=<shape> alg=<shape|-> g=<G> k=<k> seed=<seed> count=<n>
struct CheckpointInfo {
  std::string kind;
  std::string system;
  int form = 0;
  std::vector<int> diff_shape;
  std::vector<int> alg_shape;  // empty for a single-network checkpoint
  int grid_g = 0;
  int grid_k = 0;
  std::uint64_t seed = 0;
  std::size_t count = 0;
};

void save_checkpoint(const std::string& path, const CheckpointInfo& info,
                     std::span<const double> values);

std::pair<CheckpointInfo, std::vector<double>> load_checkpoint(const std::string& path);

}  // namespace kandae::net
