#include "checkpoint.hpp"

#include <bit>
#include <cstdio>
#include <fstream>

#include "../common.hpp"
#include "../strutil.hpp"

namespace kandae::net {

namespace {

void encode_le(double v, unsigned char out[8]) {
  const std::uint64_t u = std::bit_cast<std::uint64_t>(v);
  for (int i = 0; i < 8; ++i) out[i] = static_cast<unsigned char>(u >> (8 * i));
}

double decode_le(const unsigned char in[8]) {
  std::uint64_t u = 0;
  for (int i = 0; i < 8; ++i) u |= static_cast<std::uint64_t>(in[i]) << (8 * i);
  return std::bit_cast<double>(u);
}

}  // namespace

void save_checkpoint(const std::string& path, const CheckpointInfo& info,
                     std::span<const double> values) {
  require(info.count == values.size(), "checkpoint count mismatch");
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  require(f.good(), "cannot open checkpoint file '" + path + "' for writing");
  f << "kandae-params v1 kind=" << info.kind << " system=" << info.system
    << " form=" << info.form << " diff=" << join_ints(info.diff_shape) << " alg="
    << (info.alg_shape.empty() ? std::string("-") : join_ints(info.alg_shape))
    << " g=" << info.grid_g << " k=" << info.grid_k << " seed=" << info.seed
    << " count=" << info.count << "\n";
  for (double v : values) {
    unsigned char buf[8];
    encode_le(v, buf);
    f.write(reinterpret_cast<const char*>(buf), 8);
  }
  require(f.good(), "write failure on checkpoint file '" + path + "'");
}

std::pair<CheckpointInfo, std::vector<double>> load_checkpoint(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  require(f.good(), "cannot open checkpoint file '" + path + "'");
  std::string header;
  std::getline(f, header);
  require(f.good(), "checkpoint file '" + path + "' has no descriptor line");
  const std::vector<std::string> fields = split(trim(header), ' ');
  require(fields.size() >= 2 && fields[0] == "kandae-params" && fields[1] == "v1",
          "'" + path + "' is not a kandae parameter checkpoint");
  CheckpointInfo info;
  for (std::size_t i = 2; i < fields.size(); ++i) {
    const std::size_t eq = fields[i].find('=');
    require(eq != std::string::npos, "bad descriptor field '" + fields[i] + "'");
    const std::string key = fields[i].substr(0, eq);
    const std::string val = fields[i].substr(eq + 1);
    if (key == "kind") info.kind = val;
    else if (key == "system") info.system = val;
    else if (key == "form") info.form = std::stoi(val);
    else if (key == "diff") info.diff_shape = parse_int_list(val);
    else if (key == "alg") info.alg_shape = val == "-" ? std::vector<int>{} : parse_int_list(val);
    else if (key == "g") info.grid_g = std::stoi(val);
    else if (key == "k") info.grid_k = std::stoi(val);
    else if (key == "seed") info.seed = std::stoull(val);
    else if (key == "count") info.count = std::stoull(val);
    else fail("unknown descriptor field '" + key + "'");
  }
  std::vector<double> values(info.count);
  for (std::size_t i = 0; i < info.count; ++i) {
    unsigned char buf[8];
    f.read(reinterpret_cast<char*>(buf), 8);
    require(f.good(), "checkpoint file '" + path + "' is truncated");
    values[i] = decode_le(buf);
  }
  return {info, std::move(values)};
}

}  // namespace kandae::net
