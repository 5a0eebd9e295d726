#pragma once

#include <string>
#include <vector>

#include "common.hpp"

namespace kandae {

inline std::string trim(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  std::size_t e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

inline std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    std::size_t p = s.find(sep, start);
    if (p == std::string::npos) {
      out.push_back(s.substr(start));
      return out;
    }
    out.push_back(s.substr(start, p - start));
    start = p + 1;
  }
}

inline std::vector<int> parse_int_list(const std::string& s) {
  std::vector<int> out;
  for (const std::string& part : split(s, ',')) {
    const std::string p = trim(part);
    require(!p.empty(), "empty entry in integer list '" + s + "'");
    std::size_t pos = 0;
    int v = 0;
    try {
      v = std::stoi(p, &pos);
    } catch (const std::exception&) {
      fail("bad integer '" + p + "'");
    }
    require(pos == p.size(), "bad integer '" + p + "'");
    out.push_back(v);
  }
  return out;
}

inline std::string join_ints(const std::vector<int>& v, char sep = ',') {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out.push_back(sep);
    out += std::to_string(v[i]);
  }
  return out;
}

}  // namespace kandae
