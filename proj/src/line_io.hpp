// Internal helper: line-by-line file iteration for NDJSON/CSV inputs.
#pragma once

#include <filesystem>
#include <fstream>
#include <stdexcept>
#include <string>

namespace vertebrate::detail {

template <typename Fn>
void for_each_line(const std::filesystem::path& path, Fn&& fn) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open file: " + path.string());
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    fn(lineno, line);
  }
}

}  // namespace vertebrate::detail
