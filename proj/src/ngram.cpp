#include "vertebrate/ngram.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace vertebrate {

NgramTable extract_ngrams(const std::vector<std::vector<std::string>>& tokens_per_comment,
                          const NgramSpec& spec) {
  if (spec.n < 1) throw std::invalid_argument("n-gram size must be >= 1");
  if (spec.top_k < 1) throw std::invalid_argument("n-gram top_k must be >= 1");
  const auto n = static_cast<std::size_t>(spec.n);

  // std::map keys give the lexicographic tie order for free.
  std::map<std::vector<std::string>, std::uint64_t> counts;
  for (const auto& tokens : tokens_per_comment) {
    if (tokens.size() < n) continue;
    for (std::size_t start = 0; start + n <= tokens.size(); ++start) {
      std::vector<std::string> gram(tokens.begin() + static_cast<std::ptrdiff_t>(start),
                                    tokens.begin() + static_cast<std::ptrdiff_t>(start + n));
      ++counts[std::move(gram)];
    }
  }

  NgramTable table;
  table.n = spec.n;
  table.entries.reserve(counts.size());
  for (auto& [gram, freq] : counts) table.entries.push_back({gram, freq});
  std::stable_sort(table.entries.begin(), table.entries.end(),
                   [](const NgramEntry& a, const NgramEntry& b) { return a.frequency > b.frequency; });
  if (table.entries.size() > static_cast<std::size_t>(spec.top_k)) {
    table.entries.resize(static_cast<std::size_t>(spec.top_k));
  }
  return table;
}

std::string join_gram(const std::vector<std::string>& gram) {
  std::string out;
  for (std::size_t i = 0; i < gram.size(); ++i) {
    if (i > 0) out.push_back(' ');
    out += gram[i];
  }
  return out;
}

std::string ngram_table_csv(const NgramTable& table) {
  std::string out = "gram,frequency\n";
  for (const auto& entry : table.entries) {
    std::string gram = join_gram(entry.gram);
    // Quote per RFC 4180 when the gram contains CSV metacharacters.
    if (gram.find_first_of(",\"\n") != std::string::npos) {
      std::string quoted = "\"";
      for (char c : gram) {
        if (c == '"') quoted += "\"\"";
        else quoted.push_back(c);
      }
      quoted.push_back('"');
      gram = std::move(quoted);
    }
    out += gram;
    out.push_back(',');
    out += std::to_string(entry.frequency);
    out.push_back('\n');
  }
  return out;
}

}  // namespace vertebrate
