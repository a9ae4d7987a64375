// Word n-gram frequency tables over per-comment token lists.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace vertebrate {

struct NgramSpec {
  int n = 1;      // subsequence size, >= 1
  int top_k = 10; // table truncation, >= 1
};

struct NgramEntry {
  std::vector<std::string> gram;
  std::uint64_t frequency = 0;
};

// Entries sorted by frequency descending, ties lexicographic by gram.
struct NgramTable {
  int n = 1;
  std::vector<NgramEntry> entries;
};

// Sliding-window counts; windows never span comment boundaries.
NgramTable extract_ngrams(const std::vector<std::vector<std::string>>& tokens_per_comment,
                          const NgramSpec& spec);

std::string join_gram(const std::vector<std::string>& gram);

// CSV with header "gram,frequency"; grams space-joined.
std::string ngram_table_csv(const NgramTable& table);

}  // namespace vertebrate
