// Comment corpus: newline-delimited JSON ingestion, validation, and the
// text preprocessing stage (lowercase, emoji/punctuation stripping,
// stopword removal).
#pragma once

#include <filesystem>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "vertebrate/timeparse.hpp"

namespace vertebrate {

struct Comment {
  std::string id;
  std::string post_id;
  UtcTime timestamp;
  std::string raw_text;
  std::string clean_text;  // empty until preprocess() runs
  std::optional<std::int64_t> reactions;
};

struct Post {
  std::string id;
  UtcTime timestamp;
  std::string text;
};

struct PreprocessConfig {
  std::set<std::string> stopwords;
  // When set, replaces the built-in Unicode punctuation table.
  std::optional<std::set<char32_t>> punctuation;
  bool strip_emoji = true;
  bool strip_punctuation = true;
  bool lowercase = true;
};

struct LoadIssue {
  std::size_t line = 0;  // 1-based line in the source file
  std::string message;
};

struct CorpusLoadResult {
  std::vector<Comment> comments;
  std::vector<Post> posts;
  std::vector<LoadIssue> issues;
};

class CorpusError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Lenient mode collects per-line issues and keeps the good records; strict
// mode throws a CorpusError summarizing every issue. Duplicate ids are an
// error in both modes (the issue names both lines; the duplicate is dropped).
CorpusLoadResult load_corpus(const std::filesystem::path& comments_path,
                             const std::optional<std::filesystem::path>& posts_path = std::nullopt,
                             bool strict = false);

// Lowercase -> strip emoji -> strip punctuation -> tokenize -> drop
// stopwords -> rejoin with single spaces. Idempotent on its own output.
std::string normalize_text(std::string_view raw, const PreprocessConfig& config);

Comment preprocess(const Comment& comment, const PreprocessConfig& config);

void preprocess_corpus(std::vector<Comment>& comments, const PreprocessConfig& config);

// Maximal runs of non-whitespace.
std::vector<std::string> tokenize(std::string_view clean_text);

// One token per line; '#'-prefixed lines are comments. Entries must be
// lowercase and punctuation-free.
std::set<std::string> load_stopwords(const std::filesystem::path& path);

}  // namespace vertebrate
