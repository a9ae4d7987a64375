#include "vertebrate/corpus.hpp"

#include <json.hpp>

#include <algorithm>
#include <sstream>
#include <unordered_map>

#include "line_io.hpp"
#include "vertebrate/textnorm.hpp"

namespace vertebrate {

namespace {

using detail::for_each_line;
using nlohmann::json;

std::string issue_summary(const std::vector<LoadIssue>& issues) {
  std::ostringstream out;
  out << issues.size() << " corpus load error(s):";
  const std::size_t shown = std::min<std::size_t>(issues.size(), 20);
  for (std::size_t i = 0; i < shown; ++i) {
    out << "\n  line " << issues[i].line << ": " << issues[i].message;
  }
  if (shown < issues.size()) out << "\n  ...";
  return out.str();
}

bool get_string(const json& record, const char* key, std::string& out, std::string& err) {
  auto it = record.find(key);
  if (it == record.end() || !it->is_string()) {
    err = std::string("missing or non-string field \"") + key + "\"";
    return false;
  }
  out = it->get<std::string>();
  return true;
}

}  // namespace

CorpusLoadResult load_corpus(const std::filesystem::path& comments_path,
                             const std::optional<std::filesystem::path>& posts_path, bool strict) {
  CorpusLoadResult result;
  std::unordered_map<std::string, std::size_t> comment_id_lines;

  for_each_line(comments_path, [&](std::size_t lineno, const std::string& line) {
    if (line.empty()) return;
    json record = json::parse(line, nullptr, false);
    if (record.is_discarded() || !record.is_object()) {
      result.issues.push_back({lineno, "malformed JSON"});
      return;
    }
    Comment c;
    std::string err;
    if (!get_string(record, "id", c.id, err) || !get_string(record, "post_id", c.post_id, err) ||
        !get_string(record, "text", c.raw_text, err)) {
      result.issues.push_back({lineno, err});
      return;
    }
    std::string ts;
    if (!get_string(record, "timestamp", ts, err)) {
      result.issues.push_back({lineno, err});
      return;
    }
    auto parsed = parse_iso8601(ts);
    if (!parsed) {
      result.issues.push_back({lineno, "invalid ISO-8601 timestamp \"" + ts + "\""});
      return;
    }
    c.timestamp = *parsed;
    if (auto it = record.find("reactions"); it != record.end() && !it->is_null()) {
      if (!it->is_number_integer() || it->get<std::int64_t>() < 0) {
        result.issues.push_back({lineno, "field \"reactions\" must be a non-negative integer"});
        return;
      }
      c.reactions = it->get<std::int64_t>();
    }
    auto [prev, inserted] = comment_id_lines.emplace(c.id, lineno);
    if (!inserted) {
      result.issues.push_back({lineno, "duplicate comment id \"" + c.id + "\" (first seen on line " +
                                           std::to_string(prev->second) + ")"});
      return;
    }
    result.comments.push_back(std::move(c));
  });

  if (posts_path) {
    std::unordered_map<std::string, std::size_t> post_id_lines;
    for_each_line(*posts_path, [&](std::size_t lineno, const std::string& line) {
      if (line.empty()) return;
      json record = json::parse(line, nullptr, false);
      if (record.is_discarded() || !record.is_object()) {
        result.issues.push_back({lineno, "malformed JSON in posts file"});
        return;
      }
      Post p;
      std::string err;
      if (!get_string(record, "id", p.id, err) || !get_string(record, "text", p.text, err)) {
        result.issues.push_back({lineno, err + " in posts file"});
        return;
      }
      std::string ts;
      if (!get_string(record, "timestamp", ts, err)) {
        result.issues.push_back({lineno, err + " in posts file"});
        return;
      }
      auto parsed = parse_iso8601(ts);
      if (!parsed) {
        result.issues.push_back({lineno, "invalid ISO-8601 timestamp \"" + ts + "\" in posts file"});
        return;
      }
      p.timestamp = *parsed;
      auto [prev, inserted] = post_id_lines.emplace(p.id, lineno);
      if (!inserted) {
        result.issues.push_back({lineno, "duplicate post id \"" + p.id + "\" (first seen on line " +
                                             std::to_string(prev->second) + ")"});
        return;
      }
      result.posts.push_back(std::move(p));
    });
  }

  if (strict && !result.issues.empty()) throw CorpusError(issue_summary(result.issues));
  return result;
}

std::string normalize_text(std::string_view raw, const PreprocessConfig& config) {
  auto cps = utf8_decode(raw);
  std::vector<char32_t> kept;
  kept.reserve(cps.size());
  for (char32_t cp : cps) {
    if (config.lowercase) cp = to_lower(cp);
    if (config.strip_emoji && is_emoji(cp)) continue;
    if (config.strip_punctuation) {
      const bool punct = config.punctuation ? config.punctuation->count(cp) > 0 : is_punctuation(cp);
      if (punct) continue;
    }
    kept.push_back(cp);
  }

  // Token pass: single-space rejoin drops stopwords and collapses runs.
  std::string out;
  std::string token;
  auto flush = [&] {
    if (token.empty()) return;
    if (config.stopwords.find(token) == config.stopwords.end()) {
      if (!out.empty()) out.push_back(' ');
      out += token;
    }
    token.clear();
  };
  for (char32_t cp : kept) {
    if (is_whitespace(cp)) {
      flush();
    } else {
      utf8_append(token, cp);
    }
  }
  flush();
  return out;
}

Comment preprocess(const Comment& comment, const PreprocessConfig& config) {
  Comment out = comment;
  out.clean_text = normalize_text(comment.raw_text, config);
  return out;
}

void preprocess_corpus(std::vector<Comment>& comments, const PreprocessConfig& config) {
  for (auto& c : comments) c.clean_text = normalize_text(c.raw_text, config);
}

std::vector<std::string> tokenize(std::string_view clean_text) {
  std::vector<std::string> tokens;
  auto cps = utf8_decode(clean_text);
  std::string token;
  for (char32_t cp : cps) {
    if (is_whitespace(cp)) {
      if (!token.empty()) tokens.push_back(std::move(token));
      token.clear();
    } else {
      utf8_append(token, cp);
    }
  }
  if (!token.empty()) tokens.push_back(std::move(token));
  return tokens;
}

std::set<std::string> load_stopwords(const std::filesystem::path& path) {
  std::set<std::string> words;
  for_each_line(path, [&](std::size_t lineno, const std::string& line) {
    std::string entry = line;
    // trim ASCII whitespace
    const auto first = entry.find_first_not_of(" \t");
    if (first == std::string::npos) return;
    const auto last = entry.find_last_not_of(" \t");
    entry = entry.substr(first, last - first + 1);
    if (entry.empty() || entry[0] == '#') return;
    for (char32_t cp : utf8_decode(entry)) {
      if (is_punctuation(cp) || to_lower(cp) != cp || is_whitespace(cp)) {
        throw CorpusError("stopword file line " + std::to_string(lineno) +
                          ": entry \"" + entry + "\" must be lowercase and punctuation-free");
      }
    }
    words.insert(entry);
  });
  return words;
}

}  // namespace vertebrate
