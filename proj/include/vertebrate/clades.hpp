// Agglomerative clustering of topic centroids with Ward's linkage, clade
// extraction by dendrogram cut, and propagation of human-assigned clade
// sentiments down to comments.
#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "vertebrate/sentiment.hpp"
#include "vertebrate/topics.hpp"

namespace vertebrate {

struct DendrogramMerge {
  int left = 0;   // child node id, left < right
  int right = 0;
  double distance = 0.0;  // squared-Euclidean Ward scale
  std::size_t size = 0;   // leaves under the merged node
};

// Node ids: leaves 0..L-1 (aligned with `leaves`), internal L..2L-2 in
// merge order.
struct Dendrogram {
  std::vector<int> leaf_topic_ids;
  std::vector<DendrogramMerge> merges;  // exactly L-1, distances non-decreasing
};

// Initial distances are squared Euclidean; successive distances follow the
// Lance-Williams recurrence for Ward's method. Equal distances break to
// the lowest (left, right) node-id pair.
Dendrogram ward_cluster(const std::vector<std::vector<double>>& centroids,
                        const std::vector<int>& topic_ids);

struct Clade {
  int clade_id = 0;
  std::vector<int> member_topic_ids;  // ascending
  Sentiment sentiment = Sentiment::kUnassigned;
};

// Clades are ordered (and numbered) by their smallest member topic id.
struct CladeCut {
  double threshold = 0.0;  // > 0 when cut by threshold
  int n_clades = 0;        // > 0 when cut by count
  std::vector<Clade> clades;
};

// Maximal subtrees whose internal merges all lie strictly below t.
CladeCut cut_threshold(const Dendrogram& dendrogram, double t);

// Removes the k-1 largest-distance merges (the last k-1 under Ward's
// monotone linkage). Singleton leaves form singleton clades.
CladeCut cut_n_clades(const Dendrogram& dendrogram, int k);

struct SentimentAssignment {
  std::map<int, Sentiment> clade_sentiments;   // clade_id -> positive|negative|excluded
  std::set<int> excluded_topics;               // individually excluded topic ids
  std::map<int, Sentiment> topic_overrides;    // per-topic sentiment overrides
};

struct TopicSentiments {
  std::vector<Clade> clades;          // the cut's clades with sentiments applied
  std::map<int, Sentiment> by_topic;  // resolved sentiment per dendrogram topic
  std::size_t unassigned_clades = 0;
};

// Topic resolution order: override, then individual exclusion, then the
// clade sentiment. Unknown clade ids error; clades left without an
// assignment error in strict mode and stay unassigned otherwise.
TopicSentiments assign_clade_sentiments(const CladeCut& cut, const SentimentAssignment& assignment,
                                        bool strict);

struct PropagationResult {
  // (comment_id, sentiment) for positive/negative topics, corpus order.
  std::vector<std::pair<std::string, Sentiment>> labels;
  std::size_t positive_count = 0;
  std::size_t negative_count = 0;
  std::size_t excluded_comments = 0;    // comments of excluded topics and the outlier bucket
  std::size_t unassigned_comments = 0;  // comments of unassigned-clade topics (lenient mode)
};

PropagationResult propagate_labels(const TopicSentiments& sentiments, const TopicModel& model);

// CSV "clade_id,sentiment" with sentiment in {positive, negative, excluded}.
std::map<int, Sentiment> load_clade_sentiments(const std::filesystem::path& path);
// CSV "topic_id,sentiment".
std::map<int, Sentiment> load_topic_overrides(const std::filesystem::path& path);

}  // namespace vertebrate
