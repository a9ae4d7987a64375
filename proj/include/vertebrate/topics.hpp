// Topic discovery over document embeddings: density-based clustering with
// an explicit outlier bucket, class-based term weighting, topic shares,
// and per-topic temporal distributions.
#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "vertebrate/corpus.hpp"
#include "vertebrate/embedding.hpp"

namespace vertebrate {

inline constexpr int kOutlierTopicId = -1;

struct TermWeight {
  std::string token;
  double weight = 0.0;
};

struct Topic {
  int topic_id = 0;
  std::vector<std::string> member_ids;   // comment ids, corpus order
  std::vector<double> centroid;          // mean of member embeddings, full-dimensional
  std::vector<TermWeight> terms;         // weight descending, ties lexicographic
  std::string name;                      // empty until assigned
};

struct ClusterParams {
  double eps = 0.5;
  int min_members = 5;
  std::size_t pca_dim = 0;  // 0 = cluster on the full-dimensional embeddings
};

struct TopicModel {
  std::vector<Topic> topics;  // non-outlier topics, topic_id ascending
  Topic outlier;              // topic_id -1; may be empty
  ClusterParams params;
  std::size_t total_comments = 0;

  const Topic* find(int topic_id) const;
};

// DBSCAN semantics: a point is core when its eps-neighborhood (self
// included) holds >= min_members points; clusters are the connected
// components of core points; a non-core point joins the cluster of its
// lowest-index core neighbor, otherwise it is an outlier. Cluster ids
// follow the input order of each cluster's first core point. Centroids
// are means over `full` rows (pass the same matrix twice when clustering
// full-dimensional data).
TopicModel fit_topics(const EmbeddingMatrix& cluster_space, const EmbeddingMatrix& full,
                      double eps, int min_members);
TopicModel fit_topics(const EmbeddingMatrix& matrix, double eps, int min_members);

// Weight of term t in topic c: tf(t,c) * ln(1 + A / f(t)), where tf(t,c)
// counts t inside the topic's concatenated documents, f(t) is the count
// across all topics, and A is the average token count per topic. Topics
// here means every bucket with at least one member, the outlier included.
void compute_topic_terms(TopicModel& model, const std::vector<std::string>& doc_ids,
                         const std::vector<std::vector<std::string>>& token_lists, int top_terms);

struct TopicShare {
  int topic_id = 0;
  std::size_t count = 0;
  double percentage = 0.0;  // 100 * count / total
};

// Shares for every topic including the outlier; percentages sum to 100.
std::vector<TopicShare> topic_shares(const TopicModel& model, std::size_t total);

enum class TimeBin { kDay, kWeek };

struct TemporalSeries {
  int topic_id = 0;
  TimeBin bin = TimeBin::kDay;
  std::vector<std::pair<CivilDate, std::size_t>> bins;  // contiguous, sorted
};

// Counts per bin per requested topic. Bins span the whole corpus date
// range; weekly bins start on the Monday on or before each date.
std::vector<TemporalSeries> temporal_distribution(const TopicModel& model,
                                                  const std::vector<Comment>& comments,
                                                  TimeBin bin, const std::set<int>& topic_ids);

// CSV "topic_id,name"; unnamed topics fall back to their top-3 terms.
void apply_topic_names(TopicModel& model, const std::map<int, std::string>& names);
std::map<int, std::string> load_topic_names(const std::filesystem::path& path);
std::string display_name(const Topic& topic);

}  // namespace vertebrate
