#include "vertebrate/clades.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "line_io.hpp"

namespace vertebrate {

namespace {

struct ActiveCluster {
  int node_id = 0;
  std::size_t size = 0;
};

double squared_distance(const std::vector<double>& a, const std::vector<double>& b) {
  double sum = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double d = a[i] - b[i];
    sum += d * d;
  }
  return sum;
}

// Union-find over dendrogram node ids.
class NodeForest {
 public:
  explicit NodeForest(std::size_t node_count) : parent_(node_count) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  void unite(std::size_t a, std::size_t b, std::size_t root) {
    parent_[find(a)] = root;
    parent_[find(b)] = root;
  }

 private:
  std::vector<std::size_t> parent_;
};

CladeCut components_to_cut(const Dendrogram& dendrogram, std::size_t applied_merges) {
  const std::size_t leaf_count = dendrogram.leaf_topic_ids.size();
  NodeForest forest(2 * leaf_count - 1);
  for (std::size_t m = 0; m < applied_merges; ++m) {
    const auto& merge = dendrogram.merges[m];
    forest.unite(static_cast<std::size_t>(merge.left), static_cast<std::size_t>(merge.right),
                 leaf_count + m);
  }
  std::map<std::size_t, std::vector<int>> groups;
  for (std::size_t leaf = 0; leaf < leaf_count; ++leaf) {
    groups[forest.find(leaf)].push_back(dendrogram.leaf_topic_ids[leaf]);
  }
  std::vector<Clade> clades;
  clades.reserve(groups.size());
  for (auto& [root, members] : groups) {
    std::sort(members.begin(), members.end());
    clades.push_back({0, std::move(members), Sentiment::kUnassigned});
  }
  std::sort(clades.begin(), clades.end(), [](const Clade& a, const Clade& b) {
    return a.member_topic_ids.front() < b.member_topic_ids.front();
  });
  for (std::size_t i = 0; i < clades.size(); ++i) clades[i].clade_id = static_cast<int>(i);
  CladeCut cut;
  cut.clades = std::move(clades);
  return cut;
}

}  // namespace

Dendrogram ward_cluster(const std::vector<std::vector<double>>& centroids,
                        const std::vector<int>& topic_ids) {
  const std::size_t leaf_count = centroids.size();
  if (leaf_count < 2) throw std::invalid_argument("ward_cluster: need at least 2 leaves");
  if (topic_ids.size() != leaf_count) {
    throw std::invalid_argument("ward_cluster: topic ids and centroids are not aligned");
  }
  const std::size_t dim = centroids[0].size();
  for (const auto& c : centroids) {
    if (c.size() != dim) throw std::invalid_argument("ward_cluster: centroid dimension mismatch");
  }

  Dendrogram dendrogram;
  dendrogram.leaf_topic_ids = topic_ids;

  std::vector<ActiveCluster> active;
  active.reserve(leaf_count);
  for (std::size_t i = 0; i < leaf_count; ++i) {
    active.push_back({static_cast<int>(i), 1});
  }
  // Distances keyed by (lower node id, higher node id).
  std::map<std::pair<int, int>, double> dist;
  for (std::size_t i = 0; i < leaf_count; ++i) {
    for (std::size_t j = i + 1; j < leaf_count; ++j) {
      dist[{static_cast<int>(i), static_cast<int>(j)}] =
          squared_distance(centroids[i], centroids[j]);
    }
  }
  auto distance_of = [&](int a, int b) {
    return dist.at({std::min(a, b), std::max(a, b)});
  };

  for (std::size_t step = 0; step + 1 < leaf_count; ++step) {
    // Minimum distance pair; ties resolve to the lowest (left, right) ids.
    double best = std::numeric_limits<double>::infinity();
    std::pair<int, int> best_pair{-1, -1};
    for (std::size_t i = 0; i < active.size(); ++i) {
      for (std::size_t j = i + 1; j < active.size(); ++j) {
        const int a = std::min(active[i].node_id, active[j].node_id);
        const int b = std::max(active[i].node_id, active[j].node_id);
        const double d = distance_of(a, b);
        if (d < best || (d == best && std::make_pair(a, b) < best_pair)) {
          best = d;
          best_pair = {a, b};
        }
      }
    }

    const auto find_active = [&](int node_id) {
      return std::find_if(active.begin(), active.end(),
                          [&](const ActiveCluster& c) { return c.node_id == node_id; });
    };
    auto it_i = find_active(best_pair.first);
    auto it_j = find_active(best_pair.second);
    const std::size_t n_i = it_i->size;
    const std::size_t n_j = it_j->size;
    const int new_id = static_cast<int>(leaf_count + step);
    dendrogram.merges.push_back({best_pair.first, best_pair.second, best, n_i + n_j});

    // Lance-Williams update for Ward's coefficients.
    const double d_ij = best;
    for (const auto& other : active) {
      if (other.node_id == best_pair.first || other.node_id == best_pair.second) continue;
      const double d_ik = distance_of(best_pair.first, other.node_id);
      const double d_jk = distance_of(best_pair.second, other.node_id);
      const double n_k = static_cast<double>(other.size);
      const double updated =
          ((static_cast<double>(n_i) + n_k) * d_ik + (static_cast<double>(n_j) + n_k) * d_jk -
           n_k * d_ij) /
          (static_cast<double>(n_i + n_j) + n_k);
      dist[{std::min(new_id, other.node_id), std::max(new_id, other.node_id)}] = updated;
    }
    active.erase(it_j);
    active.erase(find_active(best_pair.first));
    active.push_back({new_id, n_i + n_j});
  }
  return dendrogram;
}

CladeCut cut_threshold(const Dendrogram& dendrogram, double t) {
  if (!(t > 0.0)) throw std::invalid_argument("cut_threshold: threshold must be positive");
  // Ward's linkage is monotone, so merges below t form a prefix.
  std::size_t applied = 0;
  while (applied < dendrogram.merges.size() && dendrogram.merges[applied].distance < t) ++applied;
  CladeCut cut = components_to_cut(dendrogram, applied);
  cut.threshold = t;
  return cut;
}

CladeCut cut_n_clades(const Dendrogram& dendrogram, int k) {
  const auto leaf_count = dendrogram.leaf_topic_ids.size();
  if (k < 1) throw std::invalid_argument("cut_n_clades: n_clades must be >= 1");
  if (static_cast<std::size_t>(k) > leaf_count) {
    throw std::invalid_argument("cut_n_clades: n_clades " + std::to_string(k) +
                                " exceeds the leaf count " + std::to_string(leaf_count));
  }
  CladeCut cut = components_to_cut(dendrogram, leaf_count - static_cast<std::size_t>(k));
  cut.n_clades = k;
  return cut;
}

TopicSentiments assign_clade_sentiments(const CladeCut& cut, const SentimentAssignment& assignment,
                                        bool strict) {
  TopicSentiments result;
  result.clades = cut.clades;

  std::set<int> known;
  for (const auto& clade : result.clades) known.insert(clade.clade_id);
  for (const auto& [clade_id, sentiment] : assignment.clade_sentiments) {
    if (!known.count(clade_id)) {
      throw std::invalid_argument("sentiment assignment references unknown clade_id " +
                                  std::to_string(clade_id));
    }
    if (sentiment == Sentiment::kUnassigned) {
      throw std::invalid_argument("clade " + std::to_string(clade_id) +
                                  " must be assigned positive, negative, or excluded");
    }
  }

  for (auto& clade : result.clades) {
    auto it = assignment.clade_sentiments.find(clade.clade_id);
    if (it == assignment.clade_sentiments.end()) {
      if (strict) {
        throw std::invalid_argument("clade " + std::to_string(clade.clade_id) +
                                    " has no sentiment assignment (strict mode)");
      }
      ++result.unassigned_clades;
      continue;
    }
    clade.sentiment = it->second;
  }

  for (const auto& clade : result.clades) {
    for (int topic_id : clade.member_topic_ids) {
      Sentiment resolved = clade.sentiment;
      if (auto ov = assignment.topic_overrides.find(topic_id);
          ov != assignment.topic_overrides.end()) {
        resolved = ov->second;
      } else if (assignment.excluded_topics.count(topic_id)) {
        resolved = Sentiment::kExcluded;
      }
      result.by_topic[topic_id] = resolved;
    }
  }
  return result;
}

PropagationResult propagate_labels(const TopicSentiments& sentiments, const TopicModel& model) {
  PropagationResult result;
  // Topics absent from the cut (excluded before clustering) count as excluded.
  for (const auto& topic : model.topics) {
    auto it = sentiments.by_topic.find(topic.topic_id);
    const Sentiment s = it == sentiments.by_topic.end() ? Sentiment::kExcluded : it->second;
    switch (s) {
      case Sentiment::kPositive:
      case Sentiment::kNegative:
        for (const auto& id : topic.member_ids) result.labels.emplace_back(id, s);
        (s == Sentiment::kPositive ? result.positive_count : result.negative_count) +=
            topic.member_ids.size();
        break;
      case Sentiment::kExcluded:
        result.excluded_comments += topic.member_ids.size();
        break;
      case Sentiment::kUnassigned:
        result.unassigned_comments += topic.member_ids.size();
        break;
    }
  }
  result.excluded_comments += model.outlier.member_ids.size();
  return result;
}

namespace {

std::map<int, Sentiment> load_sentiment_csv(const std::filesystem::path& path,
                                            const std::string& id_header) {
  std::map<int, Sentiment> out;
  detail::for_each_line(path, [&](std::size_t lineno, const std::string& line) {
    if (line.empty()) return;
    const auto comma = line.find(',');
    if (comma == std::string::npos) {
      throw std::runtime_error(path.string() + " line " + std::to_string(lineno) +
                               ": expected \"" + id_header + ",sentiment\"");
    }
    const std::string id_text = line.substr(0, comma);
    if (lineno == 1 && id_text == id_header) return;
    try {
      out[std::stoi(id_text)] = parse_sentiment(line.substr(comma + 1));
    } catch (const std::invalid_argument& e) {
      throw std::runtime_error(path.string() + " line " + std::to_string(lineno) + ": " + e.what());
    }
  });
  return out;
}

}  // namespace

std::map<int, Sentiment> load_clade_sentiments(const std::filesystem::path& path) {
  return load_sentiment_csv(path, "clade_id");
}

std::map<int, Sentiment> load_topic_overrides(const std::filesystem::path& path) {
  return load_sentiment_csv(path, "topic_id");
}

}  // namespace vertebrate
