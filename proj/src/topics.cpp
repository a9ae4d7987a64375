#include "vertebrate/topics.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <stdexcept>
#include <unordered_map>

#include "line_io.hpp"

namespace vertebrate {

namespace {

double squared_distance(const std::vector<double>& a, const std::vector<double>& b) {
  double sum = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double d = a[i] - b[i];
    sum += d * d;
  }
  return sum;
}

}  // namespace

const Topic* TopicModel::find(int topic_id) const {
  if (topic_id == kOutlierTopicId) return &outlier;
  for (const auto& t : topics) {
    if (t.topic_id == topic_id) return &t;
  }
  return nullptr;
}

TopicModel fit_topics(const EmbeddingMatrix& cluster_space, const EmbeddingMatrix& full,
                      double eps, int min_members) {
  const std::size_t n = cluster_space.size();
  if (n == 0) throw std::invalid_argument("fit_topics: empty embedding matrix");
  if (full.size() != n) throw std::invalid_argument("fit_topics: matrices are not aligned");
  if (!(eps > 0.0)) throw std::invalid_argument("fit_topics: eps must be positive");
  if (min_members < 2) throw std::invalid_argument("fit_topics: min_members must be >= 2");

  const double eps_sq = eps * eps;
  std::vector<std::vector<std::int32_t>> neighbors(n);
  for (std::size_t i = 0; i < n; ++i) {
    neighbors[i].push_back(static_cast<std::int32_t>(i));
    for (std::size_t j = i + 1; j < n; ++j) {
      if (squared_distance(cluster_space.rows[i], cluster_space.rows[j]) <= eps_sq) {
        neighbors[i].push_back(static_cast<std::int32_t>(j));
        neighbors[j].push_back(static_cast<std::int32_t>(i));
      }
    }
  }
  std::vector<bool> core(n);
  for (std::size_t i = 0; i < n; ++i) {
    core[i] = neighbors[i].size() >= static_cast<std::size_t>(min_members);
  }

  // Components of core points; cluster ids in input order of first core point.
  std::vector<int> label(n, kOutlierTopicId);
  int next_id = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (!core[i] || label[i] != kOutlierTopicId) continue;
    const int id = next_id++;
    std::deque<std::int32_t> frontier{static_cast<std::int32_t>(i)};
    label[i] = id;
    while (!frontier.empty()) {
      const auto p = frontier.front();
      frontier.pop_front();
      for (auto q : neighbors[static_cast<std::size_t>(p)]) {
        if (core[static_cast<std::size_t>(q)] && label[static_cast<std::size_t>(q)] == kOutlierTopicId) {
          label[static_cast<std::size_t>(q)] = id;
          frontier.push_back(q);
        }
      }
    }
  }
  // Border points join the cluster of their lowest-index core neighbor
  // (neighbor lists are built in ascending index order).
  for (std::size_t i = 0; i < n; ++i) {
    if (core[i]) continue;
    for (auto q : neighbors[i]) {
      if (core[static_cast<std::size_t>(q)]) {
        label[i] = label[static_cast<std::size_t>(q)];
        break;
      }
    }
  }

  TopicModel model;
  model.params.eps = eps;
  model.params.min_members = min_members;
  model.total_comments = n;
  model.topics.resize(static_cast<std::size_t>(next_id));
  for (int t = 0; t < next_id; ++t) model.topics[static_cast<std::size_t>(t)].topic_id = t;
  model.outlier.topic_id = kOutlierTopicId;

  const std::size_t dim = full.dim;
  std::vector<std::vector<double>> sums(static_cast<std::size_t>(next_id) + 1,
                                        std::vector<double>(dim, 0.0));
  for (std::size_t i = 0; i < n; ++i) {
    Topic& topic = label[i] == kOutlierTopicId ? model.outlier
                                               : model.topics[static_cast<std::size_t>(label[i])];
    topic.member_ids.push_back(cluster_space.ids[i]);
    auto& sum = label[i] == kOutlierTopicId ? sums.back() : sums[static_cast<std::size_t>(label[i])];
    for (std::size_t d = 0; d < dim; ++d) sum[d] += full.rows[i][d];
  }
  auto set_centroid = [&](Topic& topic, const std::vector<double>& sum) {
    if (topic.member_ids.empty()) return;
    topic.centroid.assign(dim, 0.0);
    const double inv = 1.0 / static_cast<double>(topic.member_ids.size());
    for (std::size_t d = 0; d < dim; ++d) topic.centroid[d] = sum[d] * inv;
  };
  for (int t = 0; t < next_id; ++t) {
    set_centroid(model.topics[static_cast<std::size_t>(t)], sums[static_cast<std::size_t>(t)]);
  }
  set_centroid(model.outlier, sums.back());
  return model;
}

TopicModel fit_topics(const EmbeddingMatrix& matrix, double eps, int min_members) {
  return fit_topics(matrix, matrix, eps, min_members);
}

void compute_topic_terms(TopicModel& model, const std::vector<std::string>& doc_ids,
                         const std::vector<std::vector<std::string>>& token_lists, int top_terms) {
  if (doc_ids.size() != token_lists.size()) {
    throw std::invalid_argument("compute_topic_terms: ids and token lists are not aligned");
  }
  if (top_terms < 1) throw std::invalid_argument("compute_topic_terms: top_terms must be >= 1");
  std::unordered_map<std::string, const std::vector<std::string>*> tokens_by_id;
  tokens_by_id.reserve(doc_ids.size());
  for (std::size_t i = 0; i < doc_ids.size(); ++i) tokens_by_id[doc_ids[i]] = &token_lists[i];

  std::vector<Topic*> classes;
  for (auto& t : model.topics) {
    if (!t.member_ids.empty()) classes.push_back(&t);
  }
  if (!model.outlier.member_ids.empty()) classes.push_back(&model.outlier);
  if (classes.empty()) return;

  std::vector<std::map<std::string, std::int64_t>> tf(classes.size());
  std::map<std::string, std::int64_t> corpus_tf;
  double total_tokens = 0.0;
  for (std::size_t c = 0; c < classes.size(); ++c) {
    for (const auto& id : classes[c]->member_ids) {
      auto it = tokens_by_id.find(id);
      if (it == tokens_by_id.end()) {
        throw std::invalid_argument("compute_topic_terms: no token list for comment id \"" + id +
                                    "\"");
      }
      for (const auto& token : *it->second) {
        ++tf[c][token];
        ++corpus_tf[token];
        total_tokens += 1.0;
      }
    }
  }
  const double avg_tokens_per_class = total_tokens / static_cast<double>(classes.size());

  for (std::size_t c = 0; c < classes.size(); ++c) {
    std::vector<TermWeight> weights;
    weights.reserve(tf[c].size());
    for (const auto& [token, count] : tf[c]) {
      const double weight =
          static_cast<double>(count) *
          std::log(1.0 + avg_tokens_per_class / static_cast<double>(corpus_tf[token]));
      weights.push_back({token, weight});
    }
    // Map order gives lexicographic ties after the stable sort by weight.
    std::stable_sort(weights.begin(), weights.end(),
                     [](const TermWeight& a, const TermWeight& b) { return a.weight > b.weight; });
    if (weights.size() > static_cast<std::size_t>(top_terms)) {
      weights.resize(static_cast<std::size_t>(top_terms));
    }
    classes[c]->terms = std::move(weights);
  }
}

std::vector<TopicShare> topic_shares(const TopicModel& model, std::size_t total) {
  if (total == 0) throw std::invalid_argument("topic_shares: total must be positive");
  std::vector<TopicShare> shares;
  shares.reserve(model.topics.size() + 1);
  auto add = [&](const Topic& t) {
    TopicShare s;
    s.topic_id = t.topic_id;
    s.count = t.member_ids.size();
    s.percentage = 100.0 * static_cast<double>(s.count) / static_cast<double>(total);
    shares.push_back(s);
  };
  for (const auto& t : model.topics) add(t);
  add(model.outlier);
  std::stable_sort(shares.begin(), shares.end(), [](const TopicShare& a, const TopicShare& b) {
    if (a.count != b.count) return a.count > b.count;
    return a.topic_id < b.topic_id;
  });
  return shares;
}

std::vector<TemporalSeries> temporal_distribution(const TopicModel& model,
                                                  const std::vector<Comment>& comments,
                                                  TimeBin bin, const std::set<int>& topic_ids) {
  if (comments.empty()) return {};
  for (int id : topic_ids) {
    if (model.find(id) == nullptr) {
      throw std::invalid_argument("temporal_distribution: unknown topic_id " + std::to_string(id));
    }
  }
  std::unordered_map<std::string, std::int64_t> day_by_id;
  std::int64_t min_day = utc_day_index(comments[0].timestamp);
  std::int64_t max_day = min_day;
  for (const auto& c : comments) {
    const auto day = utc_day_index(c.timestamp);
    day_by_id[c.id] = day;
    min_day = std::min(min_day, day);
    max_day = std::max(max_day, day);
  }
  // 1970-01-01 is a Thursday; normalize to Monday-indexed weekdays.
  const auto monday_of = [](std::int64_t day) {
    const std::int64_t weekday = ((day % 7) + 7 + 3) % 7;
    return day - weekday;
  };
  const std::int64_t step = bin == TimeBin::kDay ? 1 : 7;
  const std::int64_t first = bin == TimeBin::kDay ? min_day : monday_of(min_day);
  std::vector<std::int64_t> bin_starts;
  for (std::int64_t start = first; start <= max_day; start += step) bin_starts.push_back(start);

  std::vector<TemporalSeries> out;
  for (int id : topic_ids) {
    const Topic* topic = model.find(id);
    TemporalSeries series;
    series.topic_id = id;
    series.bin = bin;
    std::vector<std::size_t> counts(bin_starts.size(), 0);
    for (const auto& member : topic->member_ids) {
      auto it = day_by_id.find(member);
      if (it == day_by_id.end()) continue;
      const auto offset = static_cast<std::size_t>((it->second - first) / step);
      ++counts[offset];
    }
    series.bins.reserve(bin_starts.size());
    for (std::size_t b = 0; b < bin_starts.size(); ++b) {
      series.bins.emplace_back(civil_from_days(bin_starts[b]), counts[b]);
    }
    out.push_back(std::move(series));
  }
  return out;
}

void apply_topic_names(TopicModel& model, const std::map<int, std::string>& names) {
  for (auto& t : model.topics) {
    if (auto it = names.find(t.topic_id); it != names.end()) t.name = it->second;
  }
  if (auto it = names.find(kOutlierTopicId); it != names.end()) model.outlier.name = it->second;
}

std::map<int, std::string> load_topic_names(const std::filesystem::path& path) {
  std::map<int, std::string> names;
  detail::for_each_line(path, [&](std::size_t lineno, const std::string& line) {
    if (line.empty()) return;
    const auto comma = line.find(',');
    if (comma == std::string::npos) {
      throw std::runtime_error("topic-name file line " + std::to_string(lineno) +
                               ": expected \"topic_id,name\"");
    }
    const std::string id_text = line.substr(0, comma);
    if (lineno == 1 && id_text == "topic_id") return;  // header
    try {
      names[std::stoi(id_text)] = line.substr(comma + 1);
    } catch (const std::exception&) {
      throw std::runtime_error("topic-name file line " + std::to_string(lineno) +
                               ": \"" + id_text + "\" is not a topic id");
    }
  });
  return names;
}

std::string display_name(const Topic& topic) {
  if (!topic.name.empty()) return topic.name;
  if (topic.topic_id == kOutlierTopicId) return "outlier";
  std::string name;
  const std::size_t shown = std::min<std::size_t>(topic.terms.size(), 3);
  for (std::size_t i = 0; i < shown; ++i) {
    if (i > 0) name += ", ";
    name += topic.terms[i].token;
  }
  return name.empty() ? ("topic " + std::to_string(topic.topic_id)) : name;
}

}  // namespace vertebrate
