#include "vertebrate/tfidf.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

namespace vertebrate {

std::int32_t Vocabulary::index_of(const std::string& term) const {
  auto it = std::lower_bound(terms.begin(), terms.end(), term);
  if (it == terms.end() || *it != term) return -1;
  return static_cast<std::int32_t>(it - terms.begin());
}

double Vocabulary::idf(std::size_t term_index) const {
  return std::log((1.0 + static_cast<double>(n_docs)) /
                  (1.0 + static_cast<double>(df[term_index]))) +
         1.0;
}

Vocabulary fit_tfidf(const std::vector<std::vector<std::string>>& token_lists) {
  bool any_token = false;
  std::map<std::string, std::int64_t> doc_freq;
  for (const auto& tokens : token_lists) {
    std::map<std::string, bool> seen;
    for (const auto& t : tokens) {
      any_token = true;
      if (!seen[t]) {
        seen[t] = true;
        ++doc_freq[t];
      }
    }
  }
  if (token_lists.empty() || !any_token) {
    throw std::invalid_argument("tfidf requires at least one document with at least one token");
  }
  Vocabulary vocab;
  vocab.n_docs = static_cast<std::int64_t>(token_lists.size());
  vocab.terms.reserve(doc_freq.size());
  vocab.df.reserve(doc_freq.size());
  for (const auto& [term, df] : doc_freq) {
    vocab.terms.push_back(term);
    vocab.df.push_back(df);
  }
  return vocab;
}

DocVector transform_tfidf(const std::vector<std::string>& tokens, const Vocabulary& vocab) {
  std::map<std::int32_t, double> tf;
  for (const auto& t : tokens) {
    const auto idx = vocab.index_of(t);
    if (idx >= 0) tf[idx] += 1.0;
  }
  DocVector vec;
  vec.values.reserve(tf.size());
  double sumsq = 0.0;
  for (const auto& [idx, count] : tf) {
    const double value = count * vocab.idf(static_cast<std::size_t>(idx));
    vec.values.emplace_back(idx, value);
    sumsq += value * value;
  }
  vec.norm = std::sqrt(sumsq);
  if (vec.norm > 0.0) {
    for (auto& [idx, value] : vec.values) value /= vec.norm;
  }
  return vec;
}

double sparse_dot(const DocVector& a, const DocVector& b) {
  double dot = 0.0;
  std::size_t i = 0, j = 0;
  while (i < a.values.size() && j < b.values.size()) {
    if (a.values[i].first < b.values[j].first) {
      ++i;
    } else if (a.values[i].first > b.values[j].first) {
      ++j;
    } else {
      dot += a.values[i].second * b.values[j].second;
      ++i;
      ++j;
    }
  }
  return dot;
}

double sparse_squared_distance(const DocVector& a, const DocVector& b) {
  double sum = 0.0;
  std::size_t i = 0, j = 0;
  while (i < a.values.size() || j < b.values.size()) {
    if (j >= b.values.size() || (i < a.values.size() && a.values[i].first < b.values[j].first)) {
      sum += a.values[i].second * a.values[i].second;
      ++i;
    } else if (i >= a.values.size() || b.values[j].first < a.values[i].first) {
      sum += b.values[j].second * b.values[j].second;
      ++j;
    } else {
      const double d = a.values[i].second - b.values[j].second;
      sum += d * d;
      ++i;
      ++j;
    }
  }
  return sum;
}

double cosine_similarity(const std::vector<double>& a, const std::vector<double>& b) {
  if (a.size() != b.size()) throw std::invalid_argument("cosine: dimension mismatch");
  double dot = 0.0, na = 0.0, nb = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    dot += a[i] * b[i];
    na += a[i] * a[i];
    nb += b[i] * b[i];
  }
  if (na == 0.0 || nb == 0.0) throw std::invalid_argument("cosine: zero vector");
  return dot / (std::sqrt(na) * std::sqrt(nb));
}

}  // namespace vertebrate
