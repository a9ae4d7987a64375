// TF-IDF vectorization over tokenized documents, sparse document vectors,
// and cosine similarity.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace vertebrate {

// Terms are sorted lexicographically, which pins index assignment.
struct Vocabulary {
  std::vector<std::string> terms;
  std::vector<std::int64_t> df;  // document frequency per term, aligned with terms
  std::int64_t n_docs = 0;

  // Returns -1 when the term is out of vocabulary.
  std::int32_t index_of(const std::string& term) const;
  double idf(std::size_t term_index) const;  // ln((1 + n_docs) / (1 + df)) + 1
};

// Sparse vector, entries sorted by term index.
struct DocVector {
  std::string doc_id;
  std::vector<std::pair<std::int32_t, double>> values;
  double norm = 0.0;  // L2 norm before normalization; 0 for all-zero vectors
};

Vocabulary fit_tfidf(const std::vector<std::vector<std::string>>& token_lists);

// value(t) = tf(t) * idf(t), then L2-normalized. OOV tokens are ignored;
// an all-OOV document yields an empty vector with norm 0.
DocVector transform_tfidf(const std::vector<std::string>& tokens, const Vocabulary& vocab);

double sparse_dot(const DocVector& a, const DocVector& b);
double sparse_squared_distance(const DocVector& a, const DocVector& b);

double cosine_similarity(const std::vector<double>& a, const std::vector<double>& b);

}  // namespace vertebrate
