#include "vertebrate/embedding.hpp"

#include <httplib.h>
#include <json.hpp>

#include <algorithm>
#include <sstream>
#include <unordered_map>

#include "line_io.hpp"

namespace vertebrate {

namespace {

using nlohmann::json;

const std::string& text_of(const Comment& c) {
  return c.clean_text.empty() ? c.raw_text : c.clean_text;
}

}  // namespace

EmbeddingMatrix pca_reduce(const EmbeddingMatrix& matrix, std::size_t out_dim) {
  EmbeddingMatrix out;
  out.ids = matrix.ids;
  out.rows = pca_reduce_rows(matrix.rows, out_dim);
  out.dim = out_dim;
  return out;
}

FileEmbeddingProvider::FileEmbeddingProvider(std::filesystem::path path) : path_(std::move(path)) {}

EmbeddingMatrix FileEmbeddingProvider::embed_corpus(const std::vector<Comment>& comments) {
  std::unordered_map<std::string, std::vector<double>> vectors;
  std::size_t dim = 0;
  detail::for_each_line(path_, [&](std::size_t lineno, const std::string& line) {
    if (line.empty()) return;
    json record = json::parse(line, nullptr, false);
    if (record.is_discarded() || !record.is_object() || !record.contains("id") ||
        !record.contains("vector") || !record["vector"].is_array()) {
      throw EmbeddingError("embedding file line " + std::to_string(lineno) +
                           ": expected {\"id\": str, \"vector\": [...]}");
    }
    std::vector<double> vec = record["vector"].get<std::vector<double>>();
    if (dim == 0) {
      dim = vec.size();
    } else if (vec.size() != dim) {
      throw EmbeddingError("embedding file line " + std::to_string(lineno) +
                           ": vector length " + std::to_string(vec.size()) +
                           " differs from established dimension " + std::to_string(dim));
    }
    vectors[record["id"].get<std::string>()] = std::move(vec);
  });
  if (dim == 0) throw EmbeddingError("embedding file " + path_.string() + " contains no vectors");

  std::vector<std::string> missing;
  EmbeddingMatrix matrix;
  matrix.dim = dim;
  matrix.ids.reserve(comments.size());
  matrix.rows.reserve(comments.size());
  for (const auto& c : comments) {
    auto it = vectors.find(c.id);
    if (it == vectors.end()) {
      missing.push_back(c.id);
      continue;
    }
    matrix.ids.push_back(c.id);
    matrix.rows.push_back(it->second);
  }
  if (!missing.empty()) {
    std::ostringstream msg;
    msg << "embedding file is missing " << missing.size() << " comment id(s):";
    const std::size_t shown = std::min<std::size_t>(missing.size(), 20);
    for (std::size_t i = 0; i < shown; ++i) msg << ' ' << missing[i];
    if (shown < missing.size()) msg << " ...";
    throw EmbeddingError(msg.str());
  }
  return matrix;
}

std::vector<std::vector<double>> FileEmbeddingProvider::embed_texts(const std::vector<std::string>&) {
  throw EmbeddingError("the file embedding provider cannot embed free-standing texts");
}

HttpEmbeddingProvider::HttpEmbeddingProvider(std::string base_url, int timeout_ms, int batch_size)
    : base_url_(std::move(base_url)), timeout_ms_(timeout_ms), batch_size_(std::max(1, batch_size)) {}

std::vector<std::vector<double>> HttpEmbeddingProvider::embed_texts(
    const std::vector<std::string>& texts) {
  httplib::Client client(base_url_);
  client.set_connection_timeout(0, timeout_ms_ * 1000);
  client.set_read_timeout(timeout_ms_ / 1000, (timeout_ms_ % 1000) * 1000);

  std::vector<std::vector<double>> vectors;
  vectors.reserve(texts.size());
  std::size_t dim = 0;
  for (std::size_t start = 0; start < texts.size(); start += static_cast<std::size_t>(batch_size_)) {
    const std::size_t stop = std::min(texts.size(), start + static_cast<std::size_t>(batch_size_));
    json body;
    body["texts"] = std::vector<std::string>(texts.begin() + static_cast<std::ptrdiff_t>(start),
                                             texts.begin() + static_cast<std::ptrdiff_t>(stop));
    auto res = client.Post("/embed", body.dump(), "application/json");
    if (!res) {
      throw EmbeddingError("embedding service unreachable at " + base_url_ + "/embed");
    }
    if (res->status != 200) {
      throw EmbeddingError("embedding service returned HTTP " + std::to_string(res->status));
    }
    json reply = json::parse(res->body, nullptr, false);
    if (reply.is_discarded() || !reply.contains("vectors") || !reply["vectors"].is_array()) {
      throw EmbeddingError("embedding service reply is missing the \"vectors\" array");
    }
    const auto& batch = reply["vectors"];
    if (batch.size() != stop - start) {
      throw EmbeddingError("embedding service returned " + std::to_string(batch.size()) +
                           " vectors for a batch of " + std::to_string(stop - start));
    }
    for (const auto& v : batch) {
      std::vector<double> vec = v.get<std::vector<double>>();
      if (dim == 0) {
        dim = vec.size();
      } else if (vec.size() != dim) {
        throw EmbeddingError("embedding service returned vectors of mixed dimensions");
      }
      vectors.push_back(std::move(vec));
    }
  }
  return vectors;
}

EmbeddingMatrix HttpEmbeddingProvider::embed_corpus(const std::vector<Comment>& comments) {
  std::vector<std::string> texts;
  texts.reserve(comments.size());
  for (const auto& c : comments) texts.push_back(text_of(c));
  EmbeddingMatrix matrix;
  matrix.rows = embed_texts(texts);
  matrix.dim = matrix.rows.empty() ? 0 : matrix.rows[0].size();
  matrix.ids.reserve(comments.size());
  for (const auto& c : comments) matrix.ids.push_back(c.id);
  return matrix;
}

BuiltinEmbeddingProvider::BuiltinEmbeddingProvider(std::size_t out_dim) : out_dim_(out_dim) {}

std::vector<double> BuiltinEmbeddingProvider::densify(const std::vector<std::string>& tokens) const {
  const DocVector sparse = transform_tfidf(tokens, vocab_);
  std::vector<double> dense(vocab_.terms.size(), 0.0);
  for (const auto& [idx, value] : sparse.values) dense[static_cast<std::size_t>(idx)] = value;
  return dense;
}

EmbeddingMatrix BuiltinEmbeddingProvider::embed_corpus(const std::vector<Comment>& comments) {
  std::vector<std::vector<std::string>> token_lists;
  token_lists.reserve(comments.size());
  for (const auto& c : comments) token_lists.push_back(tokenize(text_of(c)));
  vocab_ = fit_tfidf(token_lists);

  std::vector<std::vector<double>> dense;
  dense.reserve(comments.size());
  for (const auto& tokens : token_lists) {
    DocVector sparse = transform_tfidf(tokens, vocab_);
    std::vector<double> row(vocab_.terms.size(), 0.0);
    for (const auto& [idx, value] : sparse.values) row[static_cast<std::size_t>(idx)] = value;
    dense.push_back(std::move(row));
  }
  const std::size_t dim = std::min(out_dim_, vocab_.terms.size());
  pca_ = fit_pca(dense, dim);
  fitted_ = true;

  EmbeddingMatrix matrix;
  matrix.dim = dim;
  matrix.ids.reserve(comments.size());
  matrix.rows.reserve(comments.size());
  for (std::size_t i = 0; i < comments.size(); ++i) {
    matrix.ids.push_back(comments[i].id);
    matrix.rows.push_back(pca_transform(pca_, dense[i]));
  }
  return matrix;
}

std::vector<std::vector<double>> BuiltinEmbeddingProvider::embed_texts(
    const std::vector<std::string>& texts) {
  if (!fitted_) {
    throw EmbeddingError("builtin embedding provider must embed a corpus before free-standing texts");
  }
  std::vector<std::vector<double>> out;
  out.reserve(texts.size());
  for (const auto& text : texts) out.push_back(pca_transform(pca_, densify(tokenize(text))));
  return out;
}

std::unique_ptr<EmbeddingProvider> make_embedding_provider(const EmbeddingProviderConfig& config) {
  if (config.kind == "file") return std::make_unique<FileEmbeddingProvider>(config.file);
  if (config.kind == "http") {
    if (config.service_url.empty()) throw EmbeddingError("http embedding provider needs a service url");
    return std::make_unique<HttpEmbeddingProvider>(config.service_url, config.timeout_ms,
                                                   config.batch_size);
  }
  if (config.kind == "builtin") return std::make_unique<BuiltinEmbeddingProvider>(config.builtin_dim);
  throw EmbeddingError("unknown embedding provider kind \"" + config.kind + "\"");
}

}  // namespace vertebrate
