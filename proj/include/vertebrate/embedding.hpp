// Document embeddings via pluggable providers: a precomputed-vector file,
// an HTTP embedding service, or a built-in TF-IDF -> PCA fallback.
#pragma once

#include <filesystem>
#include <memory>
#include <string>
#include <vector>

#include "vertebrate/corpus.hpp"
#include "vertebrate/pca.hpp"
#include "vertebrate/tfidf.hpp"

namespace vertebrate {

struct EmbeddingMatrix {
  std::vector<std::string> ids;
  std::size_t dim = 0;
  std::vector<std::vector<double>> rows;  // aligned with ids

  std::size_t size() const { return ids.size(); }
};

// Centers and projects every row onto the top out_dim principal components.
EmbeddingMatrix pca_reduce(const EmbeddingMatrix& matrix, std::size_t out_dim);

class EmbeddingError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class EmbeddingProvider {
 public:
  virtual ~EmbeddingProvider() = default;

  // One row per comment, in corpus order.
  virtual EmbeddingMatrix embed_corpus(const std::vector<Comment>& comments) = 0;

  // Embeds free-standing texts (e.g. brand names). Providers that cannot
  // embed arbitrary text throw EmbeddingError.
  virtual std::vector<std::vector<double>> embed_texts(const std::vector<std::string>& texts) = 0;

  virtual std::string name() const = 0;
};

// Reads newline-delimited JSON {"id": str, "vector": [float, ...]}.
// embed_corpus fails with a message listing every comment id that has no
// vector; records with inconsistent dimensions are an error.
class FileEmbeddingProvider : public EmbeddingProvider {
 public:
  explicit FileEmbeddingProvider(std::filesystem::path path);
  EmbeddingMatrix embed_corpus(const std::vector<Comment>& comments) override;
  std::vector<std::vector<double>> embed_texts(const std::vector<std::string>& texts) override;
  std::string name() const override { return "file"; }

 private:
  std::filesystem::path path_;
};

// POST {base_url}/embed with {"texts": [...]} -> {"vectors": [[...], ...]},
// order-aligned, issued in batches.
class HttpEmbeddingProvider : public EmbeddingProvider {
 public:
  HttpEmbeddingProvider(std::string base_url, int timeout_ms = 5000, int batch_size = 64);
  EmbeddingMatrix embed_corpus(const std::vector<Comment>& comments) override;
  std::vector<std::vector<double>> embed_texts(const std::vector<std::string>& texts) override;
  std::string name() const override { return "http"; }

 private:
  std::string base_url_;
  int timeout_ms_;
  int batch_size_;
};

// Self-contained fallback: TF-IDF over the corpus tokens, reduced with PCA
// to a fixed output dimension. Intended for modest corpora (the PCA fit
// densifies the TF-IDF matrix).
class BuiltinEmbeddingProvider : public EmbeddingProvider {
 public:
  explicit BuiltinEmbeddingProvider(std::size_t out_dim = 8);
  EmbeddingMatrix embed_corpus(const std::vector<Comment>& comments) override;
  std::vector<std::vector<double>> embed_texts(const std::vector<std::string>& texts) override;
  std::string name() const override { return "builtin"; }

  bool fitted() const { return fitted_; }

 private:
  std::vector<double> densify(const std::vector<std::string>& tokens) const;

  std::size_t out_dim_;
  bool fitted_ = false;
  Vocabulary vocab_;
  PcaModel pca_;
};

struct EmbeddingProviderConfig {
  std::string kind = "builtin";  // "file" | "http" | "builtin"
  std::filesystem::path file;
  std::string service_url;
  int timeout_ms = 5000;
  int batch_size = 64;
  std::size_t builtin_dim = 8;
};

std::unique_ptr<EmbeddingProvider> make_embedding_provider(const EmbeddingProviderConfig& config);

}  // namespace vertebrate
