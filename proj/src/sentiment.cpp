#include "vertebrate/sentiment.hpp"

#include <stdexcept>

namespace vertebrate {

std::string sentiment_name(Sentiment s) {
  switch (s) {
    case Sentiment::kPositive: return "positive";
    case Sentiment::kNegative: return "negative";
    case Sentiment::kExcluded: return "excluded";
    case Sentiment::kUnassigned: return "unassigned";
  }
  return "unassigned";
}

Sentiment parse_sentiment(const std::string& name) {
  if (name == "positive") return Sentiment::kPositive;
  if (name == "negative") return Sentiment::kNegative;
  if (name == "excluded") return Sentiment::kExcluded;
  throw std::invalid_argument("unknown sentiment \"" + name +
                              "\" (expected positive, negative, or excluded)");
}

}  // namespace vertebrate
