#pragma once

#include <string>

namespace vertebrate {

enum class Sentiment { kPositive, kNegative, kExcluded, kUnassigned };

std::string sentiment_name(Sentiment s);

// Accepts "positive", "negative", or "excluded".
Sentiment parse_sentiment(const std::string& name);

}  // namespace vertebrate
