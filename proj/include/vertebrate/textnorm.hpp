// UTF-8 text normalization: codepoint iteration, punctuation/emoji
// classification, and lowercasing used by the corpus preprocessor.
#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace vertebrate {

// Decodes UTF-8 into codepoints. Invalid byte sequences decode to U+FFFD,
// one replacement per bad byte, so the scan always makes progress.
std::vector<char32_t> utf8_decode(std::string_view text);

std::string utf8_encode(const std::vector<char32_t>& codepoints);
void utf8_append(std::string& out, char32_t cp);

// Unicode general-category P (frozen table, UCD 13.0).
bool is_punctuation(char32_t cp);

// Emoji blocks stripped by the preprocessor: Emoticons, Misc Symbols and
// Pictographs, Transport and Map, Supplemental Symbols and Pictographs,
// plus variation selectors and the zero-width joiner.
bool is_emoji(char32_t cp);

bool is_whitespace(char32_t cp);

// ASCII A-Z plus the Latin-1 uppercase range; other scripts pass through.
char32_t to_lower(char32_t cp);

std::string lowercase(std::string_view text);

}  // namespace vertebrate
