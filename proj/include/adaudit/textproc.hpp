#pragma once

#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace adaudit {

// Token -> occurrence count. Keys are unigrams plus adjacent-pair bigrams
// (the two unigrams joined by a single space). Ordered so iteration and
// serialization are deterministic.
using BagOfWords = std::map<std::string, int>;

// Lowercases and splits on every character that is not a letter or digit.
// Tokens keep their original order; no stemming, lemmatization or stop-word
// removal. Letter/digit classification is Unicode-aware for the scripts that
// show up in ad copy (Latin incl. accents, Greek, Cyrillic, CJK), so accented
// words survive as single tokens. Total function: malformed UTF-8 bytes act
// as separators.
std::vector<std::string> tokenize(std::string_view text);

// Counts each unigram and each adjacent-pair bigram of the token list.
BagOfWords vectorize(const std::vector<std::string>& tokens);

// True when `phrase` occurs as a contiguous run inside `tokens`.
// Token-level containment, never substring: {"job"} does not match "jobless".
bool contains_phrase(std::span<const std::string> tokens,
                     std::span<const std::string> phrase);

}  // namespace adaudit
