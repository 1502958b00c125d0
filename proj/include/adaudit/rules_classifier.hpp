#pragma once

#include <map>
#include <set>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "adaudit/core_model.hpp"

namespace adaudit {

// Curated unigram/bigram list attached to one class or sub-class label.
struct TermTopicVector {
    std::string label;
    // Each term as its tokenized form: one or two tokens.
    std::vector<std::vector<std::string>> terms;
};

// Compiled term-topic vectors with token-level lookup indexes. Immutable
// after compile_rules; matching is pure and concurrent-read safe.
class RuleSet {
public:
    std::map<AdClass, TermTopicVector> class_vectors;           // Other never appears
    std::map<CreditSubclass, TermTopicVector> subclass_vectors; // OtherCredit never appears

    void rebuild_index();

    const std::set<AdClass>* classes_for_unigram(const std::string& token) const;
    const std::set<AdClass>* classes_for_bigram(const std::string& pair) const;
    const std::set<CreditSubclass>* subclasses_for_unigram(const std::string& token) const;
    const std::set<CreditSubclass>* subclasses_for_bigram(const std::string& pair) const;

private:
    std::unordered_map<std::string, std::set<AdClass>> unigram_classes_;
    std::unordered_map<std::string, std::set<AdClass>> bigram_classes_;
    std::unordered_map<std::string, std::set<CreditSubclass>> unigram_subclasses_;
    std::unordered_map<std::string, std::set<CreditSubclass>> bigram_subclasses_;
};

// Builds a RuleSet from rules config documents mapping label -> array of term
// strings, e.g. {"credit": ["loan", "credit card"]}. Terms are validated
// against the tokenizer: anything that does not tokenize to exactly one or
// two tokens is rejected. Labels must be class names (sub-class names for
// `subclass_terms`); "other"/"other_credit" are not valid rule labels.
//
// Throws EmptyTermListError, InvalidTermError, DuplicateLabelError,
// UnknownLabelError.
RuleSet compile_rules(const Json& class_terms, const Json& subclass_terms = Json::object());

// Every class whose vector has at least one term occurring in the tokenized
// text. Matching is whole-token (unigram or adjacent bigram), never substring.
// All rules run independently, so the result is multi-label; Other is never
// emitted.
std::set<AdClass> classify_all(const RuleSet& rules, std::string_view ad_text);

// Same matching over the credit sub-class vectors; an empty match set maps to
// {OtherCredit}.
std::set<CreditSubclass> subclassify_credit(const RuleSet& rules, std::string_view ad_text);

}  // namespace adaudit
