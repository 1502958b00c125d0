#include "adaudit/rules_classifier.hpp"

#include "adaudit/textproc.hpp"

namespace adaudit {

void RuleSet::rebuild_index() {
    unigram_classes_.clear();
    bigram_classes_.clear();
    unigram_subclasses_.clear();
    bigram_subclasses_.clear();
    for (const auto& [cls, vec] : class_vectors) {
        for (const auto& term : vec.terms) {
            if (term.size() == 1)
                unigram_classes_[term[0]].insert(cls);
            else
                bigram_classes_[term[0] + ' ' + term[1]].insert(cls);
        }
    }
    for (const auto& [sub, vec] : subclass_vectors) {
        for (const auto& term : vec.terms) {
            if (term.size() == 1)
                unigram_subclasses_[term[0]].insert(sub);
            else
                bigram_subclasses_[term[0] + ' ' + term[1]].insert(sub);
        }
    }
}

const std::set<AdClass>* RuleSet::classes_for_unigram(const std::string& token) const {
    const auto it = unigram_classes_.find(token);
    return it != unigram_classes_.end() ? &it->second : nullptr;
}

const std::set<AdClass>* RuleSet::classes_for_bigram(const std::string& pair) const {
    const auto it = bigram_classes_.find(pair);
    return it != bigram_classes_.end() ? &it->second : nullptr;
}

const std::set<CreditSubclass>* RuleSet::subclasses_for_unigram(
    const std::string& token) const {
    const auto it = unigram_subclasses_.find(token);
    return it != unigram_subclasses_.end() ? &it->second : nullptr;
}

const std::set<CreditSubclass>* RuleSet::subclasses_for_bigram(
    const std::string& pair) const {
    const auto it = bigram_subclasses_.find(pair);
    return it != bigram_subclasses_.end() ? &it->second : nullptr;
}

namespace {

std::vector<std::vector<std::string>> compile_terms(const std::string& label,
                                                    const Json& terms) {
    if (!terms.is_array())
        throw InvalidValueError(label, "term list must be an array of strings");
    if (terms.empty()) throw EmptyTermListError(label);
    std::vector<std::vector<std::string>> out;
    for (const Json& term : terms) {
        if (!term.is_string()) throw InvalidTermError(label, term.dump());
        const std::string raw = term.get<std::string>();
        std::vector<std::string> tokens = tokenize(raw);
        if (tokens.size() != 1 && tokens.size() != 2)
            throw InvalidTermError(label, raw);
        out.push_back(std::move(tokens));
    }
    return out;
}

}  // namespace

RuleSet compile_rules(const Json& class_terms, const Json& subclass_terms) {
    if (!class_terms.is_object() || !subclass_terms.is_object())
        throw InvalidValueError("rules", "rules config must be a key-value document");

    RuleSet rules;
    for (const auto& [label, terms] : class_terms.items()) {
        AdClass cls;
        try {
            cls = ad_class_from_string(label);
        } catch (const InvalidValueError&) {
            throw UnknownLabelError("unknown class label in rules config: " + label);
        }
        if (cls == AdClass::Other)
            throw UnknownLabelError("\"other\" cannot carry rule terms");
        if (rules.class_vectors.count(cls))
            throw DuplicateLabelError("label appears twice in rules config: " + label);
        rules.class_vectors[cls] = {label, compile_terms(label, terms)};
    }
    for (const auto& [label, terms] : subclass_terms.items()) {
        CreditSubclass sub;
        try {
            sub = credit_subclass_from_string(label);
        } catch (const InvalidValueError&) {
            throw UnknownLabelError("unknown sub-class label in rules config: " + label);
        }
        if (sub == CreditSubclass::OtherCredit)
            throw UnknownLabelError("\"other_credit\" cannot carry rule terms");
        if (rules.subclass_vectors.count(sub))
            throw DuplicateLabelError("label appears twice in rules config: " + label);
        rules.subclass_vectors[sub] = {label, compile_terms(label, terms)};
    }
    rules.rebuild_index();
    return rules;
}

namespace {

template <typename Label>
void match_stream(const std::vector<std::string>& tokens,
                  const std::set<Label>* (RuleSet::*unigram_lookup)(const std::string&) const,
                  const std::set<Label>* (RuleSet::*bigram_lookup)(const std::string&) const,
                  const RuleSet& rules, std::set<Label>& out) {
    for (std::size_t i = 0; i < tokens.size(); ++i) {
        if (const auto* hit = (rules.*unigram_lookup)(tokens[i]))
            out.insert(hit->begin(), hit->end());
        if (i + 1 < tokens.size()) {
            if (const auto* hit = (rules.*bigram_lookup)(tokens[i] + ' ' + tokens[i + 1]))
                out.insert(hit->begin(), hit->end());
        }
    }
}

}  // namespace

std::set<AdClass> classify_all(const RuleSet& rules, std::string_view ad_text) {
    std::set<AdClass> labels;
    const std::vector<std::string> tokens = tokenize(ad_text);
    match_stream<AdClass>(tokens, &RuleSet::classes_for_unigram,
                          &RuleSet::classes_for_bigram, rules, labels);
    return labels;
}

std::set<CreditSubclass> subclassify_credit(const RuleSet& rules, std::string_view ad_text) {
    std::set<CreditSubclass> labels;
    const std::vector<std::string> tokens = tokenize(ad_text);
    match_stream<CreditSubclass>(tokens, &RuleSet::subclasses_for_unigram,
                                 &RuleSet::subclasses_for_bigram, rules, labels);
    if (labels.empty()) labels.insert(CreditSubclass::OtherCredit);
    return labels;
}

}  // namespace adaudit
