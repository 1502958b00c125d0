#pragma once

#include <array>
#include <filesystem>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "adaudit/core_model.hpp"
#include "adaudit/textproc.hpp"

namespace adaudit {

struct LabeledBow {
    BagOfWords bow;
    AdClass label = AdClass::Other;
};

// Multinomial Naive Bayes over unigram+bigram counts, Lidstone-smoothed.
// All probabilities are kept in natural-log space. Immutable after train();
// predict() is pure and safe for concurrent readers.
struct NbModel {
    static constexpr int kSchemaVersion = 1;

    double alpha = 1.0;
    // Classes that appeared in the training data, in canonical order. Classes
    // with zero training documents have prior 0 and never win prediction.
    std::vector<AdClass> classes;
    std::array<double, kAdClassCount> class_log_prior{};  // -inf when untrained
    // Log-likelihood per class for tokens seen in that class; in-vocabulary
    // tokens unseen in a class fall back to missing_token_log_likelihood.
    std::array<std::map<std::string, double>, kAdClassCount> token_log_likelihood;
    std::array<double, kAdClassCount> missing_token_log_likelihood{};
    std::set<std::string> vocabulary;

    bool is_trained(AdClass c) const;
    // log P(token | c) for an in-vocabulary token.
    double token_ll(AdClass c, const std::string& token) const;
};

// prior(c) = docs(c) / docs; P(t|c) = (count(t,c) + alpha) / (tokens(c) + alpha*|V|)
// with V the union vocabulary over all training documents.
// Throws EmptyTrainingSetError / NonPositiveAlphaError.
NbModel train(const std::vector<LabeledBow>& labeled, double alpha = 1.0);

struct Prediction {
    AdClass label = AdClass::Other;
    // Normalized so exp values sum to 1; holds trained classes only.
    std::map<AdClass, double> log_posterior;
};

// score(c) = log prior(c) + sum_t count(t) * log P(t|c), out-of-vocabulary
// tokens ignored. Argmax ties break by AdClass order; an empty bag falls back
// to the prior argmax.
Prediction predict(const NbModel& model, const BagOfWords& bow);

// Convenience wrapper: tokenize + vectorize + predict.
Prediction predict_text(const NbModel& model, std::string_view text);

void save_model(const NbModel& model, const std::filesystem::path& path);

// Throws IoError on unreadable files, SchemaMismatchError on version drift.
NbModel load_model(const std::filesystem::path& path);

Json model_to_json(const NbModel& model);
NbModel model_from_json(const Json& doc);

}  // namespace adaudit
