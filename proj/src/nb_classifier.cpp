#include "adaudit/nb_classifier.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>

namespace adaudit {

namespace {
constexpr double kNegInf = -std::numeric_limits<double>::infinity();
}

bool NbModel::is_trained(AdClass c) const {
    return std::find(classes.begin(), classes.end(), c) != classes.end();
}

double NbModel::token_ll(AdClass c, const std::string& token) const {
    const auto& table = token_log_likelihood[static_cast<int>(c)];
    const auto it = table.find(token);
    return it != table.end() ? it->second
                             : missing_token_log_likelihood[static_cast<int>(c)];
}

NbModel train(const std::vector<LabeledBow>& labeled, double alpha) {
    if (labeled.empty()) throw EmptyTrainingSetError("no training documents");
    if (!(alpha > 0.0)) throw NonPositiveAlphaError("smoothing alpha must be > 0");

    NbModel model;
    model.alpha = alpha;
    model.class_log_prior.fill(kNegInf);
    model.missing_token_log_likelihood.fill(kNegInf);

    std::array<std::size_t, kAdClassCount> doc_counts{};
    std::array<double, kAdClassCount> token_totals{};
    std::array<std::map<std::string, double>, kAdClassCount> token_counts;

    for (const LabeledBow& doc : labeled) {
        const int c = static_cast<int>(doc.label);
        ++doc_counts[c];
        for (const auto& [token, count] : doc.bow) {
            model.vocabulary.insert(token);
            token_counts[c][token] += count;
            token_totals[c] += count;
        }
    }

    const double vocab_size = static_cast<double>(model.vocabulary.size());
    const double total_docs = static_cast<double>(labeled.size());

    for (AdClass c : kAdClasses) {
        const int i = static_cast<int>(c);
        if (doc_counts[i] == 0) continue;  // prior 0, excluded from prediction
        model.classes.push_back(c);
        model.class_log_prior[i] =
            std::log(static_cast<double>(doc_counts[i]) / total_docs);
        const double denom = token_totals[i] + alpha * vocab_size;
        model.missing_token_log_likelihood[i] = std::log(alpha / denom);
        for (const auto& [token, count] : token_counts[i])
            model.token_log_likelihood[i][token] = std::log((count + alpha) / denom);
    }
    return model;
}

Prediction predict(const NbModel& model, const BagOfWords& bow) {
    std::map<AdClass, double> scores;
    for (AdClass c : model.classes)
        scores[c] = model.class_log_prior[static_cast<int>(c)];

    for (const auto& [token, count] : bow) {
        if (!model.vocabulary.count(token)) continue;
        for (auto& [c, score] : scores) score += count * model.token_ll(c, token);
    }

    // log-sum-exp normalization
    double max_score = kNegInf;
    for (const auto& [c, score] : scores) max_score = std::max(max_score, score);
    double sum = 0.0;
    for (const auto& [c, score] : scores) sum += std::exp(score - max_score);
    const double lse = max_score + std::log(sum);

    Prediction out;
    bool first = true;
    double best = kNegInf;
    for (auto& [c, score] : scores) {
        const double posterior = score - lse;
        out.log_posterior[c] = posterior;
        if (first || posterior > best) {  // ties keep the earlier class
            out.label = c;
            best = posterior;
            first = false;
        }
    }
    return out;
}

Prediction predict_text(const NbModel& model, std::string_view text) {
    return predict(model, vectorize(tokenize(text)));
}

Json model_to_json(const NbModel& model) {
    Json doc = Json::object();
    doc["schema_version"] = NbModel::kSchemaVersion;
    doc["alpha"] = model.alpha;

    Json classes = Json::array();
    for (AdClass c : model.classes) classes.push_back(std::string(to_string(c)));
    doc["classes"] = std::move(classes);

    Json priors = Json::object();
    Json missing = Json::object();
    Json tables = Json::object();
    for (AdClass c : model.classes) {
        const int i = static_cast<int>(c);
        const std::string name(to_string(c));
        priors[name] = model.class_log_prior[i];
        missing[name] = model.missing_token_log_likelihood[i];
        Json table = Json::object();
        for (const auto& [token, ll] : model.token_log_likelihood[i]) table[token] = ll;
        tables[name] = std::move(table);
    }
    doc["class_log_prior"] = std::move(priors);
    doc["missing_token_log_likelihood"] = std::move(missing);
    doc["token_log_likelihood"] = std::move(tables);

    Json vocab = Json::array();
    for (const std::string& token : model.vocabulary) vocab.push_back(token);
    doc["vocabulary"] = std::move(vocab);
    return doc;
}

NbModel model_from_json(const Json& doc) {
    if (!doc.is_object() || !doc.contains("schema_version"))
        throw SchemaMismatchError("model file lacks a schema_version");
    if (doc.at("schema_version").get<int>() != NbModel::kSchemaVersion)
        throw SchemaMismatchError(
            "model schema_version " + doc.at("schema_version").dump() +
            " != " + std::to_string(NbModel::kSchemaVersion));

    NbModel model;
    model.alpha = doc.at("alpha").get<double>();
    model.class_log_prior.fill(kNegInf);
    model.missing_token_log_likelihood.fill(kNegInf);

    for (const Json& name : doc.at("classes"))
        model.classes.push_back(ad_class_from_string(name.get<std::string>()));

    for (AdClass c : model.classes) {
        const int i = static_cast<int>(c);
        const std::string name(to_string(c));
        model.class_log_prior[i] = doc.at("class_log_prior").at(name).get<double>();
        model.missing_token_log_likelihood[i] =
            doc.at("missing_token_log_likelihood").at(name).get<double>();
        for (const auto& [token, ll] : doc.at("token_log_likelihood").at(name).items())
            model.token_log_likelihood[i][token] = ll.get<double>();
    }
    for (const Json& token : doc.at("vocabulary"))
        model.vocabulary.insert(token.get<std::string>());
    return model;
}

void save_model(const NbModel& model, const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot open model file for writing: " + path.string());
    out << model_to_json(model).dump(2) << '\n';
    if (!out) throw IoError("failed writing model file: " + path.string());
}

NbModel load_model(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open model file: " + path.string());
    Json doc;
    try {
        doc = Json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw IoError("model file is not valid JSON: " + std::string(e.what()));
    }
    return model_from_json(doc);
}

}  // namespace adaudit
