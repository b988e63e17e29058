#pragma once

// One-call corpus evaluation: metrics, transformation F1, QE features, and
// the JSON document printed by `simpeval evaluate`.

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include "simpeval/annotation.hpp"
#include "simpeval/corpus.hpp"
#include "simpeval/metrics.hpp"
#include "simpeval/qe.hpp"

namespace simpeval {

inline const std::vector<std::string>& builtin_metric_names() {
    static const std::vector<std::string> names = {"sari", "bleu", "fkgl"};
    return names;
}

struct EvalOptions {
    std::vector<std::string> metrics = builtin_metric_names();
    TokenScheme scheme = TokenScheme::standard;
    bool lowercase = true;
    std::size_t max_order = 4;
    BleuSmoothing bleu_smoothing = BleuSmoothing::none;
    const FrequencyTable* frequency_table = nullptr;
    const ExternalMetricRegistry* extras = nullptr;
    // Reference set used for the reference side of QE comparisons.
    std::size_t reference_index = 0;
};

struct EvaluationResult {
    std::size_t instances = 0;
    std::size_t references = 0;
    MetricReport metrics;
    TransformationScores transformations;
    std::vector<QEFeatures> system_features;
    QEAggregate system_qe;
    std::vector<QEFeatures> reference_features;
    QEAggregate reference_qe;
};

// Throws InvalidArgument for metric names that are neither builtin nor
// registered in `extras`.
inline void check_metric_names(const std::vector<std::string>& names, const ExternalMetricRegistry* extras) {
    const auto& builtin = builtin_metric_names();
    for (const auto& name : names) {
        const bool known = std::find(builtin.begin(), builtin.end(), name) != builtin.end() ||
                           (extras && extras->contains(name));
        if (!known) throw InvalidArgument("unknown metric '" + name + "'");
    }
}

inline EvaluationResult evaluate_corpus(const EvalCorpus& corpus, const EvalOptions& opts = {}) {
    corpus.validate();
    if (corpus.size() == 0) throw InvalidArgument("corpus is empty");
    if (corpus.reference_count() == 0) throw InvalidArgument("corpus has no references");
    if (opts.reference_index >= corpus.reference_count()) throw InvalidArgument("reference index out of range");
    check_metric_names(opts.metrics, opts.extras);
    const auto& outputs = corpus.system_outputs();
    const std::set<std::string> selected(opts.metrics.begin(), opts.metrics.end());

    EvaluationResult res;
    res.instances = corpus.size();
    res.references = corpus.reference_count();
    if (selected.contains("sari")) {
        res.metrics.sari = corpus_sari(corpus.originals, outputs, corpus.references,
                                       {opts.max_order, opts.scheme, opts.lowercase});
    }
    if (selected.contains("bleu")) {
        res.metrics.bleu =
            corpus_bleu(outputs, corpus.references, {opts.max_order, opts.bleu_smoothing, opts.scheme, opts.lowercase});
    }
    if (selected.contains("fkgl")) {
        // An output made only of punctuation has no words; report no value.
        try {
            res.metrics.fkgl = fkgl(std::span<const std::string>(outputs));
        } catch (const InvalidArgument&) {
        }
    }
    if (opts.extras) {
        std::vector<std::string> wanted;
        for (const auto& name : opts.metrics) {
            if (opts.extras->contains(name)) wanted.push_back(name);
        }
        if (!wanted.empty()) res.metrics.extras = opts.extras->evaluate(corpus, wanted);
    }

    res.transformations = transformation_f1(corpus.originals, outputs, corpus.references, {opts.scheme});

    const auto& ref_set = corpus.references[opts.reference_index];
    for (std::size_t i = 0; i < corpus.size(); ++i) {
        res.system_features.push_back(compute_features(corpus.originals[i], outputs[i], opts.frequency_table));
        res.reference_features.push_back(compute_features(corpus.originals[i], ref_set[i], opts.frequency_table));
    }
    res.system_qe = aggregate_features(res.system_features);
    res.reference_qe = aggregate_features(res.reference_features);
    return res;
}

inline nlohmann::ordered_json qe_to_json(const QEAggregate& agg) {
    nlohmann::ordered_json j;
    j["compression_ratio"] = agg.compression_ratio;
    j["levenshtein_similarity"] = agg.levenshtein_similarity;
    j["sentence_splits"] = agg.sentence_splits;
    j["exact_match"] = agg.exact_match;
    j["added_proportion"] = agg.added_proportion;
    j["deleted_proportion"] = agg.deleted_proportion;
    if (agg.lexical_complexity) j["lexical_complexity"] = *agg.lexical_complexity;
    return j;
}

// Key names are part of the CLI contract.
inline nlohmann::ordered_json to_json(const EvaluationResult& r) {
    nlohmann::ordered_json j;
    j["instances"] = r.instances;
    j["references"] = r.references;
    if (r.metrics.sari) j["sari"] = r.metrics.sari->score;
    if (r.metrics.bleu) j["bleu"] = r.metrics.bleu->score;
    if (r.metrics.fkgl) j["fkgl"] = *r.metrics.fkgl;
    if (r.metrics.sari) {
        auto& b = j["sari_breakdown"];
        for (const auto* op : {&r.metrics.sari->add, &r.metrics.sari->keep, &r.metrics.sari->del}) {
            auto& o = b[to_string(op->operation)];
            o["f1"] = op->overall;
            o["per_order"] = nlohmann::ordered_json::array();
            for (const auto& pr : op->per_order) {
                o["per_order"].push_back({{"precision", pr.precision}, {"recall", pr.recall}, {"f1", pr.f1}});
            }
        }
    }
    if (r.metrics.bleu) {
        j["bleu_details"] = {{"precisions", r.metrics.bleu->precisions},
                             {"brevity_penalty", r.metrics.bleu->brevity_penalty},
                             {"output_length", r.metrics.bleu->output_length},
                             {"reference_length", r.metrics.bleu->reference_length}};
    }
    auto& tf = j["transformation_f1"];
    tf = nlohmann::ordered_json::object();
    for (auto t : kTransformations) {
        std::string key = to_string(t);
        std::transform(key.begin(), key.end(), key.begin(), [](unsigned char c) { return std::tolower(c); });
        tf[key] = at(r.transformations.corpus, t);
    }
    j["qe"] = {{"system", qe_to_json(r.system_qe)}, {"reference", qe_to_json(r.reference_qe)}};
    j["extras"] = nlohmann::ordered_json::object();
    for (const auto& [name, value] : r.metrics.extras.values) j["extras"][name] = value;
    if (!r.metrics.extras.diagnostics.empty()) {
        for (const auto& [name, msg] : r.metrics.extras.diagnostics) j["extras_errors"][name] = msg;
    }
    return j;
}

}  // namespace simpeval
