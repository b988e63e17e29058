#pragma once

#include <algorithm>
#include <exception>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "simpeval/bleu.hpp"
#include "simpeval/corpus.hpp"
#include "simpeval/error.hpp"
#include "simpeval/fkgl.hpp"
#include "simpeval/sari.hpp"

namespace simpeval {

using ExternalScorer = std::function<double(const EvalCorpus&)>;

struct ExtrasResult {
    std::map<std::string, double> values;
    std::map<std::string, std::string> diagnostics;  // metric name -> error text
};

// Plug-in metrics computed over a whole corpus, e.g. a structural-simplicity
// scorer backed by an external parser. A failing scorer only loses its own
// value.
class ExternalMetricRegistry {
public:
    void add(std::string name, ExternalScorer scorer) {
        if (name.empty()) throw InvalidArgument("external metric name must not be empty");
        if (!scorer) throw InvalidArgument("external metric '" + name + "' has no scorer");
        if (scorers_.contains(name)) throw InvalidArgument("external metric '" + name + "' already registered");
        scorers_.emplace(std::move(name), std::move(scorer));
    }

    bool contains(const std::string& name) const { return scorers_.contains(name); }
    bool empty() const { return scorers_.empty(); }

    std::vector<std::string> names() const {
        std::vector<std::string> out;
        for (const auto& [name, s] : scorers_) out.push_back(name);
        return out;
    }

    // Runs every registered scorer, or only those in `only` when given.
    ExtrasResult evaluate(const EvalCorpus& corpus,
                          const std::optional<std::vector<std::string>>& only = std::nullopt) const {
        ExtrasResult res;
        for (const auto& [name, scorer] : scorers_) {
            if (only && std::find(only->begin(), only->end(), name) == only->end()) continue;
            try {
                res.values.emplace(name, scorer(corpus));
            } catch (const std::exception& e) {
                res.diagnostics.emplace(name, e.what());
            } catch (...) {
                res.diagnostics.emplace(name, "unknown error");
            }
        }
        return res;
    }

private:
    std::map<std::string, ExternalScorer> scorers_;
};

struct MetricReport {
    std::optional<SariResult> sari;
    std::optional<BleuResult> bleu;
    std::optional<double> fkgl;
    ExtrasResult extras;
};

}  // namespace simpeval
