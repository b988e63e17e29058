#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "simpeval/error.hpp"

namespace simpeval {

// Parallel evaluation data. `references[r][i]` is the r-th reference of the
// i-th original; a reference may hold several sentences on one line.
struct EvalCorpus {
    std::vector<std::string> originals;
    std::optional<std::vector<std::string>> outputs;
    std::vector<std::vector<std::string>> references;

    std::size_t size() const { return originals.size(); }
    std::size_t reference_count() const { return references.size(); }

    // References of instance `i`, one per reference set.
    std::vector<std::string> references_for(std::size_t i) const {
        std::vector<std::string> out;
        out.reserve(references.size());
        for (const auto& set : references) out.push_back(set.at(i));
        return out;
    }

    const std::vector<std::string>& system_outputs() const {
        if (!outputs) throw InvalidArgument("corpus has no system outputs");
        return *outputs;
    }

    void validate() const {
        const std::size_t n = originals.size();
        if (outputs && outputs->size() != n) {
            throw InvalidArgument("system outputs have " + std::to_string(outputs->size()) +
                                  " lines but originals have " + std::to_string(n));
        }
        for (std::size_t r = 0; r < references.size(); ++r) {
            if (references[r].size() != n) {
                throw InvalidArgument("reference set " + std::to_string(r) + " has " +
                                      std::to_string(references[r].size()) +
                                      " lines but originals have " + std::to_string(n));
            }
        }
    }

    friend bool operator==(const EvalCorpus&, const EvalCorpus&) = default;
};

}  // namespace simpeval
