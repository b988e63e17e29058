#pragma once

// Multi-reference corpus BLEU. Clipped n-gram matches and candidate counts
// are summed over the corpus per order; the brevity penalty uses, for each
// instance, the reference length closest to the output length (ties go to
// the shorter reference).

#include <cmath>
#include <cstddef>
#include <limits>
#include <span>
#include <string>
#include <vector>

#include "simpeval/error.hpp"
#include "simpeval/text.hpp"

namespace simpeval {

enum class BleuSmoothing {
    none,     // any order with zero matches gives BLEU 0
    epsilon,  // zero match counts are replaced by `kBleuEpsilon`
};

inline constexpr double kBleuEpsilon = 0.1;

struct BleuOptions {
    std::size_t max_order = 4;
    BleuSmoothing smoothing = BleuSmoothing::none;
    TokenScheme scheme = TokenScheme::standard;
    bool lowercase = true;
};

struct BleuStats {
    std::vector<std::size_t> matches;     // clipped, per order
    std::vector<std::size_t> candidates;  // per order
    std::size_t output_length = 0;
    std::size_t reference_length = 0;
};

struct BleuResult {
    double score = 0.0;  // [0, 100]
    std::vector<double> precisions;
    double brevity_penalty = 1.0;
    std::size_t output_length = 0;
    std::size_t reference_length = 0;
};

// Closest reference length to `out_len`, ties broken towards the shorter one.
inline std::size_t closest_reference_length(std::size_t out_len, std::span<const std::size_t> ref_lens) {
    std::size_t best = ref_lens.front();
    for (std::size_t len : ref_lens) {
        const auto diff = [&](std::size_t l) { return l > out_len ? l - out_len : out_len - l; };
        if (diff(len) < diff(best) || (diff(len) == diff(best) && len < best)) best = len;
    }
    return best;
}

inline BleuStats bleu_stats(std::span<const std::string> outputs,
                            std::span<const std::vector<std::string>> references,
                            const BleuOptions& opts = {}) {
    const std::size_t n = outputs.size();
    if (n == 0) throw InvalidArgument("BLEU needs a non-empty corpus");
    if (references.empty()) throw InvalidArgument("BLEU needs at least one reference set");
    for (const auto& set : references) {
        if (set.size() != n) {
            throw InvalidArgument("BLEU: reference set has " + std::to_string(set.size()) +
                                  " lines for " + std::to_string(n) + " outputs");
        }
    }
    if (opts.max_order < 1) throw InvalidArgument("BLEU max order must be >= 1");

    BleuStats st;
    st.matches.assign(opts.max_order, 0);
    st.candidates.assign(opts.max_order, 0);
    for (std::size_t i = 0; i < n; ++i) {
        const auto out = words_of(tokenize(outputs[i], opts.scheme), opts.lowercase);
        std::vector<std::vector<std::string>> refs;
        std::vector<std::size_t> ref_lens;
        for (const auto& set : references) {
            refs.push_back(words_of(tokenize(set[i], opts.scheme), opts.lowercase));
            ref_lens.push_back(refs.back().size());
        }
        st.output_length += out.size();
        st.reference_length += closest_reference_length(out.size(), ref_lens);
        for (std::size_t k = 1; k <= opts.max_order; ++k) {
            const auto hyp = extract_ngrams(std::span<const std::string>(out), k);
            std::vector<NGramMultiset> ref_grams;
            for (const auto& r : refs) ref_grams.push_back(extract_ngrams(std::span<const std::string>(r), k));
            for (const auto& [g, c] : hyp) {
                std::size_t max_ref = 0;
                for (const auto& rg : ref_grams) max_ref = std::max(max_ref, rg.count(g));
                st.matches[k - 1] += std::min(c, max_ref);
                st.candidates[k - 1] += c;
            }
        }
    }
    return st;
}

inline BleuResult bleu_from_stats(const BleuStats& st, BleuSmoothing smoothing = BleuSmoothing::none) {
    BleuResult res;
    res.output_length = st.output_length;
    res.reference_length = st.reference_length;
    const std::size_t orders = st.matches.size();
    double log_sum = 0.0;
    bool zero = false;
    for (std::size_t k = 0; k < orders; ++k) {
        double num = static_cast<double>(st.matches[k]);
        const double den = static_cast<double>(st.candidates[k]);
        if (den == 0.0) {
            res.precisions.push_back(0.0);
            zero = true;
            continue;
        }
        if (num == 0.0 && smoothing == BleuSmoothing::epsilon) num = kBleuEpsilon;
        const double p = num / den;
        res.precisions.push_back(p);
        if (p == 0.0) {
            zero = true;
        } else {
            log_sum += std::log(p);
        }
    }
    if (st.output_length == 0) {
        res.brevity_penalty = 0.0;
    } else if (st.output_length < st.reference_length) {
        res.brevity_penalty = std::exp(1.0 - static_cast<double>(st.reference_length) /
                                                 static_cast<double>(st.output_length));
    }
    if (zero || st.output_length == 0) return res;
    res.score = 100.0 * res.brevity_penalty * std::exp(log_sum / static_cast<double>(orders));
    return res;
}

// `references[r]` is the r-th reference set, parallel to `outputs`.
inline BleuResult corpus_bleu(std::span<const std::string> outputs,
                              std::span<const std::vector<std::string>> references,
                              const BleuOptions& opts = {}) {
    return bleu_from_stats(bleu_stats(outputs, references, opts), opts.smoothing);
}

}  // namespace simpeval
