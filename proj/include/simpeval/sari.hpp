#pragma once

// Corpus-level SARI.
//
// For every n-gram order n and instance, with #g(I), #g(O) the counts of g
// in the input and output, #g(R) the count summed over the R references,
// and input/output counts multiplied by R:
//
//   keep  candidates  sum min(R#I, R#O)
//         correct     sum min(R#I, R#O, #R)
//         ref mass    sum min(R#I, #R)
//   del   candidates  sum max(R#I - R#O, 0)
//         correct     sum min(max(R#I - R#O, 0), max(R#I - #R, 0))
//         ref mass    sum max(R#I - #R, 0)
//   add   candidates  |{g : #O > 0, #I = 0}|
//         correct     |{g : #O > 0, #I = 0, #R > 0}|
//         ref mass    |{g : #R > 0, #I = 0}|
//
// Counts are summed over the corpus, then precision = correct / candidates,
// recall = correct / ref mass, F1 for every operation. Any ratio with a zero
// denominator is 0. Operation score = mean F1 over n = 1..k and
// SARI = 100 * (F_add + F_keep + F_del) / 3.

#include <algorithm>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "simpeval/error.hpp"
#include "simpeval/text.hpp"

namespace simpeval {

enum class SariOperation { add, del, keep };

inline const char* to_string(SariOperation op) {
    switch (op) {
        case SariOperation::add: return "add";
        case SariOperation::del: return "del";
        case SariOperation::keep: return "keep";
    }
    return "?";
}

struct PrecisionRecall {
    double precision = 0.0;
    double recall = 0.0;
    double f1 = 0.0;
};

inline double safe_ratio(double num, double den) { return den > 0.0 ? num / den : 0.0; }

inline double f1_score(double p, double r) { return p + r > 0.0 ? 2.0 * p * r / (p + r) : 0.0; }

inline PrecisionRecall precision_recall(double correct, double candidates, double reference_mass) {
    PrecisionRecall pr;
    pr.precision = safe_ratio(correct, candidates);
    pr.recall = safe_ratio(correct, reference_mass);
    pr.f1 = f1_score(pr.precision, pr.recall);
    return pr;
}

struct SariOperationScores {
    SariOperation operation = SariOperation::add;
    std::vector<PrecisionRecall> per_order;
    double overall = 0.0;
};

struct SariResult {
    double score = 0.0;  // [0, 100]
    SariOperationScores add{SariOperation::add, {}, 0.0};
    SariOperationScores keep{SariOperation::keep, {}, 0.0};
    SariOperationScores del{SariOperation::del, {}, 0.0};
};

// Raw corpus-level counts for one n-gram order, kept as integers so that
// accumulation is exact and independent of instance order.
struct SariCounts {
    std::size_t add_candidates = 0, add_correct = 0, add_reference = 0;
    std::size_t keep_candidates = 0, keep_correct = 0, keep_reference = 0;
    std::size_t del_candidates = 0, del_correct = 0, del_reference = 0;

    SariCounts& operator+=(const SariCounts& o) {
        add_candidates += o.add_candidates;
        add_correct += o.add_correct;
        add_reference += o.add_reference;
        keep_candidates += o.keep_candidates;
        keep_correct += o.keep_correct;
        keep_reference += o.keep_reference;
        del_candidates += o.del_candidates;
        del_correct += o.del_correct;
        del_reference += o.del_reference;
        return *this;
    }
};

namespace detail {

inline SariCounts sari_instance_counts(const NGramMultiset& input, const NGramMultiset& output,
                                       const NGramMultiset& refs, std::size_t num_refs) {
    SariCounts c;
    const std::size_t R = num_refs;
    for (const auto& [g, in] : input) {
        const std::size_t ri = R * in;
        const std::size_t ro = R * output.count(g);
        const std::size_t rr = refs.count(g);
        c.keep_candidates += std::min(ri, ro);
        c.keep_correct += std::min({ri, ro, rr});
        c.keep_reference += std::min(ri, rr);
        const std::size_t sys_del = ri > ro ? ri - ro : 0;
        const std::size_t ref_del = ri > rr ? ri - rr : 0;
        c.del_candidates += sys_del;
        c.del_correct += std::min(sys_del, ref_del);
        c.del_reference += ref_del;
    }
    for (const auto& [g, out] : output) {
        if (input.contains(g)) continue;
        ++c.add_candidates;
        if (refs.contains(g)) ++c.add_correct;
    }
    for (const auto& [g, r] : refs) {
        if (!input.contains(g)) ++c.add_reference;
    }
    return c;
}

}  // namespace detail

struct SariOptions {
    std::size_t max_order = 4;
    TokenScheme scheme = TokenScheme::standard;
    bool lowercase = true;
};

// Per-order corpus counts; exposed so callers can inspect or merge them.
inline std::vector<SariCounts> sari_counts(std::span<const std::string> originals,
                                           std::span<const std::string> outputs,
                                           std::span<const std::vector<std::string>> references,
                                           const SariOptions& opts = {}) {
    const std::size_t n = originals.size();
    if (n == 0) throw InvalidArgument("SARI needs a non-empty corpus");
    if (outputs.size() != n) {
        throw InvalidArgument("SARI: " + std::to_string(outputs.size()) + " outputs for " +
                              std::to_string(n) + " originals");
    }
    if (references.empty()) throw InvalidArgument("SARI needs at least one reference set");
    for (const auto& set : references) {
        if (set.size() != n) {
            throw InvalidArgument("SARI: reference set has " + std::to_string(set.size()) +
                                  " lines for " + std::to_string(n) + " originals");
        }
    }
    if (opts.max_order < 1) throw InvalidArgument("SARI max order must be >= 1");

    auto words = [&](const std::string& s) { return words_of(tokenize(s, opts.scheme), opts.lowercase); };

    std::vector<SariCounts> totals(opts.max_order);
    for (std::size_t i = 0; i < n; ++i) {
        const auto in_words = words(originals[i]);
        const auto out_words = words(outputs[i]);
        std::vector<std::vector<std::string>> ref_words;
        for (const auto& set : references) ref_words.push_back(words(set[i]));
        for (std::size_t k = 1; k <= opts.max_order; ++k) {
            const auto in = extract_ngrams(std::span<const std::string>(in_words), k);
            const auto out = extract_ngrams(std::span<const std::string>(out_words), k);
            NGramMultiset refs(k);
            for (const auto& rw : ref_words) {
                for (const auto& [g, c] : extract_ngrams(std::span<const std::string>(rw), k)) refs.add(g, c);
            }
            totals[k - 1] += detail::sari_instance_counts(in, out, refs, references.size());
        }
    }
    return totals;
}

inline SariResult sari_from_counts(std::span<const SariCounts> per_order) {
    SariResult res;
    const auto d = [](std::size_t v) { return static_cast<double>(v); };
    for (const auto& c : per_order) {
        res.add.per_order.push_back(precision_recall(d(c.add_correct), d(c.add_candidates), d(c.add_reference)));
        res.keep.per_order.push_back(
            precision_recall(d(c.keep_correct), d(c.keep_candidates), d(c.keep_reference)));
        res.del.per_order.push_back(precision_recall(d(c.del_correct), d(c.del_candidates), d(c.del_reference)));
    }
    for (auto* op : {&res.add, &res.keep, &res.del}) {
        double sum = 0.0;
        for (const auto& pr : op->per_order) sum += pr.f1;
        op->overall = op->per_order.empty() ? 0.0 : sum / static_cast<double>(op->per_order.size());
    }
    res.score = 100.0 * (res.add.overall + res.keep.overall + res.del.overall) / 3.0;
    return res;
}

// `references[r]` is the r-th reference set, parallel to `originals`.
inline SariResult corpus_sari(std::span<const std::string> originals, std::span<const std::string> outputs,
                              std::span<const std::vector<std::string>> references,
                              const SariOptions& opts = {}) {
    const auto counts = sari_counts(originals, outputs, references, opts);
    return sari_from_counts(counts);
}

}  // namespace simpeval
