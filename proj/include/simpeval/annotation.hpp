#pragma once

// Word-level transformation analysis. Source tokens are aligned one-to-one
// to target tokens and each source token is labelled DELETE, MOVE, REPLACE
// or COPY. Labelling a system output and a reference against the same
// original gives two label sequences over the same positions, which are
// compared with per-label F1.

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "simpeval/error.hpp"
#include "simpeval/text.hpp"

namespace simpeval {

enum class Transformation : std::uint8_t { del, move, replace, copy };

inline constexpr std::array<Transformation, 4> kTransformations = {
    Transformation::del, Transformation::move, Transformation::replace, Transformation::copy};

inline const char* to_string(Transformation t) {
    switch (t) {
        case Transformation::del: return "DELETE";
        case Transformation::move: return "MOVE";
        case Transformation::replace: return "REPLACE";
        case Transformation::copy: return "COPY";
    }
    return "?";
}

struct AlignedPair {
    std::size_t source = 0;
    std::size_t target = 0;
    friend auto operator<=>(const AlignedPair&, const AlignedPair&) = default;
};

struct WordAlignment {
    std::vector<AlignedPair> pairs;  // sorted by source index
    std::size_t source_len = 0;
    std::size_t target_len = 0;

    // Throws InvalidArgument unless indices are in range and one-to-one.
    void validate() const {
        std::vector<bool> src(source_len), tgt(target_len);
        for (const auto& p : pairs) {
            if (p.source >= source_len || p.target >= target_len) {
                throw InvalidArgument("alignment index out of range");
            }
            if (src[p.source] || tgt[p.target]) throw InvalidArgument("alignment is not one-to-one");
            src[p.source] = true;
            tgt[p.target] = true;
        }
    }

    friend bool operator==(const WordAlignment&, const WordAlignment&) = default;
};

namespace detail {

// Similarity as an exact fraction so ranking never depends on rounding.
struct Similarity {
    std::size_t num = 0;
    std::size_t den = 1;
    friend bool operator<(const Similarity& a, const Similarity& b) { return a.num * b.den < b.num * a.den; }
    friend bool operator==(const Similarity& a, const Similarity& b) { return a.num * b.den == b.num * a.den; }
    double value() const { return static_cast<double>(num) / static_cast<double>(den); }
};

}  // namespace detail

// Strips the first matching suffix of ing, es, ed, ly, s if at least three
// characters remain.
inline std::string light_stem(std::string_view lower) {
    static constexpr std::array<std::string_view, 5> suffixes = {"ing", "es", "ed", "ly", "s"};
    const auto cps = utf8::decode(lower);
    const std::string word(lower);
    for (auto suf : suffixes) {
        if (word.ends_with(suf) && cps.size() >= suf.size() + 3) {
            return word.substr(0, word.size() - suf.size());
        }
    }
    return word;
}

// 1 for equal lowercase forms, 9/10 for equal stems, otherwise normalized
// character similarity; pairs below 1/2 are not alignable (num == 0).
inline detail::Similarity word_similarity(const Token& a, const Token& b) {
    if (a.lowercased == b.lowercased) return {1, 1};
    if (light_stem(a.lowercased) == light_stem(b.lowercased)) return {9, 10};
    const auto ca = utf8::decode(a.lowercased);
    const auto cb = utf8::decode(b.lowercased);
    const std::size_t longest = std::max(ca.size(), cb.size());
    const std::size_t dist = edit_distance(ca, cb);
    if (2 * (longest - dist) < longest) return {0, 1};
    return {longest - dist, longest};
}

// Greedy best-first one-to-one alignment: candidate pairs are ranked by
// similarity (descending), then by |i/source_len - j/target_len|, then by i
// and j, and accepted while both ends are free.
inline WordAlignment align_words(std::span<const Token> source, std::span<const Token> target) {
    WordAlignment al;
    al.source_len = source.size();
    al.target_len = target.size();
    if (source.empty() || target.empty()) return al;

    struct Candidate {
        detail::Similarity sim;
        std::size_t offset;  // |i*T - j*S|, proportional to the relative position gap
        std::size_t i, j;
    };
    std::vector<Candidate> cands;
    const std::size_t S = source.size(), T = target.size();
    for (std::size_t i = 0; i < S; ++i) {
        for (std::size_t j = 0; j < T; ++j) {
            const auto sim = word_similarity(source[i], target[j]);
            if (sim.num == 0) continue;
            const std::size_t a = i * T, b = j * S;
            cands.push_back({sim, a > b ? a - b : b - a, i, j});
        }
    }
    std::sort(cands.begin(), cands.end(), [](const Candidate& x, const Candidate& y) {
        if (!(x.sim == y.sim)) return y.sim < x.sim;
        if (x.offset != y.offset) return x.offset < y.offset;
        if (x.i != y.i) return x.i < y.i;
        return x.j < y.j;
    });
    std::vector<bool> src_used(S), tgt_used(T);
    for (const auto& c : cands) {
        if (src_used[c.i] || tgt_used[c.j]) continue;
        src_used[c.i] = tgt_used[c.j] = true;
        al.pairs.push_back({c.i, c.j});
    }
    std::sort(al.pairs.begin(), al.pairs.end());
    return al;
}

using TransformationLabels = std::vector<Transformation>;

// Labels every source token: unaligned -> DELETE; aligned to a different
// lowercase form -> REPLACE; aligned pair crossing another aligned pair ->
// MOVE; otherwise COPY.
inline TransformationLabels label_transformations(std::span<const Token> source, std::span<const Token> target,
                                                  const WordAlignment& alignment) {
    if (alignment.source_len != source.size() || alignment.target_len != target.size()) {
        throw InvalidArgument("alignment does not match sentence lengths");
    }
    alignment.validate();
    TransformationLabels labels(source.size(), Transformation::del);
    for (const auto& p : alignment.pairs) {
        if (source[p.source].lowercased != target[p.target].lowercased) {
            labels[p.source] = Transformation::replace;
            continue;
        }
        const bool crosses = std::any_of(alignment.pairs.begin(), alignment.pairs.end(), [&](const AlignedPair& q) {
            return (p.source < q.source && p.target > q.target) || (p.source > q.source && p.target < q.target);
        });
        labels[p.source] = crosses ? Transformation::move : Transformation::copy;
    }
    return labels;
}

inline TransformationLabels label_transformations(std::span<const Token> source, std::span<const Token> target) {
    return label_transformations(source, target, align_words(source, target));
}

// Per-label scores indexed by Transformation.
using TransformationValues = std::array<double, 4>;

inline double& at(TransformationValues& v, Transformation t) { return v[static_cast<std::size_t>(t)]; }
inline double at(const TransformationValues& v, Transformation t) { return v[static_cast<std::size_t>(t)]; }

// F1 of `predicted` against `gold` for each label over token positions.
// A label absent from both sequences scores 1.
inline TransformationValues label_f1(std::span<const Transformation> gold, std::span<const Transformation> predicted) {
    if (gold.size() != predicted.size()) throw InvalidArgument("label sequences differ in length");
    TransformationValues out{};
    for (auto t : kTransformations) {
        std::size_t tp = 0, fp = 0, fn = 0;
        for (std::size_t k = 0; k < gold.size(); ++k) {
            const bool g = gold[k] == t, p = predicted[k] == t;
            tp += g && p;
            fp += !g && p;
            fn += g && !p;
        }
        at(out, t) = (tp + fp + fn == 0) ? 1.0
                                         : 2.0 * static_cast<double>(tp) / static_cast<double>(2 * tp + fp + fn);
    }
    return out;
}

struct TransformationScores {
    TransformationValues corpus{};
    std::vector<TransformationValues> per_sentence;
};

struct AnnotationOptions {
    TokenScheme scheme = TokenScheme::standard;
};

// Sentence score = per-label maximum over references; corpus score = mean
// of sentence scores.
inline TransformationScores transformation_f1(std::span<const std::string> originals,
                                              std::span<const std::string> outputs,
                                              std::span<const std::vector<std::string>> references,
                                              const AnnotationOptions& opts = {}) {
    const std::size_t n = originals.size();
    if (n == 0) throw InvalidArgument("transformation scoring needs a non-empty corpus");
    if (outputs.size() != n) throw InvalidArgument("outputs and originals differ in length");
    if (references.empty()) throw InvalidArgument("transformation scoring needs at least one reference set");
    for (const auto& set : references) {
        if (set.size() != n) throw InvalidArgument("reference set and originals differ in length");
    }
    TransformationScores scores;
    scores.per_sentence.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        const auto src = tokenize(originals[i], opts.scheme);
        const auto predicted = label_transformations(src, tokenize(outputs[i], opts.scheme));
        TransformationValues best{};
        for (const auto& set : references) {
            const auto gold = label_transformations(src, tokenize(set[i], opts.scheme));
            const auto f1 = label_f1(gold, predicted);
            for (std::size_t k = 0; k < best.size(); ++k) best[k] = std::max(best[k], f1[k]);
        }
        scores.per_sentence.push_back(best);
    }
    for (std::size_t k = 0; k < scores.corpus.size(); ++k) {
        double sum = 0.0;
        for (const auto& s : scores.per_sentence) sum += s[k];
        scores.corpus[k] = sum / static_cast<double>(n);
    }
    return scores;
}

}  // namespace simpeval
