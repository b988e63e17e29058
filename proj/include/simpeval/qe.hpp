#pragma once

// Reference-independent quality-estimation features of a (source, output)
// pair and their corpus means.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <fstream>
#include <istream>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "simpeval/error.hpp"
#include "simpeval/text.hpp"

namespace simpeval {

// Word -> frequency rank (1 = most frequent). Ranks are contiguous.
class FrequencyTable {
public:
    FrequencyTable() = default;

    // Words in descending frequency order; repeated words keep their first rank.
    explicit FrequencyTable(std::span<const std::string> words) {
        for (const auto& w : words) insert(w);
    }

    // One entry per line, `word<TAB>count` or just `word`, most frequent
    // first. Blank lines are skipped. Repeated words keep their first rank
    // and are reported in warnings().
    static FrequencyTable parse(std::istream& in) {
        FrequencyTable table;
        std::string line;
        std::size_t line_no = 0;
        std::optional<double> last_count;
        while (std::getline(in, line)) {
            ++line_no;
            if (!line.empty() && line.back() == '\r') line.pop_back();
            const auto tab = line.find('\t');
            const std::string word = normalize_whitespace(line.substr(0, tab));
            if (word.empty()) continue;
            if (tab != std::string::npos) {
                const std::string count_text = normalize_whitespace(line.substr(tab + 1));
                double count = 0.0;
                try {
                    std::size_t used = 0;
                    count = std::stod(count_text, &used);
                    if (used != count_text.size()) throw std::invalid_argument(count_text);
                } catch (const std::exception&) {
                    throw InvalidArgument("frequency table line " + std::to_string(line_no) +
                                          ": bad count '" + count_text + "'");
                }
                if (last_count && count > *last_count) {
                    table.warnings_.push_back("line " + std::to_string(line_no) +
                                              ": counts are not in descending order");
                }
                last_count = count;
            }
            if (!table.insert(word)) {
                table.warnings_.push_back("line " + std::to_string(line_no) + ": duplicate word '" + word +
                                          "' ignored");
            }
        }
        return table;
    }

    static FrequencyTable load(const std::string& path) {
        std::ifstream in(path, std::ios::binary);
        if (!in) throw NotFound("cannot open frequency table '" + path + "'");
        return parse(in);
    }

    // Rank of `word` (matched lowercased), or size() for unknown words.
    std::size_t rank(std::string_view word) const {
        auto it = ranks_.find(to_lower(word));
        return it == ranks_.end() ? ranks_.size() : it->second;
    }

    bool contains(std::string_view word) const { return ranks_.contains(to_lower(word)); }
    std::size_t size() const { return ranks_.size(); }
    bool empty() const { return ranks_.empty(); }
    const std::vector<std::string>& warnings() const { return warnings_; }

private:
    bool insert(std::string_view word) {
        return ranks_.emplace(to_lower(word), ranks_.size() + 1).second;
    }

    std::unordered_map<std::string, std::size_t> ranks_;
    std::vector<std::string> warnings_;
};

// Nearest-rank quantile of unsorted values, q in (0, 1].
inline double nearest_rank_quantile(std::vector<double> values, double q) {
    if (values.empty()) throw InvalidArgument("quantile of an empty sample");
    std::sort(values.begin(), values.end());
    auto rank = static_cast<std::size_t>(std::ceil(q * static_cast<double>(values.size())));
    rank = std::clamp<std::size_t>(rank, 1, values.size());
    return values[rank - 1];
}

// Third quartile of ln(rank) over alphabetic tokens of `text`; nullopt when
// the text has none.
inline std::optional<double> lexical_complexity(std::string_view text, const FrequencyTable& table) {
    if (table.empty()) throw InvalidArgument("lexical complexity needs a non-empty frequency table");
    std::vector<double> log_ranks;
    for (const auto& tok : tokenize(text)) {
        if (!is_alphabetic(tok.surface)) continue;
        log_ranks.push_back(std::log(static_cast<double>(table.rank(tok.lowercased))));
    }
    if (log_ranks.empty()) return std::nullopt;
    return nearest_rank_quantile(std::move(log_ranks), 0.75);
}

struct QEFeatures {
    double compression_ratio = 0.0;
    double levenshtein_similarity = 0.0;
    double sentence_splits = 0.0;
    bool exact_match = false;
    double added_proportion = 0.0;
    double deleted_proportion = 0.0;
    std::optional<double> lexical_complexity;
};

// Corpus means. exact_match becomes the share of untouched sentences and
// lexical_complexity the mean over instances that have a value.
struct QEAggregate {
    double compression_ratio = 0.0;
    double levenshtein_similarity = 0.0;
    double sentence_splits = 0.0;
    double exact_match = 0.0;
    double added_proportion = 0.0;
    double deleted_proportion = 0.0;
    std::optional<double> lexical_complexity;
    std::size_t instances = 0;
};

namespace detail {

inline std::vector<std::string> lower_words(std::string_view text) {
    std::vector<std::string> out;
    for (const auto& tok : tokenize(text)) {
        if (is_word(tok.surface)) out.push_back(tok.lowercased);
    }
    return out;
}

// |types of `a` absent from `b`| / |tokens of `a`|
inline double novel_type_share(const std::vector<std::string>& a, const std::vector<std::string>& b) {
    if (a.empty()) return 0.0;
    const std::unordered_set<std::string> other(b.begin(), b.end());
    const std::unordered_set<std::string> types(a.begin(), a.end());
    std::size_t novel = 0;
    for (const auto& t : types) novel += !other.contains(t);
    return static_cast<double>(novel) / static_cast<double>(a.size());
}

}  // namespace detail

inline QEFeatures compute_features(std::string_view source, std::string_view output,
                                   const FrequencyTable* table = nullptr) {
    const std::string src = normalize_whitespace(source);
    const std::string out = normalize_whitespace(output);
    if (src.empty()) throw InvalidArgument("QE features need a non-empty source sentence");

    QEFeatures f;
    const auto src_cps = utf8::decode(src);
    const auto out_cps = utf8::decode(out);
    f.compression_ratio = static_cast<double>(out_cps.size()) / static_cast<double>(src_cps.size());
    const std::size_t longest = std::max(src_cps.size(), out_cps.size());
    f.levenshtein_similarity =
        1.0 - static_cast<double>(edit_distance(src_cps, out_cps)) / static_cast<double>(longest);
    f.sentence_splits = static_cast<double>(split_sentences(out).size()) /
                        static_cast<double>(split_sentences(src).size());
    f.exact_match = src == out;
    const auto src_words = detail::lower_words(src);
    const auto out_words = detail::lower_words(out);
    f.added_proportion = detail::novel_type_share(out_words, src_words);
    f.deleted_proportion = detail::novel_type_share(src_words, out_words);
    if (table) f.lexical_complexity = lexical_complexity(out, *table);
    return f;
}

inline QEAggregate aggregate_features(std::span<const QEFeatures> features) {
    if (features.empty()) throw InvalidArgument("cannot aggregate an empty feature list");
    QEAggregate agg;
    agg.instances = features.size();
    double lex_sum = 0.0;
    std::size_t lex_n = 0;
    for (const auto& f : features) {
        agg.compression_ratio += f.compression_ratio;
        agg.levenshtein_similarity += f.levenshtein_similarity;
        agg.sentence_splits += f.sentence_splits;
        agg.exact_match += f.exact_match ? 1.0 : 0.0;
        agg.added_proportion += f.added_proportion;
        agg.deleted_proportion += f.deleted_proportion;
        if (f.lexical_complexity) {
            lex_sum += *f.lexical_complexity;
            ++lex_n;
        }
    }
    const double n = static_cast<double>(features.size());
    agg.compression_ratio /= n;
    agg.levenshtein_similarity /= n;
    agg.sentence_splits /= n;
    agg.exact_match /= n;
    agg.added_proportion /= n;
    agg.deleted_proportion /= n;
    if (lex_n > 0) agg.lexical_complexity = lex_sum / static_cast<double>(lex_n);
    return agg;
}

}  // namespace simpeval
