#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>

#include "simpeval/error.hpp"
#include "simpeval/text.hpp"

namespace simpeval {

struct ReadabilityCounts {
    std::size_t sentences = 0;
    std::size_t words = 0;
    std::size_t syllables = 0;

    ReadabilityCounts& operator+=(const ReadabilityCounts& o) {
        sentences += o.sentences;
        words += o.words;
        syllables += o.syllables;
        return *this;
    }
};

// Line breaks end a sentence; within a line, split_sentences applies. Words
// are standard tokens with at least one letter or digit, so a newline can
// neither become a word nor glue two words together.
inline ReadabilityCounts readability_counts(std::string_view text) {
    ReadabilityCounts counts;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find('\n', start);
        if (end == std::string_view::npos) end = text.size();
        for (const auto& sentence : split_sentences(text.substr(start, end - start))) {
            std::size_t words = 0;
            for (const auto& tok : tokenize(sentence)) {
                if (!is_word(tok.surface)) continue;
                ++words;
                counts.syllables += static_cast<std::size_t>(count_syllables(tok.surface));
            }
            if (words > 0) {
                ++counts.sentences;
                counts.words += words;
            }
        }
        start = end + 1;
    }
    return counts;
}

inline double fkgl_from_counts(const ReadabilityCounts& c) {
    if (c.words == 0) throw InvalidArgument("FKGL needs at least one word");
    const double words = static_cast<double>(c.words);
    return 0.39 * (words / static_cast<double>(c.sentences)) +
           11.8 * (static_cast<double>(c.syllables) / words) - 15.59;
}

// Flesch-Kincaid grade level of a text.
inline double fkgl(std::string_view text) { return fkgl_from_counts(readability_counts(text)); }

// Corpus form: each element is read as its own text (a line of a corpus file).
inline double fkgl(std::span<const std::string> sentences) {
    ReadabilityCounts total;
    for (const auto& s : sentences) total += readability_counts(s);
    return fkgl_from_counts(total);
}

}  // namespace simpeval
