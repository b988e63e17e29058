#pragma once

// Deterministic text primitives: UTF-8 handling, tokenization, n-grams,
// edit distance, syllable counting and sentence segmentation.
//
// The `standard` tokenization scheme is defined as follows:
//   * whitespace (ASCII space, \t, \n, \v, \f, \r, U+00A0) separates tokens
//     and is never part of a token;
//   * every ASCII punctuation character, and the Unicode quotes, dashes and
//     ellipsis in U+2010..U+2026, becomes a token of its own;
//   * any other run of code points is a word token.
// The `whitespace` scheme only splits on whitespace.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <ranges>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "simpeval/error.hpp"

namespace simpeval {

namespace utf8 {

inline constexpr char32_t replacement = 0xFFFD;

// Invalid sequences decode to U+FFFD one byte at a time.
inline std::u32string decode(std::string_view s) {
    std::u32string out;
    out.reserve(s.size());
    std::size_t i = 0;
    while (i < s.size()) {
        const auto b0 = static_cast<unsigned char>(s[i]);
        std::size_t len = 0;
        char32_t cp = 0;
        if (b0 < 0x80) {
            len = 1;
            cp = b0;
        } else if ((b0 & 0xE0) == 0xC0) {
            len = 2;
            cp = b0 & 0x1F;
        } else if ((b0 & 0xF0) == 0xE0) {
            len = 3;
            cp = b0 & 0x0F;
        } else if ((b0 & 0xF8) == 0xF0) {
            len = 4;
            cp = b0 & 0x07;
        }
        bool ok = len > 0 && i + len <= s.size();
        for (std::size_t k = 1; ok && k < len; ++k) {
            const auto b = static_cast<unsigned char>(s[i + k]);
            if ((b & 0xC0) != 0x80) {
                ok = false;
            } else {
                cp = (cp << 6) | (b & 0x3F);
            }
        }
        if (!ok) {
            out.push_back(replacement);
            ++i;
            continue;
        }
        out.push_back(cp);
        i += len;
    }
    return out;
}

inline void append(std::string& out, char32_t cp) {
    if (cp < 0x80) {
        out.push_back(static_cast<char>(cp));
    } else if (cp < 0x800) {
        out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    } else if (cp < 0x10000) {
        out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    } else {
        out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    }
}

inline std::string encode(std::u32string_view s) {
    std::string out;
    out.reserve(s.size());
    for (char32_t cp : s) append(out, cp);
    return out;
}

inline std::size_t length(std::string_view s) { return decode(s).size(); }

}  // namespace utf8

// Simple per-code-point lowercasing for ASCII, Latin-1, Latin Extended-A,
// basic Greek and basic Cyrillic. Everything else maps to itself.
constexpr char32_t fold_case(char32_t c) {
    if (c >= U'A' && c <= U'Z') return c + 0x20;
    if (c < 0xC0) return c;
    if (c <= 0xDE) return c == 0xD7 ? c : c + 0x20;
    if (c >= 0x100 && c <= 0x137) return (c % 2 == 0) ? c + 1 : c;
    if (c >= 0x139 && c <= 0x148) return (c % 2 == 1) ? c + 1 : c;
    if (c >= 0x14A && c <= 0x177) return (c % 2 == 0) ? c + 1 : c;
    if (c == 0x178) return 0xFF;
    if (c >= 0x179 && c <= 0x17E) return (c % 2 == 1) ? c + 1 : c;
    if (c >= 0x391 && c <= 0x3A9 && c != 0x3A2) return c + 0x20;
    if (c >= 0x410 && c <= 0x42F) return c + 0x20;
    if (c >= 0x400 && c <= 0x40F) return c + 0x50;
    return c;
}

inline std::string to_lower(std::string_view s) {
    std::string out;
    out.reserve(s.size());
    for (char32_t c : utf8::decode(s)) utf8::append(out, fold_case(c));
    return out;
}

constexpr bool is_space(char32_t c) {
    return c == U' ' || c == U'\t' || c == U'\n' || c == U'\v' || c == U'\f' ||
           c == U'\r' || c == 0xA0;
}

constexpr bool is_punct(char32_t c) {
    if (c < 0x80) {
        return (c >= 0x21 && c <= 0x2F) || (c >= 0x3A && c <= 0x40) ||
               (c >= 0x5B && c <= 0x60) || (c >= 0x7B && c <= 0x7E);
    }
    return c >= 0x2010 && c <= 0x2026;
}

// Letters and digits. Any non-ASCII code point that is not punctuation or
// space is treated as a letter.
constexpr bool is_alnum(char32_t c) {
    if (c < 0x80) {
        return (c >= U'0' && c <= U'9') || (c >= U'a' && c <= U'z') ||
               (c >= U'A' && c <= U'Z');
    }
    return !is_punct(c) && !is_space(c);
}

constexpr bool is_alpha(char32_t c) { return is_alnum(c) && !(c >= U'0' && c <= U'9'); }

struct Token {
    std::string surface;
    std::string lowercased;

    explicit Token(std::string s) : surface(std::move(s)), lowercased(to_lower(surface)) {}

    friend bool operator==(const Token& a, const Token& b) { return a.surface == b.surface; }
};

enum class TokenScheme { standard, whitespace };

inline std::vector<Token> tokenize(std::string_view text, TokenScheme scheme = TokenScheme::standard) {
    std::vector<Token> tokens;
    std::string current;
    auto flush = [&] {
        if (!current.empty()) {
            tokens.emplace_back(std::move(current));
            current.clear();
        }
    };
    for (char32_t c : utf8::decode(text)) {
        if (is_space(c)) {
            flush();
        } else if (scheme == TokenScheme::standard && is_punct(c)) {
            flush();
            std::string p;
            utf8::append(p, c);
            tokens.emplace_back(std::move(p));
        } else {
            utf8::append(current, c);
        }
    }
    flush();
    return tokens;
}

// Surface strings of `tokens`, optionally lowercased.
inline std::vector<std::string> words_of(std::span<const Token> tokens, bool lowercase) {
    std::vector<std::string> out;
    out.reserve(tokens.size());
    for (const auto& t : tokens) out.push_back(lowercase ? t.lowercased : t.surface);
    return out;
}

inline std::string join(std::span<const std::string> words, std::string_view sep = " ") {
    std::string out;
    for (std::size_t i = 0; i < words.size(); ++i) {
        if (i) out += sep;
        out += words[i];
    }
    return out;
}

// A token counts as a word when it contains at least one letter or digit.
inline bool is_word(std::string_view token) {
    const auto cps = utf8::decode(token);
    return std::ranges::any_of(cps, [](char32_t c) { return is_alnum(c); });
}

inline bool is_alphabetic(std::string_view token) {
    const auto cps = utf8::decode(token);
    return !cps.empty() && std::ranges::all_of(cps, [](char32_t c) { return is_alpha(c); });
}

// Collapses every whitespace run into one ASCII space and trims both ends.
inline std::string normalize_whitespace(std::string_view text) {
    std::string out;
    bool pending = false;
    for (char32_t c : utf8::decode(text)) {
        if (is_space(c)) {
            pending = !out.empty();
            continue;
        }
        if (pending) out.push_back(' ');
        pending = false;
        utf8::append(out, c);
    }
    return out;
}

using NGram = std::vector<std::string>;

// Multiset of n-grams of one fixed order. Ordered map so that iteration,
// and therefore every floating-point sum built from it, is deterministic.
class NGramMultiset {
public:
    using Map = std::map<NGram, std::size_t>;

    explicit NGramMultiset(std::size_t order) : order_(order) {
        if (order < 1) throw InvalidArgument("n-gram order must be >= 1");
    }

    std::size_t order() const { return order_; }

    void add(NGram gram, std::size_t n = 1) {
        if (gram.size() != order_) throw InvalidArgument("n-gram length does not match order");
        if (n == 0) return;
        counts_[std::move(gram)] += n;
    }

    std::size_t count(const NGram& gram) const {
        auto it = counts_.find(gram);
        return it == counts_.end() ? 0 : it->second;
    }

    bool contains(const NGram& gram) const { return counts_.contains(gram); }

    // Number of distinct n-grams.
    std::size_t distinct() const { return counts_.size(); }

    std::size_t total() const {
        std::size_t sum = 0;
        for (const auto& [g, c] : counts_) sum += c;
        return sum;
    }

    bool empty() const { return counts_.empty(); }
    Map::const_iterator begin() const { return counts_.begin(); }
    Map::const_iterator end() const { return counts_.end(); }

    friend bool operator==(const NGramMultiset&, const NGramMultiset&) = default;

private:
    std::size_t order_;
    Map counts_;
};

inline NGramMultiset extract_ngrams(std::span<const std::string> words, std::size_t order) {
    NGramMultiset grams(order);
    if (words.size() < order) return grams;
    for (std::size_t i = 0; i + order <= words.size(); ++i) {
        grams.add(NGram(words.begin() + static_cast<std::ptrdiff_t>(i),
                        words.begin() + static_cast<std::ptrdiff_t>(i + order)));
    }
    return grams;
}

inline NGramMultiset extract_ngrams(std::span<const Token> tokens, std::size_t order) {
    const auto words = words_of(tokens, false);
    return extract_ngrams(std::span<const std::string>(words), order);
}

// Unit-cost edit distance between two random-access sequences.
template <std::ranges::random_access_range A, std::ranges::random_access_range B>
std::size_t edit_distance(const A& a, const B& b) {
    const std::size_t n = std::ranges::size(a);
    const std::size_t m = std::ranges::size(b);
    if (n == 0) return m;
    if (m == 0) return n;
    std::vector<std::size_t> prev(m + 1), cur(m + 1);
    for (std::size_t j = 0; j <= m; ++j) prev[j] = j;
    for (std::size_t i = 1; i <= n; ++i) {
        cur[0] = i;
        for (std::size_t j = 1; j <= m; ++j) {
            const std::size_t sub = prev[j - 1] + (a[i - 1] == b[j - 1] ? 0 : 1);
            cur[j] = std::min({prev[j] + 1, cur[j - 1] + 1, sub});
        }
        std::swap(prev, cur);
    }
    return prev[m];
}

// Character (code point) Levenshtein distance.
inline std::size_t levenshtein_distance(std::string_view a, std::string_view b) {
    return edit_distance(utf8::decode(a), utf8::decode(b));
}

// 1 - distance / max length, in code points; two empty strings are identical.
inline double levenshtein_similarity(std::string_view a, std::string_view b) {
    const auto ca = utf8::decode(a);
    const auto cb = utf8::decode(b);
    const std::size_t longest = std::max(ca.size(), cb.size());
    if (longest == 0) return 1.0;
    return 1.0 - static_cast<double>(edit_distance(ca, cb)) / static_cast<double>(longest);
}

// Vowel-group heuristic: count maximal runs of [aeiouy], drop one for a
// silent final 'e' (not "-le", and only when there is more than one group),
// never return less than 1.
inline int count_syllables(std::string_view word) {
    if (word.empty()) throw InvalidArgument("cannot count syllables of an empty word");
    const std::string w = to_lower(word);
    auto is_vowel = [](char c) {
        return c == 'a' || c == 'e' || c == 'i' || c == 'o' || c == 'u' || c == 'y';
    };
    int groups = 0;
    bool in_group = false;
    for (char c : w) {
        const bool v = is_vowel(c);
        if (v && !in_group) ++groups;
        in_group = v;
    }
    const bool ends_e = w.back() == 'e';
    const bool ends_le = w.size() >= 2 && w.ends_with("le");
    if (ends_e && !ends_le && groups > 1) --groups;
    return std::max(groups, 1);
}

// Splits after '.', '!' or '?' when the next character is whitespace or the
// end of the text. Segments are trimmed; empty segments are dropped.
inline std::vector<std::string> split_sentences(std::string_view text) {
    std::vector<std::string> out;
    const auto cps = utf8::decode(text);
    std::u32string current;
    auto flush = [&] {
        auto seg = normalize_whitespace(utf8::encode(current));
        if (!seg.empty()) out.push_back(std::move(seg));
        current.clear();
    };
    for (std::size_t i = 0; i < cps.size(); ++i) {
        current.push_back(cps[i]);
        const char32_t c = cps[i];
        if ((c == U'.' || c == U'!' || c == U'?') && (i + 1 == cps.size() || is_space(cps[i + 1]))) {
            flush();
        }
    }
    flush();
    return out;
}

}  // namespace simpeval
