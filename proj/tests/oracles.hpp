#pragma once

// Reference implementations used only by tests. They work on plain
// space-separated lowercase strings, enumerate n-grams into flat lists and
// count by linear scanning, sharing no code with the library.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <random>
#include <string>
#include <vector>

namespace oracle {

using Words = std::vector<std::string>;
using Gram = std::vector<std::string>;

inline Words split_spaces(const std::string& s) {
    Words out;
    std::string cur;
    for (char c : s) {
        if (c == ' ') {
            if (!cur.empty()) out.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    if (!cur.empty()) out.push_back(cur);
    return out;
}

// Every contiguous window of length n, repeats included.
inline std::vector<Gram> windows(const Words& w, std::size_t n) {
    std::vector<Gram> out;
    for (std::size_t i = 0; i + n <= w.size(); ++i) out.emplace_back(w.begin() + i, w.begin() + i + n);
    return out;
}

inline std::size_t occurrences(const std::vector<Gram>& grams, const Gram& g) {
    return static_cast<std::size_t>(std::count(grams.begin(), grams.end(), g));
}

inline std::vector<Gram> distinct(std::vector<Gram> grams) {
    std::vector<Gram> out;
    for (auto& g : grams) {
        if (std::find(out.begin(), out.end(), g) == out.end()) out.push_back(g);
    }
    return out;
}

inline double ratio(double a, double b) { return b == 0 ? 0 : a / b; }
inline double f1(double p, double r) { return p + r == 0 ? 0 : 2 * p * r / (p + r); }

// Corpus SARI by brute-force enumeration. refs[i] holds the references of
// instance i.
inline double sari(const std::vector<std::string>& inputs, const std::vector<std::string>& outputs,
                   const std::vector<std::vector<std::string>>& refs, std::size_t k = 4) {
    double F_add = 0, F_keep = 0, F_del = 0;
    for (std::size_t n = 1; n <= k; ++n) {
        double add_c = 0, add_s = 0, add_r = 0;
        double keep_c = 0, keep_s = 0, keep_r = 0;
        double del_c = 0, del_s = 0, del_r = 0;
        for (std::size_t i = 0; i < inputs.size(); ++i) {
            const auto I = windows(split_spaces(inputs[i]), n);
            const auto O = windows(split_spaces(outputs[i]), n);
            std::vector<Gram> Rall;
            for (const auto& r : refs[i]) {
                auto w = windows(split_spaces(r), n);
                Rall.insert(Rall.end(), w.begin(), w.end());
            }
            const double R = static_cast<double>(refs[i].size());
            std::vector<Gram> universe = I;
            universe.insert(universe.end(), O.begin(), O.end());
            universe.insert(universe.end(), Rall.begin(), Rall.end());
            for (const auto& g : distinct(universe)) {
                const double ci = static_cast<double>(occurrences(I, g));
                const double co = static_cast<double>(occurrences(O, g));
                const double cr = static_cast<double>(occurrences(Rall, g));
                keep_s += std::min(R * ci, R * co);
                keep_c += std::min(std::min(R * ci, R * co), cr);
                keep_r += std::min(R * ci, cr);
                const double sd = std::max(R * ci - R * co, 0.0);
                const double rd = std::max(R * ci - cr, 0.0);
                del_s += sd;
                del_c += std::min(sd, rd);
                del_r += rd;
                if (ci == 0 && co > 0) add_s += 1;
                if (ci == 0 && co > 0 && cr > 0) add_c += 1;
                if (ci == 0 && cr > 0) add_r += 1;
            }
        }
        F_add += f1(ratio(add_c, add_s), ratio(add_c, add_r));
        F_keep += f1(ratio(keep_c, keep_s), ratio(keep_c, keep_r));
        F_del += f1(ratio(del_c, del_s), ratio(del_c, del_r));
    }
    const double kk = static_cast<double>(k);
    return 100.0 * (F_add / kk + F_keep / kk + F_del / kk) / 3.0;
}

// Textbook single-reference corpus BLEU (no smoothing).
inline double bleu(const std::vector<std::string>& outputs, const std::vector<std::string>& refs,
                   std::size_t k = 4) {
    std::vector<double> match(k, 0), total(k, 0);
    double c = 0, r = 0;
    for (std::size_t i = 0; i < outputs.size(); ++i) {
        const auto hyp = split_spaces(outputs[i]);
        const auto ref = split_spaces(refs[i]);
        c += static_cast<double>(hyp.size());
        r += static_cast<double>(ref.size());
        for (std::size_t n = 1; n <= k; ++n) {
            const auto hg = windows(hyp, n);
            const auto rg = windows(ref, n);
            for (const auto& g : distinct(hg)) {
                match[n - 1] += static_cast<double>(std::min(occurrences(hg, g), occurrences(rg, g)));
            }
            total[n - 1] += static_cast<double>(hg.size());
        }
    }
    double log_p = 0;
    for (std::size_t n = 0; n < k; ++n) {
        if (total[n] == 0 || match[n] == 0) return 0.0;
        log_p += std::log(match[n] / total[n]);
    }
    const double bp = c >= r ? 1.0 : std::exp(1.0 - r / c);
    return 100.0 * bp * std::exp(log_p / static_cast<double>(k));
}

// Random sentence of 0..max_len words over the first `vocab` letters.
inline std::string random_sentence(std::mt19937& rng, std::size_t max_len, std::size_t vocab,
                                   std::size_t min_len = 0) {
    std::uniform_int_distribution<std::size_t> len_d(min_len, max_len);
    std::uniform_int_distribution<std::size_t> w_d(0, vocab - 1);
    std::string s;
    const std::size_t len = len_d(rng);
    for (std::size_t i = 0; i < len; ++i) {
        if (i) s += ' ';
        s += static_cast<char>('a' + w_d(rng));
    }
    return s;
}

}  // namespace oracle
