#pragma once

// Shared by the report tests, the acceptance binary and the golden-file
// generator.

#include <string>
#include <vector>

#include "simpeval/datasets.hpp"
#include "simpeval/evaluation.hpp"
#include "simpeval/report.hpp"

inline simpeval::EvalCorpus load_fixture_corpus() {
    const simpeval::fs::path dir = simpeval::fs::path(SIMPEVAL_TEST_DATA) / "fixture";
    return simpeval::load_corpus(
        simpeval::CorpusPaths{dir / "orig.txt", {dir / "ref.0.txt", dir / "ref.1.txt"}, dir / "sys.txt"});
}

inline std::string fixture_report_html(std::uint64_t seed) {
    const auto corpus = load_fixture_corpus();
    const auto table =
        simpeval::FrequencyTable::load(simpeval::fs::path(SIMPEVAL_TEST_DATA) / "fixture" / "freq.txt");
    simpeval::EvalOptions opts;
    opts.frequency_table = &table;
    const auto result = simpeval::evaluate_corpus(corpus, opts);
    return simpeval::render_html(simpeval::build_report_bundle(corpus, result, seed, "fixture"));
}

// True when every non-void element is closed in order.
inline bool html_is_balanced(const std::string& html) {
    static const std::vector<std::string> void_tags = {"meta", "br", "!DOCTYPE"};
    std::vector<std::string> stack;
    for (std::size_t pos = html.find('<'); pos != std::string::npos; pos = html.find('<', pos + 1)) {
        const std::size_t end = html.find('>', pos);
        if (end == std::string::npos) return false;
        std::string tag = html.substr(pos + 1, end - pos - 1);
        const bool closing = !tag.empty() && tag[0] == '/';
        const bool self_closing = !tag.empty() && tag.back() == '/';
        if (closing) tag.erase(0, 1);
        tag = tag.substr(0, tag.find_first_of(" \t\n/"));
        if (self_closing || std::find(void_tags.begin(), void_tags.end(), tag) != void_tags.end()) continue;
        if (!closing) {
            stack.push_back(tag);
        } else {
            if (stack.empty() || stack.back() != tag) return false;
            stack.pop_back();
        }
    }
    return stack.empty();
}
