#include <gtest/gtest.h>

#include <fstream>
#include <random>
#include <regex>
#include <set>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "report_fixture.hpp"
#include "simpeval/report.hpp"

using namespace simpeval;

namespace {

QEFeatures features(double cr, double sim, double splits, bool exact) {
    QEFeatures f;
    f.compression_ratio = cr;
    f.levenshtein_similarity = sim;
    f.sentence_splits = splits;
    f.exact_match = exact;
    return f;
}

std::size_t count_of(const std::string& s, const std::string& needle) {
    std::size_t n = 0;
    for (auto pos = s.find(needle); pos != std::string::npos; pos = s.find(needle, pos + 1)) ++n;
    return n;
}

}  // namespace

TEST(Sampling, CapsEachCategoryAndIsDeterministic) {
    std::mt19937 rng(1);
    std::uniform_real_distribution<double> u(0.0, 1.5);
    std::vector<QEFeatures> fs;
    std::vector<TransformationLabels> labels;
    for (int i = 0; i < 60; ++i) {
        fs.push_back(features(u(rng), u(rng) / 1.5, i % 3 == 0 ? 2.0 : 1.0, i % 5 == 0));
        labels.push_back({Transformation::replace, Transformation::copy});
    }
    const auto a = sample_instances(fs, labels, 42);
    EXPECT_EQ(a, sample_instances(fs, labels, 42));
    ASSERT_EQ(a.size(), kSampleCategories.size());
    for (const auto& [cat, idx] : a) {
        EXPECT_LE(idx.size(), kSamplesPerCategory) << to_string(cat);
        EXPECT_EQ(std::set<std::size_t>(idx.begin(), idx.end()).size(), idx.size());
    }
    EXPECT_EQ(a.at(SampleCategory::exact_copies).size(), 10u);
}

TEST(Sampling, IdentityCorpusOnlyHasExactCopies) {
    std::vector<QEFeatures> fs(4, features(1.0, 1.0, 1.0, true));
    std::vector<TransformationLabels> labels(4, TransformationLabels{Transformation::copy});
    const auto s = sample_instances(fs, labels, 7);
    for (const auto& [cat, idx] : s) {
        if (cat == SampleCategory::exact_copies) {
            EXPECT_EQ(idx.size(), 4u);
        } else {
            EXPECT_TRUE(idx.empty()) << to_string(cat);
        }
    }
}

TEST(Sampling, StrongRewritesOrderedBySimilarity) {
    std::vector<QEFeatures> fs = {features(1, 0.9, 1, false), features(1, 0.2, 1, false), features(1, 0.5, 1, false),
                                  features(1, 1.0, 1, true)};
    std::vector<TransformationLabels> labels(4);
    const auto s = sample_instances(fs, labels, 3);
    EXPECT_EQ(s.at(SampleCategory::strong_rewrite), (std::vector<std::size_t>{1, 2, 0}));
}

TEST(Sampling, SeedOrdersTies) {
    std::vector<QEFeatures> fs(30, features(1.0, 1.0, 1.0, true));
    std::vector<TransformationLabels> labels(30);
    const auto a = sample_instances(fs, labels, 1).at(SampleCategory::exact_copies);
    const auto b = sample_instances(fs, labels, 2).at(SampleCategory::exact_copies);
    EXPECT_NE(a, b);
    auto perm = detail::seeded_permutation(30, 9);
    std::sort(perm.begin(), perm.end());
    for (std::size_t i = 0; i < perm.size(); ++i) EXPECT_EQ(perm[i], i);
}

TEST(LengthBreakdown, Quartiles) {
    const std::vector<std::size_t> lengths = {8, 1, 7, 2, 6, 3, 5, 4};
    std::vector<QEFeatures> fs;
    for (auto l : lengths) fs.push_back(features(static_cast<double>(l), 0.5, 1, false));
    const auto buckets = length_breakdown(lengths, fs);
    ASSERT_EQ(buckets.size(), 4u);
    const std::vector<std::pair<std::size_t, std::size_t>> ranges = {{1, 2}, {3, 4}, {5, 6}, {7, 8}};
    for (std::size_t b = 0; b < 4; ++b) {
        EXPECT_EQ(buckets[b].lower, ranges[b].first);
        EXPECT_EQ(buckets[b].upper, ranges[b].second);
        ASSERT_EQ(buckets[b].members.size(), 2u);
        EXPECT_DOUBLE_EQ(buckets[b].means->compression_ratio,
                         static_cast<double>(ranges[b].first + ranges[b].second) / 2.0);
    }
}

TEST(LengthBreakdown, DegenerateInputs) {
    const std::vector<std::size_t> same = {5, 5, 5, 5, 5};
    const std::vector<QEFeatures> fs(5, features(1, 1, 1, true));
    const auto buckets = length_breakdown(same, fs);
    std::size_t total = 0;
    for (const auto& b : buckets) total += b.members.size();
    EXPECT_EQ(total, 5u);
    EXPECT_EQ(buckets[0].members.size(), 5u);
    const std::vector<std::size_t> two = {3, 9};
    const std::vector<QEFeatures> fs2(2, features(1, 1, 1, true));
    ASSERT_EQ(length_breakdown(two, fs2).size(), 1u);
    EXPECT_TRUE(length_breakdown({}, {}).empty());
}

TEST(Highlights, CoverBothSides) {
    std::mt19937 rng(17);
    for (int trial = 0; trial < 200; ++trial) {
        const auto a = analyse_instance(oracle::random_sentence(rng, 9, 5), oracle::random_sentence(rng, 9, 5));
        const auto spans = compute_highlights(a.alignment, a.labels);
        std::size_t src_cover = 0, out_cover = 0;
        for (const auto& sp : spans) {
            ASSERT_LT(sp.begin, sp.end);
            (sp.side == Side::source ? src_cover : out_cover) += sp.end - sp.begin;
            ASSERT_LE(sp.end, sp.side == Side::source ? a.source.size() : a.output.size());
        }
        EXPECT_EQ(src_cover, a.source.size());
        EXPECT_EQ(out_cover, a.output.size());
    }
}

TEST(Highlights, KindsFollowLabels) {
    const auto a = analyse_instance("a b c", "b a x");
    const auto spans = compute_highlights(a.alignment, a.labels);
    const std::vector<HighlightSpan> expected = {
        {Side::source, 0, 2, HighlightKind::move},
        {Side::source, 2, 3, HighlightKind::del},
        {Side::output, 0, 2, HighlightKind::move},
        {Side::output, 2, 3, HighlightKind::addition},
    };
    EXPECT_EQ(spans, expected);
}

TEST(Histogram, CountsSumToInputs) {
    std::mt19937 rng(23);
    std::uniform_real_distribution<double> u(-0.5, 2.5);
    std::vector<double> v(137);
    for (auto& x : v) x = u(rng);
    const auto h = make_histogram(v, 0.0, 2.0);
    ASSERT_EQ(h.counts.size(), kHistogramBins);
    std::size_t total = 0;
    for (auto c : h.counts) total += c;
    EXPECT_EQ(total, v.size());
    EXPECT_THROW(make_histogram(v, 1.0, 1.0), InvalidArgument);
}

TEST(Html, EscapesMarkup) {
    EXPECT_EQ(detail::html_escape("<a href=\"x\">&'"), "&lt;a href=&quot;x&quot;&gt;&amp;&#39;");
}

TEST(Html, StructureOfFixtureReport) {
    const auto html = fixture_report_html(7);
    EXPECT_EQ(html.rfind("<!DOCTYPE html>", 0), 0u);
    for (const char* h : {"Metric Scores", "System vs. Reference", "Distributions", "Length Breakdown",
                          "Qualitative Samples"}) {
        EXPECT_NE(html.find(std::string("<h2>") + h + "</h2>"), std::string::npos) << h;
    }
    EXPECT_EQ(html.find("http"), std::string::npos);
    EXPECT_EQ(html.find("<script"), std::string::npos);
    EXPECT_EQ(count_of(html, "<svg"), 2u);
    EXPECT_TRUE(html_is_balanced(html));
    EXPECT_EQ(html, fixture_report_html(7));
}

TEST(Html, MatchesGoldenSnapshot) {
    std::ifstream in(fs::path(SIMPEVAL_GOLDEN_DIR) / "fixture_report.html", std::ios::binary);
    ASSERT_TRUE(in) << "golden snapshot missing";
    const std::string golden((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    EXPECT_EQ(fixture_report_html(7), golden);
}
