#include <gtest/gtest.h>

#include <random>
#include <set>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "simpeval/annotation.hpp"

using namespace simpeval;

namespace {

using T = Transformation;

std::vector<Token> toks(const std::string& s) { return tokenize(s); }

WordAlignment make_alignment(std::vector<AlignedPair> pairs, std::size_t s, std::size_t t) {
    return WordAlignment{std::move(pairs), s, t};
}

}  // namespace

TEST(Align, Identity) {
    const auto a = toks("the cat");
    const auto al = align_words(a, a);
    EXPECT_EQ(al.pairs, (std::vector<AlignedPair>{{0, 0}, {1, 1}}));
}

TEST(Align, StemAndCharacterThresholds) {
    // stem(running) = runn != run; similarity 1 - 4/7 < 1/2
    EXPECT_TRUE(align_words(toks("running"), toks("run")).pairs.empty());
    // walked / walking share stem "walk"
    EXPECT_EQ(align_words(toks("walked"), toks("walking")).pairs.size(), 1u);
    EXPECT_DOUBLE_EQ(word_similarity(Token("walked"), Token("walking")).value(), 0.9);
    // colour / color: 1 - 1/6
    EXPECT_DOUBLE_EQ(word_similarity(Token("colour"), Token("color")).value(), 5.0 / 6.0);
    EXPECT_EQ(word_similarity(Token("cat"), Token("dog")).num, 0u);
}

TEST(Align, ExactMatchesDominate) {
    const auto al = align_words(toks("a b"), toks("b a"));
    EXPECT_EQ(al.pairs, (std::vector<AlignedPair>{{0, 1}, {1, 0}}));
}

TEST(Align, RelativePositionBreaksTies) {
    // "the" appears twice in the target; the source "the" at the start pairs
    // with the target "the" at the start, the final one with the final one.
    const auto al = align_words(toks("the cat saw the dog"), toks("the dog saw the cat"));
    EXPECT_EQ(al.pairs, (std::vector<AlignedPair>{{0, 0}, {1, 4}, {2, 2}, {3, 3}, {4, 1}}));
}

TEST(Align, EmptySides) {
    EXPECT_TRUE(align_words(toks(""), toks("a b")).pairs.empty());
    EXPECT_EQ(align_words(toks("a b"), toks("")).source_len, 2u);
}

TEST(Align, RandomInputsAreOneToOne) {
    std::mt19937 rng(4);
    for (int trial = 0; trial < 300; ++trial) {
        const auto s = toks(oracle::random_sentence(rng, 10, 4));
        const auto t = toks(oracle::random_sentence(rng, 10, 4));
        const auto al = align_words(s, t);
        EXPECT_NO_THROW(al.validate());
        std::set<std::size_t> src, tgt;
        for (const auto& p : al.pairs) {
            EXPECT_TRUE(src.insert(p.source).second);
            EXPECT_TRUE(tgt.insert(p.target).second);
        }
    }
}

TEST(Labels, IdentityIsAllCopy) {
    const auto s = toks("The quick brown fox jumps over the lazy dog .");
    const auto labels = label_transformations(s, s);
    for (auto l : labels) EXPECT_EQ(l, T::copy);
}

TEST(Labels, UnalignedIsDelete) {
    const auto s = toks("a b c"), t = toks("a c");
    const auto labels = label_transformations(s, t, make_alignment({{0, 0}, {2, 1}}, 3, 2));
    EXPECT_EQ(labels, (TransformationLabels{T::copy, T::del, T::copy}));
}

TEST(Labels, CrossingIsMove) {
    const auto s = toks("a b"), t = toks("b a");
    const auto labels = label_transformations(s, t, make_alignment({{0, 1}, {1, 0}}, 2, 2));
    EXPECT_EQ(labels, (TransformationLabels{T::move, T::move}));
}

TEST(Labels, DifferentFormIsReplaceEvenWhenMoved) {
    const auto s = toks("big dogs bark"), t = toks("bark large dogs");
    // bark moves to the front; big -> large is re-worded.
    const auto labels = label_transformations(s, t, make_alignment({{0, 1}, {1, 2}, {2, 0}}, 3, 3));
    EXPECT_EQ(labels, (TransformationLabels{T::replace, T::move, T::move}));
}

TEST(Labels, CaseOnlyDifferenceIsCopy) {
    const auto s = toks("The cat"), t = toks("the cat");
    EXPECT_EQ(label_transformations(s, t), (TransformationLabels{T::copy, T::copy}));
}

TEST(Labels, InvalidAlignmentRejected) {
    const auto s = toks("a b"), t = toks("a b");
    EXPECT_THROW(label_transformations(s, t, make_alignment({{0, 5}}, 2, 2)), InvalidArgument);
    EXPECT_THROW(label_transformations(s, t, make_alignment({{0, 0}, {1, 0}}, 2, 2)), InvalidArgument);
    EXPECT_THROW(label_transformations(s, t, make_alignment({}, 3, 2)), InvalidArgument);
}

TEST(Labels, DeleteCountEqualsUnaligned) {
    std::mt19937 rng(8);
    for (int trial = 0; trial < 300; ++trial) {
        const auto s = toks(oracle::random_sentence(rng, 10, 5));
        const auto t = toks(oracle::random_sentence(rng, 10, 5));
        const auto al = align_words(s, t);
        const auto labels = label_transformations(s, t, al);
        ASSERT_EQ(labels.size(), s.size());
        const auto deletes = static_cast<std::size_t>(std::count(labels.begin(), labels.end(), T::del));
        EXPECT_EQ(deletes, s.size() - al.pairs.size());
    }
}

TEST(LabelF1, ConfusionCounts) {
    const TransformationLabels gold = {T::copy, T::del}, pred = {T::copy, T::copy};
    const auto f = label_f1(gold, pred);
    EXPECT_DOUBLE_EQ(at(f, T::copy), 2.0 / 3.0);
    EXPECT_DOUBLE_EQ(at(f, T::del), 0.0);
    EXPECT_DOUBLE_EQ(at(f, T::move), 1.0);  // absent on both sides
    EXPECT_DOUBLE_EQ(at(f, T::replace), 1.0);
}

TEST(TransformationF1, OutputEqualToReferenceIsPerfect) {
    const std::vector<std::string> orig = {"the old man walked home slowly"};
    const std::vector<std::string> out = {"the man went home"};
    const std::vector<std::vector<std::string>> refs = {{"an old person walked away"}, {"the man went home"}};
    const auto s = transformation_f1(orig, out, refs);
    for (auto t : kTransformations) EXPECT_DOUBLE_EQ(at(s.corpus, t), 1.0) << to_string(t);
}

TEST(TransformationF1, ReferenceOrderDoesNotMatter) {
    std::mt19937 rng(12);
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<std::string> orig, out;
        std::vector<std::vector<std::string>> refs(3);
        for (int i = 0; i < 4; ++i) {
            orig.push_back(oracle::random_sentence(rng, 8, 5, 1));
            out.push_back(oracle::random_sentence(rng, 8, 5));
            for (auto& r : refs) r.push_back(oracle::random_sentence(rng, 8, 5));
        }
        const auto a = transformation_f1(orig, out, refs);
        std::reverse(refs.begin(), refs.end());
        const auto b = transformation_f1(orig, out, refs);
        EXPECT_EQ(a.corpus, b.corpus);
        // Corpus value is the mean of sentence values, all in [0, 1].
        for (std::size_t k = 0; k < 4; ++k) {
            double sum = 0;
            for (const auto& ps : a.per_sentence) {
                EXPECT_GE(ps[k], 0.0);
                EXPECT_LE(ps[k], 1.0);
                sum += ps[k];
            }
            EXPECT_NEAR(a.corpus[k], sum / static_cast<double>(a.per_sentence.size()), 1e-12);
        }
    }
}

TEST(TransformationF1, ShapeErrors) {
    const std::vector<std::string> one = {"a"}, two = {"a", "b"};
    const std::vector<std::vector<std::string>> ref_one = {one}, ref_two = {two}, none;
    EXPECT_THROW(transformation_f1(one, two, ref_one), InvalidArgument);
    EXPECT_THROW(transformation_f1(one, one, ref_two), InvalidArgument);
    EXPECT_THROW(transformation_f1(one, one, none), InvalidArgument);
}
