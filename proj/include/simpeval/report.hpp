#pragma once

// Self-contained HTML evaluation report. Everything (styles, plots) is
// inline; output bytes depend only on the bundle.

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <fmt/format.h>

#include "simpeval/annotation.hpp"
#include "simpeval/corpus.hpp"
#include "simpeval/evaluation.hpp"
#include "simpeval/qe.hpp"

namespace simpeval {

inline constexpr std::size_t kSamplesPerCategory = 10;
inline constexpr std::size_t kHistogramBins = 20;

enum class SampleCategory : std::uint8_t {
    sentence_splitting,
    strong_rewrite,
    high_compression,
    lexical_simplification,
    exact_copies,
};

inline constexpr std::array<SampleCategory, 5> kSampleCategories = {
    SampleCategory::sentence_splitting, SampleCategory::strong_rewrite, SampleCategory::high_compression,
    SampleCategory::lexical_simplification, SampleCategory::exact_copies};

inline const char* to_string(SampleCategory c) {
    switch (c) {
        case SampleCategory::sentence_splitting: return "Sentence splitting";
        case SampleCategory::strong_rewrite: return "Strong rewrites";
        case SampleCategory::high_compression: return "High compression";
        case SampleCategory::lexical_simplification: return "Lexical simplification";
        case SampleCategory::exact_copies: return "Exact copies";
    }
    return "?";
}

enum class HighlightKind : std::uint8_t { del, move, replace, copy, addition };

inline const char* to_string(HighlightKind k) {
    switch (k) {
        case HighlightKind::del: return "DELETE";
        case HighlightKind::move: return "MOVE";
        case HighlightKind::replace: return "REPLACE";
        case HighlightKind::copy: return "COPY";
        case HighlightKind::addition: return "ADDITION";
    }
    return "?";
}

enum class Side : std::uint8_t { source, output };

// Tokens [begin, end) on one side.
struct HighlightSpan {
    Side side = Side::source;
    std::size_t begin = 0;
    std::size_t end = 0;
    HighlightKind kind = HighlightKind::copy;
    friend bool operator==(const HighlightSpan&, const HighlightSpan&) = default;
};

// Spans covering every source and output token, adjacent tokens of the same
// kind merged. Output tokens take the label of their aligned source token;
// unaligned output tokens are ADDITION.
inline std::vector<HighlightSpan> compute_highlights(const WordAlignment& alignment,
                                                     std::span<const Transformation> labels) {
    if (labels.size() != alignment.source_len) throw InvalidArgument("labels do not match alignment");
    auto to_kind = [](Transformation t) {
        switch (t) {
            case Transformation::del: return HighlightKind::del;
            case Transformation::move: return HighlightKind::move;
            case Transformation::replace: return HighlightKind::replace;
            case Transformation::copy: return HighlightKind::copy;
        }
        return HighlightKind::copy;
    };
    std::vector<HighlightKind> out_kinds(alignment.target_len, HighlightKind::addition);
    for (const auto& p : alignment.pairs) out_kinds[p.target] = to_kind(labels[p.source]);
    std::vector<HighlightKind> src_kinds;
    for (auto t : labels) src_kinds.push_back(to_kind(t));

    std::vector<HighlightSpan> spans;
    auto merge = [&](Side side, const std::vector<HighlightKind>& kinds) {
        std::size_t start = 0;
        for (std::size_t k = 1; k <= kinds.size(); ++k) {
            if (k == kinds.size() || kinds[k] != kinds[start]) {
                spans.push_back({side, start, k, kinds[start]});
                start = k;
            }
        }
    };
    merge(Side::source, src_kinds);
    merge(Side::output, out_kinds);
    return spans;
}

struct InstanceAnalysis {
    std::vector<Token> source;
    std::vector<Token> output;
    WordAlignment alignment;
    TransformationLabels labels;
};

inline InstanceAnalysis analyse_instance(std::string_view source, std::string_view output,
                                         TokenScheme scheme = TokenScheme::standard) {
    InstanceAnalysis a;
    a.source = tokenize(source, scheme);
    a.output = tokenize(output, scheme);
    a.alignment = align_words(a.source, a.output);
    a.labels = label_transformations(a.source, a.output, a.alignment);
    return a;
}

namespace detail {

// Fisher-Yates driven directly by mt19937_64 so the permutation is the
// same on every standard library.
inline std::vector<std::size_t> seeded_permutation(std::size_t n, std::uint64_t seed) {
    std::vector<std::size_t> idx(n);
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    std::mt19937_64 rng(seed);
    for (std::size_t i = n; i > 1; --i) {
        const std::size_t j = static_cast<std::size_t>(rng() % i);
        std::swap(idx[i - 1], idx[j]);
    }
    return idx;
}

}  // namespace detail

using SampleMap = std::map<SampleCategory, std::vector<std::size_t>>;

// Picks up to 10 instance indices per category:
//   sentence splitting      splits ratio > 1, largest ratio first
//   strong rewrites         non-identical outputs, lowest similarity first
//   high compression        compression ratio < 1, lowest ratio first
//   lexical simplification  >= 1 REPLACE and splits ratio == 1, most REPLACE first
//   exact copies            exact matches
// Ties are ordered by a permutation seeded with `seed`.
inline SampleMap sample_instances(std::span<const QEFeatures> features,
                                  std::span<const TransformationLabels> labels, std::uint64_t seed) {
    if (features.size() != labels.size()) throw InvalidArgument("features and labels differ in length");
    const auto order = detail::seeded_permutation(features.size(), seed);
    auto replaces = [&](std::size_t i) {
        return static_cast<double>(std::count(labels[i].begin(), labels[i].end(), Transformation::replace));
    };

    SampleMap out;
    for (auto cat : kSampleCategories) {
        std::vector<std::pair<double, std::size_t>> keyed;  // (sort key ascending, index)
        for (std::size_t i : order) {
            const auto& f = features[i];
            switch (cat) {
                case SampleCategory::sentence_splitting:
                    if (f.sentence_splits > 1.0) keyed.emplace_back(-f.sentence_splits, i);
                    break;
                case SampleCategory::strong_rewrite:
                    if (!f.exact_match) keyed.emplace_back(f.levenshtein_similarity, i);
                    break;
                case SampleCategory::high_compression:
                    if (f.compression_ratio < 1.0) keyed.emplace_back(f.compression_ratio, i);
                    break;
                case SampleCategory::lexical_simplification:
                    if (replaces(i) >= 1.0 && f.sentence_splits == 1.0) keyed.emplace_back(-replaces(i), i);
                    break;
                case SampleCategory::exact_copies:
                    if (f.exact_match) keyed.emplace_back(0.0, i);
                    break;
            }
        }
        std::stable_sort(keyed.begin(), keyed.end(),
                         [](const auto& a, const auto& b) { return a.first < b.first; });
        auto& picked = out[cat];
        for (std::size_t k = 0; k < keyed.size() && k < kSamplesPerCategory; ++k) picked.push_back(keyed[k].second);
    }
    return out;
}

struct LengthBucket {
    std::size_t lower = 0;  // inclusive source-length bounds; lower > upper when no length fits
    std::size_t upper = 0;
    std::vector<std::size_t> members;
    std::optional<QEAggregate> means;  // empty bucket -> nullopt
};

// Partitions instances by source token count at the nearest-rank quartiles
// q1 <= q2 <= q3: bucket 0 holds lengths <= q1, bucket 1 (q1, q2], bucket 2
// (q2, q3], bucket 3 the rest. Fewer than four instances give one bucket.
inline std::vector<LengthBucket> length_breakdown(std::span<const std::size_t> source_lengths,
                                                  std::span<const QEFeatures> features) {
    if (source_lengths.size() != features.size()) throw InvalidArgument("lengths and features differ in length");
    std::vector<LengthBucket> buckets;
    if (source_lengths.empty()) return buckets;
    std::vector<std::size_t> sorted(source_lengths.begin(), source_lengths.end());
    std::sort(sorted.begin(), sorted.end());
    const std::size_t n = sorted.size();

    std::vector<std::size_t> bounds;  // upper bound of each bucket
    if (n < 4) {
        bounds.push_back(sorted.back());
    } else {
        for (std::size_t q = 1; q <= 3; ++q) {
            const std::size_t rank = (q * n + 3) / 4;  // ceil(q * n / 4)
            bounds.push_back(sorted[rank - 1]);
        }
        bounds.push_back(sorted.back());
    }
    std::size_t lower = sorted.front();
    for (std::size_t b = 0; b < bounds.size(); ++b) {
        LengthBucket bucket;
        bucket.lower = lower;
        bucket.upper = bounds[b];
        buckets.push_back(bucket);
        lower = bounds[b] + 1;
    }
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t len = source_lengths[i];
        std::size_t b = 0;
        while (b + 1 < bounds.size() && len > bounds[b]) ++b;
        buckets[b].members.push_back(i);
    }
    for (auto& bucket : buckets) {
        if (bucket.members.empty()) continue;
        std::vector<QEFeatures> member_features;
        for (std::size_t i : bucket.members) member_features.push_back(features[i]);
        bucket.means = aggregate_features(member_features);
    }
    return buckets;
}

struct Histogram {
    double low = 0.0;
    double high = 1.0;
    std::vector<std::size_t> counts;
};

// Equal-width bins over [low, high]; values outside are clamped into the
// first or last bin.
inline Histogram make_histogram(std::span<const double> values, double low, double high,
                                std::size_t bins = kHistogramBins) {
    if (bins == 0 || !(high > low)) throw InvalidArgument("bad histogram range");
    Histogram h{low, high, std::vector<std::size_t>(bins, 0)};
    for (double v : values) {
        const double pos = (v - low) / (high - low) * static_cast<double>(bins);
        std::size_t b = pos <= 0.0 ? 0 : static_cast<std::size_t>(pos);
        if (b >= bins) b = bins - 1;
        ++h.counts[b];
    }
    return h;
}

struct SampledInstance {
    std::size_t index = 0;
    std::vector<std::string> source_tokens;
    std::vector<std::string> output_tokens;
    std::vector<HighlightSpan> spans;
    double similarity = 0.0;
    double compression_ratio = 0.0;
};

struct ReportBundle {
    std::string system_name = "system";
    std::uint64_t seed = 0;
    std::size_t instances = 0;
    std::size_t references = 0;
    MetricReport metrics;
    TransformationScores transformations;
    QEAggregate system_qe;
    QEAggregate reference_qe;
    std::vector<QEFeatures> system_features;
    std::vector<QEFeatures> reference_features;
    std::vector<LengthBucket> length_buckets;
    std::vector<std::pair<SampleCategory, std::vector<SampledInstance>>> samples;

    // Throws InvalidArgument if sample indices or spans are out of bounds,
    // spans overlap, or a category holds more than 10 samples.
    void validate() const {
        if (system_features.size() != instances) throw InvalidArgument("bundle: feature count mismatch");
        for (const auto& [cat, list] : samples) {
            if (list.size() > kSamplesPerCategory) throw InvalidArgument("bundle: too many samples");
            for (const auto& s : list) {
                if (s.index >= instances) throw InvalidArgument("bundle: sample index out of range");
                for (Side side : {Side::source, Side::output}) {
                    const std::size_t len =
                        side == Side::source ? s.source_tokens.size() : s.output_tokens.size();
                    std::size_t last_end = 0;
                    for (const auto& sp : s.spans) {
                        if (sp.side != side) continue;
                        if (sp.begin >= sp.end || sp.end > len || sp.begin < last_end) {
                            throw InvalidArgument("bundle: bad highlight span");
                        }
                        last_end = sp.end;
                    }
                }
            }
        }
    }
};

inline ReportBundle build_report_bundle(const EvalCorpus& corpus, const EvaluationResult& result, std::uint64_t seed,
                                        std::string system_name = "system",
                                        TokenScheme scheme = TokenScheme::standard) {
    const auto& outputs = corpus.system_outputs();
    ReportBundle b;
    b.system_name = std::move(system_name);
    b.seed = seed;
    b.instances = result.instances;
    b.references = result.references;
    b.metrics = result.metrics;
    b.transformations = result.transformations;
    b.system_qe = result.system_qe;
    b.reference_qe = result.reference_qe;
    b.system_features = result.system_features;
    b.reference_features = result.reference_features;

    std::vector<InstanceAnalysis> analyses;
    std::vector<TransformationLabels> labels;
    std::vector<std::size_t> lengths;
    for (std::size_t i = 0; i < corpus.size(); ++i) {
        analyses.push_back(analyse_instance(corpus.originals[i], outputs[i], scheme));
        labels.push_back(analyses.back().labels);
        lengths.push_back(analyses.back().source.size());
    }
    b.length_buckets = length_breakdown(lengths, result.system_features);
    for (const auto& [cat, indices] : sample_instances(result.system_features, labels, seed)) {
        std::vector<SampledInstance> list;
        for (std::size_t i : indices) {
            SampledInstance s;
            s.index = i;
            s.source_tokens = words_of(analyses[i].source, false);
            s.output_tokens = words_of(analyses[i].output, false);
            s.spans = compute_highlights(analyses[i].alignment, analyses[i].labels);
            s.similarity = result.system_features[i].levenshtein_similarity;
            s.compression_ratio = result.system_features[i].compression_ratio;
            list.push_back(std::move(s));
        }
        b.samples.emplace_back(cat, std::move(list));
    }
    return b;
}

namespace detail {

inline std::string html_escape(std::string_view s) {
    std::string out;
    out.reserve(s.size());
    for (char c : s) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '"': out += "&quot;"; break;
            case '\'': out += "&#39;"; break;
            default: out.push_back(c);
        }
    }
    return out;
}

inline std::string num(double v, int precision = 2) { return fmt::format("{:.{}f}", v, precision); }

inline std::string css_class(HighlightKind k) {
    switch (k) {
        case HighlightKind::del: return "del";
        case HighlightKind::move: return "move";
        case HighlightKind::replace: return "repl";
        case HighlightKind::copy: return "copy";
        case HighlightKind::addition: return "add";
    }
    return "copy";
}

inline std::string render_tokens(const std::vector<std::string>& tokens, const std::vector<HighlightSpan>& spans,
                                 Side side) {
    std::string out;
    for (const auto& sp : spans) {
        if (sp.side != side) continue;
        std::vector<std::string> words(tokens.begin() + static_cast<std::ptrdiff_t>(sp.begin),
                                       tokens.begin() + static_cast<std::ptrdiff_t>(sp.end));
        if (!out.empty()) out += ' ';
        const std::string text = html_escape(join(words));
        if (sp.kind == HighlightKind::copy) {
            out += text;
        } else {
            out += fmt::format("<span class=\"{}\" title=\"{}\">{}</span>", css_class(sp.kind), to_string(sp.kind),
                               text);
        }
    }
    return out;
}

inline std::string svg_histogram(const std::string& title, const Histogram& sys, const Histogram& ref) {
    constexpr double width = 560, height = 240, left = 40, bottom = 30, top = 20;
    const double plot_w = width - left - 10, plot_h = height - bottom - top;
    std::size_t peak = 1;
    for (auto c : sys.counts) peak = std::max(peak, c);
    for (auto c : ref.counts) peak = std::max(peak, c);
    const std::size_t bins = sys.counts.size();
    const double bin_w = plot_w / static_cast<double>(bins);

    std::string s = fmt::format(
        "<svg width=\"{0}\" height=\"{1}\" viewBox=\"0 0 {0} {1}\" "
        "role=\"img\" aria-label=\"{2}\">\n",
        width, height, html_escape(title));
    s += fmt::format("<line x1=\"{0}\" y1=\"{1}\" x2=\"{2}\" y2=\"{1}\" stroke=\"#333\"/>\n", left, top + plot_h,
                     left + plot_w);
    s += fmt::format("<line x1=\"{0}\" y1=\"{1}\" x2=\"{0}\" y2=\"{2}\" stroke=\"#333\"/>\n", left, top, top + plot_h);
    auto bars = [&](const Histogram& h, double offset, const char* cls) {
        for (std::size_t b = 0; b < bins; ++b) {
            if (h.counts[b] == 0) continue;
            const double bh = plot_h * static_cast<double>(h.counts[b]) / static_cast<double>(peak);
            const double x = left + bin_w * static_cast<double>(b) + offset;
            s += fmt::format("<rect class=\"{}\" x=\"{:.2f}\" y=\"{:.2f}\" width=\"{:.2f}\" height=\"{:.2f}\">"
                             "<title>{}</title></rect>\n",
                             cls, x, top + plot_h - bh, bin_w / 2 - 1, bh, h.counts[b]);
        }
    };
    bars(sys, 0.5, "bar-sys");
    bars(ref, bin_w / 2, "bar-ref");
    for (std::size_t t = 0; t <= 4; ++t) {
        const double frac = static_cast<double>(t) / 4.0;
        s += fmt::format("<text x=\"{:.2f}\" y=\"{:.2f}\" font-size=\"10\" text-anchor=\"middle\">{}</text>\n",
                         left + plot_w * frac, top + plot_h + 14, num(sys.low + (sys.high - sys.low) * frac));
    }
    s += fmt::format("<text x=\"{}\" y=\"{}\" font-size=\"10\" text-anchor=\"end\">{}</text>\n", left - 4, top + 4,
                     peak);
    s += fmt::format("<text x=\"{:.2f}\" y=\"{}\" font-size=\"11\" text-anchor=\"middle\">{}</text>\n",
                     left + plot_w / 2, height - 2, html_escape(title));
    s += "</svg>\n";
    return s;
}

inline std::string opt_num(const std::optional<double>& v) { return v ? num(*v) : "&ndash;"; }

inline constexpr std::string_view kStyle = R"(body{font-family:sans-serif;margin:2em;color:#222}
table{border-collapse:collapse;margin:1em 0}
th,td{border:1px solid #bbb;padding:4px 8px;text-align:right}
th:first-child,td:first-child{text-align:left}
.bar-sys{fill:#4477aa}.bar-ref{fill:#ee7733}
.legend span{display:inline-block;width:12px;height:12px;margin:0 4px 0 12px}
.sample{margin:0.6em 0;padding:0.4em;border-left:3px solid #ccc}
.del{background:#f8c4c4;text-decoration:line-through}
.move{background:#d9c4f0}
.repl{background:#fbe0a8}
.add{background:#c6ecc6}
)";

}  // namespace detail

// Section headings: Metric Scores, System vs. Reference, Distributions,
// Length Breakdown, Qualitative Samples.
inline std::string render_html(const ReportBundle& b) {
    using detail::html_escape;
    using detail::num;
    b.validate();
    std::string h;
    h += "<!DOCTYPE html>\n<html lang=\"en\">\n<head>\n<meta charset=\"utf-8\">\n";
    h += fmt::format("<title>Simplification report: {}</title>\n", html_escape(b.system_name));
    h += "<style>\n";
    h += detail::kStyle;
    h += "</style>\n</head>\n<body>\n";
    h += fmt::format("<h1>Simplification report: {}</h1>\n", html_escape(b.system_name));
    h += fmt::format("<p>{} instances, {} reference(s) per instance, sampling seed {}.</p>\n", b.instances,
                     b.references, b.seed);

    h += "<section id=\"scores\">\n<h2>Metric Scores</h2>\n<table>\n<tr><th>Metric</th><th>Score</th></tr>\n";
    if (b.metrics.sari) h += fmt::format("<tr><td>SARI</td><td>{}</td></tr>\n", num(b.metrics.sari->score));
    if (b.metrics.sari) {
        h += fmt::format("<tr><td>SARI add / keep / del</td><td>{} / {} / {}</td></tr>\n",
                         num(100 * b.metrics.sari->add.overall), num(100 * b.metrics.sari->keep.overall),
                         num(100 * b.metrics.sari->del.overall));
    }
    if (b.metrics.bleu) h += fmt::format("<tr><td>BLEU</td><td>{}</td></tr>\n", num(b.metrics.bleu->score));
    if (b.metrics.fkgl) h += fmt::format("<tr><td>FKGL</td><td>{}</td></tr>\n", num(*b.metrics.fkgl));
    for (const auto& [name, value] : b.metrics.extras.values) {
        h += fmt::format("<tr><td>{}</td><td>{}</td></tr>\n", html_escape(name), num(value));
    }
    h += "</table>\n<table>\n<tr><th>Transformation</th><th>F1</th></tr>\n";
    for (auto t : kTransformations) {
        h += fmt::format("<tr><td>{}</td><td>{}</td></tr>\n", to_string(t), num(100 * at(b.transformations.corpus, t)));
    }
    h += "</table>\n</section>\n";

    h += "<section id=\"qe\">\n<h2>System vs. Reference</h2>\n<table>\n"
         "<tr><th>Feature</th><th>System</th><th>Reference</th></tr>\n";
    auto qe_row = [&](const char* name, const std::string& s, const std::string& r) {
        h += fmt::format("<tr><td>{}</td><td>{}</td><td>{}</td></tr>\n", name, s, r);
    };
    const auto& s = b.system_qe;
    const auto& r = b.reference_qe;
    qe_row("Compression ratio", num(s.compression_ratio), num(r.compression_ratio));
    qe_row("Levenshtein similarity", num(s.levenshtein_similarity), num(r.levenshtein_similarity));
    qe_row("Sentence splits", num(s.sentence_splits), num(r.sentence_splits));
    qe_row("Exact matches", num(s.exact_match), num(r.exact_match));
    qe_row("Additions proportion", num(s.added_proportion), num(r.added_proportion));
    qe_row("Deletions proportion", num(s.deleted_proportion), num(r.deleted_proportion));
    qe_row("Lexical complexity", detail::opt_num(s.lexical_complexity), detail::opt_num(r.lexical_complexity));
    h += "</table>\n</section>\n";

    h += "<section id=\"distributions\">\n<h2>Distributions</h2>\n";
    h += "<p class=\"legend\"><span class=\"bar-sys\" style=\"background:#4477aa\"></span>system"
         "<span class=\"bar-ref\" style=\"background:#ee7733\"></span>reference</p>\n";
    {
        std::vector<double> sys_cr, ref_cr, sys_sim, ref_sim;
        double cr_high = 1.0;
        for (const auto& f : b.system_features) {
            sys_cr.push_back(f.compression_ratio);
            sys_sim.push_back(f.levenshtein_similarity);
            cr_high = std::max(cr_high, f.compression_ratio);
        }
        for (const auto& f : b.reference_features) {
            ref_cr.push_back(f.compression_ratio);
            ref_sim.push_back(f.levenshtein_similarity);
            cr_high = std::max(cr_high, f.compression_ratio);
        }
        h += detail::svg_histogram("Compression ratio", make_histogram(sys_cr, 0.0, cr_high),
                                   make_histogram(ref_cr, 0.0, cr_high));
        h += detail::svg_histogram("Levenshtein similarity", make_histogram(sys_sim, 0.0, 1.0),
                                   make_histogram(ref_sim, 0.0, 1.0));
    }
    h += "</section>\n";

    h += "<section id=\"lengths\">\n<h2>Length Breakdown</h2>\n<table>\n"
         "<tr><th>Source length (tokens)</th><th>Instances</th><th>Compression ratio</th>"
         "<th>Levenshtein similarity</th><th>Exact matches</th><th>Additions</th><th>Deletions</th></tr>\n";
    for (const auto& bucket : b.length_buckets) {
        const std::string range =
            bucket.lower <= bucket.upper ? fmt::format("{}&ndash;{}", bucket.lower, bucket.upper) : "&ndash;";
        if (!bucket.means) {
            h += fmt::format("<tr><td>{}</td><td>0</td><td>&ndash;</td><td>&ndash;</td><td>&ndash;</td>"
                             "<td>&ndash;</td><td>&ndash;</td></tr>\n",
                             range);
            continue;
        }
        const auto& m = *bucket.means;
        h += fmt::format("<tr><td>{}</td><td>{}</td><td>{}</td><td>{}</td><td>{}</td><td>{}</td><td>{}</td></tr>\n",
                         range, bucket.members.size(), num(m.compression_ratio), num(m.levenshtein_similarity),
                         num(m.exact_match), num(m.added_proportion), num(m.deleted_proportion));
    }
    h += "</table>\n</section>\n";

    h += "<section id=\"samples\">\n<h2>Qualitative Samples</h2>\n";
    h += "<p>Highlights: <span class=\"del\">deleted</span> <span class=\"move\">moved</span> "
         "<span class=\"repl\">replaced</span> <span class=\"add\">added</span></p>\n";
    for (const auto& [cat, list] : b.samples) {
        h += fmt::format("<h3>{} ({})</h3>\n", to_string(cat), list.size());
        if (list.empty()) h += "<p>No instances.</p>\n";
        for (const auto& smp : list) {
            h += fmt::format("<div class=\"sample\"><p>#{} &middot; similarity {} &middot; compression {}</p>\n",
                             smp.index + 1, num(smp.similarity), num(smp.compression_ratio));
            h += "<p>Source: " + detail::render_tokens(smp.source_tokens, smp.spans, Side::source) + "</p>\n";
            h += "<p>Output: " + detail::render_tokens(smp.output_tokens, smp.spans, Side::output) + "</p>\n</div>\n";
        }
    }
    h += "</section>\n</body>\n</html>\n";
    return h;
}

}  // namespace simpeval
