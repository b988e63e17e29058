// simpeval: command-line front end.
//
//   simpeval evaluate (--test-set NAME | --orig FILE --refs FILE...) --sys FILE [options]
//   simpeval report   (same inputs) --sys FILE -o report.html [--seed N]
//   simpeval datasets list | fetch NAME | validate NAME
//
// Exit codes: 0 success, 1 runtime error, 2 usage or validation error.

#include <cstdint>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "simpeval/curl_downloader.hpp"
#include "simpeval/datasets.hpp"
#include "simpeval/evaluation.hpp"
#include "simpeval/io.hpp"
#include "simpeval/report.hpp"

namespace {

using namespace simpeval;

constexpr int kExitRuntime = 1;
constexpr int kExitUsage = 2;

struct RunConfig {
    std::string test_set;
    std::string original;
    std::vector<std::string> references;
    std::string system;
    std::string metrics = "sari,bleu,fkgl";
    std::string tokenizer = "standard";
    bool case_sensitive = false;
    std::size_t max_order = 4;
    std::string smoothing = "none";
    std::string frequency_table;
    std::string registry;
    std::string data_dir;
    std::size_t reference_index = 0;
    // evaluate
    bool table = false;
    // report
    std::string output;
    std::uint64_t seed = 0;
    std::string name;
};

class UsageError : public Error {
public:
    using Error::Error;
};

std::vector<std::string> split_list(const std::string& s) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item = normalize_whitespace(item);
        if (!item.empty()) out.push_back(item);
    }
    return out;
}

fs::path data_dir(const RunConfig& cfg) { return cfg.data_dir.empty() ? default_data_dir() : fs::path(cfg.data_dir); }

DatasetRegistry load_registry(const RunConfig& cfg) {
    auto reg = DatasetRegistry::with_builtins();
    if (!cfg.registry.empty()) {
        reg.load_config(cfg.registry);
    } else if (const auto implicit = data_dir(cfg) / "registry.json"; fs::exists(implicit)) {
        reg.load_config(implicit);
    }
    return reg;
}

const DatasetDescriptor& find_dataset(const DatasetRegistry& reg, const std::string& name) {
    if (!reg.contains(name)) throw UsageError("unknown dataset '" + name + "'");
    return reg.find(name);
}

EvalCorpus load_inputs(const RunConfig& cfg) {
    const bool named = !cfg.test_set.empty();
    const bool explicit_paths = !cfg.original.empty() || !cfg.references.empty();
    if (named == explicit_paths) throw UsageError("give either --test-set or --orig with --refs");
    if (named) {
        const auto reg = load_registry(cfg);
        return load_corpus(find_dataset(reg, cfg.test_set), data_dir(cfg), fs::path(cfg.system));
    }
    if (cfg.original.empty() || cfg.references.empty()) throw UsageError("--orig and --refs go together");
    CorpusPaths paths;
    paths.original = cfg.original;
    for (const auto& r : cfg.references) paths.references.emplace_back(r);
    paths.outputs = cfg.system;
    return load_corpus(paths);
}

struct Prepared {
    EvalCorpus corpus;
    std::optional<FrequencyTable> table;
    EvalOptions options;
};

Prepared prepare(const RunConfig& cfg) {
    Prepared p;
    if (cfg.tokenizer == "standard") {
        p.options.scheme = TokenScheme::standard;
    } else if (cfg.tokenizer == "whitespace") {
        p.options.scheme = TokenScheme::whitespace;
    } else {
        throw UsageError("unknown tokenizer '" + cfg.tokenizer + "'");
    }
    if (cfg.smoothing == "none") {
        p.options.bleu_smoothing = BleuSmoothing::none;
    } else if (cfg.smoothing == "epsilon") {
        p.options.bleu_smoothing = BleuSmoothing::epsilon;
    } else {
        throw UsageError("unknown smoothing '" + cfg.smoothing + "'");
    }
    p.options.metrics = split_list(cfg.metrics);
    try {
        check_metric_names(p.options.metrics, nullptr);
    } catch (const InvalidArgument& e) {
        throw UsageError(e.what());
    }
    p.options.lowercase = !cfg.case_sensitive;
    p.options.max_order = cfg.max_order;
    p.options.reference_index = cfg.reference_index;

    p.corpus = load_inputs(cfg);

    if (!cfg.frequency_table.empty()) {
        if (!fs::exists(cfg.frequency_table)) {
            std::cerr << "warning: frequency table '" << cfg.frequency_table
                      << "' not found; lexical complexity omitted\n";
        } else {
            p.table = FrequencyTable::load(cfg.frequency_table);
            for (const auto& w : p.table->warnings()) std::cerr << "warning: frequency table " << w << "\n";
            if (p.table->empty()) {
                std::cerr << "warning: frequency table is empty; lexical complexity omitted\n";
                p.table.reset();
            }
        }
    }
    return p;
}

std::string human_table(const EvaluationResult& r) {
    std::string out;
    auto row = [&](const std::string& k, double v) { out += fmt::format("{:<26}{:>10.2f}\n", k, v); };
    if (r.metrics.sari) row("SARI", r.metrics.sari->score);
    if (r.metrics.bleu) row("BLEU", r.metrics.bleu->score);
    if (r.metrics.fkgl) row("FKGL", *r.metrics.fkgl);
    for (const auto& [name, v] : r.metrics.extras.values) row(name, v);
    for (auto t : kTransformations) row(std::string(to_string(t)) + " F1", 100 * at(r.transformations.corpus, t));
    row("Compression ratio", r.system_qe.compression_ratio);
    row("Levenshtein similarity", r.system_qe.levenshtein_similarity);
    row("Sentence splits", r.system_qe.sentence_splits);
    row("Exact matches", r.system_qe.exact_match);
    row("Additions proportion", r.system_qe.added_proportion);
    row("Deletions proportion", r.system_qe.deleted_proportion);
    if (r.system_qe.lexical_complexity) row("Lexical complexity", *r.system_qe.lexical_complexity);
    return out;
}

int run_evaluate(const RunConfig& cfg) {
    auto p = prepare(cfg);
    p.options.frequency_table = p.table ? &*p.table : nullptr;
    const auto result = evaluate_corpus(p.corpus, p.options);
    if (cfg.table) {
        std::cout << human_table(result);
    } else {
        std::cout << to_json(result).dump(2) << "\n";
    }
    return 0;
}

int run_report(const RunConfig& cfg) {
    auto p = prepare(cfg);
    p.options.frequency_table = p.table ? &*p.table : nullptr;
    const auto result = evaluate_corpus(p.corpus, p.options);
    const std::string name = !cfg.name.empty() ? cfg.name : fs::path(cfg.system).filename().string();
    const auto bundle = build_report_bundle(p.corpus, result, cfg.seed, name, p.options.scheme);
    write_file_atomic(cfg.output, render_html(bundle));
    std::cout << cfg.output << "\n";
    return 0;
}

int run_datasets_list(const RunConfig& cfg) {
    const auto reg = load_registry(cfg);
    for (const auto* d : reg.list()) {
        std::cout << fmt::format("{} {} instances {} refs {}", d->name, d->instance_count, d->reference_count,
                                 to_string(d->alignment));
        if (d->one_to_one_count && d->one_to_many_count && *d->one_to_many_count > 0) {
            std::cout << fmt::format(" ({} 1-to-1, {} 1-to-N)", *d->one_to_one_count, *d->one_to_many_count);
        }
        std::cout << (d->has_urls() ? "" : " [no source URLs configured]") << "\n";
    }
    return 0;
}

int run_datasets_fetch(const RunConfig& cfg, const std::string& name) {
    const auto reg = load_registry(cfg);
    const auto files = fetch(find_dataset(reg, name), data_dir(cfg), curl_downloader());
    bool all_cached = true;
    for (const auto& f : files) {
        const bool cached = f.status == FetchStatus::cached;
        all_cached = all_cached && cached;
        std::cout << (cached ? "cached " : "downloaded ") << f.path.string() << "\n";
    }
    std::cout << name << ": " << (all_cached ? "cached" : "fetched") << "\n";
    return 0;
}

int run_datasets_validate(const RunConfig& cfg, const std::string& name) {
    const auto reg = load_registry(cfg);
    const auto& d = find_dataset(reg, name);
    const auto corpus = load_corpus(d, data_dir(cfg));
    std::cout << fmt::format("{}: ok ({} instances, {} refs)\n", name, corpus.size(), corpus.reference_count());
    return 0;
}

void add_input_options(CLI::App* cmd, RunConfig& cfg) {
    cmd->add_option("--test-set", cfg.test_set, "Registered test set name");
    cmd->add_option("--orig", cfg.original, "Original sentences, one per line");
    cmd->add_option("--refs", cfg.references, "Reference files, one per reference set")->expected(1, -1);
    cmd->add_option("--sys", cfg.system, "System outputs, one per line")->required();
    cmd->add_option("--metrics", cfg.metrics, "Comma-separated subset of sari,bleu,fkgl");
    cmd->add_option("--tokenizer", cfg.tokenizer, "standard or whitespace");
    cmd->add_flag("--case-sensitive", cfg.case_sensitive, "Do not lowercase tokens for SARI and BLEU");
    cmd->add_option("--max-order", cfg.max_order, "Maximum n-gram order")->check(CLI::Range(1, 16));
    cmd->add_option("--smoothing", cfg.smoothing, "BLEU smoothing: none or epsilon");
    cmd->add_option("--freq-table", cfg.frequency_table, "Word frequency table for lexical complexity");
    cmd->add_option("--ref-index", cfg.reference_index, "Reference set used for QE comparisons");
}

void add_registry_options(CLI::App* cmd, RunConfig& cfg) {
    cmd->add_option("--registry", cfg.registry, "Dataset registry config (JSON)");
    cmd->add_option("--data-dir", cfg.data_dir, "Data directory (default: $SIMPEVAL_DATA_DIR)");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Sentence simplification evaluation"};
    app.require_subcommand(1);
    RunConfig cfg;

    auto* evaluate = app.add_subcommand("evaluate", "Print corpus scores as JSON");
    add_input_options(evaluate, cfg);
    add_registry_options(evaluate, cfg);
    evaluate->add_flag("--table", cfg.table, "Print a human-readable table instead of JSON");

    auto* report = app.add_subcommand("report", "Write a self-contained HTML report");
    add_input_options(report, cfg);
    add_registry_options(report, cfg);
    report->add_option("-o,--output", cfg.output, "Report destination")->required();
    report->add_option("--seed", cfg.seed, "Sampling seed");
    report->add_option("--name", cfg.name, "System name shown in the report");

    auto* datasets = app.add_subcommand("datasets", "List, fetch or validate test sets");
    datasets->require_subcommand(1);
    add_registry_options(datasets, cfg);
    std::string dataset_name;
    auto* ds_list = datasets->add_subcommand("list", "List registered test sets");
    auto* ds_fetch = datasets->add_subcommand("fetch", "Download a test set");
    ds_fetch->add_option("name", dataset_name)->required();
    auto* ds_validate = datasets->add_subcommand("validate", "Check line counts and digests");
    ds_validate->add_option("name", dataset_name)->required();
    for (auto* sub : {ds_list, ds_fetch, ds_validate}) sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : kExitUsage;
    }

    try {
        if (*evaluate) return run_evaluate(cfg);
        if (*report) return run_report(cfg);
        if (*ds_list) return run_datasets_list(cfg);
        if (*ds_fetch) return run_datasets_fetch(cfg, dataset_name);
        if (*ds_validate) return run_datasets_validate(cfg, dataset_name);
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const InvalidArgument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const CorruptDataset& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitRuntime;
    }
    return kExitUsage;
}
