#pragma once

// Test-set registry, corpus loading and cached fetching.
//
// Registry config (JSON):
//
//   {
//     "datasets": {
//       "turkcorpus-test": {
//         "instances": 359,
//         "references": 8,
//         "alignment": "one-to-one",          // or "mixed"
//         "original": {"path": "turk/test.orig", "url": "https://...", "sha256": "..."},
//         "refs": [{"path": "turk/test.ref.0", "url": "...", "sha256": "..."}, ...]
//       }
//     }
//   }
//
// Entries override builtin descriptors of the same name field by field;
// unknown names add new datasets. Paths are relative to the data directory.

#include <cctype>
#include <cstdlib>
#include <filesystem>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <fcntl.h>
#include <openssl/evp.h>
#include <sys/file.h>
#include <unistd.h>

#include <json.hpp>

#include "simpeval/corpus.hpp"
#include "simpeval/error.hpp"
#include "simpeval/io.hpp"
#include "simpeval/text.hpp"

namespace simpeval {

enum class AlignmentType { one_to_one, mixed };

inline const char* to_string(AlignmentType a) { return a == AlignmentType::one_to_one ? "one-to-one" : "mixed"; }

struct DatasetFile {
    std::string path;  // relative to the data directory
    std::optional<std::string> url;
    std::optional<std::string> sha256;  // lowercase hex
};

struct DatasetDescriptor {
    std::string name;
    std::size_t instance_count = 0;
    std::size_t reference_count = 0;
    AlignmentType alignment = AlignmentType::one_to_one;
    // Split of instance_count into 1-to-1 and 1-to-N alignments, when known.
    std::optional<std::size_t> one_to_one_count;
    std::optional<std::size_t> one_to_many_count;
    DatasetFile original;
    std::vector<DatasetFile> references;

    void validate() const {
        if (name.empty()) throw InvalidArgument("dataset has no name");
        if (instance_count < 1) throw InvalidArgument("dataset '" + name + "' needs at least one instance");
        if (reference_count < 1) throw InvalidArgument("dataset '" + name + "' needs at least one reference");
        if (references.size() != reference_count) {
            throw InvalidArgument("dataset '" + name + "' declares " + std::to_string(reference_count) +
                                  " references but lists " + std::to_string(references.size()) + " files");
        }
        if (one_to_one_count && one_to_many_count && *one_to_one_count + *one_to_many_count != instance_count) {
            throw InvalidArgument("dataset '" + name + "' alignment split does not add up to instance count");
        }
    }

    std::vector<const DatasetFile*> files() const {
        std::vector<const DatasetFile*> out{&original};
        for (const auto& r : references) out.push_back(&r);
        return out;
    }

    bool has_urls() const {
        for (const auto* f : files()) {
            if (f->url) return true;
        }
        return false;
    }
};

namespace detail {

inline DatasetDescriptor make_builtin(std::string name, std::size_t instances, std::size_t refs,
                                      AlignmentType alignment) {
    DatasetDescriptor d;
    d.name = name;
    d.instance_count = instances;
    d.reference_count = refs;
    d.alignment = alignment;
    d.original.path = name + "/" + name + ".orig";
    for (std::size_t r = 0; r < refs; ++r) {
        d.references.push_back({name + "/" + name + ".ref." + std::to_string(r), std::nullopt, std::nullopt});
    }
    return d;
}

}  // namespace detail

inline std::vector<DatasetDescriptor> builtin_descriptors() {
    std::vector<DatasetDescriptor> out;
    auto pwkp = detail::make_builtin("pwkp", 100, 1, AlignmentType::mixed);
    pwkp.one_to_one_count = 93;
    pwkp.one_to_many_count = 7;
    out.push_back(std::move(pwkp));
    auto turk = detail::make_builtin("turkcorpus-test", 359, 8, AlignmentType::one_to_one);
    turk.one_to_one_count = 359;
    turk.one_to_many_count = 0;
    out.push_back(std::move(turk));
    auto hsplit = detail::make_builtin("hsplit", 359, 4, AlignmentType::mixed);
    out.push_back(std::move(hsplit));
    return out;
}

class DatasetRegistry {
public:
    static DatasetRegistry with_builtins() {
        DatasetRegistry reg;
        for (auto& d : builtin_descriptors()) reg.datasets_.emplace(d.name, std::move(d));
        return reg;
    }

    void merge_config(const nlohmann::json& config) {
        if (!config.is_object() || !config.contains("datasets") || !config["datasets"].is_object()) {
            throw InvalidArgument("registry config needs a \"datasets\" object");
        }
        for (const auto& [name, entry] : config["datasets"].items()) {
            try {
                merge_entry(name, entry);
            } catch (const nlohmann::json::exception& e) {
                throw InvalidArgument("registry entry '" + name + "': " + e.what());
            }
        }
    }

    void load_config(const fs::path& path) {
        const std::string text = read_file(path);
        nlohmann::json config;
        try {
            config = nlohmann::json::parse(text);
        } catch (const nlohmann::json::parse_error& e) {
            throw InvalidArgument("registry config '" + path.string() + "': " + e.what());
        }
        merge_config(config);
    }

    const DatasetDescriptor& find(const std::string& name) const {
        auto it = datasets_.find(name);
        if (it == datasets_.end()) throw NotFound("unknown dataset '" + name + "'");
        return it->second;
    }

    bool contains(const std::string& name) const { return datasets_.contains(name); }

    std::vector<const DatasetDescriptor*> list() const {
        std::vector<const DatasetDescriptor*> out;
        for (const auto& [name, d] : datasets_) out.push_back(&d);
        return out;
    }

private:
    static DatasetFile parse_file(const nlohmann::json& j, DatasetFile base) {
        if (j.is_string()) {
            base.path = j.get<std::string>();
            return base;
        }
        if (j.contains("path")) base.path = j.at("path").get<std::string>();
        if (j.contains("url")) base.url = j.at("url").get<std::string>();
        if (j.contains("sha256")) base.sha256 = to_lower_hex(j.at("sha256").get<std::string>());
        return base;
    }

    static std::string to_lower_hex(std::string s) {
        for (auto& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
        return s;
    }

    void merge_entry(const std::string& name, const nlohmann::json& entry) {
        auto it = datasets_.find(name);
        DatasetDescriptor d = it != datasets_.end() ? it->second : DatasetDescriptor{};
        d.name = name;
        if (entry.contains("instances")) {
            d.instance_count = entry.at("instances").get<std::size_t>();
            // A resized dataset no longer has the builtin alignment split.
            d.one_to_one_count.reset();
            d.one_to_many_count.reset();
        }
        if (entry.contains("alignment")) {
            const auto a = entry.at("alignment").get<std::string>();
            if (a == "one-to-one") {
                d.alignment = AlignmentType::one_to_one;
            } else if (a == "mixed") {
                d.alignment = AlignmentType::mixed;
            } else {
                throw InvalidArgument("dataset '" + name + "': unknown alignment '" + a + "'");
            }
        }
        if (entry.contains("original")) d.original = parse_file(entry.at("original"), d.original);
        if (entry.contains("refs")) {
            const auto& refs = entry.at("refs");
            std::vector<DatasetFile> files;
            for (std::size_t r = 0; r < refs.size(); ++r) {
                files.push_back(parse_file(refs[r], r < d.references.size() ? d.references[r] : DatasetFile{}));
            }
            d.references = std::move(files);
            d.reference_count = d.references.size();
        }
        if (entry.contains("references")) {
            d.reference_count = entry.at("references").get<std::size_t>();
            if (!entry.contains("refs")) {
                d.references.resize(d.reference_count);
                for (std::size_t r = 0; r < d.reference_count; ++r) {
                    if (d.references[r].path.empty()) {
                        d.references[r].path = name + "/" + name + ".ref." + std::to_string(r);
                    }
                }
            }
        }
        if (d.original.path.empty()) d.original.path = name + "/" + name + ".orig";
        d.validate();
        datasets_.insert_or_assign(name, std::move(d));
    }

    std::map<std::string, DatasetDescriptor> datasets_;
};

// SIMPEVAL_DATA_DIR, else $XDG_CACHE_HOME/simpeval, else ~/.cache/simpeval.
inline fs::path default_data_dir() {
    if (const char* dir = std::getenv("SIMPEVAL_DATA_DIR"); dir && *dir) return dir;
    if (const char* xdg = std::getenv("XDG_CACHE_HOME"); xdg && *xdg) return fs::path(xdg) / "simpeval";
    if (const char* home = std::getenv("HOME"); home && *home) return fs::path(home) / ".cache" / "simpeval";
    return fs::current_path() / "simpeval-data";
}

inline std::string sha256_hex(std::string_view data) {
    unsigned char digest[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    if (EVP_Digest(data.data(), data.size(), digest, &len, EVP_sha256(), nullptr) != 1) {
        throw Error("SHA-256 computation failed");
    }
    static constexpr char hex[] = "0123456789abcdef";
    std::string out;
    for (unsigned int i = 0; i < len; ++i) {
        out.push_back(hex[digest[i] >> 4]);
        out.push_back(hex[digest[i] & 0xF]);
    }
    return out;
}

inline std::string sha256_file(const fs::path& path) { return sha256_hex(read_file(path)); }

struct CorpusPaths {
    fs::path original;
    std::vector<fs::path> references;
    std::optional<fs::path> outputs;
};

namespace detail {

// Reads `path` line by line; `expected`, when set, is the required line count.
inline std::vector<std::string> load_parallel_file(const fs::path& path, std::optional<std::size_t> expected,
                                                   bool allow_empty,
                                                   const std::optional<std::string>& digest = std::nullopt) {
    if (!fs::exists(path)) throw NotFound("file not found: '" + path.string() + "'");
    const std::string content = read_file(path);
    if (digest && sha256_hex(content) != *digest) {
        throw CorruptDataset("digest mismatch for '" + path.string() + "'");
    }
    auto lines = split_lines(content);
    if (expected && lines.size() != *expected) {
        throw CorruptDataset("'" + path.string() + "' has " + std::to_string(lines.size()) +
                             " lines, expected " + std::to_string(*expected));
    }
    if (!allow_empty) {
        for (std::size_t i = 0; i < lines.size(); ++i) {
            if (normalize_whitespace(lines[i]).empty()) {
                throw CorruptDataset("'" + path.string() + "' line " + std::to_string(i + 1) + " is empty");
            }
        }
    }
    return lines;
}

}  // namespace detail

// Loads a line-aligned corpus. Every file must have `expected_count` lines
// when given, otherwise as many lines as the original file. Original and
// reference lines must be non-empty; system output lines may be empty.
inline EvalCorpus load_corpus(const CorpusPaths& paths, std::optional<std::size_t> expected_count = std::nullopt) {
    if (paths.references.empty()) throw InvalidArgument("at least one reference file is required");
    EvalCorpus corpus;
    corpus.originals = detail::load_parallel_file(paths.original, expected_count, false);
    if (!expected_count && corpus.originals.empty()) {
        throw CorruptDataset("'" + paths.original.string() + "' has no lines");
    }
    const std::size_t n = corpus.originals.size();
    for (const auto& ref : paths.references) {
        corpus.references.push_back(detail::load_parallel_file(ref, n, false));
    }
    if (paths.outputs) corpus.outputs = detail::load_parallel_file(*paths.outputs, n, true);
    return corpus;
}

inline EvalCorpus load_corpus(const DatasetDescriptor& d, const fs::path& data_dir,
                              const std::optional<fs::path>& outputs = std::nullopt) {
    d.validate();
    EvalCorpus corpus;
    corpus.originals =
        detail::load_parallel_file(data_dir / d.original.path, d.instance_count, false, d.original.sha256);
    for (const auto& ref : d.references) {
        corpus.references.push_back(
            detail::load_parallel_file(data_dir / ref.path, d.instance_count, false, ref.sha256));
    }
    if (outputs) corpus.outputs = detail::load_parallel_file(*outputs, d.instance_count, true);
    return corpus;
}

inline void write_corpus(const EvalCorpus& corpus, const CorpusPaths& paths) {
    corpus.validate();
    if (paths.references.size() != corpus.references.size()) {
        throw InvalidArgument("reference path count does not match corpus");
    }
    write_lines(paths.original, corpus.originals);
    for (std::size_t r = 0; r < corpus.references.size(); ++r) write_lines(paths.references[r], corpus.references[r]);
    if (corpus.outputs) {
        if (!paths.outputs) throw InvalidArgument("corpus has outputs but no output path was given");
        write_lines(*paths.outputs, *corpus.outputs);
    }
}

// Downloads `url` into `destination`; throws FetchError on failure.
using Downloader = std::function<void(const std::string& url, const fs::path& destination)>;

enum class FetchStatus { cached, downloaded };

struct FetchedFile {
    fs::path path;
    FetchStatus status = FetchStatus::cached;
};

namespace detail {

// Exclusive advisory lock on a file, released on destruction.
class FileLock {
public:
    explicit FileLock(const fs::path& path) {
        fd_ = ::open(path.c_str(), O_CREAT | O_RDWR | O_CLOEXEC, 0644);
        if (fd_ < 0) throw IoError("cannot open lock file '" + path.string() + "'");
        if (::flock(fd_, LOCK_EX) != 0) {
            ::close(fd_);
            throw IoError("cannot lock '" + path.string() + "'");
        }
    }
    ~FileLock() {
        ::flock(fd_, LOCK_UN);
        ::close(fd_);
    }
    FileLock(const FileLock&) = delete;
    FileLock& operator=(const FileLock&) = delete;

private:
    int fd_ = -1;
};

}  // namespace detail

// Downloads every file of `d` into `data_dir`. Files already present with a
// matching digest (or present at all, when no digest is configured) are not
// downloaded again. Concurrent fetches of the same dataset are serialized
// through a lock file.
inline std::vector<FetchedFile> fetch(const DatasetDescriptor& d, const fs::path& data_dir,
                                      const Downloader& download) {
    d.validate();
    for (const auto* f : d.files()) {
        if (!f->url) throw InvalidArgument("dataset '" + d.name + "' has no URL for '" + f->path + "'");
    }
    std::error_code ec;
    fs::create_directories(data_dir, ec);
    if (ec) throw IoError("cannot create data directory '" + data_dir.string() + "'");
    detail::FileLock lock(data_dir / ("." + d.name + ".lock"));

    std::vector<FetchedFile> result;
    for (const auto* f : d.files()) {
        const fs::path target = data_dir / f->path;
        if (fs::exists(target) && (!f->sha256 || sha256_file(target) == *f->sha256)) {
            result.push_back({target, FetchStatus::cached});
            continue;
        }
        fs::create_directories(target.parent_path(), ec);
        if (ec) throw IoError("cannot create '" + target.parent_path().string() + "'");
        const fs::path tmp = target.string() + ".part";
        fs::remove(tmp, ec);
        try {
            download(*f->url, tmp);
        } catch (const FetchError&) {
            fs::remove(tmp, ec);
            throw;
        } catch (const std::exception& e) {
            fs::remove(tmp, ec);
            throw FetchError("download of '" + *f->url + "' failed: " + e.what());
        }
        if (!fs::exists(tmp)) throw FetchError("download of '" + *f->url + "' produced no file");
        if (f->sha256 && sha256_file(tmp) != *f->sha256) {
            fs::remove(tmp, ec);
            throw CorruptDataset("digest mismatch for downloaded '" + f->path + "'");
        }
        fs::rename(tmp, target, ec);
        if (ec) throw IoError("cannot move '" + tmp.string() + "' into place");
        result.push_back({target, FetchStatus::downloaded});
    }
    return result;
}

}  // namespace simpeval
