#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace textfuse {

/// Token-span entity annotation; end_token is exclusive.
struct EntitySpan {
    int32_t start_token = 0;
    int32_t end_token = 0;
    std::string label;

    bool operator==(const EntitySpan&) const = default;
};

struct Document {
    std::string id;    // relative path under the corpus root, stable across machines
    std::string text;  // UTF-8, invalid bytes replaced with U+FFFD
    std::string label; // class name; empty when unlabeled
    std::optional<std::vector<std::string>> tokens;
    std::optional<std::vector<std::string>> pos_tags;  // parallel to tokens
    std::optional<std::vector<EntitySpan>> entities;
};

enum class Split { Train, Dev, Test };

const char* split_name(Split s);

struct LabeledCorpus {
    std::vector<Document> documents;
    std::vector<std::string> classes;  // sorted lexicographically
    std::unordered_map<std::string, Split> split;  // doc id -> split

    int class_index(const std::string& name) const;
    std::vector<size_t> doc_indices(Split s) const;
    size_t count(Split s) const { return doc_indices(s).size(); }
    const Document* find(const std::string& id) const;
    Document* find(const std::string& id);
};

enum class SplitLayout { BydateDirs, SingleDirRatio };

struct LoadOptions {
    SplitLayout layout = SplitLayout::BydateDirs;
    double test_fraction = 0.0;  // SingleDirRatio only
    uint64_t seed = 0;           // SingleDirRatio only
    bool strip_headers = false;  // drop lines up to the first blank line
};

/// Loads a directory-per-class corpus. Bydate layout expects
/// <root>/{train,test}/<class>/<docfile>; single-dir expects
/// <root>/<class>/<docfile> and partitions train/test by test_fraction.
LabeledCorpus load_corpus(const std::filesystem::path& root, const LoadOptions& opts = {});

/// Repartitions the train split into train/dev, stratified per class.
/// Classes with fewer than 2 train docs keep everything in train.
LabeledCorpus make_dev_split(LabeledCorpus corpus, double dev_fraction, uint64_t seed);

/// JSONL sidecar with one {"id", "tokens", "pos", "entities"} object per
/// document. Writing requires tokens on every document.
void write_annotations(const LabeledCorpus& corpus, const std::filesystem::path& path);

/// Attaches sidecar annotations to matching documents; lines whose id is not
/// in the corpus are skipped with a warning. Returns the skip count.
size_t read_annotations(LabeledCorpus& corpus, const std::filesystem::path& path);

/// Replaces invalid UTF-8 byte sequences with U+FFFD.
std::string utf8_sanitize(const std::string& raw);

}  // namespace textfuse
