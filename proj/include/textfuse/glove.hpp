#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <unordered_map>
#include <vector>

#include "textfuse/vecs.hpp"

namespace textfuse {

/// Pre-trained word-embedding table; all vectors share one dimension.
struct EmbeddingTable {
    int32_t dim = 0;
    std::unordered_map<std::string, DenseVec> vectors;

    const DenseVec* find(const std::string& word) const {
        auto it = vectors.find(word);
        return it == vectors.end() ? nullptr : &it->second;
    }
};

/// Text format: one `word v1 v2 ... vd` line per word; dim comes from the
/// first line. Lines with the wrong arity are skipped with a warning;
/// more than 1% malformed lines (or an empty file) is fatal.
EmbeddingTable load_glove(const std::filesystem::path& path);

/// Inverse of load_glove; values round-trip exactly.
void save_glove(const EmbeddingTable& table, const std::filesystem::path& path);

/// Mean of the vectors of in-vocabulary tokens (lowercased lookup);
/// zero vector when nothing is found.
DenseVec glove_doc_vector(const std::vector<std::string>& tokens, const EmbeddingTable& table);

}  // namespace textfuse
