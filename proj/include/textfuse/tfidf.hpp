#pragma once

#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "textfuse/vecs.hpp"

namespace textfuse {

/// Fitted unigram vocabulary with document frequencies.
/// idf(t) = ln((1+N)/(1+df_t)) + 1 (smoothed).
struct TfidfVocabulary {
    std::vector<std::string> terms;                   // index -> term
    std::unordered_map<std::string, int32_t> index;   // term -> index
    std::vector<int64_t> df;
    int64_t n_docs = 0;
    int64_t max_features = 0;

    size_t size() const { return terms.size(); }
    double idf(int32_t t) const;
};

/// Fits a vocabulary on the training term streams: the top max_features
/// terms by collection frequency (ties broken lexicographically), df counted
/// per document. max_features == 0 means no cap.
TfidfVocabulary fit_tfidf(const std::vector<std::vector<std::string>>& train_term_streams,
                          int64_t max_features = 20000);

/// value(t) = (count_t / stream_length) * idf(t); out-of-vocabulary terms
/// are ignored but still count toward the stream length.
SparseVec tfidf_vector(const std::vector<std::string>& terms, const TfidfVocabulary& vocab);

/// Lowercased copy of tokens; the term stream of the word-level TF-IDF block.
std::vector<std::string> tfidf_terms(const std::vector<std::string>& tokens);

/// Consecutive tag pairs joined as "TAG1→TAG2" (the POS-bigram term stream).
std::vector<std::string> pos_bigram_terms(const std::vector<std::string>& tags);

}  // namespace textfuse
