#include "textfuse/tfidf.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <map>

#include "textfuse/common.hpp"

namespace textfuse {

double TfidfVocabulary::idf(int32_t t) const {
    return std::log((1.0 + static_cast<double>(n_docs)) /
                    (1.0 + static_cast<double>(df[static_cast<size_t>(t)]))) +
           1.0;
}

TfidfVocabulary fit_tfidf(const std::vector<std::vector<std::string>>& train_term_streams,
                          int64_t max_features) {
    if (train_term_streams.empty()) throw ConfigError("fit_tfidf: empty corpus");

    // std::map keeps terms ordered, which makes the tie-break lexicographic
    // for free when sorting by collection frequency below.
    std::map<std::string, std::pair<int64_t, int64_t>> stats;  // term -> (cf, df)
    for (const auto& stream : train_term_streams) {
        std::map<std::string, int64_t> in_doc;
        for (const auto& t : stream) ++in_doc[t];
        for (const auto& [t, c] : in_doc) {
            auto& s = stats[t];
            s.first += c;
            s.second += 1;
        }
    }

    std::vector<const std::string*> order;
    order.reserve(stats.size());
    for (const auto& [t, s] : stats) order.push_back(&t);
    std::stable_sort(order.begin(), order.end(),
                     [&](const std::string* a, const std::string* b) {
                         return stats.at(*a).first > stats.at(*b).first;
                     });
    if (max_features > 0 && static_cast<int64_t>(order.size()) > max_features)
        order.resize(static_cast<size_t>(max_features));

    // Vocabulary indices are assigned in term order for determinism.
    std::vector<std::string> kept(order.size());
    for (size_t i = 0; i < order.size(); ++i) kept[i] = *order[i];
    std::sort(kept.begin(), kept.end());

    TfidfVocabulary vocab;
    vocab.n_docs = static_cast<int64_t>(train_term_streams.size());
    vocab.max_features = max_features;
    vocab.terms = std::move(kept);
    vocab.df.resize(vocab.terms.size());
    for (size_t i = 0; i < vocab.terms.size(); ++i) {
        vocab.index[vocab.terms[i]] = static_cast<int32_t>(i);
        vocab.df[i] = stats.at(vocab.terms[i]).second;
    }
    return vocab;
}

SparseVec tfidf_vector(const std::vector<std::string>& terms, const TfidfVocabulary& vocab) {
    SparseVec out;
    out.dim = static_cast<int32_t>(vocab.size());
    if (terms.empty()) return out;

    std::map<int32_t, int64_t> counts;
    for (const auto& t : terms) {
        auto it = vocab.index.find(t);
        if (it != vocab.index.end()) ++counts[it->second];
    }
    const double inv_len = 1.0 / static_cast<double>(terms.size());
    for (const auto& [idx, c] : counts) {
        out.push(idx, static_cast<double>(c) * inv_len * vocab.idf(idx));
    }
    return out;
}

std::vector<std::string> tfidf_terms(const std::vector<std::string>& tokens) {
    std::vector<std::string> out;
    out.reserve(tokens.size());
    for (const auto& t : tokens) {
        std::string l = t;
        std::transform(l.begin(), l.end(), l.begin(),
                       [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
        out.push_back(std::move(l));
    }
    return out;
}

std::vector<std::string> pos_bigram_terms(const std::vector<std::string>& tags) {
    std::vector<std::string> out;
    if (tags.size() < 2) return out;
    out.reserve(tags.size() - 1);
    for (size_t i = 0; i + 1 < tags.size(); ++i) {
        out.push_back(tags[i] + "\xE2\x86\x92" + tags[i + 1]);  // U+2192 arrow
    }
    return out;
}

}  // namespace textfuse
