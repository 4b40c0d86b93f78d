#include "textfuse/histograms.hpp"

namespace textfuse {

DenseVec pos_histogram(const std::vector<std::string>& tags) {
    const TagSet& set = pos_tagset();
    DenseVec vec(set.size(), 0.0);
    double total = 0.0;
    for (const auto& t : tags) {
        const int i = set.index(t);
        if (i >= 0) {
            vec[static_cast<size_t>(i)] += 1.0;
            total += 1.0;
        }
    }
    if (total > 0.0) {
        for (auto& v : vec) v /= total;
    }
    return vec;
}

DenseVec ner_histogram(const std::vector<EntitySpan>& entities, const TagSet& labels) {
    DenseVec vec(labels.size(), 0.0);
    double total = 0.0;
    for (const auto& e : entities) {
        const int i = labels.index(e.label);
        if (i >= 0) {
            vec[static_cast<size_t>(i)] += 1.0;
            total += 1.0;
        }
    }
    if (total > 0.0) {
        for (auto& v : vec) v /= total;
    }
    return vec;
}

}  // namespace textfuse
